use thiserror::Error;

/// Why a token sequence fails to be a Motzkin word.
///
/// Positions are 1-based token indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum MotzkinError {
    /// More `⌊` than `⌋` in total; `position` is the earliest opener left unmatched.
    #[error("unbalanced: {unclosed} unclosed bracket(s), first opened at token {position}")]
    Unbalanced { unclosed: usize, position: usize },
    /// A `⌋` at `position` has no matching `⌊` to its left.
    #[error("prefix violation: closing bracket at token {position} has no matching opener")]
    PrefixViolation { position: usize },
}

impl MotzkinError {
    /// Short machine-readable reason.
    pub fn reason(&self) -> &'static str {
        match self {
            MotzkinError::Unbalanced { .. } => "unbalanced",
            MotzkinError::PrefixViolation { .. } => "prefix",
        }
    }

    pub fn position(&self) -> usize {
        match *self {
            MotzkinError::Unbalanced { position, .. } | MotzkinError::PrefixViolation { position } => {
                position
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: context has {expected} star(s) but {found} argument(s) were given")]
    ArityMismatch { expected: usize, found: usize },
    #[error("tokens do not form a star word of arity {arity}")]
    NotStarWord { arity: usize },
    #[error("the empty word is never a subword")]
    EmptySubword,
    #[error("placements belong to different host words")]
    HostMismatch,
    #[error("location {start}..{end} is not inside a host of length {len}")]
    LocationOutOfRange { start: usize, end: usize, len: usize },
    #[error("location {start}..{end} is not a balanced factor of the encoded host")]
    UnbalancedLocation { start: usize, end: usize },
    #[error("invalid symbol {0:?}")]
    InvalidSymbol(char),
    #[error(transparent)]
    Motzkin(#[from] MotzkinError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
