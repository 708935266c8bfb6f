//! Symbols, plain words, and star words with substitution.
//!
//! [`Word`] and [`StarWord`] are generic over the letter type so the same
//! machinery serves plain words over [`Symbol`] and flat Motzkin token strings
//! (see [`crate::motzkin::MotzkinLetter`]).

use std::fmt;

use crate::error::{Error, Result};

/// A letter of the base alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(char);

impl Symbol {
    /// Symbols are single lowercase ASCII letters; everything else is reserved
    /// for stars, brackets and the text grammar.
    pub fn new(c: char) -> Result<Self> {
        if c.is_ascii_lowercase() {
            Ok(Symbol(c))
        } else {
            Err(Error::InvalidSymbol(c))
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl TryFrom<char> for Symbol {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        Symbol::new(c)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of the free monoid on `A`. The empty word is the identity `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<A = Symbol>(Vec<A>);

impl<A> Word<A> {
    pub fn new(letters: Vec<A>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[A] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<A> {
        self.0
    }
}

impl<A: Clone> Word<A> {
    /// Free-monoid product.
    pub fn concat(&self, other: &Word<A>) -> Word<A> {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The factor covering the 1-based inclusive range `start..=end`.
    /// An empty range (`end < start`) yields the empty word.
    pub(crate) fn factor(&self, start: usize, end: usize) -> Word<A> {
        if end < start {
            Word::empty()
        } else {
            Word(self.0[start - 1..end].to_vec())
        }
    }
}

impl<A> Default for Word<A> {
    fn default() -> Self {
        Word::empty()
    }
}

impl<A> FromIterator<A> for Word<A> {
    fn from_iter<I: IntoIterator<Item = A>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Free-monoid product of two words.
pub fn concat<A: Clone>(a: &Word<A>, b: &Word<A>) -> Word<A> {
    a.concat(b)
}

/// Writes pre-rendered tokens, using `eps` for the empty sequence and keeping
/// the literal word `e p s` distinguishable from the keyword.
pub(crate) fn write_tokens(f: &mut fmt::Formatter<'_>, tokens: &[String]) -> fmt::Result {
    if tokens.is_empty() {
        return f.write_str("eps");
    }
    let joined = tokens.concat();
    if joined == "eps" {
        f.write_str(&tokens.join(" "))
    } else {
        f.write_str(&joined)
    }
}

impl<A: fmt::Display> fmt::Display for Word<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write_tokens(f, &tokens)
    }
}

/// A letter of a star word: either an ordinary letter or the hole `⋆i`
/// (1-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StarToken<A> {
    Letter(A),
    Star(usize),
}

impl<A> StarToken<A> {
    pub fn star_index(&self) -> Option<usize> {
        match self {
            StarToken::Star(i) => Some(*i),
            StarToken::Letter(_) => None,
        }
    }
}

/// How often each star `⋆1..⋆k` must occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarMode {
    ExactlyOnce,
    AtMostOnce,
}

/// Counts star occurrences and checks them against `mode`. Stars with an
/// index outside `1..=arity` are rejected in either mode.
pub(crate) fn check_star_counts(
    stars: impl IntoIterator<Item = usize>,
    arity: usize,
    mode: StarMode,
) -> bool {
    if arity == 0 {
        return false;
    }
    let mut counts = vec![0usize; arity];
    for i in stars {
        if i == 0 || i > arity {
            return false;
        }
        counts[i - 1] += 1;
    }
    match mode {
        StarMode::ExactlyOnce => counts.iter().all(|&c| c == 1),
        StarMode::AtMostOnce => counts.iter().all(|&c| c <= 1),
    }
}

/// True iff every `⋆i` with `1 <= i <= k` occurs exactly once in `tokens`
/// (and no other star does).
pub fn is_star_word<A>(tokens: &[StarToken<A>], k: usize) -> bool {
    check_star_counts(tokens.iter().filter_map(StarToken::star_index), k, StarMode::ExactlyOnce)
}

/// A word over `A ∪ {⋆1, …, ⋆k}`: a substitution context with `k` holes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarWord<A = Symbol> {
    arity: usize,
    tokens: Vec<StarToken<A>>,
}

impl<A> StarWord<A> {
    /// Builds a star word in which each of the `arity` stars occurs exactly once.
    pub fn new(arity: usize, tokens: Vec<StarToken<A>>) -> Result<Self> {
        Self::with_mode(arity, tokens, StarMode::ExactlyOnce)
    }

    /// Builds a star word in which each star occurs at most once.
    pub fn relaxed(arity: usize, tokens: Vec<StarToken<A>>) -> Result<Self> {
        Self::with_mode(arity, tokens, StarMode::AtMostOnce)
    }

    pub fn with_mode(arity: usize, tokens: Vec<StarToken<A>>, mode: StarMode) -> Result<Self> {
        if check_star_counts(tokens.iter().filter_map(StarToken::star_index), arity, mode) {
            Ok(StarWord { arity, tokens })
        } else {
            Err(Error::NotStarWord { arity })
        }
    }

    /// The bare context `⋆`.
    pub fn hole() -> Self {
        StarWord { arity: 1, tokens: vec![StarToken::Star(1)] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tokens(&self) -> &[StarToken<A>] {
        &self.tokens
    }

    pub fn into_tokens(self) -> Vec<StarToken<A>> {
        self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// 0-based token index of `⋆i`, if present.
    pub fn star_position(&self, i: usize) -> Option<usize> {
        self.tokens.iter().position(|t| t.star_index() == Some(i))
    }
}

impl<A: Clone> StarWord<A> {
    /// Builds `prefix ⋆ suffix`.
    pub fn around(prefix: &[A], suffix: &[A]) -> Self {
        let tokens = prefix
            .iter()
            .cloned()
            .map(StarToken::Letter)
            .chain(std::iter::once(StarToken::Star(1)))
            .chain(suffix.iter().cloned().map(StarToken::Letter))
            .collect();
        StarWord { arity: 1, tokens }
    }

    fn check_arity(&self, found: usize) -> Result<()> {
        if found == self.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.arity, found })
        }
    }

    /// `p|_{u1,…,uk}`: replaces each `⋆i` by `args[i-1]`.
    pub fn substitute(&self, args: &[Word<A>]) -> Result<Word<A>> {
        self.check_arity(args.len())?;
        let mut out = Vec::with_capacity(self.tokens.len());
        for t in &self.tokens {
            match t {
                StarToken::Letter(a) => out.push(a.clone()),
                StarToken::Star(i) => out.extend_from_slice(args[i - 1].letters()),
            }
        }
        Ok(Word::new(out))
    }

    /// Replaces only the stars whose argument is `Some`; the others stay in
    /// place with their original index.
    pub fn substitute_partial(&self, args: &[Option<&Word<A>>]) -> Result<StarWord<A>> {
        self.check_arity(args.len())?;
        let mut out = Vec::with_capacity(self.tokens.len());
        for t in &self.tokens {
            match t {
                StarToken::Star(i) => match args[i - 1] {
                    Some(w) => out.extend(w.letters().iter().cloned().map(StarToken::Letter)),
                    None => out.push(StarToken::Star(*i)),
                },
                letter => out.push(letter.clone()),
            }
        }
        Ok(StarWord { arity: self.arity, tokens: out })
    }

    /// `p|_q` for a one-hole context `p`: the hole is filled with the star word
    /// `q`, whose stars become the stars of the result.
    pub fn plug(&self, inner: &StarWord<A>) -> Result<StarWord<A>> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch { expected: self.arity, found: 1 });
        }
        let mut out = Vec::with_capacity(self.tokens.len() + inner.tokens.len());
        for t in &self.tokens {
            match t {
                StarToken::Star(_) => out.extend_from_slice(&inner.tokens),
                letter => out.push(letter.clone()),
            }
        }
        Ok(StarWord { arity: inner.arity, tokens: out })
    }

    /// The word left after deleting every star.
    pub fn erase_stars(&self) -> Word<A> {
        self.tokens
            .iter()
            .filter_map(|t| match t {
                StarToken::Letter(a) => Some(a.clone()),
                StarToken::Star(_) => None,
            })
            .collect()
    }

    /// Re-indexes the single star of a one-hole context as `⋆index` inside a
    /// context of the given arity (`p|_{⋆index}`).
    pub(crate) fn relabel_hole(&self, index: usize, arity: usize) -> StarWord<A> {
        debug_assert_eq!(self.arity, 1);
        let tokens = self
            .tokens
            .iter()
            .map(|t| match t {
                StarToken::Star(_) => StarToken::Star(index),
                letter => letter.clone(),
            })
            .collect();
        StarWord { arity, tokens }
    }
}

/// `p|_{u1,…,uk}` as a free function.
pub fn substitute<A: Clone>(p: &StarWord<A>, args: &[Word<A>]) -> Result<Word<A>> {
    p.substitute(args)
}

pub(crate) fn star_label(arity: usize, i: usize) -> String {
    if arity == 1 && i == 1 {
        "*".to_string()
    } else {
        format!("*{i}")
    }
}

impl<A: fmt::Display> fmt::Display for StarWord<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .tokens
            .iter()
            .map(|t| match t {
                StarToken::Letter(a) => a.to_string(),
                StarToken::Star(i) => star_label(self.arity, *i),
            })
            .collect();
        write_tokens(f, &tokens)
    }
}
