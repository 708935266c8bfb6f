//! Motzkin words: the flat encoding of bracketed words.
//!
//! A Motzkin word is a word over `X ∪ {⌊, ⌋}` whose brackets balance and in
//! which no prefix closes more brackets than it opens. [`encode`] and
//! [`decode`] are mutually inverse and carry products to concatenation and
//! `⌊·⌋` to wrapping. The star variants do the same for contexts.

use std::fmt;

use crate::alphabet::{StarMode, StarToken, StarWord, Symbol, Word};
use crate::bracketed::{Atom, BracketedWord, StarBracketedWord};
use crate::error::{Error, MotzkinError, Result};

/// A token of a Motzkin word. Ordered as letters, then `⌊`, then `⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinLetter<L = Symbol> {
    Letter(L),
    Open,
    Close,
}

impl<L: fmt::Display> fmt::Display for MotzkinLetter<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MotzkinLetter::Letter(l) => l.fmt(f),
            MotzkinLetter::Open => f.write_str("["),
            MotzkinLetter::Close => f.write_str("]"),
        }
    }
}

/// Token types that can be read as an opener, a closer, or a leaf.
///
/// Star Motzkin words are words over `(X ∪ {⌊,⌋}) ∪ stars`, while their decoded
/// trees carry leaves in `X ∪ stars`; this trait lets one encoder and one
/// parser serve both shapes.
pub trait BracketToken: Clone {
    type Leaf: Clone;

    fn view(&self) -> MotzkinLetter<Self::Leaf>;

    fn from_view(view: MotzkinLetter<Self::Leaf>) -> Self;
}

impl<L: Clone> BracketToken for MotzkinLetter<L> {
    type Leaf = L;

    fn view(&self) -> MotzkinLetter<L> {
        self.clone()
    }

    fn from_view(view: MotzkinLetter<L>) -> Self {
        view
    }
}

impl<L: Clone> BracketToken for StarToken<MotzkinLetter<L>> {
    type Leaf = StarToken<L>;

    fn view(&self) -> MotzkinLetter<StarToken<L>> {
        match self {
            StarToken::Letter(MotzkinLetter::Open) => MotzkinLetter::Open,
            StarToken::Letter(MotzkinLetter::Close) => MotzkinLetter::Close,
            StarToken::Letter(MotzkinLetter::Letter(l)) => {
                MotzkinLetter::Letter(StarToken::Letter(l.clone()))
            }
            StarToken::Star(i) => MotzkinLetter::Letter(StarToken::Star(*i)),
        }
    }

    fn from_view(view: MotzkinLetter<StarToken<L>>) -> Self {
        match view {
            MotzkinLetter::Open => StarToken::Letter(MotzkinLetter::Open),
            MotzkinLetter::Close => StarToken::Letter(MotzkinLetter::Close),
            MotzkinLetter::Letter(StarToken::Letter(l)) => StarToken::Letter(MotzkinLetter::Letter(l)),
            MotzkinLetter::Letter(StarToken::Star(i)) => StarToken::Star(i),
        }
    }
}

/// Scans for both balance conditions; reports the first violation.
pub fn check_motzkin<T: BracketToken>(tokens: &[T]) -> Result<(), MotzkinError> {
    let mut open_positions = Vec::new();
    for (idx, t) in tokens.iter().enumerate() {
        match t.view() {
            MotzkinLetter::Open => open_positions.push(idx + 1),
            MotzkinLetter::Close => {
                if open_positions.pop().is_none() {
                    return Err(MotzkinError::PrefixViolation { position: idx + 1 });
                }
            }
            MotzkinLetter::Letter(_) => {}
        }
    }
    match open_positions.first() {
        None => Ok(()),
        Some(&position) => Err(MotzkinError::Unbalanced { unclosed: open_positions.len(), position }),
    }
}

/// True iff the `⌊`/`⌋` counts match and no prefix has more `⌋` than `⌊`.
pub fn is_motzkin<T: BracketToken>(tokens: &[T]) -> bool {
    check_motzkin(tokens).is_ok()
}

fn flatten<T: BracketToken>(w: &BracketedWord<T::Leaf>, out: &mut Vec<T>) {
    for atom in w.atoms() {
        match atom {
            Atom::Letter(l) => out.push(T::from_view(MotzkinLetter::Letter(l.clone()))),
            Atom::Bracket(inner) => {
                out.push(T::from_view(MotzkinLetter::Open));
                flatten(inner, out);
                out.push(T::from_view(MotzkinLetter::Close));
            }
        }
    }
}

/// Single left-to-right pass with a stack of partially built sequences.
fn parse_balanced<T: BracketToken>(tokens: &[T]) -> Result<BracketedWord<T::Leaf>, MotzkinError> {
    let mut stack: Vec<(Vec<Atom<T::Leaf>>, usize)> = Vec::new();
    let mut current: Vec<Atom<T::Leaf>> = Vec::new();
    for (idx, t) in tokens.iter().enumerate() {
        match t.view() {
            MotzkinLetter::Letter(l) => current.push(Atom::Letter(l)),
            MotzkinLetter::Open => stack.push((std::mem::take(&mut current), idx + 1)),
            MotzkinLetter::Close => {
                let (mut outer, _) =
                    stack.pop().ok_or(MotzkinError::PrefixViolation { position: idx + 1 })?;
                outer.push(Atom::Bracket(BracketedWord::new(std::mem::take(&mut current))));
                current = outer;
            }
        }
    }
    match stack.first() {
        None => Ok(BracketedWord::new(current)),
        Some(&(_, position)) => Err(MotzkinError::Unbalanced { unclosed: stack.len(), position }),
    }
}

/// A validated Motzkin word over the base alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinWord(Word<MotzkinLetter>);

impl MotzkinWord {
    pub fn new(tokens: Vec<MotzkinLetter>) -> Result<Self, MotzkinError> {
        check_motzkin(&tokens)?;
        Ok(MotzkinWord(Word::new(tokens)))
    }

    pub fn from_word(word: Word<MotzkinLetter>) -> Result<Self, MotzkinError> {
        check_motzkin(word.letters())?;
        Ok(MotzkinWord(word))
    }

    pub fn empty() -> Self {
        MotzkinWord(Word::empty())
    }

    pub fn tokens(&self) -> &[MotzkinLetter] {
        self.0.letters()
    }

    pub fn as_word(&self) -> &Word<MotzkinLetter> {
        &self.0
    }

    pub fn into_word(self) -> Word<MotzkinLetter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A star word over `X ∪ {⌊, ⌋}` that is also Motzkin; stars count as letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarMotzkinWord(StarWord<MotzkinLetter>);

impl StarMotzkinWord {
    pub fn new(arity: usize, tokens: Vec<StarToken<MotzkinLetter>>) -> Result<Self> {
        Self::with_mode(arity, tokens, StarMode::ExactlyOnce)
    }

    pub fn relaxed(arity: usize, tokens: Vec<StarToken<MotzkinLetter>>) -> Result<Self> {
        Self::with_mode(arity, tokens, StarMode::AtMostOnce)
    }

    pub fn with_mode(arity: usize, tokens: Vec<StarToken<MotzkinLetter>>, mode: StarMode) -> Result<Self> {
        check_motzkin(&tokens)?;
        Ok(StarMotzkinWord(StarWord::with_mode(arity, tokens, mode)?))
    }

    pub fn from_star_word(word: StarWord<MotzkinLetter>) -> Result<Self> {
        check_motzkin(word.tokens())?;
        Ok(StarMotzkinWord(word))
    }

    pub fn arity(&self) -> usize {
        self.0.arity()
    }

    pub fn tokens(&self) -> &[StarToken<MotzkinLetter>] {
        self.0.tokens()
    }

    pub fn as_star_word(&self) -> &StarWord<MotzkinLetter> {
        &self.0
    }

    pub fn into_star_word(self) -> StarWord<MotzkinLetter> {
        self.0
    }
}

impl fmt::Display for StarMotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The isomorphism from bracketed words to Motzkin words.
pub fn encode(f: &BracketedWord) -> MotzkinWord {
    let mut out = Vec::new();
    flatten::<MotzkinLetter>(f, &mut out);
    MotzkinWord(Word::new(out))
}

/// Inverse of [`encode`].
pub fn decode(m: &MotzkinWord) -> BracketedWord {
    parse_balanced(m.tokens()).expect("validated Motzkin word")
}

/// Decodes an unvalidated token sequence.
pub fn decode_tokens(tokens: &[MotzkinLetter]) -> Result<BracketedWord, MotzkinError> {
    parse_balanced(tokens)
}

/// Encodes a context; stars map to themselves.
pub fn encode_star(q: &StarBracketedWord) -> StarMotzkinWord {
    let mut out = Vec::new();
    flatten::<StarToken<MotzkinLetter>>(q.word(), &mut out);
    let word = StarWord::relaxed(q.arity(), out).expect("encoding preserves star counts");
    StarMotzkinWord(word)
}

/// Inverse of [`encode_star`].
pub fn decode_star(p: &StarMotzkinWord) -> StarBracketedWord {
    let tree = parse_balanced(p.tokens()).expect("validated star Motzkin word");
    StarBracketedWord::relaxed(p.arity(), tree).expect("decoding preserves star counts")
}

/// Decodes an unvalidated star token sequence.
pub fn decode_star_tokens(
    arity: usize,
    tokens: &[StarToken<MotzkinLetter>],
    mode: StarMode,
) -> Result<StarBracketedWord> {
    let tree = parse_balanced(tokens)?;
    StarBracketedWord::with_mode(arity, tree, mode)
}

/// `p|_{u1,…,uk}` on Motzkin words; the result is checked to be Motzkin.
pub fn substitute_motzkin(p: &StarMotzkinWord, u: &[MotzkinWord]) -> Result<MotzkinWord> {
    let args: Vec<Word<MotzkinLetter>> = u.iter().map(|m| m.as_word().clone()).collect();
    let word = p.as_star_word().substitute(&args)?;
    MotzkinWord::from_word(word)
        .map_err(|e| Error::Internal(format!("star substitution left the Motzkin words: {e}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Level(Symbol),
    Down,
}

/// A lattice path that never dips below zero and ends at height zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MotzkinPath(Vec<Step>);

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, MotzkinError> {
        check_motzkin(&steps_as_tokens(&steps))?;
        Ok(MotzkinPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn max_height(&self) -> usize {
        let mut height = 0usize;
        let mut max = 0;
        for step in &self.0 {
            match step {
                Step::Up => {
                    height += 1;
                    max = max.max(height);
                }
                Step::Down => height -= 1,
                Step::Level(_) => {}
            }
        }
        max
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.0 {
            match step {
                Step::Up => f.write_str("U")?,
                Step::Down => f.write_str("D")?,
                Step::Level(s) => s.fmt(f)?,
            }
        }
        Ok(())
    }
}

fn steps_as_tokens(steps: &[Step]) -> Vec<MotzkinLetter> {
    steps
        .iter()
        .map(|s| match s {
            Step::Up => MotzkinLetter::Open,
            Step::Down => MotzkinLetter::Close,
            Step::Level(x) => MotzkinLetter::Letter(*x),
        })
        .collect()
}

/// `⌊` ↦ up, `⌋` ↦ down, a letter ↦ a level step carrying it.
pub fn to_path(m: &MotzkinWord) -> MotzkinPath {
    MotzkinPath(
        m.tokens()
            .iter()
            .map(|t| match t {
                MotzkinLetter::Open => Step::Up,
                MotzkinLetter::Close => Step::Down,
                MotzkinLetter::Letter(x) => Step::Level(*x),
            })
            .collect(),
    )
}

/// Inverse of [`to_path`]; rejects paths that dip below zero or end above it.
pub fn from_path(steps: &[Step]) -> Result<MotzkinWord, MotzkinError> {
    MotzkinWord::new(steps_as_tokens(steps))
}

/// All Motzkin words of exactly `n` tokens over `letters ∪ {⌊, ⌋}`, in
/// lexicographic order (letters, then `⌊`, then `⌋`). Generates every
/// sequence and keeps the balanced ones.
pub fn motzkin_sequences<L: Clone + Ord>(n: usize, letters: &[L]) -> Vec<Vec<MotzkinLetter<L>>> {
    let mut alphabet: Vec<MotzkinLetter<L>> = letters.iter().cloned().map(MotzkinLetter::Letter).collect();
    alphabet.push(MotzkinLetter::Open);
    alphabet.push(MotzkinLetter::Close);
    alphabet.sort();
    alphabet.dedup();

    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let seq: Vec<MotzkinLetter<L>> = digits.iter().map(|&d| alphabet[d].clone()).collect();
        if is_motzkin(&seq) {
            out.push(seq);
        }
        // odometer increment, most significant digit first
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < alphabet.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// All Motzkin words of token length `n` over `alphabet`.
pub fn enumerate_motzkin(n: usize, alphabet: &[Symbol]) -> Vec<MotzkinWord> {
    motzkin_sequences(n, alphabet).into_iter().map(|t| MotzkinWord(Word::new(t))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_bracketed, parse_motzkin, parse_motzkin_tokens, parse_star_bracketed};

    fn x() -> Symbol {
        Symbol::new('x').unwrap()
    }

    fn m(s: &str) -> MotzkinWord {
        parse_motzkin(s).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(is_motzkin(&parse_motzkin_tokens("[[x][y]]z").unwrap()));
        assert_eq!(
            check_motzkin(&parse_motzkin_tokens("[x][yz").unwrap()),
            Err(MotzkinError::Unbalanced { unclosed: 1, position: 4 })
        );
        assert_eq!(
            check_motzkin(&parse_motzkin_tokens("x][y[z]").unwrap()),
            Err(MotzkinError::PrefixViolation { position: 2 })
        );
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&parse_bracketed("abc").unwrap()).to_string(), "abc");
        let f = parse_bracketed("[[abc]ab]").unwrap();
        let tokens: Vec<String> = encode(&f).tokens().iter().map(ToString::to_string).collect();
        assert_eq!(tokens, ["[", "[", "a", "b", "c", "]", "a", "b", "]"]);
        assert!(encode(&BracketedWord::one()).is_empty());
    }

    #[test]
    fn decode_examples() {
        let f = parse_bracketed("[[abc]ab]").unwrap();
        assert_eq!(decode(&m("[[abc]ab]")), f);
        assert_eq!(decode(&MotzkinWord::empty()), BracketedWord::one());
        let err = decode_tokens(&parse_motzkin_tokens("[x][yz").unwrap()).unwrap_err();
        assert_eq!(err.reason(), "unbalanced");
        assert_eq!(err.position(), 4);
    }

    #[test]
    fn star_encoding_examples() {
        let q1 = parse_star_bracketed("[*ab]").unwrap();
        let p = encode_star(&q1);
        let rendered: Vec<String> = p
            .tokens()
            .iter()
            .map(|t| match t {
                StarToken::Star(i) => format!("*{i}"),
                StarToken::Letter(l) => l.to_string(),
            })
            .collect();
        assert_eq!(rendered, ["[", "*1", "a", "b", "]"]);
        assert_eq!(decode_star(&p), q1);

        let q = parse_star_bracketed("*1*2").unwrap();
        assert_eq!(encode_star(&q).to_string(), "*1*2");

        let bad = vec![
            StarToken::Letter(MotzkinLetter::Letter(x())),
            StarToken::Letter(MotzkinLetter::Close),
            StarToken::Star(1),
        ];
        assert!(decode_star_tokens(1, &bad, StarMode::ExactlyOnce).is_err());
        assert!(StarMotzkinWord::new(1, bad).is_err());
    }

    #[test]
    fn substitution_examples() {
        let star = |s: &str| encode_star(&parse_star_bracketed(s).unwrap());
        assert_eq!(substitute_motzkin(&star("[*]"), &[m("x")]).unwrap(), m("[x]"));
        assert_eq!(substitute_motzkin(&star("*yxy"), &[m("xyx")]).unwrap(), m("xyxyxy"));
        assert_eq!(substitute_motzkin(&star("[*ab]"), &[m("[abc]")]).unwrap(), m("[[abc]ab]"));
        assert!(matches!(
            substitute_motzkin(&star("[*]"), &[]),
            Err(Error::ArityMismatch { expected: 1, found: 0 })
        ));
    }

    #[test]
    fn path_examples() {
        assert_eq!(to_path(&m("xyz")).to_string(), "xyz");
        assert_eq!(to_path(&m("[[x][y]]z")).to_string(), "UUxDUyDDz");
        let steps: Vec<&str> = to_path(&m("[[x][y]]z"))
            .steps()
            .iter()
            .map(|s| match s {
                Step::Up => "U",
                Step::Down => "D",
                Step::Level(_) => "L",
            })
            .collect();
        assert_eq!(steps, ["U", "U", "L", "D", "U", "L", "D", "D", "L"]);
        assert!(to_path(&MotzkinWord::empty()).steps().is_empty());
        assert_eq!(to_path(&m("[[x][y]]z")).max_height(), 2);
    }

    #[test]
    fn path_round_trip_and_rejection() {
        for n in 0..=6 {
            for w in enumerate_motzkin(n, &[x()]) {
                assert_eq!(from_path(to_path(&w).steps()).unwrap(), w);
            }
        }
        assert_eq!(from_path(&[Step::Down, Step::Up]), Err(MotzkinError::PrefixViolation { position: 1 }));
        assert!(MotzkinPath::new(vec![Step::Up]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_motzkin(0, &[x()]), vec![MotzkinWord::empty()]);
        let two: Vec<String> = enumerate_motzkin(2, &[x()]).iter().map(ToString::to_string).collect();
        assert_eq!(two, ["xx", "[]"]);
        assert_eq!(enumerate_motzkin(4, &[x()]).len(), 9);
    }

    /// Counts by the recurrence M(n+1) = M(n) + Σ_{k=0}^{n-1} M(k) M(n-1-k).
    fn motzkin_numbers(up_to: usize) -> Vec<usize> {
        let mut m = vec![1usize];
        for n in 0..up_to {
            let tail: usize = (0..n).map(|k| m[k] * m[n - 1 - k]).sum();
            m.push(m[n] + tail);
        }
        m
    }

    #[test]
    fn counts_follow_the_recurrence() {
        let expected = motzkin_numbers(8);
        assert_eq!(&expected[..7], &[1, 1, 2, 4, 9, 21, 51]);
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_motzkin(n, &[x()]).len(), count, "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let y = Symbol::new('y').unwrap();
        let words = enumerate_motzkin(4, &[y, x(), y]);
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(words, sorted);
        assert!(words.iter().all(|w| is_motzkin(w.tokens())));
    }

    #[test]
    fn round_trips_up_to_length_six() {
        let y = Symbol::new('y').unwrap();
        for n in 0..=6 {
            for w in enumerate_motzkin(n, &[x(), y]) {
                assert_eq!(encode(&decode(&w)), w);
            }
        }
    }
}
