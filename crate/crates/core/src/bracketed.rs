//! Bracketed words: the free operated monoid on an alphabet.
//!
//! A bracketed word is a sequence of atoms, each either a letter or a
//! bracketed word wrapped by the operator `⌊·⌋`. The recursive type is the
//! whole free object; the filtration by nesting level is exposed through
//! [`BracketedWord::depth`].

use std::fmt;

use crate::alphabet::{check_star_counts, star_label, write_tokens, StarMode, StarToken, Symbol};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom<L = Symbol> {
    Letter(L),
    Bracket(BracketedWord<L>),
}

/// An element of the free operated monoid on `L`; the empty sequence is `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BracketedWord<L = Symbol>(Vec<Atom<L>>);

impl<L> BracketedWord<L> {
    pub fn new(atoms: Vec<Atom<L>>) -> Self {
        BracketedWord(atoms)
    }

    pub fn one() -> Self {
        BracketedWord(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn atoms(&self) -> &[Atom<L>] {
        &self.0
    }

    pub fn into_atoms(self) -> Vec<Atom<L>> {
        self.0
    }

    /// `⌊w⌋`. Note `⌊1⌋` is not `1`.
    pub fn bracket(self) -> Self {
        BracketedWord(vec![Atom::Bracket(self)])
    }

    /// Smallest `n` with the word in the `n`-th stage of the construction:
    /// letters have depth 0, `⌊u⌋` has depth `depth(u) + 1`, and a product
    /// takes the maximum over its atoms.
    pub fn depth(&self) -> usize {
        self.0
            .iter()
            .map(|atom| match atom {
                Atom::Letter(_) => 0,
                Atom::Bracket(inner) => inner.depth() + 1,
            })
            .max()
            .unwrap_or(0)
    }

    /// Letters in left-to-right order, ignoring brackets.
    pub fn leaves(&self) -> Vec<&L> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a L>) {
        for atom in &self.0 {
            match atom {
                Atom::Letter(l) => out.push(l),
                Atom::Bracket(inner) => inner.collect_leaves(out),
            }
        }
    }

    /// Rebuilds the tree, expanding each letter into a sequence of atoms.
    pub(crate) fn flat_map_letters<M>(&self, f: &mut impl FnMut(&L) -> Vec<Atom<M>>) -> BracketedWord<M> {
        let mut out = Vec::with_capacity(self.0.len());
        for atom in &self.0 {
            match atom {
                Atom::Letter(l) => out.extend(f(l)),
                Atom::Bracket(inner) => out.push(Atom::Bracket(inner.flat_map_letters(f))),
            }
        }
        BracketedWord(out)
    }
}

impl<L: Clone> BracketedWord<L> {
    /// Monoid product: concatenation of atom sequences.
    pub fn product(&self, other: &BracketedWord<L>) -> BracketedWord<L> {
        let mut atoms = self.0.clone();
        atoms.extend_from_slice(&other.0);
        BracketedWord(atoms)
    }
}

impl<L> Default for BracketedWord<L> {
    fn default() -> Self {
        BracketedWord::one()
    }
}

impl<L> FromIterator<Atom<L>> for BracketedWord<L> {
    fn from_iter<I: IntoIterator<Item = Atom<L>>>(iter: I) -> Self {
        BracketedWord(iter.into_iter().collect())
    }
}

pub fn bw_product<L: Clone>(a: &BracketedWord<L>, b: &BracketedWord<L>) -> BracketedWord<L> {
    a.product(b)
}

pub fn apply_bracket<L: Clone>(w: &BracketedWord<L>) -> BracketedWord<L> {
    w.clone().bracket()
}

pub fn depth<L>(f: &BracketedWord<L>) -> usize {
    f.depth()
}

fn render<L>(w: &BracketedWord<L>, leaf: &impl Fn(&L) -> String, out: &mut Vec<String>) {
    for atom in w.atoms() {
        match atom {
            Atom::Letter(l) => out.push(leaf(l)),
            Atom::Bracket(inner) => {
                out.push("[".into());
                render(inner, leaf, out);
                out.push("]".into());
            }
        }
    }
}

impl<L: fmt::Display> fmt::Display for BracketedWord<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens = Vec::new();
        render(self, &|l: &L| l.to_string(), &mut tokens);
        write_tokens(f, &tokens)
    }
}

/// True iff each `⋆i`, `1 <= i <= k`, occurs exactly once anywhere in the tree.
pub fn is_star_bracketed<L>(t: &BracketedWord<StarToken<L>>, k: usize) -> bool {
    check_star_counts(t.leaves().into_iter().filter_map(StarToken::star_index), k, StarMode::ExactlyOnce)
}

/// A bracketed word over `X ∪ {⋆1, …, ⋆k}`: a context with `k` holes that
/// may sit at any bracket depth.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StarBracketedWord {
    arity: usize,
    word: BracketedWord<StarToken<Symbol>>,
}

impl StarBracketedWord {
    pub fn new(arity: usize, word: BracketedWord<StarToken<Symbol>>) -> Result<Self> {
        Self::with_mode(arity, word, StarMode::ExactlyOnce)
    }

    /// Each star at most once; absent stars make substitution ignore their
    /// argument.
    pub fn relaxed(arity: usize, word: BracketedWord<StarToken<Symbol>>) -> Result<Self> {
        Self::with_mode(arity, word, StarMode::AtMostOnce)
    }

    pub fn with_mode(arity: usize, word: BracketedWord<StarToken<Symbol>>, mode: StarMode) -> Result<Self> {
        let stars = word.leaves().into_iter().filter_map(StarToken::star_index);
        if check_star_counts(stars, arity, mode) {
            Ok(StarBracketedWord { arity, word })
        } else {
            Err(Error::NotStarWord { arity })
        }
    }

    pub fn hole() -> Self {
        StarBracketedWord { arity: 1, word: BracketedWord(vec![Atom::Letter(StarToken::Star(1))]) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn word(&self) -> &BracketedWord<StarToken<Symbol>> {
        &self.word
    }

    pub fn depth(&self) -> usize {
        self.word.depth()
    }

    fn check_arity(&self, found: usize) -> Result<()> {
        if found == self.arity {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected: self.arity, found })
        }
    }

    /// `q|_{s1,…,sk}`: each `⋆i` is replaced in place by the atoms of `s_i`,
    /// at whatever bracket depth it sits.
    pub fn substitute(&self, args: &[BracketedWord]) -> Result<BracketedWord> {
        self.check_arity(args.len())?;
        Ok(self.word.flat_map_letters(&mut |t| match t {
            StarToken::Letter(s) => vec![Atom::Letter(*s)],
            StarToken::Star(i) => args[i - 1].atoms().to_vec(),
        }))
    }

    /// Replaces only the stars with a `Some` argument; other stars keep their
    /// index.
    pub fn substitute_partial(&self, args: &[Option<&BracketedWord>]) -> Result<StarBracketedWord> {
        self.check_arity(args.len())?;
        let word = self.word.flat_map_letters(&mut |t| match t {
            StarToken::Star(i) => match args[i - 1] {
                Some(s) => lift(s).into_atoms(),
                None => vec![Atom::Letter(StarToken::Star(*i))],
            },
            letter => vec![Atom::Letter(*letter)],
        });
        Ok(StarBracketedWord { arity: self.arity, word })
    }

    /// `q|_r` for a one-hole context `q`; the stars of `r` become the stars
    /// of the result.
    pub fn plug(&self, inner: &StarBracketedWord) -> Result<StarBracketedWord> {
        if self.arity != 1 {
            return Err(Error::ArityMismatch { expected: self.arity, found: 1 });
        }
        let word = self.word.flat_map_letters(&mut |t| match t {
            StarToken::Star(_) => inner.word.atoms().to_vec(),
            letter => vec![Atom::Letter(*letter)],
        });
        Ok(StarBracketedWord { arity: inner.arity, word })
    }

    pub(crate) fn relabel_hole(&self, index: usize, arity: usize) -> StarBracketedWord {
        debug_assert_eq!(self.arity, 1);
        let word = self.word.flat_map_letters(&mut |t| match t {
            StarToken::Star(_) => vec![Atom::Letter(StarToken::Star(index))],
            letter => vec![Atom::Letter(*letter)],
        });
        StarBracketedWord { arity, word }
    }

    /// `prefix ⋆ suffix` at top level, as used for `⋆c` and `a⋆`.
    pub(crate) fn hole_between(prefix: &BracketedWord, suffix: &BracketedWord) -> Self {
        let mut atoms = lift(prefix).into_atoms();
        atoms.push(Atom::Letter(StarToken::Star(1)));
        atoms.extend(lift(suffix).into_atoms());
        StarBracketedWord { arity: 1, word: BracketedWord(atoms) }
    }
}

/// Views a star-free word as a word over `X ∪ stars`.
pub(crate) fn lift(w: &BracketedWord) -> BracketedWord<StarToken<Symbol>> {
    w.flat_map_letters(&mut |s| vec![Atom::Letter(StarToken::Letter(*s))])
}

/// Number of tokens in the flat encoding: letters count 1, each bracket 2.
pub fn encoded_len<L>(w: &BracketedWord<L>) -> usize {
    w.atoms()
        .iter()
        .map(|atom| match atom {
            Atom::Letter(_) => 1,
            Atom::Bracket(inner) => encoded_len(inner) + 2,
        })
        .sum()
}

/// Every bracketed word over `alphabet` with depth at most `max_depth`, at
/// most `max_width` atoms in each sequence (top level and inside every
/// bracket), and at most `max_encoded_len` encoded tokens. Built directly on
/// the tree, so it can serve as an independent source of test inputs.
pub fn enumerate_bracketed<L: Clone>(
    alphabet: &[L],
    max_depth: usize,
    max_width: usize,
    max_encoded_len: usize,
) -> Vec<BracketedWord<L>> {
    sequences_within(alphabet, max_depth, max_width, max_encoded_len).into_iter().map(|(w, _)| w).collect()
}

fn sequences_within<L: Clone>(
    alphabet: &[L],
    depth: usize,
    width: usize,
    budget: usize,
) -> Vec<(BracketedWord<L>, usize)> {
    let mut atoms: Vec<(Atom<L>, usize)> = alphabet.iter().cloned().map(|l| (Atom::Letter(l), 1)).collect();
    if depth > 0 && budget >= 2 {
        for (inner, cost) in sequences_within(alphabet, depth - 1, width, budget - 2) {
            atoms.push((Atom::Bracket(inner), cost + 2));
        }
    }
    let mut out = vec![(BracketedWord::one(), 0)];
    let mut frontier = vec![(Vec::<Atom<L>>::new(), 0usize)];
    for _ in 0..width {
        let mut next = Vec::new();
        for (seq, used) in &frontier {
            for (atom, cost) in &atoms {
                if used + cost <= budget {
                    let mut s = seq.clone();
                    s.push(atom.clone());
                    next.push((s, used + cost));
                }
            }
        }
        out.extend(next.iter().cloned().map(|(s, c)| (BracketedWord(s), c)));
        frontier = next;
    }
    out
}

pub fn substitute_bracketed(q: &StarBracketedWord, s: &[BracketedWord]) -> Result<BracketedWord> {
    q.substitute(s)
}

impl fmt::Display for StarBracketedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut tokens = Vec::new();
        let arity = self.arity;
        render(
            &self.word,
            &|t: &StarToken<Symbol>| match t {
                StarToken::Letter(s) => s.to_string(),
                StarToken::Star(i) => star_label(arity, *i),
            },
            &mut tokens,
        );
        write_tokens(f, &tokens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_bracketed, parse_star_bracketed};

    fn b(s: &str) -> BracketedWord {
        parse_bracketed(s).unwrap()
    }

    fn q(s: &str) -> StarBracketedWord {
        parse_star_bracketed(s).unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(bw_product(&b("[x]"), &b("y")), b("[x]y"));
        assert_eq!(bw_product(&b("[[abc]ab]"), &BracketedWord::one()), b("[[abc]ab]"));
        assert_eq!(bw_product(&b("ab"), &b("c")), b("abc"));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(apply_bracket(&b("x")), b("[x]"));
        let empty_bracket = apply_bracket(&BracketedWord::<Symbol>::one());
        assert!(!empty_bracket.is_one());
        assert_eq!(empty_bracket.to_string(), "[]");
        assert_eq!(apply_bracket(&b("[abc]ab")), b("[[abc]ab]"));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth(&b("xy")), 0);
        assert_eq!(depth(&b("[x]")), 1);
        assert_eq!(depth(&b("[[abc]ab]")), 2);
        assert_eq!(depth(&BracketedWord::<Symbol>::one()), 0);
        assert_eq!(depth(&b("[]")), 1);
        assert_eq!(depth(&b("x[y][[z]]w")), 2);
    }

    #[test]
    fn substitution_examples() {
        let q1 = q("[*ab]");
        assert_eq!(q1.substitute(&[b("[abc]")]).unwrap(), b("[[abc]ab]"));
        assert_eq!(StarBracketedWord::hole().substitute(&[b("[x]y")]).unwrap(), b("[x]y"));
        assert_eq!(q1.plug(&q("[*c]")).unwrap(), q("[[*c]ab]"));
        assert_eq!(q("*1[*2]").substitute(&[b("x")]), Err(Error::ArityMismatch { expected: 2, found: 1 }));
        assert_eq!(q("*1[x*2]").substitute(&[b("[y]"), BracketedWord::one()]).unwrap(), b("[y][x]"));
    }

    #[test]
    fn star_recognition() {
        let t = |s: &str| q(s).word().clone();
        assert!(is_star_bracketed(&t("[*ab]"), 1));
        assert!(!is_star_bracketed(&lift(&b("[ab]")), 1));
        let twice: BracketedWord<StarToken<Symbol>> =
            BracketedWord::new(vec![Atom::Bracket(BracketedWord::new(vec![
                Atom::Letter(StarToken::Star(1)),
                Atom::Bracket(BracketedWord::new(vec![Atom::Letter(StarToken::Star(1))])),
            ]))]);
        assert!(!is_star_bracketed(&twice, 1));
        assert!(StarBracketedWord::new(1, twice.clone()).is_err());
        assert!(StarBracketedWord::relaxed(1, twice).is_err());
        assert!(StarBracketedWord::relaxed(2, t("[*1ab]")).is_ok());
        assert!(StarBracketedWord::new(2, t("[*1ab]")).is_err());
    }

    #[test]
    fn relaxed_substitution_ignores_missing_stars() {
        let r = StarBracketedWord::relaxed(2, q("[*1ab]").word().clone()).unwrap();
        assert_eq!(r.substitute(&[b("c"), b("zzz")]).unwrap(), b("[cab]"));
    }

    #[test]
    fn substitution_composes() {
        let outer = q("[*ab]");
        let middle = q("[*c]");
        let s = b("xy");
        let stepwise = outer.substitute(&[middle.substitute(std::slice::from_ref(&s)).unwrap()]).unwrap();
        let composed = outer.plug(&middle).unwrap().substitute(&[s]).unwrap();
        assert_eq!(stepwise, composed);
    }

    #[test]
    fn operated_monoid_laws_depth_two_width_three() {
        let x = Symbol::new('x').unwrap();
        let words = enumerate_bracketed(&[x], 2, 3, 6);
        assert!(words.iter().all(|w| w.depth() <= 2));
        for a in &words {
            assert_eq!(&a.product(&BracketedWord::one()), a);
            assert_eq!(&BracketedWord::one().product(a), a);
            for b in &words {
                for c in &words {
                    assert_eq!(a.product(b).product(c), a.product(&b.product(c)));
                }
            }
        }
    }

    #[test]
    fn enumeration_is_duplicate_free_and_bounded() {
        let x = Symbol::new('x').unwrap();
        let y = Symbol::new('y').unwrap();
        let words = enumerate_bracketed(&[x, y], 3, 3, 6);
        let unique: std::collections::HashSet<_> = words.iter().collect();
        assert_eq!(unique.len(), words.len());
        for w in &words {
            assert!(w.depth() <= 3);
            assert!(encoded_len(w) <= 6);
        }
        // single symbol, encoded length <= 2: 1, x, xx, []
        assert_eq!(enumerate_bracketed(&[x], 5, 5, 2).len(), 4);
    }

    #[test]
    fn star_only_sinks_deeper() {
        let s = b("[[x]]");
        for ctx in ["*", "[*]", "x[*x]", "[[*]]y"] {
            let r = q(ctx).substitute(std::slice::from_ref(&s)).unwrap();
            assert!(r.depth() >= s.depth());
        }
    }
}
