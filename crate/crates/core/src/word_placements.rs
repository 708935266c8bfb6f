//! Placements of subwords in plain words, their locations, and the
//! separated / nested / intersecting classification with witnesses.
//!
//! Everything here is generic over the letter type `A`, so the same classifier
//! runs on Motzkin token strings when bracketed words are classified.

use std::fmt;

use crate::alphabet::{StarToken, StarWord, Symbol, Word};
use crate::error::{Error, Result};

/// A 1-based inclusive interval `[start, end]` of letter positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location {
    start: usize,
    end: usize,
}

impl Location {
    /// `None` unless `1 <= start <= end`.
    pub fn new(start: usize, end: usize) -> Option<Self> {
        (start >= 1 && start <= end).then_some(Location { start, end })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &Location) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn is_disjoint(&self, other: &Location) -> bool {
        self.end < other.start || other.end < self.start
    }

    pub(crate) fn check_within(&self, len: usize) -> Result<()> {
        if self.end <= len {
            Ok(())
        } else {
            Err(Error::LocationOutOfRange { start: self.start, end: self.end, len })
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// The three relative locations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    Separated,
    Nested,
    Intersecting,
}

impl RelationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RelationKind::Separated => "separated",
            RelationKind::Nested => "nested",
            RelationKind::Intersecting => "intersecting",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Refers to one of the two placements being compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn as_str(&self) -> &'static str {
        match self {
            Side::First => "first",
            Side::Second => "second",
        }
    }
}

/// A classification together with the witness its definition asks for.
///
/// `W` is the word type, `C` the context type. For two placements
/// `(u1, p1)` and `(u2, p2)` of a host `w`:
///
/// * `Separated`: `w = p|_{u1,u2}`, `p1|_{⋆1} = p|_{⋆1,u2}` and
///   `p2|_{⋆2} = p|_{u1,⋆2}`. `⋆1` always belongs to the first placement;
///   `left` names the placement whose star comes first in `p`.
/// * `Nested`: `inner` names the contained placement; for `inner == First`,
///   `p1 = p2|_connector`, otherwise `p2 = p1|_connector`.
/// * `Intersecting`: `w = p|_{abc}`, `a`, `b`, `c` nonempty. With
///   `left == First`, `p1 = p|_{⋆c}` and `p2 = p|_{a⋆}`; with
///   `left == Second` the roles swap.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Relation<W, C> {
    Separated { context: C, left: Side },
    Nested { connector: C, inner: Side },
    Intersecting { context: C, a: W, b: W, c: W, left: Side },
}

pub type WordRelation<A = Symbol> = Relation<Word<A>, StarWord<A>>;

impl<W, C> Relation<W, C> {
    pub fn kind(&self) -> RelationKind {
        match self {
            Relation::Separated { .. } => RelationKind::Separated,
            Relation::Nested { .. } => RelationKind::Nested,
            Relation::Intersecting { .. } => RelationKind::Intersecting,
        }
    }

    /// Converts the witness pieces, keeping the shape.
    pub fn try_map<W2, C2, E>(
        self,
        mut word: impl FnMut(W) -> std::result::Result<W2, E>,
        mut context: impl FnMut(C) -> std::result::Result<C2, E>,
    ) -> std::result::Result<Relation<W2, C2>, E> {
        Ok(match self {
            Relation::Separated { context: p, left } => Relation::Separated { context: context(p)?, left },
            Relation::Nested { connector, inner } => {
                Relation::Nested { connector: context(connector)?, inner }
            }
            Relation::Intersecting { context: p, a, b, c, left } => {
                Relation::Intersecting { context: context(p)?, a: word(a)?, b: word(b)?, c: word(c)?, left }
            }
        })
    }
}

/// One occurrence `(u, p)` of a nonempty subword `u` in `w = p|_u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordPlacement<A = Symbol> {
    subword: Word<A>,
    context: StarWord<A>,
    host: Word<A>,
}

impl<A: Clone> WordPlacement<A> {
    pub fn new(subword: Word<A>, context: StarWord<A>) -> Result<Self> {
        if subword.is_empty() {
            return Err(Error::EmptySubword);
        }
        let host = context.substitute(std::slice::from_ref(&subword))?;
        Ok(WordPlacement { subword, context, host })
    }
}

impl<A> WordPlacement<A> {
    pub fn subword(&self) -> &Word<A> {
        &self.subword
    }

    pub fn context(&self) -> &StarWord<A> {
        &self.context
    }

    pub fn host(&self) -> &Word<A> {
        &self.host
    }

    /// The interval `[j, k]` with `p = z1…z(j-1) ⋆ z(k+1)…zn`.
    pub fn location(&self) -> Location {
        let j = self.context.star_position(1).expect("one-hole context") + 1;
        Location { start: j, end: j + self.subword.len() - 1 }
    }
}

/// All placements of `u` in `w`, leftmost first.
pub fn placements_of<A: Clone + Eq>(u: &Word<A>, w: &Word<A>) -> Result<Vec<WordPlacement<A>>> {
    if u.is_empty() {
        return Err(Error::EmptySubword);
    }
    if u.len() > w.len() {
        return Ok(Vec::new());
    }
    let z = w.letters();
    Ok(z.windows(u.len())
        .enumerate()
        .filter(|(_, window)| *window == u.letters())
        .map(|(i, _)| WordPlacement {
            subword: u.clone(),
            context: StarWord::around(&z[..i], &z[i + u.len()..]),
            host: w.clone(),
        })
        .collect())
}

pub fn location_of<A>(pl: &WordPlacement<A>) -> Location {
    pl.location()
}

/// The placement occupying `loc` in `w`; inverse of [`location_of`].
pub fn placement_from_location<A: Clone>(loc: Location, w: &Word<A>) -> Result<WordPlacement<A>> {
    loc.check_within(w.len())?;
    let z = w.letters();
    Ok(WordPlacement {
        subword: w.factor(loc.start, loc.end),
        context: StarWord::around(&z[..loc.start - 1], &z[loc.end..]),
        host: w.clone(),
    })
}

/// Relative location of two intervals: disjoint, one inside the other, or a
/// proper overlap.
pub fn classify_intervals(i: Location, j: Location) -> RelationKind {
    if i.is_disjoint(&j) {
        RelationKind::Separated
    } else if i.contains(&j) || j.contains(&i) {
        RelationKind::Nested
    } else {
        RelationKind::Intersecting
    }
}

/// Classifies two placements of the same host and builds the canonical
/// witness from their locations.
pub fn classify_word_placements<A: Clone + Eq>(
    pl1: &WordPlacement<A>,
    pl2: &WordPlacement<A>,
) -> Result<WordRelation<A>> {
    if pl1.host != pl2.host {
        return Err(Error::HostMismatch);
    }
    let w = &pl1.host;
    let z = w.letters();
    let n = w.len();
    let (l1, l2) = (pl1.location(), pl2.location());
    let (j1, k1, j2, k2) = (l1.start, l1.end, l2.start, l2.end);
    let letters = |from: usize, to: usize| -> Vec<StarToken<A>> {
        w.factor(from, to).into_letters().into_iter().map(StarToken::Letter).collect()
    };

    Ok(match classify_intervals(l1, l2) {
        RelationKind::Separated => {
            let (left, (ja, ka, sa), (jb, kb, sb)) = if k1 < j2 {
                (Side::First, (j1, k1, 1), (j2, k2, 2))
            } else {
                (Side::Second, (j2, k2, 2), (j1, k1, 1))
            };
            let mut tokens = letters(1, ja - 1);
            tokens.push(StarToken::Star(sa));
            tokens.extend(letters(ka + 1, jb - 1));
            tokens.push(StarToken::Star(sb));
            tokens.extend(letters(kb + 1, n));
            Relation::Separated { context: StarWord::new(2, tokens)?, left }
        }
        RelationKind::Nested => {
            let (inner, (ji, ki), (jo, ko)) = if l2.contains(&l1) {
                (Side::First, (j1, k1), (j2, k2))
            } else {
                (Side::Second, (j2, k2), (j1, k1))
            };
            let connector = StarWord::around(&z[jo - 1..ji - 1], &z[ki..ko]);
            Relation::Nested { connector, inner }
        }
        RelationKind::Intersecting => {
            // (jl..kl) starts first, (jr..kr) ends last: jl < jr <= kl < kr.
            let (left, (jl, kl), (jr, kr)) =
                if j1 < j2 { (Side::First, (j1, k1), (j2, k2)) } else { (Side::Second, (j2, k2), (j1, k1)) };
            Relation::Intersecting {
                context: StarWord::around(&z[..jl - 1], &z[kr..]),
                a: w.factor(jl, jr - 1),
                b: w.factor(jr, kl),
                c: w.factor(kl + 1, kr),
                left,
            }
        }
    })
}

fn one_sided_hole<A: Clone>(prefix: Option<&Word<A>>, suffix: Option<&Word<A>>) -> StarWord<A> {
    let empty = Word::empty();
    StarWord::around(prefix.unwrap_or(&empty).letters(), suffix.unwrap_or(&empty).letters())
}

/// Checks the defining equations of the claimed relation literally.
pub fn verify_word_witness<A: Clone + Eq>(
    pl1: &WordPlacement<A>,
    pl2: &WordPlacement<A>,
    relation: &WordRelation<A>,
) -> bool {
    if pl1.host != pl2.host {
        return false;
    }
    let w = &pl1.host;
    let (u1, p1) = (&pl1.subword, &pl1.context);
    let (u2, p2) = (&pl2.subword, &pl2.context);
    match relation {
        Relation::Separated { context: p, left } => {
            if p.arity() != 2 || !crate::alphabet::is_star_word(p.tokens(), 2) {
                return false;
            }
            let star_order_ok = match (p.star_position(1), p.star_position(2)) {
                (Some(a), Some(b)) => (a < b) == (*left == Side::First),
                _ => false,
            };
            star_order_ok
                && p.substitute(&[u1.clone(), u2.clone()]).as_ref() == Ok(w)
                && p.substitute_partial(&[None, Some(u2)]).ok().as_ref() == Some(&p1.relabel_hole(1, 2))
                && p.substitute_partial(&[Some(u1), None]).ok().as_ref() == Some(&p2.relabel_hole(2, 2))
        }
        Relation::Nested { connector, inner } => {
            if connector.arity() != 1 || !crate::alphabet::is_star_word(connector.tokens(), 1) {
                return false;
            }
            let (inner_ctx, outer_ctx) = match inner {
                Side::First => (p1, p2),
                Side::Second => (p2, p1),
            };
            outer_ctx.plug(connector).ok().as_ref() == Some(inner_ctx)
        }
        Relation::Intersecting { context: p, a, b, c, left } => {
            if a.is_empty() || b.is_empty() || c.is_empty() {
                return false;
            }
            if p.arity() != 1 || !crate::alphabet::is_star_word(p.tokens(), 1) {
                return false;
            }
            let abc = a.concat(b).concat(c);
            // ⋆c covers the left piece ab, a⋆ the right piece bc.
            let star_c = one_sided_hole(None, Some(c));
            let a_star = one_sided_hole(Some(a), None);
            let (left_ctx, right_ctx) = match left {
                Side::First => (p1, p2),
                Side::Second => (p2, p1),
            };
            p.substitute(&[abc]).as_ref() == Ok(w)
                && p.plug(&star_c).ok().as_ref() == Some(left_ctx)
                && p.plug(&a_star).ok().as_ref() == Some(right_ctx)
        }
    }
}
