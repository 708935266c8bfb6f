//! Brute-force witness search, independent of the location-based
//! classifiers.
//!
//! Every witness of any of the three shapes is a way of cutting the host
//! (or its encoding) into pieces. The oracle lists all such cuts, keeps the
//! ones whose equations hold, and reports which shapes survived.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::hash::Hash;

use rayon::prelude::*;

use crate::alphabet::{StarToken, StarWord, Symbol, Word};
use crate::bracketed::{enumerate_bracketed, BracketedWord, StarBracketedWord};
use crate::bracketed_placements::{
    bracketed_placement_from_location, classify_bracketed_placements, verify_bracketed_witness,
    BracketedPlacement, BracketedRelation,
};
use crate::error::Result;
use crate::motzkin::{decode, decode_star, encode, MotzkinWord, StarMotzkinWord};
use crate::word_placements::{
    classify_intervals, classify_word_placements, placement_from_location, verify_word_witness, Location,
    Relation, RelationKind, Side, WordPlacement, WordRelation,
};

/// All witnesses found for one pair of placements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict<W, C> {
    pub witnesses: Vec<Relation<W, C>>,
}

impl<W, C> OracleVerdict<W, C> {
    pub fn tags(&self) -> BTreeSet<RelationKind> {
        self.witnesses.iter().map(Relation::kind).collect()
    }
}

/// Every cut of a host into witness pieces, before any equation is checked.
#[derive(Debug, Clone)]
pub struct Candidates<W, C> {
    relations: Vec<Relation<W, C>>,
}

impl<W, C> Candidates<W, C> {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    fn select(&self, mut holds: impl FnMut(&Relation<W, C>) -> bool) -> OracleVerdict<W, C>
    where
        W: Clone,
        C: Clone,
    {
        OracleVerdict { witnesses: self.relations.iter().filter(|r| holds(r)).cloned().collect() }
    }
}

fn stars<A>(z: &[A], cuts: &[(usize, usize)], labels: &[usize]) -> Vec<StarToken<A>>
where
    A: Clone,
{
    // `cuts` are the half-open spans replaced by the stars, in order.
    let mut out = Vec::new();
    let mut at = 0;
    for (&(from, to), &label) in cuts.iter().zip(labels) {
        out.extend(z[at..from].iter().cloned().map(StarToken::Letter));
        out.push(StarToken::Star(label));
        at = to;
    }
    out.extend(z[at..].iter().cloned().map(StarToken::Letter));
    out
}

fn push_unique<T: Eq + Hash + Clone>(seen: &mut HashSet<T>, out: &mut Vec<T>, item: T) {
    if seen.insert(item.clone()) {
        out.push(item);
    }
}

/// Raw cuts of a token sequence: contexts of arity two, connectors
/// `x ⋆ y` built from arbitrary factors, and splits `x·a·b·c·y`.
fn raw_cuts<A: Clone + Eq + Hash>(z: &[A]) -> Vec<Relation<Vec<A>, StarWord<A>>> {
    let n = z.len();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for a in 0..=n {
        for b in a..=n {
            for c in b..=n {
                for d in c..=n {
                    for (labels, left) in [([1, 2], Side::First), ([2, 1], Side::Second)] {
                        let tokens = stars(z, &[(a, b), (c, d)], &labels);
                        let context = StarWord::new(2, tokens).expect("two distinct stars");
                        push_unique(&mut seen, &mut out, Relation::Separated { context, left });
                    }
                }
            }
        }
    }
    let factors: HashSet<&[A]> = (0..=n).flat_map(|i| (i..=n).map(move |j| &z[i..j])).collect();
    for x in &factors {
        for y in &factors {
            for inner in [Side::First, Side::Second] {
                let connector = StarWord::around(x, y);
                push_unique(&mut seen, &mut out, Relation::Nested { connector, inner });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..=n {
                    for left in [Side::First, Side::Second] {
                        push_unique(
                            &mut seen,
                            &mut out,
                            Relation::Intersecting {
                                context: StarWord::around(&z[..i], &z[l..]),
                                a: z[i..j].to_vec(),
                                b: z[j..k].to_vec(),
                                c: z[k..l].to_vec(),
                                left,
                            },
                        );
                    }
                }
            }
        }
    }
    out
}

/// Candidate witnesses for placements in the word `w`.
pub fn word_candidates<A: Clone + Eq + Hash>(w: &Word<A>) -> Candidates<Word<A>, StarWord<A>> {
    let relations = raw_cuts(w.letters())
        .into_iter()
        .map(|r| r.try_map(|v| Ok::<_, ()>(Word::new(v)), Ok).expect("infallible"))
        .collect();
    Candidates { relations }
}

/// Candidate witnesses for placements in the bracketed word `f`: the cuts of
/// `φ(f)` whose pieces are Motzkin, decoded.
pub fn bracketed_candidates(f: &BracketedWord) -> Candidates<BracketedWord, StarBracketedWord> {
    let relations = raw_cuts(encode(f).tokens())
        .into_iter()
        .filter_map(|r| {
            r.try_map(
                |v| MotzkinWord::new(v).map(|m| decode(&m)).map_err(|_| ()),
                |p| StarMotzkinWord::from_star_word(p).map(|q| decode_star(&q)).map_err(|_| ()),
            )
            .ok()
        })
        .collect();
    Candidates { relations }
}

/// Every witness of any shape for a pair of word placements.
pub fn oracle_word_relation<A: Clone + Eq + Hash>(
    pl1: &WordPlacement<A>,
    pl2: &WordPlacement<A>,
) -> OracleVerdict<Word<A>, StarWord<A>> {
    word_candidates(pl1.host()).select(|r| verify_word_witness(pl1, pl2, r))
}

/// Every witness of any shape for a pair of bracketed placements.
pub fn oracle_bracketed_relation(
    pl1: &BracketedPlacement,
    pl2: &BracketedPlacement,
) -> OracleVerdict<BracketedWord, StarBracketedWord> {
    bracketed_candidates(pl1.host()).select(|r| verify_bracketed_witness(pl1, pl2, r))
}

/// Size of an exhaustive check.
#[derive(Debug, Clone)]
pub enum Scale {
    /// All words of length `1..=max_len` over `alphabet`.
    Words { alphabet: Vec<Symbol>, max_len: usize },
    /// All bracketed words `f ≠ 1` over `alphabet` with `|φ(f)| <= max_encoded_len`.
    Bracketed { alphabet: Vec<Symbol>, max_encoded_len: usize },
}

/// Outcome of [`exhaustive_trichotomy_check`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrichotomyReport {
    pub hosts: usize,
    pub pairs: usize,
    /// Pairs per shape, by the fast classifier.
    pub kinds: BTreeMap<RelationKind, usize>,
    /// Witnesses found by the oracle, per shape.
    pub oracle_witnesses: BTreeMap<RelationKind, usize>,
    pub violations: Vec<String>,
}

impl TrichotomyReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    fn merge(mut self, other: TrichotomyReport) -> TrichotomyReport {
        self.hosts += other.hosts;
        self.pairs += other.pairs;
        for (k, v) in other.kinds {
            *self.kinds.entry(k).or_default() += v;
        }
        for (k, v) in other.oracle_witnesses {
            *self.oracle_witnesses.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self
    }
}

fn check_pair<W, C>(
    report: &mut TrichotomyReport,
    label: impl Fn() -> String,
    interval_kind: RelationKind,
    fast: Result<Relation<W, C>>,
    fast_verifies: impl FnOnce(&Relation<W, C>) -> bool,
    oracle: OracleVerdict<W, C>,
) where
    W: PartialEq,
    C: PartialEq,
{
    report.pairs += 1;
    for r in &oracle.witnesses {
        *report.oracle_witnesses.entry(r.kind()).or_default() += 1;
    }
    let tags = oracle.tags();
    if tags.len() != 1 {
        report.violations.push(format!("{}: oracle found shapes {tags:?}", label()));
    }
    let fast = match fast {
        Ok(r) => r,
        Err(e) => {
            report.violations.push(format!("{}: classifier failed: {e}", label()));
            return;
        }
    };
    *report.kinds.entry(fast.kind()).or_default() += 1;
    if fast.kind() != interval_kind || !tags.contains(&fast.kind()) {
        report.violations.push(format!(
            "{}: classifier says {}, intervals say {interval_kind}, oracle says {tags:?}",
            label(),
            fast.kind()
        ));
    }
    if !fast_verifies(&fast) {
        report.violations.push(format!("{}: canonical witness fails its equations", label()));
    }
    if !oracle.witnesses.contains(&fast) {
        report.violations.push(format!("{}: canonical witness missing from oracle list", label()));
    }
}

fn all_words(alphabet: &[Symbol], max_len: usize) -> Vec<Word> {
    let mut layer = vec![Vec::<Symbol>::new()];
    let mut out = Vec::new();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&s| {
                    let mut next = w.clone();
                    next.push(s);
                    next
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word::new));
    }
    out
}

fn locations(n: usize) -> impl Iterator<Item = Location> {
    (1..=n).flat_map(move |j| (j..=n).filter_map(move |k| Location::new(j, k)))
}

fn check_word_host(w: &Word) -> TrichotomyReport {
    let mut report = TrichotomyReport { hosts: 1, ..Default::default() };
    let candidates = word_candidates(w);
    let placements: Vec<WordPlacement> =
        locations(w.len()).map(|l| placement_from_location(l, w).expect("in range")).collect();
    for x in &placements {
        for y in &placements {
            let label = || format!("{w}: {} vs {}", x.location(), y.location());
            check_pair(
                &mut report,
                label,
                classify_intervals(x.location(), y.location()),
                classify_word_placements(x, y),
                |r: &WordRelation| verify_word_witness(x, y, r),
                candidates.select(|r| verify_word_witness(x, y, r)),
            );
        }
    }
    report
}

fn check_bracketed_host(f: &BracketedWord) -> TrichotomyReport {
    let mut report = TrichotomyReport { hosts: 1, ..Default::default() };
    let candidates = bracketed_candidates(f);
    let placements: Vec<BracketedPlacement> =
        locations(encode(f).len()).filter_map(|l| bracketed_placement_from_location(l, f).ok()).collect();
    for x in &placements {
        for y in &placements {
            let label = || format!("{f}: {} vs {}", x.location(), y.location());
            check_pair(
                &mut report,
                label,
                classify_intervals(x.location(), y.location()),
                classify_bracketed_placements(x, y),
                |r: &BracketedRelation| verify_bracketed_witness(x, y, r),
                candidates.select(|r| verify_bracketed_witness(x, y, r)),
            );
        }
    }
    report
}

/// Compares the location-based classifier against the oracle on every pair
/// of placements in every host up to the given size.
pub fn exhaustive_trichotomy_check(scale: &Scale) -> TrichotomyReport {
    let mut report = match scale {
        Scale::Words { alphabet, max_len } => all_words(alphabet, *max_len)
            .par_iter()
            .map(check_word_host)
            .reduce(TrichotomyReport::default, TrichotomyReport::merge),
        Scale::Bracketed { alphabet, max_encoded_len } => {
            let l = *max_encoded_len;
            enumerate_bracketed(alphabet, l, l, l)
                .into_iter()
                .filter(|f| !f.is_one())
                .collect::<Vec<_>>()
                .par_iter()
                .map(check_bracketed_host)
                .reduce(TrichotomyReport::default, TrichotomyReport::merge)
        }
    };
    report.violations.sort();
    report
}
