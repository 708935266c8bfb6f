//! Placements of bracketed subwords, located and classified through the
//! Motzkin encoding.

use crate::alphabet::{StarToken, Word};
use crate::bracketed::{BracketedWord, StarBracketedWord};
use crate::error::{Error, Result};
use crate::motzkin::{decode, decode_star, encode, encode_star, MotzkinLetter, MotzkinWord, StarMotzkinWord};
use crate::word_placements::{
    classify_word_placements, placement_from_location, placements_of, Location, Relation, Side, WordPlacement,
};

/// Witness type for a pair of bracketed placements; see [`Relation`].
pub type BracketedRelation = Relation<BracketedWord, StarBracketedWord>;

/// One occurrence `(s, q)` of a bracketed subword `s ≠ 1` in `f = q|_s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BracketedPlacement {
    subword: BracketedWord,
    context: StarBracketedWord,
    host: BracketedWord,
}

impl BracketedPlacement {
    pub fn new(subword: BracketedWord, context: StarBracketedWord) -> Result<Self> {
        if subword.is_one() {
            return Err(Error::EmptySubword);
        }
        let host = context.substitute(std::slice::from_ref(&subword))?;
        Ok(BracketedPlacement { subword, context, host })
    }

    pub fn subword(&self) -> &BracketedWord {
        &self.subword
    }

    pub fn context(&self) -> &StarBracketedWord {
        &self.context
    }

    pub fn host(&self) -> &BracketedWord {
        &self.host
    }

    /// The image `(φ(s), φ(q))`, a placement of `φ(s)` in `φ(f)`.
    pub fn encoded(&self) -> WordPlacement<MotzkinLetter> {
        WordPlacement::new(encode(&self.subword).into_word(), encode_star(&self.context).into_star_word())
            .expect("a nonempty subword encodes to a nonempty word")
    }

    /// Location of the encoded placement inside the encoded host.
    pub fn location(&self) -> Location {
        self.encoded().location()
    }

    /// Pulls a placement of Motzkin words back to bracketed words. Fails
    /// unless both the subword and the context are Motzkin.
    pub fn from_encoded(pl: &WordPlacement<MotzkinLetter>) -> Result<Self> {
        let s = MotzkinWord::from_word(pl.subword().clone())?;
        let q = StarMotzkinWord::from_star_word(pl.context().clone())?;
        Ok(BracketedPlacement {
            subword: decode(&s),
            context: decode_star(&q),
            host: decode(&MotzkinWord::from_word(pl.host().clone())?),
        })
    }
}

/// Every placement of `s` in `f`, ordered by encoded location.
pub fn bracketed_placements_of(s: &BracketedWord, f: &BracketedWord) -> Result<Vec<BracketedPlacement>> {
    if s.is_one() {
        return Err(Error::EmptySubword);
    }
    placements_of(encode(s).as_word(), encode(f).as_word())?
        .iter()
        .map(|pl| {
            // Cutting a balanced factor out of a Motzkin word leaves a Motzkin context.
            BracketedPlacement::from_encoded(pl)
                .map_err(|e| Error::Internal(format!("occurrence context is not Motzkin: {e}")))
        })
        .collect()
}

/// The placement of `f` whose encoded location is `loc`.
pub fn bracketed_placement_from_location(loc: Location, f: &BracketedWord) -> Result<BracketedPlacement> {
    let pl = placement_from_location(loc, encode(f).as_word())?;
    if MotzkinWord::from_word(pl.subword().clone()).is_err() {
        return Err(Error::UnbalancedLocation { start: loc.start(), end: loc.end() });
    }
    BracketedPlacement::from_encoded(&pl)
}

fn internal(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::Internal(format!("{what} of an encoded witness is not Motzkin: {e}"))
}

/// Classifies two placements of the same host; the witness is built on the
/// encodings and decoded piece by piece.
pub fn classify_bracketed_placements(
    pl1: &BracketedPlacement,
    pl2: &BracketedPlacement,
) -> Result<BracketedRelation> {
    if pl1.host != pl2.host {
        return Err(Error::HostMismatch);
    }
    let relation = classify_word_placements(&pl1.encoded(), &pl2.encoded())?;
    relation.try_map(
        |w: Word<MotzkinLetter>| {
            MotzkinWord::from_word(w).map(|m| decode(&m)).map_err(|e| internal("a piece")(e.into()))
        },
        |p| StarMotzkinWord::from_star_word(p).map(|q| decode_star(&q)).map_err(internal("a context")),
    )
}

fn stars_in_order(q: &StarBracketedWord) -> Vec<usize> {
    q.word().leaves().into_iter().filter_map(StarToken::star_index).collect()
}

/// Checks the defining equations of the claimed relation directly on
/// bracketed words.
pub fn verify_bracketed_witness(
    pl1: &BracketedPlacement,
    pl2: &BracketedPlacement,
    relation: &BracketedRelation,
) -> bool {
    if pl1.host != pl2.host {
        return false;
    }
    let f = &pl1.host;
    let (s1, q1) = (&pl1.subword, &pl1.context);
    let (s2, q2) = (&pl2.subword, &pl2.context);
    match relation {
        Relation::Separated { context: q, left } => {
            if q.arity() != 2 || !crate::bracketed::is_star_bracketed(q.word(), 2) {
                return false;
            }
            let expected_order = match left {
                Side::First => [1, 2],
                Side::Second => [2, 1],
            };
            stars_in_order(q) == expected_order
                && q.substitute(&[s1.clone(), s2.clone()]).as_ref() == Ok(f)
                && q.substitute_partial(&[None, Some(s2)]).ok().as_ref() == Some(&q1.relabel_hole(1, 2))
                && q.substitute_partial(&[Some(s1), None]).ok().as_ref() == Some(&q2.relabel_hole(2, 2))
        }
        Relation::Nested { connector, inner } => {
            if connector.arity() != 1 || !crate::bracketed::is_star_bracketed(connector.word(), 1) {
                return false;
            }
            let (inner_ctx, outer_ctx) = match inner {
                Side::First => (q1, q2),
                Side::Second => (q2, q1),
            };
            outer_ctx.plug(connector).ok().as_ref() == Some(inner_ctx)
        }
        Relation::Intersecting { context: q, a, b, c, left } => {
            if a.is_one() || b.is_one() || c.is_one() {
                return false;
            }
            if q.arity() != 1 || !crate::bracketed::is_star_bracketed(q.word(), 1) {
                return false;
            }
            let abc = a.product(b).product(c);
            let one = BracketedWord::one();
            let star_c = StarBracketedWord::hole_between(&one, c);
            let a_star = StarBracketedWord::hole_between(a, &one);
            let (left_ctx, right_ctx) = match left {
                Side::First => (q1, q2),
                Side::Second => (q2, q1),
            };
            q.substitute(&[abc]).as_ref() == Ok(f)
                && q.plug(&star_c).ok().as_ref() == Some(left_ctx)
                && q.plug(&a_star).ok().as_ref() == Some(right_ctx)
        }
    }
}
