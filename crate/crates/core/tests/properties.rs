use operated_words::text::parse_bracketed;
use operated_words::{
    bracketed_placement_from_location, bracketed_placements_of, classify_bracketed_placements,
    classify_intervals, classify_word_placements, decode, encode, encode_star, placement_from_location,
    placements_of, verify_bracketed_witness, verify_word_witness, Atom, BracketedWord, Location,
    StarBracketedWord, StarToken, Symbol, Word,
};
use proptest::prelude::*;

fn symbol() -> impl Strategy<Value = Symbol> {
    prop::sample::select(vec!['x', 'y', 'z']).prop_map(|c| Symbol::new(c).unwrap())
}

fn bracketed() -> impl Strategy<Value = BracketedWord> {
    let leaf = prop::collection::vec(symbol(), 0..3)
        .prop_map(|s| s.into_iter().map(Atom::Letter).collect::<BracketedWord>());
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop::collection::vec(
            prop_oneof![symbol().prop_map(Atom::Letter), inner.prop_map(Atom::Bracket)],
            0..4,
        )
        .prop_map(|atoms| atoms.into_iter().collect())
    })
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(vec!['x', 'y']), 1..9)
        .prop_map(|cs| cs.into_iter().map(|c| Symbol::new(c).unwrap()).collect())
}

/// A one-hole context made by replacing a balanced factor of `f` with a star.
fn hole_in(f: &BracketedWord, pick: usize) -> Option<StarBracketedWord> {
    let n = encode(f).len();
    let locations: Vec<Location> =
        (1..=n).flat_map(|j| (j..=n).filter_map(move |k| Location::new(j, k))).collect();
    let balanced: Vec<_> =
        locations.into_iter().filter_map(|l| bracketed_placement_from_location(l, f).ok()).collect();
    if balanced.is_empty() {
        None
    } else {
        Some(balanced[pick % balanced.len()].context().clone())
    }
}

proptest! {
    #[test]
    fn encode_decode_round_trip(f in bracketed()) {
        prop_assert_eq!(decode(&encode(&f)), f.clone());
        prop_assert_eq!(parse_bracketed(&f.to_string()).unwrap(), f.clone());
        prop_assert_eq!(encode(&f).to_string(), f.to_string());
    }

    #[test]
    fn products_and_brackets_encode_homomorphically(f in bracketed(), g in bracketed()) {
        let joined: Vec<_> = encode(&f).tokens().iter().chain(encode(&g).tokens()).copied().collect();
        prop_assert_eq!(encode(&f.product(&g)).tokens().to_vec(), joined);
        prop_assert_eq!(encode(&f.clone().bracket()).len(), encode(&f).len() + 2);
    }

    #[test]
    fn locations_identify_word_placements(w in word(), a in 0usize..64, b in 0usize..64) {
        let n = w.len();
        let (j, k) = { let (x, y) = (a % n + 1, b % n + 1); (x.min(y), x.max(y)) };
        let pl = placement_from_location(Location::new(j, k).unwrap(), &w).unwrap();
        prop_assert_eq!(pl.location(), Location::new(j, k).unwrap());
        prop_assert_eq!(pl.context().substitute(&[pl.subword().clone()]).unwrap(), w.clone());
        let again = placements_of(pl.subword(), &w).unwrap();
        prop_assert!(again.contains(&pl));
    }

    #[test]
    fn word_trichotomy_on_longer_words(w in word(), picks in prop::collection::vec(0usize..1000, 4)) {
        let n = w.len();
        let loc = |a: usize, b: usize| {
            let (x, y) = (a % n + 1, b % n + 1);
            Location::new(x.min(y), x.max(y)).unwrap()
        };
        let (l1, l2) = (loc(picks[0], picks[1]), loc(picks[2], picks[3]));
        let p1 = placement_from_location(l1, &w).unwrap();
        let p2 = placement_from_location(l2, &w).unwrap();
        let r = classify_word_placements(&p1, &p2).unwrap();
        prop_assert_eq!(r.kind(), classify_intervals(l1, l2));
        prop_assert!(verify_word_witness(&p1, &p2, &r));
    }

    #[test]
    fn occurrences_are_balanced_factors(f in bracketed(), s in bracketed()) {
        prop_assume!(!s.is_one());
        let found = bracketed_placements_of(&s, &f).unwrap();
        let raw = placements_of(encode(&s).as_word(), encode(&f).as_word()).unwrap();
        prop_assert_eq!(found.len(), raw.len());
        for pl in &found {
            prop_assert_eq!(pl.context().substitute(std::slice::from_ref(&s)).unwrap(), f.clone());
        }
    }

    #[test]
    fn every_factor_of_a_host_is_found(f in bracketed(), pick in 0usize..1000) {
        if let Some(q) = hole_in(&f, pick) {
            // Recover the subword from the host and context through the encodings.
            let n = encode(&f).len();
            let star = encode_star(&q).tokens().iter().position(|t| matches!(t, StarToken::Star(_))).unwrap();
            let len = n + 1 - encode_star(&q).tokens().len();
            let pl = bracketed_placement_from_location(Location::new(star + 1, star + len).unwrap(), &f).unwrap();
            prop_assert_eq!(pl.context(), &q);
            let all = bracketed_placements_of(pl.subword(), &f).unwrap();
            prop_assert!(all.contains(&pl));
        }
    }

    #[test]
    fn context_nesting_transports(f in bracketed(), a in 0usize..1000, b in 0usize..1000) {
        let (Some(q1), Some(q2)) = (hole_in(&f, a), hole_in(&f, b)) else { return Ok(()) };
        // A few connector candidates, including ones that cannot fit.
        for q in [StarBracketedWord::hole(), q1.clone(), q2.clone()] {
            let bracket_level = q2.plug(&q).unwrap() == q1;
            let word_level = encode_star(&q2).as_star_word().plug(encode_star(&q).as_star_word()).unwrap()
                == *encode_star(&q1).as_star_word();
            prop_assert_eq!(bracket_level, word_level);
        }
    }

    #[test]
    fn bracketed_witnesses_verify(f in bracketed(), a in 0usize..1000, b in 0usize..1000) {
        let n = encode(&f).len();
        let placements: Vec<_> = (1..=n)
            .flat_map(|j| (j..=n).filter_map(move |k| Location::new(j, k)))
            .filter_map(|l| bracketed_placement_from_location(l, &f).ok())
            .collect();
        prop_assume!(!placements.is_empty());
        let x = &placements[a % placements.len()];
        let y = &placements[b % placements.len()];
        let r = classify_bracketed_placements(x, y).unwrap();
        prop_assert_eq!(r.kind(), classify_intervals(x.location(), y.location()));
        prop_assert!(verify_bracketed_witness(x, y, &r));
    }
}
