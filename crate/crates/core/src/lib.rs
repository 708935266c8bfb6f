//! Placements of subwords in free monoids and in free operated monoids.
//!
//! A bracketed word (an element of the free operated monoid on a set of
//! symbols) is encoded as a Motzkin word over the symbols plus a pair of
//! bracket letters. Placements of bracketed subwords, and the
//! separated/nested/intersecting classification of pairs of placements,
//! are carried out on the encoding and pulled back through the decoder.
//!
//! ```
//! use operated_words::text::parse_bracketed;
//! use operated_words::{bracketed_placements_of, encode};
//!
//! let f = parse_bracketed("[[abc]ab]").unwrap();
//! let s = parse_bracketed("ab").unwrap();
//! let found = bracketed_placements_of(&s, &f).unwrap();
//! assert_eq!(found.len(), 2);
//! assert_eq!(found[0].context().to_string(), "[[*c]ab]");
//! assert_eq!(encode(&f).len(), 9);
//! ```

pub mod alphabet;
pub mod bracketed;
pub mod bracketed_placements;
pub mod error;
pub mod motzkin;
pub mod oracle;
pub mod text;
pub mod word_placements;

pub use alphabet::{concat, is_star_word, substitute, StarMode, StarToken, StarWord, Symbol, Word};
pub use bracketed::{
    apply_bracket, bw_product, depth, encoded_len, enumerate_bracketed, is_star_bracketed,
    substitute_bracketed, Atom, BracketedWord, StarBracketedWord,
};
pub use bracketed_placements::{
    bracketed_placement_from_location, bracketed_placements_of, classify_bracketed_placements,
    verify_bracketed_witness, BracketedPlacement, BracketedRelation,
};
pub use error::{Error, MotzkinError, Result};
pub use motzkin::{
    check_motzkin, decode, decode_star, encode, encode_star, enumerate_motzkin, from_path, is_motzkin,
    substitute_motzkin, to_path, MotzkinLetter, MotzkinPath, MotzkinWord, StarMotzkinWord, Step,
};
pub use word_placements::{
    classify_intervals, classify_word_placements, location_of, placement_from_location, placements_of,
    verify_word_witness, Location, Relation, RelationKind, Side, WordPlacement, WordRelation,
};
