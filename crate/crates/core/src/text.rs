//! The plain-text grammar shared by the library and the command line.
//!
//! * symbols are single characters `a`–`z`;
//! * `*` is the star of a one-hole context, `*1`, `*2`, … index stars;
//! * `[` and `]` open and close a bracket (`⌊`, `⌋` and `⋆` are accepted too);
//! * an operand consisting of exactly `eps` is the empty word;
//! * whitespace between tokens is ignored, so the three-letter word is `e p s`.
//!
//! A bracketed word and its Motzkin encoding have the same text, e.g.
//! `[[abc]ab]`.

use std::str::FromStr;

use thiserror::Error;

use crate::alphabet::{StarMode, StarToken, StarWord, Symbol, Word};
use crate::bracketed::{BracketedWord, StarBracketedWord};
use crate::error::MotzkinError;
use crate::motzkin::{decode_star_tokens, decode_tokens, MotzkinLetter, MotzkinWord};
use crate::word_placements::Location;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty operand (write `eps` for the empty word)")]
    EmptyInput,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("star index must be a positive integer")]
    BadStarIndex,
    #[error("stars are not allowed here")]
    UnexpectedStar,
    #[error("brackets are not allowed here")]
    UnexpectedBracket,
    #[error("stars must be numbered 1..k with each occurring exactly once")]
    NotStarWord,
    #[error("not a Motzkin word: {0}")]
    NotMotzkin(MotzkinError),
    #[error("expected a location of the form `j..k` with 1 <= j <= k")]
    BadLocation,
}

/// `position` is a 1-based character offset into the operand.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} (at character {position})")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(position: usize, kind: ParseErrorKind) -> Self {
        ParseError { position, kind }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Raw {
    Sym(Symbol),
    Star(usize),
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<(Raw, usize)>, ParseError> {
    if input.trim() == "eps" {
        return Ok(Vec::new());
    }
    if input.trim().is_empty() {
        return Err(ParseError::at(1, ParseErrorKind::EmptyInput));
    }
    let mut out = Vec::new();
    let mut chars = input.chars().enumerate().peekable();
    while let Some((i, c)) = chars.next() {
        let pos = i + 1;
        match c {
            c if c.is_whitespace() => {}
            '[' | '⌊' => out.push((Raw::Open, pos)),
            ']' | '⌋' => out.push((Raw::Close, pos)),
            '*' | '⋆' => {
                let mut digits = String::new();
                while let Some((_, d)) = chars.next_if(|(_, d)| d.is_ascii_digit()) {
                    digits.push(d);
                }
                let index = if digits.is_empty() {
                    1
                } else {
                    match digits.parse::<usize>() {
                        Ok(n) if n >= 1 => n,
                        _ => return Err(ParseError::at(pos, ParseErrorKind::BadStarIndex)),
                    }
                };
                out.push((Raw::Star(index), pos));
            }
            c => match Symbol::new(c) {
                Ok(s) => out.push((Raw::Sym(s), pos)),
                Err(_) => return Err(ParseError::at(pos, ParseErrorKind::UnexpectedChar(c))),
            },
        }
    }
    Ok(out)
}

fn reject(raw: Raw, pos: usize) -> ParseError {
    match raw {
        Raw::Star(_) => ParseError::at(pos, ParseErrorKind::UnexpectedStar),
        Raw::Open | Raw::Close => ParseError::at(pos, ParseErrorKind::UnexpectedBracket),
        Raw::Sym(_) => unreachable!("symbols are always accepted"),
    }
}

fn char_position(positions: &[usize], token_position: usize, input: &str) -> usize {
    positions.get(token_position.saturating_sub(1)).copied().unwrap_or_else(|| input.chars().count().max(1))
}

pub fn parse_word(input: &str) -> Result<Word, ParseError> {
    tokenize(input)?
        .into_iter()
        .map(|(raw, pos)| match raw {
            Raw::Sym(s) => Ok(s),
            other => Err(reject(other, pos)),
        })
        .collect()
}

fn star_arity<T>(tokens: &[StarToken<T>]) -> usize {
    tokens.iter().filter_map(StarToken::star_index).max().unwrap_or(0)
}

/// Parses a star word; its arity is the largest star index present.
pub fn parse_star_word(input: &str) -> Result<StarWord, ParseError> {
    let tokens = tokenize(input)?
        .into_iter()
        .map(|(raw, pos)| match raw {
            Raw::Sym(s) => Ok(StarToken::Letter(s)),
            Raw::Star(i) => Ok(StarToken::Star(i)),
            other => Err(reject(other, pos)),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let arity = star_arity(&tokens);
    StarWord::new(arity, tokens).map_err(|_| ParseError::at(1, ParseErrorKind::NotStarWord))
}

/// Reads `[`, `]` and symbols without checking balance.
pub fn parse_motzkin_tokens(input: &str) -> Result<Vec<MotzkinLetter>, ParseError> {
    Ok(motzkin_tokens_with_positions(input)?.0)
}

fn motzkin_tokens_with_positions(input: &str) -> Result<(Vec<MotzkinLetter>, Vec<usize>), ParseError> {
    let mut tokens = Vec::new();
    let mut positions = Vec::new();
    for (raw, pos) in tokenize(input)? {
        tokens.push(match raw {
            Raw::Sym(s) => MotzkinLetter::Letter(s),
            Raw::Open => MotzkinLetter::Open,
            Raw::Close => MotzkinLetter::Close,
            Raw::Star(_) => return Err(reject(raw, pos)),
        });
        positions.push(pos);
    }
    Ok((tokens, positions))
}

pub fn parse_motzkin(input: &str) -> Result<MotzkinWord, ParseError> {
    let (tokens, positions) = motzkin_tokens_with_positions(input)?;
    MotzkinWord::new(tokens).map_err(|e| {
        ParseError::at(char_position(&positions, e.position(), input), ParseErrorKind::NotMotzkin(e))
    })
}

pub fn parse_bracketed(input: &str) -> Result<BracketedWord, ParseError> {
    let (tokens, positions) = motzkin_tokens_with_positions(input)?;
    decode_tokens(&tokens).map_err(|e| {
        ParseError::at(char_position(&positions, e.position(), input), ParseErrorKind::NotMotzkin(e))
    })
}

/// Parses a star bracketed word; its arity is the largest star index present.
pub fn parse_star_bracketed(input: &str) -> Result<StarBracketedWord, ParseError> {
    let mut tokens = Vec::new();
    let mut positions = Vec::new();
    for (raw, pos) in tokenize(input)? {
        tokens.push(match raw {
            Raw::Sym(s) => StarToken::Letter(MotzkinLetter::Letter(s)),
            Raw::Open => StarToken::Letter(MotzkinLetter::Open),
            Raw::Close => StarToken::Letter(MotzkinLetter::Close),
            Raw::Star(i) => StarToken::Star(i),
        });
        positions.push(pos);
    }
    let arity = star_arity(&tokens);
    decode_star_tokens(arity, &tokens, StarMode::ExactlyOnce).map_err(|e| match e {
        crate::error::Error::Motzkin(m) => {
            ParseError::at(char_position(&positions, m.position(), input), ParseErrorKind::NotMotzkin(m))
        }
        _ => ParseError::at(1, ParseErrorKind::NotStarWord),
    })
}

/// Parses `j..k` (1-based, inclusive).
pub fn parse_location(input: &str) -> Result<Location, ParseError> {
    let bad = || ParseError::at(1, ParseErrorKind::BadLocation);
    let (j, k) = input.trim().split_once("..").ok_or_else(bad)?;
    let j: usize = j.trim().parse().map_err(|_| bad())?;
    let k: usize = k.trim().parse().map_err(|_| bad())?;
    Location::new(j, k).ok_or_else(bad)
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl FromStr for StarWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_star_word(s)
    }
}

impl FromStr for BracketedWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bracketed(s)
    }
}

impl FromStr for StarBracketedWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_star_bracketed(s)
    }
}

impl FromStr for MotzkinWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_motzkin(s)
    }
}

impl FromStr for Location {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_location(s)
    }
}
