//! `opwords`: parse, encode, enumerate and classify words from the command
//! line. Every command writes one JSON report to standard output.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use operated_words::oracle::{oracle_bracketed_relation, oracle_word_relation};
use operated_words::text::{
    parse_bracketed, parse_location, parse_motzkin_tokens, parse_word, ParseError, ParseErrorKind,
};
use operated_words::{
    bracketed_placement_from_location, bracketed_placements_of, check_motzkin, classify_bracketed_placements,
    classify_word_placements, decode, encode, enumerate_motzkin, placement_from_location, placements_of,
    to_path, Atom, BracketedWord, Error, Location, MotzkinWord, Relation, Side, Step, Symbol,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "opwords", version, about = "Words, bracketed words and Motzkin words")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a token string is a Motzkin word.
    ValidateMotzkin { word: String },
    /// Encode a bracketed word as a Motzkin word.
    Encode { bracketed: String },
    /// Decode a Motzkin word into a bracketed word.
    Decode { motzkin: String },
    /// Bracket nesting depth of a bracketed word.
    Depth { bracketed: String },
    /// Locations of every occurrence of a subword.
    Occurrences {
        subword: String,
        host: String,
        #[command(flatten)]
        mode: Mode,
    },
    /// Relative location of two placements given by their locations `j..k`.
    Classify {
        host: String,
        first: String,
        second: String,
        #[command(flatten)]
        mode: Mode,
    },
    /// List every Motzkin word with the given number of tokens.
    EnumerateMotzkin {
        #[arg(long)]
        length: usize,
        #[arg(long, default_value = "x")]
        alphabet: String,
    },
    /// Motzkin path of a Motzkin word (U up, D down, letters level).
    Path { motzkin: String },
    /// Compare the brute-force witness search with the classifier.
    OracleCheck {
        host: String,
        first: String,
        second: String,
        #[arg(long)]
        bracketed: bool,
    },
}

#[derive(Debug, Args)]
pub struct Mode {
    /// Treat operands as bracketed words; locations index the Motzkin encoding.
    #[arg(long)]
    pub bracketed: bool,
    /// Also print the star-word context of each placement.
    #[arg(long)]
    pub context: bool,
}

/// Exit status and the text for both output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_LOCATION: i32 = 3;

struct Failure {
    code: i32,
    result: Value,
    message: String,
}

impl Failure {
    fn parse(operand: &str, e: ParseError) -> Self {
        let code = match e.kind {
            ParseErrorKind::NotMotzkin(_) => EXIT_VALIDATION,
            ParseErrorKind::BadLocation => EXIT_LOCATION,
            _ => EXIT_PARSE,
        };
        let mut result = json!({
            "error": error_kind(&e.kind),
            "operand": operand,
            "position": e.position,
        });
        if let ParseErrorKind::NotMotzkin(m) = e.kind {
            result["valid"] = json!(false);
            result["reason"] = json!(m.reason());
        }
        Failure { code, result, message: format!("{operand:?}: {e}") }
    }

    fn library(e: Error) -> Self {
        let code = match e {
            Error::LocationOutOfRange { .. } | Error::UnbalancedLocation { .. } => EXIT_LOCATION,
            _ => EXIT_VALIDATION,
        };
        let kind = match e {
            Error::LocationOutOfRange { .. } => "location_out_of_range",
            Error::UnbalancedLocation { .. } => "unbalanced_location",
            Error::EmptySubword => "empty_subword",
            Error::HostMismatch => "host_mismatch",
            Error::Internal(_) => "internal",
            _ => "invalid",
        };
        Failure { code, result: json!({ "error": kind }), message: e.to_string() }
    }
}

fn error_kind(kind: &ParseErrorKind) -> &'static str {
    match kind {
        ParseErrorKind::EmptyInput => "empty_input",
        ParseErrorKind::UnexpectedChar(_) => "unexpected_character",
        ParseErrorKind::BadStarIndex => "bad_star_index",
        ParseErrorKind::UnexpectedStar => "unexpected_star",
        ParseErrorKind::UnexpectedBracket => "unexpected_bracket",
        ParseErrorKind::NotStarWord => "not_a_star_word",
        ParseErrorKind::NotMotzkin(_) => "not_motzkin",
        ParseErrorKind::BadLocation => "bad_location",
    }
}

type Attempt<T> = Result<T, Failure>;

fn word(text: &str) -> Attempt<operated_words::Word> {
    parse_word(text).map_err(|e| Failure::parse(text, e))
}

fn bracketed(text: &str) -> Attempt<BracketedWord> {
    parse_bracketed(text).map_err(|e| Failure::parse(text, e))
}

fn motzkin(text: &str) -> Attempt<MotzkinWord> {
    let tokens = parse_motzkin_tokens(text).map_err(|e| Failure::parse(text, e))?;
    MotzkinWord::new(tokens).map_err(|m| Failure {
        code: EXIT_VALIDATION,
        result: json!({ "valid": false, "reason": m.reason(), "position": m.position() }),
        message: format!("{text:?}: {m}"),
    })
}

fn location(text: &str) -> Attempt<Location> {
    parse_location(text).map_err(|e| Failure::parse(text, e))
}

/// The canonical rendering of an operand, or the raw text if it does not parse.
fn canonical<T: std::fmt::Display, E>(text: &str, parse: impl Fn(&str) -> Result<T, E>) -> String {
    parse(text).map(|v| v.to_string()).unwrap_or_else(|_| text.to_string())
}

fn loc_json(l: Location) -> Value {
    json!({ "start": l.start(), "end": l.end() })
}

fn tree_json(f: &BracketedWord) -> Value {
    Value::Array(
        f.atoms()
            .iter()
            .map(|a| match a {
                Atom::Letter(s) => json!(s.to_string()),
                Atom::Bracket(inner) => tree_json(inner),
            })
            .collect(),
    )
}

fn relation_json<W: ToString, C: ToString>(r: &Relation<W, C>) -> Map<String, Value> {
    let side = |s: &Side| json!(s.as_str());
    let mut m = Map::new();
    m.insert("relation".into(), json!(r.kind().as_str()));
    match r {
        Relation::Separated { context, left } => {
            m.insert("context".into(), json!(context.to_string()));
            m.insert("left".into(), side(left));
        }
        Relation::Nested { connector, inner } => {
            m.insert("connector".into(), json!(connector.to_string()));
            m.insert("inner".into(), side(inner));
        }
        Relation::Intersecting { context, a, b, c, left } => {
            m.insert("context".into(), json!(context.to_string()));
            m.insert("a".into(), json!(a.to_string()));
            m.insert("b".into(), json!(b.to_string()));
            m.insert("c".into(), json!(c.to_string()));
            m.insert("left".into(), side(left));
        }
    }
    m
}

fn alphabet(text: &str) -> Attempt<Vec<Symbol>> {
    let mut symbols = Vec::new();
    for (i, c) in text.chars().enumerate() {
        let s = Symbol::new(c).map_err(|_| Failure {
            code: EXIT_PARSE,
            result: json!({ "error": "unexpected_character", "operand": text, "position": i + 1 }),
            message: format!("alphabet {text:?}: {c:?} is not a symbol a-z"),
        })?;
        if !symbols.contains(&s) {
            symbols.push(s);
        }
    }
    symbols.sort();
    Ok(symbols)
}

/// Runs one command and returns its canonical inputs and result payload.
fn execute(command: &Command) -> (&'static str, Value, Attempt<Value>) {
    match command {
        Command::ValidateMotzkin { word: text } => {
            let result = parse_motzkin_tokens(text).map_err(|e| Failure::parse(text, e)).and_then(|tokens| {
                match check_motzkin(&tokens) {
                    Ok(()) => Ok(json!({ "valid": true, "length": tokens.len() })),
                    Err(m) => Err(Failure {
                        code: EXIT_VALIDATION,
                        result: json!({ "valid": false, "reason": m.reason(), "position": m.position() }),
                        message: format!("{text:?} is not a Motzkin word: {m}"),
                    }),
                }
            });
            ("validate-motzkin", json!({ "word": canonical(text, parse_motzkin_tokens_text) }), result)
        }
        Command::Encode { bracketed: text } => {
            let result = bracketed(text).map(|f| {
                let m = encode(&f);
                let tokens: Vec<String> = m.tokens().iter().map(|t| t.to_string()).collect();
                json!({ "motzkin": m.to_string(), "tokens": tokens, "length": m.len() })
            });
            ("encode", json!({ "bracketed": canonical(text, parse_bracketed) }), result)
        }
        Command::Decode { motzkin: text } => {
            let result = motzkin(text).map(|m| {
                let f = decode(&m);
                json!({ "bracketed": f.to_string(), "depth": f.depth(), "tree": tree_json(&f) })
            });
            ("decode", json!({ "motzkin": canonical(text, parse_motzkin_tokens_text) }), result)
        }
        Command::Depth { bracketed: text } => {
            let result = bracketed(text).map(|f| json!({ "depth": f.depth(), "bracketed": f.to_string() }));
            ("depth", json!({ "bracketed": canonical(text, parse_bracketed) }), result)
        }
        Command::Occurrences { subword, host, mode } => {
            let inputs = json!({
                "subword": operand(subword, mode.bracketed),
                "host": operand(host, mode.bracketed),
                "bracketed": mode.bracketed,
            });
            let result = if mode.bracketed {
                bracketed(subword).and_then(|s| {
                    let f = bracketed(host)?;
                    let found = bracketed_placements_of(&s, &f).map_err(Failure::library)?;
                    Ok(found
                        .iter()
                        .map(|pl| {
                            occurrence_json(pl.location(), mode.context.then(|| pl.context().to_string()))
                        })
                        .collect::<Vec<_>>())
                })
            } else {
                word(subword).and_then(|u| {
                    let w = word(host)?;
                    let found = placements_of(&u, &w).map_err(Failure::library)?;
                    Ok(found
                        .iter()
                        .map(|pl| {
                            occurrence_json(pl.location(), mode.context.then(|| pl.context().to_string()))
                        })
                        .collect::<Vec<_>>())
                })
            };
            let result = result.map(|locs| json!({ "count": locs.len(), "locations": locs }));
            ("occurrences", inputs, result)
        }
        Command::Classify { host, first, second, mode } => {
            let inputs = pair_inputs(host, first, second, mode.bracketed);
            ("classify", inputs, classify(host, first, second, mode))
        }
        Command::EnumerateMotzkin { length, alphabet: letters } => {
            let inputs = json!({ "length": length, "alphabet": letters });
            let result = alphabet(letters).map(|symbols| {
                let words: Vec<String> =
                    enumerate_motzkin(*length, &symbols).iter().map(|m| m.to_string()).collect();
                json!({ "count": words.len(), "words": words })
            });
            ("enumerate-motzkin", inputs, result)
        }
        Command::Path { motzkin: text } => {
            let result = motzkin(text).map(|m| {
                let path = to_path(&m);
                let steps: Vec<&str> = path
                    .steps()
                    .iter()
                    .map(|s| match s {
                        Step::Up => "up",
                        Step::Down => "down",
                        Step::Level(_) => "level",
                    })
                    .collect();
                json!({ "path": path.to_string(), "steps": steps, "max_height": path.max_height() })
            });
            ("path", json!({ "motzkin": canonical(text, parse_motzkin_tokens_text) }), result)
        }
        Command::OracleCheck { host, first, second, bracketed: is_bracketed } => {
            let inputs = pair_inputs(host, first, second, *is_bracketed);
            ("oracle-check", inputs, oracle_check(host, first, second, *is_bracketed))
        }
    }
}

fn parse_motzkin_tokens_text(text: &str) -> Result<String, ParseError> {
    let tokens = parse_motzkin_tokens(text)?;
    Ok(if tokens.is_empty() { "eps".into() } else { tokens.iter().map(|t| t.to_string()).collect() })
}

fn operand(text: &str, is_bracketed: bool) -> String {
    if is_bracketed {
        canonical(text, parse_bracketed)
    } else {
        canonical(text, parse_word)
    }
}

fn pair_inputs(host: &str, first: &str, second: &str, is_bracketed: bool) -> Value {
    json!({
        "host": operand(host, is_bracketed),
        "first": canonical(first, parse_location),
        "second": canonical(second, parse_location),
        "bracketed": is_bracketed,
    })
}

fn occurrence_json(l: Location, context: Option<String>) -> Value {
    let mut v = loc_json(l);
    if let Some(c) = context {
        v["context"] = json!(c);
    }
    v
}

fn classify(host: &str, first: &str, second: &str, mode: &Mode) -> Attempt<Value> {
    let (l1, l2) = (location(first)?, location(second)?);
    let (mut out, contexts) = if mode.bracketed {
        let f = bracketed(host)?;
        let p1 = bracketed_placement_from_location(l1, &f).map_err(Failure::library)?;
        let p2 = bracketed_placement_from_location(l2, &f).map_err(Failure::library)?;
        let r = classify_bracketed_placements(&p1, &p2).map_err(Failure::library)?;
        (relation_json(&r), [p1.context().to_string(), p2.context().to_string()])
    } else {
        let w = word(host)?;
        let p1 = placement_from_location(l1, &w).map_err(Failure::library)?;
        let p2 = placement_from_location(l2, &w).map_err(Failure::library)?;
        let r = classify_word_placements(&p1, &p2).map_err(Failure::library)?;
        (relation_json(&r), [p1.context().to_string(), p2.context().to_string()])
    };
    out.insert("locations".into(), json!([loc_json(l1), loc_json(l2)]));
    if mode.context {
        out.insert("contexts".into(), json!(contexts));
    }
    Ok(Value::Object(out))
}

fn oracle_check(host: &str, first: &str, second: &str, is_bracketed: bool) -> Attempt<Value> {
    let (l1, l2) = (location(first)?, location(second)?);
    let (tags, fast, count) = if is_bracketed {
        let f = bracketed(host)?;
        let p1 = bracketed_placement_from_location(l1, &f).map_err(Failure::library)?;
        let p2 = bracketed_placement_from_location(l2, &f).map_err(Failure::library)?;
        let verdict = oracle_bracketed_relation(&p1, &p2);
        let fast = classify_bracketed_placements(&p1, &p2).map_err(Failure::library)?;
        (verdict.tags(), fast.kind(), verdict.witnesses.len())
    } else {
        let w = word(host)?;
        let p1 = placement_from_location(l1, &w).map_err(Failure::library)?;
        let p2 = placement_from_location(l2, &w).map_err(Failure::library)?;
        let verdict = oracle_word_relation(&p1, &p2);
        let fast = classify_word_placements(&p1, &p2).map_err(Failure::library)?;
        (verdict.tags(), fast.kind(), verdict.witnesses.len())
    };
    let oracle: Vec<&str> = tags.iter().map(|k| k.as_str()).collect();
    let agree = tags.len() == 1 && tags.contains(&fast);
    let result = json!({ "oracle": oracle, "fast": fast.as_str(), "agree": agree, "witnesses": count });
    if agree {
        Ok(result)
    } else {
        Err(Failure { code: EXIT_VALIDATION, result, message: "oracle and classifier disagree".into() })
    }
}

fn report(command: &str, inputs: Value, result: Value) -> String {
    let v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
    });
    serde_json::to_string_pretty(&v).expect("JSON values always serialize")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (name, inputs, result) = execute(&cli.command);
    match result {
        Ok(result) => Outcome { code: EXIT_OK, stdout: report(name, inputs, result), stderr: String::new() },
        Err(f) => Outcome {
            code: f.code,
            stdout: report(name, inputs, f.result),
            stderr: format!("opwords {name}: {}", f.message),
        },
    }
}
