use std::process::Command;

use operated_words::text::{parse_bracketed, parse_motzkin};
use serde_json::{json, Value};

fn opwords(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_opwords")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let stderr = String::from_utf8(out.stderr).unwrap();
    let report = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report, stderr)
}

fn result(args: &[&str]) -> (i32, Value) {
    let (code, report, _) = opwords(args);
    (code, report["result"].clone())
}

#[test]
fn report_envelope() {
    let (code, report, stderr) = opwords(&["depth", "[[x]] y"]);
    assert_eq!(code, 0);
    assert!(stderr.is_empty());
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["command"], "depth");
    assert_eq!(report["inputs"], json!({ "bracketed": "[[x]]y" }));
    assert_eq!(report["result"]["depth"], 2);
}

#[test]
fn classify_bracketed_example() {
    let (code, r) = result(&["classify", "[[abc]ab]", "2..6", "3..4", "--bracketed"]);
    assert_eq!(code, 0);
    assert_eq!(r["relation"], "nested");
    assert_eq!(r["connector"], "[*c]");
    assert_eq!(r["inner"], "second");

    let (code, r) = result(&["classify", "[[abc]ab]", "2..6", "7..8", "--bracketed"]);
    assert_eq!(code, 0);
    assert_eq!(r["relation"], "separated");
    assert_eq!(r["context"], "[*1*2]");
    assert_eq!(r["locations"], json!([{ "start": 2, "end": 6 }, { "start": 7, "end": 8 }]));
}

#[test]
fn classify_words() {
    let cases = [("3..4", "intersecting"), ("1..2", "nested"), ("5..6", "separated")];
    for (loc, relation) in cases {
        let (code, r) = result(&["classify", "xyxyxy", "1..3", loc, "--context"]);
        assert_eq!(code, 0);
        assert_eq!(r["relation"], relation, "{loc}");
        assert_eq!(r["contexts"][0], "*yxy");
    }
    let (_, r) = result(&["classify", "xyxyxy", "1..3", "3..4"]);
    assert_eq!((r["a"].as_str(), r["b"].as_str(), r["c"].as_str()), (Some("xy"), Some("x"), Some("y")));
    assert_eq!(r["context"], "*xy");
}

#[test]
fn validate_motzkin_verdicts() {
    let (code, r) = result(&["validate-motzkin", "[[x][y]]z"]);
    assert_eq!((code, r["valid"].clone()), (0, json!(true)));

    let (code, report, stderr) = opwords(&["validate-motzkin", "[x][yz"]);
    assert_eq!(code, 2);
    assert_eq!(report["result"]["valid"], false);
    assert_eq!(report["result"]["reason"], "unbalanced");
    assert!(!stderr.is_empty());

    let (code, r) = result(&["validate-motzkin", "x][y[z]"]);
    assert_eq!(code, 2);
    assert_eq!(r["reason"], "prefix");
    assert_eq!(r["position"], 2);
}

#[test]
fn occurrences_word_and_bracketed() {
    let (code, r) = result(&["occurrences", "z", "zzz"]);
    assert_eq!(code, 0);
    assert_eq!(
        r["locations"],
        json!([{ "start": 1, "end": 1 }, { "start": 2, "end": 2 }, { "start": 3, "end": 3 }])
    );

    let (code, r) = result(&["occurrences", "ab", "[[abc]ab]", "--bracketed", "--context"]);
    assert_eq!(code, 0);
    assert_eq!(r["count"], 2);
    assert_eq!(r["locations"][0]["context"], "[[*c]ab]");
    assert_eq!(r["locations"][1]["context"], "[[abc]*]");

    let (_, r) = result(&["occurrences", "[ab]", "[[abc]ab]", "--bracketed"]);
    assert_eq!(r["count"], 0);

    let (code, r) = result(&["occurrences", "eps", "xy"]);
    assert_eq!((code, r["error"].clone()), (2, json!("empty_subword")));
}

#[test]
fn encode_decode_path() {
    let (code, r) = result(&["encode", "[[x][y]]z"]);
    assert_eq!(code, 0);
    assert_eq!(r["motzkin"], "[[x][y]]z");
    assert_eq!(r["length"], 9);

    let (code, r) = result(&["decode", "[[x][y]]z"]);
    assert_eq!(code, 0);
    assert_eq!(r["tree"], json!([[["x"], ["y"]], "z"]));
    assert_eq!(r["depth"], 2);

    let (code, r) = result(&["path", "[[x][y]]z"]);
    assert_eq!(code, 0);
    assert_eq!(r["path"], "UUxDUyDDz");
    assert_eq!(r["max_height"], 2);

    assert_eq!(result(&["decode", "x]"]).0, 2);
}

#[test]
fn enumerate_motzkin_words() {
    let (code, r) = result(&["enumerate-motzkin", "--length", "2", "--alphabet", "x"]);
    assert_eq!(code, 0);
    assert_eq!(r["words"], json!(["xx", "[]"]));
    let (_, r) = result(&["enumerate-motzkin", "--length", "4", "--alphabet", "xy"]);
    // no brackets: 2^4; one pair: 6 slots times 2^2 letters; two pairs: [[]] and [][]
    assert_eq!(r["count"], 16 + 6 * 4 + 2);
    assert_eq!(result(&["enumerate-motzkin", "--length", "2", "--alphabet", "X"]).0, 1);
}

#[test]
fn oracle_check_agrees() {
    for (host, a, b, flag) in [
        ("xyxyxy", "1..3", "5..6", None),
        ("[[abc]ab]", "2..6", "7..8", Some("--bracketed")),
        ("abc", "1..2", "2..3", Some("--bracketed")),
    ] {
        let mut args = vec!["oracle-check", host, a, b];
        args.extend(flag);
        let (code, r) = result(&args);
        assert_eq!(code, 0, "{host}");
        assert_eq!(r["agree"], true);
        assert_eq!(r["oracle"].as_array().unwrap().len(), 1);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(opwords(&["encode", "X"]).0, 1);
    assert_eq!(opwords(&["encode", ""]).0, 1);
    assert_eq!(opwords(&["no-such-command"]).0, 1);
    assert_eq!(opwords(&["encode", "[x"]).0, 2);
    assert_eq!(opwords(&["classify", "[[abc]ab]", "2..4", "7..8", "--bracketed"]).0, 3);
    assert_eq!(opwords(&["classify", "xy", "1..3", "1..1"]).0, 3);
    assert_eq!(opwords(&["classify", "xy", "2..1", "1..1"]).0, 3);
    assert_eq!(opwords(&["--help"]).0, 0);
}

#[test]
fn printed_text_reparses() {
    for text in ["[[abc]ab]", " [ x ] eps", "e p s", "eps", "[]"] {
        let (code, r) = result(&["depth", text]);
        assert_eq!(code, 0, "{text:?}");
        let printed = r["bracketed"].as_str().unwrap();
        assert_eq!(parse_bracketed(printed).unwrap(), parse_bracketed(text).unwrap());
    }
    let (_, r) = result(&["encode", "[e p s]"]);
    let printed = r["motzkin"].as_str().unwrap();
    assert_eq!(parse_motzkin(printed).unwrap().len(), 5);
}

#[test]
fn output_is_deterministic() {
    let args = ["occurrences", "x", "[x[x]]x", "--bracketed", "--context"];
    let first = opwords(&args);
    let second = opwords(&args);
    assert_eq!(first.1, second.1);
}
