//! The self-test corpus: JSON files of items, each naming a command, its
//! inline inputs and a partial expected result. Objects in `expect` match
//! as subsets; everything else must be equal.

use serde_json::{json, Value};

use crate::error::CliError;
use crate::report::{self, Outcome, Params};

/// In file-name order, matching `--corpus DIR`.
pub const BUILTIN: &[(&str, &str)] = &[
    ("complex_centroid", include_str!("../corpus/complex_centroid.json")),
    ("complex_residue", include_str!("../corpus/complex_residue.json")),
    ("mixed_pair", include_str!("../corpus/mixed_pair.json")),
    ("universal", include_str!("../corpus/universal.json")),
];

fn input<'a>(item: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    item.get(key)
        .ok_or_else(|| CliError::Parse(format!("corpus item lacks {key:?}")))
}

fn run_item(item: &Value, p: &Params) -> Outcome {
    let cmd = input(item, "command")?.as_str().unwrap_or_default();
    let oracle = item.get("oracle").and_then(Value::as_bool).unwrap_or(false);
    match cmd {
        "fields" => report::fields(input(item, "left")?, input(item, "right")?, p),
        "check" => report::check(input(item, "desc_a")?, input(item, "desc_b")?, p),
        "classify" => report::classify(
            input(item, "desc_a")?,
            input(item, "desc_b")?,
            input(item, "tensor")?,
            oracle,
            p,
        ),
        "witness" => report::witness(input(item, "desc_a")?, input(item, "desc_b")?, p),
        "reduce" => report::reduce(
            input(item, "desc_a")?,
            input(item, "desc_b")?,
            input(item, "tensor")?,
            oracle,
            p,
        ),
        other => Err(CliError::Parse(format!("unknown corpus command {other:?}"))),
    }
}

/// Paths (JSON-pointer style) where `actual` disagrees with `expect`.
fn mismatches(expect: &Value, actual: &Value, path: &str, out: &mut Vec<String>) {
    match (expect, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                match a.get(k) {
                    Some(av) => mismatches(ev, av, &format!("{path}/{k}"), out),
                    None => out.push(format!("{path}/{k}: missing")),
                }
            }
        }
        _ if expect == actual => {}
        _ => out.push(format!("{path}: expected {expect}, got {actual}")),
    }
}

pub struct ItemResult {
    pub file: String,
    pub id: String,
    pub pass: bool,
    pub summary: String,
    pub json: Value,
}

/// Runs every item of one corpus file. A malformed file is an error; a
/// failing item is not.
pub fn run_file(name: &str, text: &str, p: &Params) -> Result<Vec<ItemResult>, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{name}: {e}")))?;
    let items = doc
        .get("items")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Parse(format!("{name}: no \"items\" array")))?;
    let mut results = Vec::new();
    for item in items {
        let id = input(item, "id")?.as_str().unwrap_or_default().to_string();
        let command = input(item, "command")?.clone();
        let outcome = run_item(item, p);
        let mut problems = Vec::new();
        let summary = match (&outcome, item.get("expect_error")) {
            (Ok((s, result)), None) => {
                mismatches(input(item, "expect")?, result, "", &mut problems);
                s.clone()
            }
            (Ok(_), Some(kind)) => {
                problems.push(format!("expected a {kind} error, the command succeeded"));
                String::new()
            }
            (Err(CliError::Parse(m)), _) | (Err(CliError::Io { message: m, .. }), _) => {
                return Err(CliError::Parse(format!("{name}/{id}: {m}")))
            }
            (Err(e), Some(kind)) if kind == "domain" => format!("rejected as expected: {e}"),
            (Err(e), _) => {
                problems.push(e.to_string());
                String::new()
            }
        };
        let pass = problems.is_empty();
        results.push(ItemResult {
            file: name.to_string(),
            id: id.clone(),
            pass,
            summary,
            json: json!({ "file": name, "id": id, "command": command, "pass": pass, "mismatches": problems }),
        });
    }
    Ok(results)
}
