//! Line-delimited JSON reports: a header, one line per record, a summary.

use serde::Serialize;
use serde_json::{json, Value};

use crate::suites::{Status, SuiteOutcome};

pub const SCHEMA: &str = "weylres-report/1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Header {
    pub schema: &'static str,
    pub tool_version: &'static str,
    pub suite: String,
    pub params: Value,
    pub seed: Option<u64>,
}

impl Header {
    pub fn new(suite: impl Into<String>, params: Value, seed: Option<u64>) -> Self {
        Self { schema: SCHEMA, tool_version: TOOL_VERSION, suite: suite.into(), params, seed }
    }
}

fn line(kind: &str, body: Value) -> String {
    let mut v = json!({ "type": kind });
    if let (Some(obj), Value::Object(b)) = (v.as_object_mut(), body) {
        obj.extend(b);
    }
    serde_json::to_string(&v).expect("json")
}

/// Renders a plain record stream (used by `enumerate`).
pub fn render_records<T: Serialize>(header: &Header, records: &[T]) -> String {
    let mut out = line("header", serde_json::to_value(header).expect("json"));
    out.push('\n');
    for r in records {
        out.push_str(&line("record", serde_json::to_value(r).expect("json")));
        out.push('\n');
    }
    out.push_str(&line("summary", json!({ "records": records.len() })));
    out.push('\n');
    out
}

/// Renders a verification run; the summary carries counts and the axioms consumed.
pub fn render_outcome(header: &Header, outcome: &SuiteOutcome) -> String {
    let mut out = line("header", serde_json::to_value(header).expect("json"));
    out.push('\n');
    for r in &outcome.records {
        out.push_str(&line("record", serde_json::to_value(r).expect("json")));
        out.push('\n');
    }
    let count = |s: Status| outcome.records.iter().filter(|r| r.status == s).count();
    let summary = json!({
        "records": outcome.records.len(),
        "passed": count(Status::Pass),
        "failed": count(Status::Fail),
        "reported": count(Status::Reported),
        "pass": outcome.passed(),
        "axioms_consumed": outcome.axioms_consumed,
    });
    out.push_str(&line("summary", summary));
    out.push('\n');
    out
}

/// The report layout, either with field descriptions or as bare field lists.
pub fn schema_text(compact: bool) -> String {
    let fields = [
        ("header", vec![
            ("schema", "string, always \"weylres-report/1\""),
            ("tool_version", "string"),
            ("suite", "string: enumerate kind or verify suite"),
            ("params", "object of the parameters used"),
            ("seed", "integer or null"),
        ]),
        ("record", vec![
            ("suite", "verify suite name (verify only)"),
            ("check", "name of the property checked (verify only)"),
            ("instance", "human-readable instance id (verify only)"),
            ("status", "\"pass\", \"fail\" or \"reported\" (verify only)"),
            ("data", "witness data for the check (verify only)"),
        ]),
        ("summary", vec![
            ("records", "integer"),
            ("passed", "integer (verify only)"),
            ("failed", "integer (verify only)"),
            ("reported", "integer (verify only)"),
            ("pass", "boolean (verify only)"),
            ("axioms_consumed", "sorted list of axiom ids (verify only)"),
        ]),
    ];
    let mut out = format!("{SCHEMA}\n");
    for (kind, fs) in fields {
        if compact {
            out.push_str(&format!("{kind}: type, {}\n", fs.iter().map(|(f, _)| *f).collect::<Vec<_>>().join(", ")));
        } else {
            out.push_str(&format!("line type=\"{kind}\"\n"));
            for (f, d) in fs {
                out.push_str(&format!("  {f}: {d}\n"));
            }
        }
    }
    out
}
