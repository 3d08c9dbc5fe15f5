//! Deterministic renderings of verification records.

use std::fmt::Write;

use clap::ValueEnum;
use serde_json::Value;

use crate::record::{Status, VerdictRecord};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, false)
    }
}

pub fn emit(format: Format, records: &[VerdictRecord]) -> String {
    match format {
        Format::Json => json(records),
        Format::Csv => csv(records),
        Format::Text => text(records),
    }
}

/// `{"version":..,"records":[..]}` with the keys of every record sorted.
pub fn json(records: &[VerdictRecord]) -> String {
    let body: Vec<Value> = records
        .iter()
        .map(|r| serde_json::to_value(r).expect("plain data"))
        .collect();
    let body = serde_json::to_string(&body).expect("plain data");
    format!("{{\"version\":\"{SCHEMA_VERSION}\",\"records\":{body}}}\n")
}

const COLUMNS: [&str; 6] = ["id", "citation", "expected", "computed", "status", "note"];

fn fields(r: &VerdictRecord) -> [&str; 6] {
    [
        &r.id,
        &r.citation,
        &r.expected,
        &r.computed,
        r.status.as_str(),
        &r.note,
    ]
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\r', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// RFC 4180: CRLF line ends, fields quoted when they contain a delimiter.
pub fn csv(records: &[VerdictRecord]) -> String {
    let mut out = COLUMNS.join(",");
    out.push_str("\r\n");
    for r in records {
        out.push_str(&fields(r).map(csv_field).join(","));
        out.push_str("\r\n");
    }
    out
}

pub fn text(records: &[VerdictRecord]) -> String {
    let header = ["status", "id", "expected", "computed", "note"];
    let rows: Vec<[&str; 5]> = records
        .iter()
        .map(|r| [r.status.as_str(), &r.id, &r.expected, &r.computed, &r.note])
        .collect();
    let mut width = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, f) in width.iter_mut().zip(row) {
            *w = (*w).max(f.chars().count());
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&header).chain(&rows) {
        let mut line = String::new();
        for (i, (f, w)) in row.iter().zip(width).enumerate() {
            if i + 1 == row.len() {
                line.push_str(f);
            } else {
                let _ = write!(line, "{f:<w$}  ");
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} checks: {} pass, {} fail, {} skipped, {} inconclusive",
        records.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Skipped),
        count(Status::Inconclusive)
    );
    out
}
