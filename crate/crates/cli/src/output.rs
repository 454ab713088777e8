//! Output document model shared by every subcommand.
//!
//! A command produces either a key-value map or a rectangular table. Both
//! render to compact JSON, CSV, or an aligned text table, always with a
//! trailing newline. JSON object keys are sorted and every enumeration the
//! commands draw from is ordered, so identical invocations are byte-identical.
//! Integers stay JSON numbers only while exactly representable in an f64;
//! larger values and exact rationals become strings.

use fqlab::combinatorics::rational_string;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Map(Map<String, Value>),
    Table {
        headers: Vec<String>,
        rows: Vec<Vec<Value>>,
    },
}

const MAX_SAFE: u64 = 1 << 53;

pub fn uint(v: u64) -> Value {
    if v < MAX_SAFE {
        Value::from(v)
    } else {
        Value::from(v.to_string())
    }
}

pub fn int(v: i64) -> Value {
    if v.unsigned_abs() < MAX_SAFE {
        Value::from(v)
    } else {
        Value::from(v.to_string())
    }
}

pub fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) if x.unsigned_abs() < MAX_SAFE => Value::from(x),
        _ => Value::from(v.to_string()),
    }
}

pub fn biguint(v: &BigUint) -> Value {
    big(&BigInt::from(v.clone()))
}

/// Exact rationals always serialize as a "num/den" string.
pub fn rational(r: &BigRational) -> Value {
    Value::from(rational_string(r))
}

pub fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => render_json(doc),
        Format::Csv => render_csv(doc),
        Format::Table => render_table(doc),
    }
}

fn render_json(doc: &Document) -> String {
    let value = match doc {
        Document::Map(map) => Value::Object(map.clone()),
        Document::Table { headers, rows } => {
            let mut map = Map::new();
            map.insert("headers".into(), headers.iter().map(|h| Value::from(h.as_str())).collect());
            map.insert(
                "rows".into(),
                Value::from(rows.iter().map(|r| Value::from(r.clone())).collect::<Vec<_>>()),
            );
            Value::Object(map)
        }
    };
    format!("{value}\n")
}

/// CSV cell text: strings bare, scalars via Display, composites as JSON.
fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn render_csv(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Map(map) => {
            out.push_str("key,value\n");
            for (k, v) in map {
                out.push_str(&format!("{},{}\n", csv_field(k), csv_field(&cell(v))));
            }
        }
        Document::Table { headers, rows } => {
            out.push_str(&headers.iter().map(|h| csv_field(h)).collect::<Vec<_>>().join(","));
            out.push('\n');
            for row in rows {
                let line: Vec<String> = row.iter().map(|v| csv_field(&cell(v))).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
    }
    out
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in rows {
        for (i, c) in row.iter().enumerate() {
            widths[i] = widths[i].max(c.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (i, c) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(c);
            } else {
                line.push_str(&format!("{c:<width$}  ", width = widths[i]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_table(doc: &Document) -> String {
    match doc {
        Document::Map(map) => {
            let rows: Vec<Vec<String>> =
                map.iter().map(|(k, v)| vec![k.clone(), cell(v)]).collect();
            aligned(&rows)
        }
        Document::Table { headers, rows } => {
            let mut all = vec![headers.clone()];
            all.extend(rows.iter().map(|r| r.iter().map(cell).collect::<Vec<_>>()));
            aligned(&all)
        }
    }
}
