//! Rendering of result tables as text, CSV or JSON.

use std::io::{self, Write};

use clap::ValueEnum;
use ktgw_core::Rational;
use serde_json::{json, Map, Value as Json};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Rat(Rational),
    /// Floating-point geometry; flagged as approximate in JSON.
    Approx(f64),
    Bool(bool),
    Text(String),
    Null,
}

impl Value {
    fn plain(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Rat(q) => q.to_string(),
            Value::Approx(x) => format!("{x:.12}"),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
            Value::Null => String::new(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Int(v) => Json::String(v.to_string()),
            Value::Rat(q) => json!({
                "num": q.numer().to_string(),
                "den": q.denom().to_string(),
            }),
            Value::Approx(x) => json!({ "value": x, "approx": true }),
            Value::Bool(b) => Json::Bool(*b),
            Value::Text(s) => Json::String(s.clone()),
            Value::Null => Json::Null,
        }
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Rat(q)
    }
}

impl From<&Rational> for Value {
    fn from(q: &Rational) -> Self {
        Value::Rat(q.clone())
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Approx(x)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

/// Fixed columns with one value per column in every row.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }
}

/// One invocation's output: the command echo and its result table.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub command: &'static str,
    pub args: Vec<(&'static str, String)>,
    pub table: Table,
}

impl Document {
    pub fn to_json(&self) -> Json {
        let args: Map<String, Json> = self
            .args
            .iter()
            .map(|(k, v)| (k.to_string(), Json::String(v.clone())))
            .collect();
        let results: Vec<Json> = self
            .table
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Json> = self
                    .table
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.json()))
                    .collect();
                Json::Object(obj)
            })
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": { "name": self.command, "args": args },
            "results": results,
        })
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .table
            .rows
            .iter()
            .map(|r| r.iter().map(Value::plain).collect())
            .collect();
        let widths: Vec<usize> = self
            .table
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([c.chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |vals: Vec<&str>| {
            let padded: Vec<String> = vals
                .iter()
                .zip(&widths)
                .map(|(v, w)| format!("{v:>w$}", w = *w))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(self.table.columns.clone());
        out.push('\n');
        for r in &cells {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, &self.to_json())?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(&mut *out);
                w.write_record(&self.table.columns)?;
                for r in &self.table.rows {
                    w.write_record(r.iter().map(Value::plain))?;
                }
                w.flush()
            }
            Format::Text => out.write_all(self.to_text().as_bytes()),
        }
    }
}
