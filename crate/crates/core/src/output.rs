//! Serializable command output shared by the CLI and the FFI layer.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::numeric::ComplexPoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format '{other}' (expected json, csv or text)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verification {
    pub identity: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// One command's parameters, results and identity checks.
///
/// Rationals are stored as `"p/q"` strings in lowest terms, complex numbers
/// as `{"re": .., "im": ..}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Map<String, Value>,
    pub verification: Vec<Verification>,
}

impl OutputRecord {
    pub fn new(command: impl Into<String>) -> Self {
        Self { command: command.into(), parameters: Map::new(), results: Map::new(), verification: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.parameters.insert(key.to_owned(), to_value(value));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.results.insert(key.to_owned(), to_value(value));
        self
    }

    pub fn verify(&mut self, identity: impl Into<String>, passed: bool, detail: Option<String>) -> &mut Self {
        self.verification.push(Verification { identity: identity.into(), passed, detail });
        self
    }

    pub fn all_passed(&self) -> bool {
        self.verification.iter().all(|v| v.passed)
    }

    /// `(section, dotted key, scalar)` rows, shared by the text and CSV renderings.
    pub fn flatten(&self) -> Vec<(String, String, String)> {
        let mut rows = Vec::new();
        for (section, map) in [("parameters", &self.parameters), ("results", &self.results)] {
            for (k, v) in map {
                flatten_into(section, k.clone(), v, &mut rows);
            }
        }
        for v in &self.verification {
            rows.push(("verification".into(), v.identity.clone(), if v.passed { "pass" } else { "fail" }.into()));
        }
        rows
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("record is serializable") + "\n",
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        let mut current = String::new();
        for (section, key, value) in self.flatten() {
            if section != current {
                let _ = writeln!(out, "{section}:");
                current = section;
            }
            let _ = writeln!(out, "  {key} = {value}");
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["command", "section", "key", "value"]).expect("in-memory write");
        for (section, key, value) in self.flatten() {
            w.write_record([self.command.as_str(), &section, &key, &value]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("output values are serializable")
}

fn flatten_into(section: &str, key: String, v: &Value, rows: &mut Vec<(String, String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, inner) in map {
                flatten_into(section, format!("{key}.{k}"), inner, rows);
            }
        }
        Value::Array(items) => {
            for (i, inner) in items.iter().enumerate() {
                flatten_into(section, format!("{key}[{i}]"), inner, rows);
            }
        }
        Value::String(s) => rows.push((section.into(), key, s.clone())),
        Value::Null => rows.push((section.into(), key, String::new())),
        other => rows.push((section.into(), key, other.to_string())),
    }
}

/// `{"re": .., "im": ..}`.
pub fn complex_value(z: ComplexPoint) -> Value {
    to_value(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ExactRational;

    fn sample() -> OutputRecord {
        let mut r = OutputRecord::new("hankel-det").param("L", ExactRational::new(-7, 4)).param("n", 2);
        r.result("det", ExactRational::new(1, 135)).result("zeros", vec![ComplexPoint::new(0.15, 0.252)]);
        r.verify("closed-form", true, None);
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let s = r.render(Format::Json);
        let back: OutputRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.parameters["L"], Value::String("-7/4".into()));
    }

    #[test]
    fn text_and_csv_share_payload() {
        let r = sample();
        let text = r.render(Format::Text);
        let csv = r.render(Format::Csv);
        for (_, key, value) in r.flatten() {
            assert!(text.contains(&format!("{key} = {value}")));
            assert!(csv.contains(&format!("{key},{value}")));
        }
        assert!(text.contains("zeros[0].im = 0.252"));
    }
}
