//! Rendering of reports as text, JSON or CSV.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};
use u3d4::report::{Report, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// What one subcommand run produced.
pub struct Outcome {
    pub command: &'static str,
    pub q: u32,
    pub reports: Vec<Report>,
    /// Summary lines for text output.
    pub summary: Vec<String>,
    /// Extra fields for JSON output.
    pub data: Value,
}

impl Outcome {
    pub fn new(command: &'static str, q: u32) -> Self {
        Outcome {
            command,
            q,
            reports: Vec::new(),
            summary: Vec::new(),
            data: json!({}),
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::all_passed)
    }

    pub fn set(&mut self, key: &str, value: impl Serialize) {
        self.data[key] = serde_json::to_value(value).expect("serializable");
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> std::io::Result<()> {
        match format {
            Format::Text => {
                for r in &self.reports {
                    writeln!(out, "{r}")?;
                }
                for line in &self.summary {
                    writeln!(out, "{line}")?;
                }
                writeln!(
                    out,
                    "result: {}",
                    if self.passed() { "PASS" } else { "FAIL" }
                )
            }
            Format::Json => {
                let mut v = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "q": self.q,
                    "passed": self.passed(),
                    "reports": self.reports,
                });
                if let Value::Object(extra) = &self.data {
                    for (k, x) in extra {
                        v[k] = x.clone();
                    }
                }
                serde_json::to_writer_pretty(&mut *out, &v)?;
                writeln!(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["subject", "id", "description", "passed", "detail"])?;
                for r in &self.reports {
                    for c in &r.checks {
                        w.write_record([
                            &r.subject,
                            &c.id,
                            &c.description,
                            &c.passed.to_string(),
                            &c.detail,
                        ])?;
                    }
                }
                w.flush()
            }
        }
    }
}
