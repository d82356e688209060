use std::fmt::Write;

use clap::ValueEnum;
use coxreg::cohomology::CohomologyTable;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Serialize)]
struct Record<'a> {
    i: usize,
    u: &'a [i64],
    dim: u64,
    provenance: &'a str,
}

/// One line per `(i, u)` cell, sorted by twist then index.
pub fn render_table(table: &CohomologyTable, format: Format) -> String {
    let mut out = String::new();
    for (i, u, e) in table.iter() {
        match format {
            Format::Human => {
                writeln!(out, "h^{i}{u} = {}  [{}]", e.dim, e.provenance).unwrap();
            }
            Format::Json => {
                let r = Record {
                    i,
                    u: u.components(),
                    dim: e.dim,
                    provenance: e.provenance.as_str(),
                };
                writeln!(out, "{}", serde_json::to_string(&r).unwrap()).unwrap();
            }
        }
    }
    out
}

/// A pass/fail line for a named check.
#[derive(Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckLine {
        CheckLine {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Human => format!(
                "{} {}: {}",
                if self.passed { "PASS" } else { "FAIL" },
                self.name,
                self.detail
            ),
            Format::Json => serde_json::to_string(self).unwrap(),
        }
    }
}
