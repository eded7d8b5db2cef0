use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use yangian::VerificationReport;

pub const SCHEMA_VERSION: &str = "1";

/// One asserted number: it passes iff `value < tol`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub name: String,
    pub value: f64,
    pub tol: f64,
    pub pass: bool,
}

impl Residual {
    pub fn new(name: impl Into<String>, value: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            value,
            tol,
            pass: value < tol,
        }
    }
}

/// A reported but not asserted number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Note {
    pub name: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub label: String,
    pub eigenvalues: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JsonReport {
    pub schema_version: String,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub residuals: Vec<Residual>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Note>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectra: Option<Vec<Spectrum>>,
    /// Free-form lines for the text view: transition tables and the like.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub lines: Vec<String>,
    pub wall_time_ms: u64,
}

impl JsonReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.into(),
            params: BTreeMap::new(),
            residuals: Vec::new(),
            notes: Vec::new(),
            spectra: None,
            lines: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) {
        self.params.insert(key.to_string(), value.to_string());
    }

    pub fn check(&mut self, name: impl Into<String>, value: f64, tol: f64) {
        self.residuals.push(Residual::new(name, value, tol));
    }

    pub fn note(&mut self, name: impl Into<String>, value: f64) {
        self.notes.push(Note {
            name: name.into(),
            value,
        });
    }

    pub fn spectrum(&mut self, label: impl Into<String>, eigenvalues: &[f64]) {
        self.spectra.get_or_insert_with(Vec::new).push(Spectrum {
            label: label.into(),
            eigenvalues: eigenvalues.to_vec(),
        });
    }

    /// Copy a verification report in, residuals against its own tolerance.
    pub fn absorb(&mut self, prefix: &str, rep: &VerificationReport) {
        for (k, v) in &rep.residuals {
            self.check(format!("{prefix}{k}"), *v, rep.tol);
        }
        for (k, v) in &rep.info {
            self.note(format!("{prefix}{k}"), *v);
        }
    }

    pub fn passed(&self) -> bool {
        self.residuals.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {}", self.command);
        for (k, v) in &self.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        for r in &self.residuals {
            let mark = if r.pass { "ok" } else { "!!" };
            let _ = writeln!(
                out,
                "  {mark} {:<40} {:>12.3e}  (tol {:.0e})",
                r.name, r.value, r.tol
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "  .. {:<40} {:>12.6}", n.name, n.value);
        }
        for s in self.spectra.iter().flatten() {
            let vals: Vec<String> = s.eigenvalues.iter().map(|e| format!("{e:.6}")).collect();
            let _ = writeln!(out, "  spectrum {}: [{}]", s.label, vals.join(", "));
        }
        for l in &self.lines {
            let _ = writeln!(out, "  {l}");
        }
        out
    }
}
