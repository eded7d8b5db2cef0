use std::collections::BTreeMap;
use std::fmt;

/// Named residuals of one verification run.
///
/// `residuals` are asserted: the report passes iff each is below `tol`.
/// `info` holds report-only numbers (fitted scales, literal transcriptions
/// that are known to fail) and never affects `passed`.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub residuals: BTreeMap<String, f64>,
    pub info: BTreeMap<String, f64>,
    pub tol: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, tol: f64) -> Self {
        Self {
            name: name.into(),
            residuals: BTreeMap::new(),
            info: BTreeMap::new(),
            tol,
            passed: true,
        }
    }

    /// Record an asserted residual. NaN counts as a failure.
    pub fn check(&mut self, label: impl Into<String>, value: f64) {
        if !(value < self.tol) {
            self.passed = false;
        }
        self.residuals.insert(label.into(), value);
    }

    /// Keep the worst value seen under `label`.
    pub fn check_max(&mut self, label: &str, value: f64) {
        let worst = self.residuals.get(label).copied().unwrap_or(0.0).max(value);
        let worst = if value.is_nan() { f64::NAN } else { worst };
        self.check(label.to_string(), worst);
    }

    pub fn note(&mut self, label: impl Into<String>, value: f64) {
        self.info.insert(label.into(), value);
    }

    pub fn residual(&self, label: &str) -> Option<f64> {
        self.residuals.get(label).copied()
    }

    pub fn info(&self, label: &str) -> Option<f64> {
        self.info.get(label).copied()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.values().copied().fold(0.0, f64::max)
    }

    /// Fold another report's entries in, prefixing labels.
    pub fn absorb(&mut self, prefix: &str, other: &VerificationReport) {
        for (k, v) in &other.residuals {
            self.check(format!("{prefix}{k}"), *v);
        }
        for (k, v) in &other.info {
            self.note(format!("{prefix}{k}"), *v);
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} (tol {:e})", self.name, self.tol)?;
        for (k, v) in &self.residuals {
            let mark = if *v < self.tol { "ok" } else { "!!" };
            writeln!(f, "  {mark} {k:<28} {v:.3e}")?;
        }
        for (k, v) in &self.info {
            writeln!(f, "  .. {k:<28} {v:.6}")?;
        }
        Ok(())
    }
}
