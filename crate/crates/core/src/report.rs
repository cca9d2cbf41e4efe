//! Named pass/fail checks with residuals, and their JSON rendering.

use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub check_id: String,
    pub status: Status,
    pub residual: f64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub artifact: String,
    pub tolerance: f64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(artifact: impl Into<String>, tolerance: f64) -> Self {
        VerificationReport { artifact: artifact.into(), tolerance, checks: Vec::new() }
    }

    /// Records a residual check: passes iff `residual <= tolerance`.
    pub fn residual(&mut self, id: impl Into<String>, residual: f64) -> &mut Self {
        let status = if residual <= self.tolerance { Status::Pass } else { Status::Fail };
        self.checks.push(Check { check_id: id.into(), status, residual, detail: String::new() });
        self
    }

    pub fn flag(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) -> &mut Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        let residual = if ok { 0.0 } else { 1.0 };
        self.checks.push(Check { check_id: id.into(), status, residual, detail: detail.into() });
        self
    }

    pub fn skip(&mut self, id: impl Into<String>, detail: impl Into<String>) -> &mut Self {
        self.checks.push(Check {
            check_id: id.into(),
            status: Status::Skipped,
            residual: 0.0,
            detail: detail.into(),
        });
        self
    }

    pub fn push(&mut self, check: Check) -> &mut Self {
        self.checks.push(check);
        self
    }

    /// Appends another report's checks, prefixing their ids.
    pub fn merge(&mut self, prefix: &str, other: &VerificationReport) -> &mut Self {
        for c in &other.checks {
            let mut c = c.clone();
            if !prefix.is_empty() {
                c.check_id = format!("{prefix}{}", c.check_id);
            }
            self.checks.push(c);
        }
        self
    }

    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.check_id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .filter(|c| c.status != Status::Skipped)
            .map(|c| c.residual)
            .fold(0.0, f64::max)
    }

    /// JSON with a fixed key order and 17 significant digits per float.
    pub fn to_json(&self) -> String {
        let mut s = String::new();
        s.push_str("{\"overall\": ");
        s.push_str(if self.overall() { "true" } else { "false" });
        s.push_str(", \"checks\": [");
        for (k, c) in self.checks.iter().enumerate() {
            if k > 0 {
                s.push_str(", ");
            }
            let _ = write!(
                s,
                "{{\"check_id\": {}, \"status\": \"{}\", \"residual\": {}, \"detail\": {}}}",
                json_string(&c.check_id),
                c.status.as_str(),
                json_float(c.residual),
                json_string(&c.detail)
            );
        }
        s.push(']');
        if !self.artifact.is_empty() {
            let _ = write!(s, ", \"artifact\": {}", json_string(&self.artifact));
        }
        if self.tolerance > 0.0 {
            let _ = write!(s, ", \"tolerance\": {}", json_float(self.tolerance));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} (tol {:e})", if self.artifact.is_empty() { "report" } else { &self.artifact }, self.tolerance);
        for c in &self.checks {
            let _ = write!(s, "  {:<8} {:<36} {:.3e}", c.status.as_str(), c.check_id, c.residual);
            if !c.detail.is_empty() {
                let _ = write!(s, "  {}", c.detail);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "overall: {}", if self.overall() { "pass" } else { "fail" });
        s
    }
}

/// Floats as 17 significant digits; non-finite values become `null`.
pub fn json_float(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    format!("{x:.16e}")
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
