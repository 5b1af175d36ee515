//! Pass/fail records shared by every verification suite.

use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Numeric,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exact => "exact",
            Method::Numeric => "numeric",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reason", rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One verified identity.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    /// Short label of the identity family the check belongs to.
    pub anchor: String,
    pub method: Method,
    /// Degree cap, index range or sample grid the check covered.
    pub scope: String,
    pub status: Status,
    /// Concrete failing input, present only on failure.
    pub witness: Option<String>,
    /// Largest residual seen: "0" for exact passes, a decimal for numeric checks.
    pub residual: String,
}

impl Check {
    pub fn exact(name: &str, anchor: &str, scope: impl Into<String>, witness: Option<String>, residual: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            method: Method::Exact,
            scope: scope.into(),
            status: Status::from_bool(witness.is_none()),
            witness,
            residual: residual.into(),
        }
    }

    pub fn numeric(name: &str, anchor: &str, scope: impl Into<String>, residual: f64, tol: f64, witness: Option<String>) -> Self {
        let ok = residual.is_finite() && residual <= tol;
        Check {
            name: name.into(),
            anchor: anchor.into(),
            method: Method::Numeric,
            scope: scope.into(),
            status: Status::from_bool(ok),
            witness: if ok { None } else { witness.or_else(|| Some(format!("residual {residual:.3e} > {tol:.1e}"))) },
            residual: format!("{residual:.3e}"),
        }
    }

    pub fn skipped(name: &str, anchor: &str, method: Method, reason: &str) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            method,
            scope: String::new(),
            status: Status::Skipped(reason.into()),
            witness: None,
            residual: String::new(),
        }
    }

    /// A check whose computation itself failed.
    pub fn errored(name: &str, anchor: &str, method: Method, err: &crate::Error) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            method,
            scope: String::new(),
            status: Status::Fail,
            witness: Some(err.to_string()),
            residual: String::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "{}: pass ({}, {})", self.name, self.method, self.scope),
            Status::Fail => write!(
                f,
                "{}: FAIL ({}, {}) witness: {}",
                self.name,
                self.method,
                self.scope,
                self.witness.as_deref().unwrap_or("?")
            ),
            Status::Skipped(r) => write!(f, "{}: skipped: {r}", self.name),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: Overall,
}

impl VerificationReport {
    pub fn new(checks: Vec<Check>) -> Self {
        let overall = if checks.iter().all(Check::passed) { Overall::Pass } else { Overall::Fail };
        VerificationReport { checks, overall }
    }

    pub fn passed(&self) -> bool {
        matches!(self.overall, Overall::Pass)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        *self = VerificationReport::new(std::mem::take(&mut self.checks));
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(f, "overall: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// Degree caps, tolerances and seed shared by the verification suites.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteOptions {
    pub max_degree: usize,
    /// Tolerance for numeric checks.
    pub tol: f64,
    /// Working precision in bits.
    pub prec: u32,
    /// Seed for randomized inputs.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_degree: 20,
            tol: 1e-8,
            prec: 128,
            seed: 0,
        }
    }
}
