//! Named verification suites and their aggregate.

use crate::daha::{verify_relations, ParamSet};
use crate::error::{Error, Result};
use crate::function::verify_wilson_function;
use crate::report::{SuiteOptions, VerificationReport};
use crate::transform::{verify_transform, SpectralTransform, Variant};
use crate::wilson::{verify_family, verify_polynomials, WilsonFamily};
use crate::numeric::Rational;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Algebra,
    Polynomials,
    Transform,
    WilsonFunction,
    All,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Algebra, Suite::Polynomials, Suite::Transform, Suite::WilsonFunction];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Polynomials => "polynomials",
            Suite::Transform => "transform",
            Suite::WilsonFunction => "wilson-function",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Suite::All].into_iter().chain(Suite::ALL).find(|v| v.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Deliberate corruptions used to check that the suites can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Shifts the tabulated γ₂ by 1/3 before the eigen-solve.
    Gamma,
}

/// Runs one suite (or all of them, in a fixed order). Fails only when the
/// parameters are not admissible for the suite; every other problem becomes a check.
pub fn run_suite(suite: Suite, t: &ParamSet, opts: &SuiteOptions, fault: Option<Fault>) -> Result<VerificationReport> {
    t.require_exact()?;
    let report = match suite {
        Suite::Algebra => verify_relations(t, opts.max_degree)?,
        Suite::Polynomials => match fault {
            Some(Fault::Gamma) => verify_family(&WilsonFamily::new(t)?.with_gamma_fault(2, Rational::from((1, 3))), opts),
            None => verify_polynomials(t, opts),
        },
        Suite::Transform => {
            SpectralTransform::new(t, Variant::Full)?;
            verify_transform(t, opts)
        }
        Suite::WilsonFunction => verify_wilson_function(t, opts),
        Suite::All => {
            let mut all = VerificationReport::new(Vec::new());
            for s in Suite::ALL {
                all.extend(run_suite(s, t, opts, fault)?);
            }
            all
        }
    };
    Ok(report)
}
