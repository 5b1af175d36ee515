//! Run configuration: defaults, TOML/JSON files and command-line overrides.

use crate::error::{CliError, CliResult};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use std::path::Path;
use wilson_daha::daha::ParamSet;
use wilson_daha::report::SuiteOptions;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    #[default]
    Json,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Acceptance threshold of numeric checks.
    pub numeric: f64,
    /// Acceptance threshold of transform values computed by quadrature.
    pub quadrature: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            numeric: 1e-8,
            quadrature: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// (t0, u0, t1, u1) as "p/q" strings.
    pub params: [String; 4],
    pub precision_bits: u32,
    pub tolerances: Tolerances,
    /// Degree cap of the verification suites.
    pub max_degree: usize,
    /// Largest index in generated tables.
    pub max_m: usize,
    pub format: Format,
    pub seed: u64,
    /// Spectral points for the non-polynomial transforms, e.g. "0.5i" or "0.2+0.4i".
    pub lambda_grid: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            params: ["2/3", "1/5", "3/5", "1/7"].map(String::from),
            precision_bits: 128,
            tolerances: Tolerances::default(),
            max_degree: 20,
            max_m: 10,
            format: Format::Json,
            seed: 0,
            lambda_grid: ["0.25i", "0.5i", "0.75i"].map(String::from).to_vec(),
        }
    }
}

/// Values given on the command line; `None` keeps the file or default value.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub params: Option<String>,
    pub precision: Option<u32>,
    pub tol: Option<f64>,
    pub max_degree: Option<usize>,
    pub format: Option<Format>,
}

impl RunConfig {
    /// Reads a config file, TOML unless the extension is `.json`.
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
        let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"));
        if is_json {
            serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
        } else {
            toml::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
        }
    }

    pub fn apply(&mut self, o: &Overrides) -> CliResult<()> {
        if let Some(p) = &o.params {
            let parts: Vec<String> = p.split([',', ' ']).filter(|s| !s.is_empty()).map(String::from).collect();
            self.params = parts
                .try_into()
                .map_err(|v: Vec<String>| CliError::Parse(format!("--params needs 4 values, got {}", v.len())))?;
        }
        if let Some(b) = o.precision {
            self.precision_bits = b;
        }
        if let Some(t) = o.tol {
            self.tolerances.numeric = t;
            self.tolerances.quadrature = t;
        }
        if let Some(k) = o.max_degree {
            self.max_degree = k;
        }
        if let Some(f) = o.format {
            self.format = f;
        }
        Ok(())
    }

    /// Parses the parameters; syntax errors exit as parse failures and the
    /// exact-admissibility conditions as admissibility failures.
    pub fn param_set(&self) -> CliResult<ParamSet> {
        let refs: Vec<&str> = self.params.iter().map(String::as_str).collect();
        let t = ParamSet::parse(&refs)?;
        t.require_exact()?;
        Ok(t)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.precision_bits < 53 {
            return Err(CliError::Parse(format!("precision_bits must be at least 53, got {}", self.precision_bits)));
        }
        for (name, v) in [("numeric", self.tolerances.numeric), ("quadrature", self.tolerances.quadrature)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Parse(format!("tolerance {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    pub fn suite_options(&self) -> SuiteOptions {
        SuiteOptions {
            max_degree: self.max_degree,
            tol: self.tolerances.numeric,
            prec: self.precision_bits,
            seed: self.seed,
        }
    }
}

/// Parses "0.5i", "-i", "0.3", "0.2+0.4i" or "0.2-0.4i" into (re, im).
pub fn parse_complex(s: &str) -> CliResult<(f64, f64)> {
    let bad = || CliError::Parse(format!("'{s}' is not a complex number"));
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let num = |u: &str| -> CliResult<f64> {
        match u {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => u.parse().map_err(|_| bad()),
        }
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok((t.parse().map_err(|_| bad())?, 0.0));
    };
    // split at the last sign that is not the leading one or part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok((num(&body[..k])?, num(&body[k..])?)),
        None => Ok((0.0, num(body)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("0.5i").unwrap(), (0.0, 0.5));
        assert_eq!(parse_complex("-i").unwrap(), (0.0, -1.0));
        assert_eq!(parse_complex("0.3").unwrap(), (0.3, 0.0));
        assert_eq!(parse_complex("0.2+0.4i").unwrap(), (0.2, 0.4));
        assert_eq!(parse_complex("-0.2-4e-1i").unwrap(), (-0.2, -0.4));
        assert_eq!(parse_complex("1e-2+i").unwrap(), (0.01, 1.0));
        assert!(parse_complex("x").is_err());
    }

    #[test]
    fn overrides_replace_file_values() {
        let mut c = RunConfig::default();
        c.apply(&Overrides {
            params: Some("1/2, 1/3, 1/5, 1/7".into()),
            tol: Some(1e-6),
            ..Overrides::default()
        })
        .unwrap();
        assert_eq!(c.params[1], "1/3");
        assert_eq!(c.tolerances.quadrature, 1e-6);
        assert!(c.apply(&Overrides { params: Some("1,2".into()), ..Overrides::default() }).is_err());
    }

    #[test]
    fn toml_and_json_agree() {
        let toml_cfg: RunConfig = toml::from_str("params = [\"2/3\", \"1/5\", \"3/5\", \"1/7\"]\nmax_degree = 6\n[tolerances]\nnumeric = 1e-9\n").unwrap();
        let json_cfg: RunConfig =
            serde_json::from_str(r#"{"params": ["2/3", "1/5", "3/5", "1/7"], "max_degree": 6, "tolerances": {"numeric": 1e-9}}"#).unwrap();
        assert_eq!(toml_cfg, json_cfg);
        assert_eq!(toml_cfg.tolerances.quadrature, 1e-8);
        assert!(toml::from_str::<RunConfig>("bogus = 1").is_err());
    }
}
