//! The `transform` command: the polynomial pair 𝔽/𝔾 (full and symmetric) and
//! the Wilson function transform ℱ, ℱ_σ on a λ grid.

use crate::config::{parse_complex, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{complex_json, Table};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::Path;
use wilson_daha::daha::{ParamSet, Poly};
use wilson_daha::function::checks::numeric_admissible;
use wilson_daha::function::integrals::wilson_pairing;
use wilson_daha::function::{FrakTransform, GaussianSpec, KernelQuad, Twist};
use wilson_daha::numeric::{parse_rational, HpComplex, Rational};
use wilson_daha::transform::{FiniteSpectralFunction, Scale, SpectralTransform, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
pub enum Kind {
    #[value(name = "F", alias = "f")]
    F,
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "Fplus", alias = "fplus")]
    Fplus,
    #[value(name = "Gplus", alias = "gplus")]
    Gplus,
    #[value(name = "calF", alias = "calf")]
    #[serde(rename = "calF")]
    CalF,
    #[value(name = "calFsigma", alias = "calfsigma")]
    #[serde(rename = "calFsigma")]
    CalFsigma,
}

/// A parsed input object, always carrying a transcendental scale.
#[derive(Debug, PartialEq)]
pub enum Input {
    Poly(Poly, Scale),
    Spectral(Vec<(usize, Rational)>, Scale),
}

fn rational_of(v: &Value) -> CliResult<Rational> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(parse_rational(&n.to_string())?),
        other => Err(CliError::Parse(format!("{other} is not an exact rational; write it as \"p/q\""))),
    }
}

fn scale_of(v: Option<&Value>) -> CliResult<Scale> {
    let Some(v) = v else { return Ok(Scale::ONE) };
    let field = |k: &str| -> CliResult<i32> {
        match v.get(k) {
            None => Ok(0),
            Some(x) => x
                .as_i64()
                .and_then(|i| i32::try_from(i).ok())
                .ok_or_else(|| CliError::Parse(format!("scale.{k} must be an integer"))),
        }
    };
    Ok(Scale {
        inner: field("inner")?,
        weight: field("weight")?,
    })
}

fn coefficients(items: &[Value]) -> CliResult<Poly> {
    Ok(Poly::new(items.iter().map(rational_of).collect::<CliResult<_>>()?))
}

fn index_of(v: &Value) -> CliResult<usize> {
    let parsed = match v {
        Value::String(s) => s.trim().parse().ok(),
        Value::Number(n) => n.as_u64().and_then(|k| usize::try_from(k).ok()),
        _ => None,
    };
    parsed.ok_or_else(|| CliError::Parse(format!("{v} is not a spectral index")))
}

fn spectral_values(v: &Value) -> CliResult<Vec<(usize, Rational)>> {
    let mut out: Vec<(usize, Rational)> = match v {
        Value::Object(m) => m.iter().map(|(k, x)| Ok((index_of(&Value::String(k.clone()))?, rational_of(x)?))).collect(),
        Value::Array(pairs) => pairs
            .iter()
            .map(|p| match p.as_array().map(Vec::as_slice) {
                Some([k, x]) => Ok((index_of(k)?, rational_of(x)?)),
                _ => Err(CliError::Parse(format!("{p} is not an [index, value] pair"))),
            })
            .collect(),
        _ => Err(CliError::Parse("values must be an object or a list of pairs".into())),
    }?;
    out.sort_by_key(|(k, _)| *k);
    Ok(out)
}

/// Reads a coefficient list, `{"coefficients": [...]}`, `{"values": {...}}`,
/// or a document previously written by this command.
pub fn parse_input(v: &Value) -> CliResult<Input> {
    if let Value::Array(items) = v {
        return Ok(Input::Poly(coefficients(items)?, Scale::ONE));
    }
    if let (Some(meta), Some(Value::Array(rows))) = (v.get("meta"), v.get("rows")) {
        let scale = scale_of(meta.get("scale"))?;
        let field = |r: &Value, k: &str| r.get(k).cloned().ok_or_else(|| CliError::Parse(format!("row without {k}")));
        return match meta.get("output").and_then(Value::as_str) {
            Some("polynomial") => {
                let mut coeffs = Vec::new();
                for r in rows {
                    let k = index_of(&field(r, "power")?)?;
                    if k != coeffs.len() {
                        return Err(CliError::Parse(format!("power {k} out of order")));
                    }
                    coeffs.push(field(r, "coefficient")?);
                }
                Ok(Input::Poly(coefficients(&coeffs)?, scale))
            }
            Some("spectral") => {
                let values = rows
                    .iter()
                    .map(|r| Ok((index_of(&field(r, "index")?)?, rational_of(&field(r, "value")?)?)))
                    .collect::<CliResult<_>>()?;
                Ok(Input::Spectral(values, scale))
            }
            _ => Err(CliError::Parse("document is not a polynomial or spectral transform output".into())),
        };
    }
    if let Some(Value::Array(items)) = v.get("coefficients") {
        return Ok(Input::Poly(coefficients(items)?, scale_of(v.get("scale"))?));
    }
    if let Some(values) = v.get("values") {
        return Ok(Input::Spectral(spectral_values(values)?, scale_of(v.get("scale"))?));
    }
    Err(CliError::Parse("input is neither a polynomial nor a spectral function".into()))
}

pub fn read_input(path: &Path) -> CliResult<Input> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_input(&v)
}

fn scale_meta(scale: Scale, t: &ParamSet, variant: Variant, prec: u32) -> CliResult<Value> {
    Ok(json!({
        "scale": scale,
        "log_scale": complex_json(&scale.log_value(t, variant, prec)?),
    }))
}

fn merge(base: &mut Value, extra: Value) {
    if let (Value::Object(b), Value::Object(e)) = (base, extra) {
        b.extend(e);
    }
}

fn spectral_point(t: &ParamSet, variant: Variant, k: usize) -> Rational {
    match variant {
        Variant::Full => -t.gamma(k),
        Variant::Plus => t.gamma(2 * k),
    }
}

/// Result of the command: the table and, for the quadrature kinds, a
/// description of the worst point if it missed the tolerance.
pub struct Outcome {
    pub table: Table,
    pub tolerance_failure: Option<String>,
}

pub fn run(cfg: &RunConfig, kind: Kind, input: Input, lambdas: &[String]) -> CliResult<Outcome> {
    let t = cfg.param_set()?;
    let prec = cfg.precision_bits;
    let mut meta = json!({ "command": "transform", "kind": kind, "config": cfg });
    let (rows, tolerance_failure) = match kind {
        Kind::F | Kind::Fplus => {
            let variant = if kind == Kind::F { Variant::Full } else { Variant::Plus };
            let Input::Poly(p, scale) = input else {
                return Err(CliError::Parse(format!("{kind:?} takes a polynomial")));
            };
            let f = SpectralTransform::new(&t, variant)?.forward(&p)?;
            let f = f.clone().with_scale(f.scale.times(scale));
            merge(&mut meta, json!({ "output": "spectral", "variant": variant }));
            merge(&mut meta, scale_meta(f.scale, &t, variant, prec)?);
            let rows = f
                .iter()
                .map(|(k, v)| json!({ "index": k, "point": spectral_point(&t, variant, k).to_string(), "value": v.to_string() }))
                .collect();
            (rows, None)
        }
        Kind::G | Kind::Gplus => {
            let variant = if kind == Kind::G { Variant::Full } else { Variant::Plus };
            let Input::Spectral(values, scale) = input else {
                return Err(CliError::Parse(format!("{kind:?} takes a spectral function")));
            };
            let f = FiniteSpectralFunction::from_values(variant, scale, values);
            let g = SpectralTransform::new(&t, variant)?.inverse(&f)?;
            merge(&mut meta, json!({ "output": "polynomial", "variant": variant }));
            merge(&mut meta, scale_meta(g.scale, &t, variant, prec)?);
            let rows = g
                .poly
                .to_strings()
                .into_iter()
                .enumerate()
                .map(|(k, c)| json!({ "power": k, "coefficient": c }))
                .collect();
            (rows, None)
        }
        Kind::CalF | Kind::CalFsigma => {
            let s = if kind == Kind::CalF { t.clone() } else { t.sigma() };
            let Input::Poly(p, scale) = input else {
                return Err(CliError::Parse(format!("{kind:?} takes a polynomial")));
            };
            if scale != Scale::ONE {
                return Err(CliError::Parse(format!("{kind:?} takes an unscaled polynomial")));
            }
            calf(cfg, &s, &p, lambdas, &mut meta)?
        }
    };
    Ok(Outcome {
        table: Table { meta, rows },
        tolerance_failure,
    })
}

/// ℱ(p·G_τ) over `s` at each λ by quadrature, next to the exact image q·G_{στ}.
fn calf(cfg: &RunConfig, s: &ParamSet, p: &Poly, lambdas: &[String], meta: &mut Value) -> CliResult<(Vec<Value>, Option<String>)> {
    s.require_exact()?;
    if !numeric_admissible(s) {
        s.require_quadrature()?;
        return Err(CliError::Admissibility(format!(
            "{s}: a twisted parameter set has no contour separating the pole sequences"
        )));
    }
    let prec = cfg.precision_bits;
    let tol = cfg.tolerances.quadrature;
    let image = FrakTransform::new(s)?.calf_exact(p)?;
    let g = GaussianSpec::twisted(s, Twist::SigmaTau);
    let q = KernelQuad::new(tol * 1e-2, prec);
    merge(
        meta,
        json!({ "output": "values", "params_used": s.values().map(|v| v.to_string()), "exact_image": image.to_strings() }),
    );
    let mut rows = Vec::new();
    let mut worst: Option<(f64, String)> = None;
    for text in lambdas {
        let (re, im) = parse_complex(text)?;
        let lambda = HpComplex::from_f64(re, im, prec);
        let r = wilson_pairing(s, std::slice::from_ref(p), &lambda, &q)?;
        let value = &r.values[0];
        let exact = &g.eval(&lambda)?.value * &image.eval_hp(&lambda);
        let deviation = value.rel_diff(&exact, 0.0);
        let err = deviation.max(r.error);
        if err > tol && worst.as_ref().is_none_or(|(w, _)| err > *w) {
            worst = Some((err, format!("lambda = {text}: error {err:.3e} exceeds {tol:e}")));
        }
        rows.push(json!({
            "lambda": complex_json(&lambda),
            "value": complex_json(value),
            "exact": complex_json(&exact),
            "quadrature_error": format!("{:.3e}", r.error),
            "deviation": format!("{deviation:.3e}"),
        }));
    }
    Ok((rows, worst.map(|(_, w)| w)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_in_every_shape() {
        let p = Poly::new(vec![Rational::from((1, 2)), Rational::from(0), Rational::from(1)]);
        assert_eq!(parse_input(&json!(["1/2", 0, "1"])).unwrap(), Input::Poly(p.clone(), Scale::ONE));
        assert_eq!(
            parse_input(&json!({"coefficients": ["1/2", "0", "1"], "scale": {"inner": 1}})).unwrap(),
            Input::Poly(p, Scale::INNER)
        );
        let s = parse_input(&json!({"values": {"3": "2/7", "0": 1}})).unwrap();
        assert_eq!(s, Input::Spectral(vec![(0, Rational::from(1)), (3, Rational::from((2, 7)))], Scale::ONE));
        assert!(parse_input(&json!([0.5])).is_err());
        assert!(parse_input(&json!({"other": 1})).is_err());
    }

    #[test]
    fn spectral_output_reads_back() {
        let doc = json!({
            "meta": {"output": "spectral", "scale": {"inner": 1, "weight": 0}},
            "rows": [{"index": 1, "point": "x", "value": "3/4"}],
        });
        assert_eq!(parse_input(&doc).unwrap(), Input::Spectral(vec![(1, Rational::from((3, 4)))], Scale::INNER));
    }
}
