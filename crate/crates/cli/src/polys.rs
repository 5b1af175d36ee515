use crate::config::RunConfig;
use crate::error::CliResult;
use crate::output::Table;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::json;
use wilson_daha::daha::{Poly, Sign};
use wilson_daha::numeric::Rational;
use wilson_daha::wilson::WilsonFamily;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// p_m, m = 0..=max_m
    Nonsymmetric,
    /// P+_2n, n = 0..=max_m
    Symmetric,
    /// P-_2n, n = 1..=max_m
    Antisymmetric,
}

fn poly_row(key: &str, index: usize, gamma: &Rational, p: &Poly, at_minus_x0: &Rational) -> serde_json::Value {
    json!({
        key: index,
        "gamma": gamma.to_string(),
        "coefficients": p.to_strings(),
        "value_at_minus_x0": at_minus_x0.to_string(),
    })
}

pub fn run(cfg: &RunConfig, family: Family, max_m: usize) -> CliResult<Table> {
    let t = cfg.param_set()?;
    let fam = WilsonFamily::new(&t)?;
    let minus_x0 = -t.a();
    let mut rows = Vec::new();
    match family {
        Family::Nonsymmetric => {
            for m in 0..=max_m {
                rows.push(poly_row("m", m, &t.gamma(m), &fam.p(m), &fam.value_at_minus_x0(m)));
            }
        }
        Family::Symmetric | Family::Antisymmetric => {
            let (sign, first) = if family == Family::Symmetric { (Sign::Plus, 0) } else { (Sign::Minus, 1) };
            for n in first..=max_m {
                let p = fam.symmetric_p(n, sign)?;
                rows.push(poly_row("n", n, &t.gamma(2 * n), &p, &p.eval(&minus_x0)));
            }
        }
    }
    let meta = json!({
        "command": "gen-polys",
        "family": family,
        "max_m": max_m,
        "config": cfg,
        "abcd": t.abcd().map(|q| q.to_string()),
    });
    Ok(Table { meta, rows })
}
