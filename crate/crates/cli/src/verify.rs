use crate::config::RunConfig;
use crate::error::CliResult;
use crate::output::Table;
use serde_json::json;
use wilson_daha::report::{Check, Status};
use wilson_daha::{run_suite, Fault, Suite};

fn status_text(s: &Status) -> String {
    match s {
        Status::Pass => "pass".into(),
        Status::Fail => "fail".into(),
        Status::Skipped(reason) => format!("skipped: {reason}"),
    }
}

fn row(suite: Suite, c: &Check) -> serde_json::Value {
    json!({
        "suite": suite.name(),
        "name": c.name,
        "anchor": c.anchor,
        "method": c.method.to_string(),
        "max_degree_or_grid": c.scope,
        "residual": c.residual,
        "status": status_text(&c.status),
        "witness": c.witness,
    })
}

/// Runs the requested suites; the flag is true iff every check passed or was skipped.
pub fn run(cfg: &RunConfig, suite: Suite, fault: Option<Fault>) -> CliResult<(Table, Vec<String>, bool)> {
    let t = cfg.param_set()?;
    let opts = cfg.suite_options();
    let suites: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut ok = true;
    for s in suites {
        let report = run_suite(s, &t, &opts, fault)?;
        ok &= report.passed();
        for c in &report.checks {
            rows.push(row(s, c));
            lines.push(c.to_string());
        }
    }
    let meta = json!({
        "command": "verify",
        "suite": suite.name(),
        "config": cfg,
        "overall": if ok { "pass" } else { "fail" },
    });
    Ok((Table { meta, rows }, lines, ok))
}
