use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wilson-daha")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn nonsymmetric_table_matches_known_rows() {
    let o = run(&["gen-polys", "nonsymmetric", "--max-m", "4"]);
    assert_eq!(code(&o), 0);
    let doc = json(&o);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(strings(&rows[1]["coefficients"]), ["-8657/31164", "1"]);
    assert_eq!(rows[2]["value_at_minus_x0"], "1749407/999600");
    assert_eq!(strings(&doc["meta"]["abcd"]), ["26/35", "16/35", "41/30", "29/30"]);
}

#[test]
fn symmetric_and_antisymmetric_first_rows() {
    let sym = json(&run(&["gen-polys", "symmetric", "--max-m", "2"]));
    assert_eq!(strings(&sym["rows"][0]["coefficients"]), ["1"]);
    // (a + x)(b + x) with a = 26/35, b = 16/35
    let anti = json(&run(&["gen-polys", "antisymmetric", "--max-m", "1"]));
    assert_eq!(anti["rows"][0]["n"], 1);
    assert_eq!(strings(&anti["rows"][0]["coefficients"]), ["416/1225", "6/5", "1"]);
}

#[test]
fn algebra_suite_passes_with_a_record_per_identity() {
    let o = run(&["verify", "algebra", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "suite,name,anchor,method,max_degree_or_grid,residual,status,witness");
    assert!(text.contains("algebra,T_i^2 = t_i^2,quadratic relations,exact,deg ≤ 20,0,pass,"));
    assert!(String::from_utf8(o.stderr).unwrap().contains("T_i^2 = t_i^2: pass (exact, deg ≤ 20)"));
}

#[test]
fn exact_only_parameters_pass_with_numeric_checks_skipped() {
    let o = run(&["verify", "all", "--params", "2/3,1/5,1/7,3/5", "--max-degree", "6"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = json(&o);
    let rows = doc["rows"].as_array().unwrap();
    let numeric: Vec<&Value> = rows.iter().filter(|r| r["method"] == "numeric").collect();
    assert!(!numeric.is_empty());
    assert!(numeric.iter().all(|r| r["status"].as_str().unwrap().starts_with("skipped: ")));
    assert!(numeric.iter().any(|r| r["status"] == "skipped: exact-only mode"));
    assert_eq!(doc["meta"]["overall"], "pass");
}

#[test]
fn injected_gamma_fault_fails_with_a_witness() {
    let o = run(&["verify", "polynomials", "--inject-fault", "gamma", "--max-degree", "6"]);
    assert_eq!(code(&o), 1);
    let doc = json(&o);
    let failed: Vec<&Value> = doc["rows"].as_array().unwrap().iter().filter(|r| r["status"] == "fail").collect();
    assert!(failed[0]["witness"].as_str().unwrap().contains("p_2"));
    let help = String::from_utf8(run(&["verify", "--help"]).stdout).unwrap();
    assert!(!help.contains("inject-fault"));
}

#[test]
fn exit_codes_for_admissibility_and_parse_errors() {
    let o = run(&["verify", "algebra", "--params", "1,1,1,1"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8(o.stderr).unwrap().contains("b = 0"));
    assert_eq!(code(&run(&["gen-polys", "symmetric", "--params", "1/2,1/2,1/4,1/4"])), 2);
    assert_eq!(code(&run(&["verify", "algebra", "--params", "1,x,1,1"])), 3);
    assert_eq!(code(&run(&["verify", "algebra", "--params", "1,2"])), 3);
    assert_eq!(code(&run(&["verify", "everything"])), 3);
    assert_eq!(code(&run(&["frobnicate"])), 3);
    assert_eq!(code(&run(&["transform", "F", "/nonexistent/input.json"])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn config_files_and_flag_overrides() {
    let dir = TempDir::new().unwrap();
    let toml = write(&dir, "run.toml", "params = [\"3/4\", \"1/5\", \"3/5\", \"1/7\"]\nmax_m = 2\nformat = \"csv\"\n");
    let o = run(&["gen-polys", "nonsymmetric", "--config", &toml]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    let json_cfg = write(&dir, "run.json", r#"{"params": ["3/4", "1/5", "3/5", "1/7"], "max_m": 2, "format": "csv"}"#);
    assert_eq!(run(&["gen-polys", "nonsymmetric", "--config", &json_cfg]).stdout, text.as_bytes());
    // flags win over the file
    let o = run(&["gen-polys", "nonsymmetric", "--config", &toml, "--format", "json", "--params", "2/3,1/5,3/5,1/7"]);
    let doc = json(&o);
    assert_eq!(strings(&doc["rows"][1]["coefficients"]), ["-8657/31164", "1"]);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 3);
    let bad = write(&dir, "bad.toml", "precision = 12\n");
    assert_eq!(code(&run(&["verify", "algebra", "--config", &bad])), 3);
}

#[test]
fn shipped_example_config_is_the_canonical_set() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("config/canonical.toml");
    let o = run(&["gen-polys", "nonsymmetric", "--config", path.to_str().unwrap(), "--max-m", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(strings(&json(&o)["rows"][1]["coefficients"]), ["-8657/31164", "1"]);
}

#[test]
fn forward_transform_of_a_basis_polynomial_is_a_point_mass() {
    let dir = TempDir::new().unwrap();
    let p1 = write(&dir, "p1.json", r#"["-8657/31164", "1"]"#);
    let doc = json(&run(&["transform", "F", &p1]));
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["index"], 1);
    assert_eq!(rows[0]["point"], "34/15");
    assert_eq!(doc["meta"]["scale"]["inner"], 1);
    assert!(doc["meta"]["log_scale"]["bits"].as_u64().unwrap() >= 128);
    // x itself spreads over indices 0 and 1
    let x = write(&dir, "x.json", r#"["0", "1"]"#);
    assert_eq!(json(&run(&["transform", "F", &x]))["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn inverse_then_forward_multiplies_by_the_normalizer() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", r#"{"values": {"0": "2/3", "3": "-5/7"}}"#);
    let g = dir.path().join("g.json");
    assert_eq!(code(&run(&["transform", "G", &f, "--out", g.to_str().unwrap()])), 0);
    let back = json(&run(&["transform", "F", g.to_str().unwrap()]));
    let rows = back["rows"].as_array().unwrap();
    let pairs: Vec<(u64, &str)> = rows.iter().map(|r| (r["index"].as_u64().unwrap(), r["value"].as_str().unwrap())).collect();
    assert_eq!(pairs, [(0, "2/3"), (3, "-5/7")]);
    assert_eq!(back["meta"]["scale"], serde_json::json!({"inner": 1, "weight": 1}));
    // the symmetric pair rejects odd input
    let x = write(&dir, "x.json", r#"["0", "1"]"#);
    assert_eq!(code(&run(&["transform", "Fplus", &x])), 3);
    assert_eq!(code(&run(&["transform", "G", &x])), 3);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["verify", "transform", "--max-degree", "6", "--format", "csv"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["gen-polys", "symmetric", "--max-m", "5"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn unreachable_tolerance_exits_with_code_4() {
    let dir = TempDir::new().unwrap();
    let one = write(&dir, "one.json", r#"["1"]"#);
    let o = run(&["transform", "calF", &one, "--lambda", "0.4i", "--precision", "64", "--tol", "1e-40"]);
    assert_eq!(code(&o), 4, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn wilson_transform_of_the_ground_state() {
    // e = G_tau E_tau(., gamma_0) = G_tau; its image is (a+b) G_sigmatau
    let dir = TempDir::new().unwrap();
    let one = write(&dir, "one.json", r#"["1"]"#);
    let o = run(&["transform", "calF", &one, "--lambda", "0.4i"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let doc = json(&o);
    assert_eq!(strings(&doc["meta"]["exact_image"]), ["6/5"]);
    let row = &doc["rows"][0];
    let deviation: f64 = row["deviation"].as_str().unwrap().parse().unwrap();
    assert!(deviation < 1e-8, "{row}");
    assert_eq!(row["value"]["bits"], 128);
}
