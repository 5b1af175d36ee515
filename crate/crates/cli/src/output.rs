//! JSON and CSV serialization of result tables.

use crate::config::Format;
use crate::error::{CliError, CliResult};
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::Path;
use wilson_daha::numeric::HpComplex;

/// A result document: run metadata and one record per row.
#[derive(Debug)]
pub struct Table {
    pub meta: Value,
    pub rows: Vec<Value>,
}

/// {"re", "im", "bits"} with as many significant digits as the precision carries.
pub fn complex_json(z: &HpComplex) -> Value {
    let bits = z.precision_bits();
    let digits = (bits as f64 * std::f64::consts::LOG10_2).floor() as usize;
    let (re, im) = z.to_string_digits(digits);
    json!({ "re": re, "im": im, "bits": bits })
}

fn flatten_into(prefix: &str, v: &Value, out: &mut Map<String, Value>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten_into(&key, x, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(cell).collect();
            out.insert(prefix.to_string(), Value::String(format!("[{}]", parts.join(", "))));
        }
        _ => {
            out.insert(prefix.to_string(), v.clone());
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

impl Table {
    pub fn render(&self, format: Format) -> CliResult<Vec<u8>> {
        match format {
            Format::Json => {
                let doc = json!({ "meta": self.meta, "rows": self.rows });
                let mut bytes = serde_json::to_vec_pretty(&doc).map_err(|e| CliError::Parse(e.to_string()))?;
                bytes.push(b'\n');
                Ok(bytes)
            }
            Format::Csv => {
                let flat: Vec<Map<String, Value>> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let mut m = Map::new();
                        flatten_into("", r, &mut m);
                        m
                    })
                    .collect();
                let mut header: Vec<String> = Vec::new();
                for m in &flat {
                    for k in m.keys() {
                        if !header.contains(k) {
                            header.push(k.clone());
                        }
                    }
                }
                let mut w = csv::Writer::from_writer(Vec::new());
                let csv_err = |e: csv::Error| CliError::Parse(e.to_string());
                w.write_record(&header).map_err(csv_err)?;
                for m in &flat {
                    w.write_record(header.iter().map(|k| m.get(k).map(cell).unwrap_or_default())).map_err(csv_err)?;
                }
                w.into_inner().map_err(|e| CliError::Parse(e.to_string()))
            }
        }
    }

    /// Writes to `out`, or to standard output when no path is given.
    pub fn write(&self, format: Format, out: Option<&Path>) -> CliResult<()> {
        let bytes = self.render(format)?;
        match out {
            Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::io(p.display().to_string(), e)),
            None => std::io::stdout().write_all(&bytes).map_err(|e| CliError::io("stdout", e)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_flattens_nested_fields() {
        let t = Table {
            meta: json!({}),
            rows: vec![
                json!({"m": 1, "coefficients": ["-1/2", "1"], "value": {"re": "1.0", "im": "0"}}),
                json!({"m": 2, "coefficients": ["1"], "value": {"re": "2.0", "im": "0"}}),
            ],
        };
        let s = String::from_utf8(t.render(Format::Csv).unwrap()).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "m,coefficients,value.re,value.im");
        assert_eq!(lines[1], "1,\"[-1/2, 1]\",1.0,0");
    }
}
