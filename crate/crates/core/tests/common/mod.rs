#![allow(dead_code)]

use std::process::Command;

use serde_json::Value;

pub struct Output {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

pub fn quasimol(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_quasimol"))
        .args(args)
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

/// Compares the numeric content of CSV and JSON renderings of one command.
/// Returns the number of numeric cells checked.
pub fn numeric_parity(csv: &str, json: &str) -> Result<usize, String> {
    let doc: Value = serde_json::from_str(json).map_err(|e| e.to_string())?;
    let rows = doc["results"]["rows"]
        .as_array()
        .ok_or("missing results.rows")?;
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().ok_or("empty csv")?.split(',').collect();
    let body: Vec<&str> = lines.collect();
    if body.len() != rows.len() {
        return Err(format!("row count {} vs {}", body.len(), rows.len()));
    }
    let mut checked = 0;
    for (line, row) in body.iter().zip(rows) {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != header.len() {
            return Err(format!("ragged csv line {line}"));
        }
        for (key, cell) in header.iter().zip(cells) {
            let value = &row[*key];
            match (value, cell.parse::<f64>()) {
                (Value::Number(n), Ok(x)) => {
                    if n.as_f64() != Some(x) {
                        return Err(format!("{key}: json {n} vs csv {cell}"));
                    }
                    checked += 1;
                }
                (Value::Null, Ok(x)) if !x.is_finite() => {}
                (Value::Null, _) if cell.is_empty() => {}
                (Value::Number(n), Err(_)) => {
                    return Err(format!("{key}: json {n} vs csv {cell:?}"))
                }
                (Value::Null, _) => return Err(format!("{key}: json null vs csv {cell:?}")),
                _ => {}
            }
        }
    }
    Ok(checked)
}
