//! Aligned `key  value` text for report objects.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        // Matrices print one row per line.
        Value::Array(rows) if !rows.is_empty() && rows.iter().all(Value::is_array) => {
            for (i, r) in rows.iter().enumerate() {
                let cells: Vec<String> = r.as_array().unwrap().iter().map(scalar).collect();
                out.push((format!("{prefix}[{i}]"), cells.join(" ")));
            }
        }
        Value::Array(xs) if xs.iter().any(Value::is_object) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Array(xs) => {
            let cells: Vec<String> = xs.iter().map(scalar).collect();
            out.push((prefix.to_string(), cells.join(", ")));
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

pub fn text(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, x)| format!("{k:<width$}  {x}\n"))
        .collect()
}
