use std::fmt::Display;

use itertools::Itertools;
use serde_json::{json, Map, Value};

use super::matrix::AlgebraMatrix;

/// JSON object with a header (`n`, `basis`, `basis_order`, `specialization`) and
/// the entries as strings, row by row.
pub fn matrix_to_json<T: Display>(m: &AlgebraMatrix<T>, specialization: Option<&Value>) -> Value {
    let entries: Vec<Vec<String>> = m.entries().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    json!({
        "n": m.degree(),
        "order": m.order(),
        "basis": m.basis(),
        "basis_order": m.basis_order().iter().map(|g| g.one_line()).collect::<Vec<_>>(),
        "specialization": specialization.cloned().unwrap_or(Value::Object(Map::new())),
        "entries": entries,
    })
}

/// CSV with `#` header lines, then one row per basis element led by its label.
pub fn matrix_to_csv<T: Display>(m: &AlgebraMatrix<T>, specialization: Option<&Value>) -> String {
    let order: Vec<String> = m.basis_order().iter().map(|g| g.one_line()).collect();
    let mut out = String::new();
    out.push_str(&format!("# n={}\n# basis={}\n", m.degree(), m.basis()));
    out.push_str(&format!("# basis_order={}\n", order.join(" ")));
    if let Some(s) = specialization {
        out.push_str(&format!("# specialization={s}\n"));
    }
    out.push_str(&format!("row,{}\n", order.join(",")));
    for (label, row) in order.iter().zip(m.entries()) {
        out.push_str(label);
        for entry in row {
            out.push(',');
            out.push_str(&csv_field(&entry.to_string()));
        }
        out.push('\n');
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Rows of a matrix as aligned text, for terminal output.
pub fn matrix_to_text<T: Display>(m: &AlgebraMatrix<T>) -> String {
    let cells: Vec<Vec<String>> = m.entries().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(1);
    cells.iter().map(|r| r.iter().map(|c| format!("{c:>width$}")).join("  ")).join("\n")
}
