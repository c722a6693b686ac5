//! Deterministic CSV and JSON report writers. Floats are rendered with a
//! fixed scientific format so identical runs produce byte-identical files.

use crate::config::OutputFormat;
use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Num(f64),
    Int(u64),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

pub fn fmt_float(v: f64) -> String {
    if v.is_nan() {
        "nan".to_string()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".to_string() } else { "-inf".to_string() }
    } else {
        format!("{v:.12e}")
    }
}

impl Report {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let line: Vec<String> = row
                .iter()
                .map(|c| match c {
                    Cell::Text(s) => csv_quote(s),
                    Cell::Num(v) => fmt_float(*v),
                    Cell::Int(v) => v.to_string(),
                })
                .collect();
            let _ = writeln!(out, "{}", line.join(","));
        }
        out
    }

    /// An array of records mirroring the CSV columns, in column order.
    /// Non-finite reals become null.
    pub fn to_json(&self) -> String {
        let mut out = String::from("[\n");
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str("  {");
            for (j, (col, cell)) in self.columns.iter().zip(row).enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "\"{col}\": ");
                match cell {
                    Cell::Text(s) => {
                        let _ = write!(out, "\"{}\"", json_escape(s));
                    }
                    Cell::Num(v) => {
                        if v.is_finite() {
                            out.push_str(&fmt_float(*v));
                        } else {
                            out.push_str("null");
                        }
                    }
                    Cell::Int(v) => {
                        let _ = write!(out, "{v}");
                    }
                }
            }
            out.push_str(if i + 1 < self.rows.len() { "},\n" } else { "}\n" });
        }
        out.push_str("]\n");
        out
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_escape(s: &str) -> String {
    s.chars()
        .flat_map(|c| match c {
            '"' => vec!['\\', '"'],
            '\\' => vec!['\\', '\\'],
            c if (c as u32) < 0x20 => format!("\\u{:04x}", c as u32).chars().collect(),
            c => vec![c],
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(vec!["name", "value", "count"]);
        r.push(vec!["alpha".into(), 1.5.into(), 3u64.into()]);
        r.push(vec!["beta".into(), f64::NAN.into(), 0u64.into()]);
        r
    }

    #[test]
    fn csv_quotes_labels_with_commas() {
        let mut r = Report::new(vec!["name", "value"]);
        r.push(vec!["ellipse(0.1,normalized)".into(), 1.0.into()]);
        let text = r.to_csv();
        assert!(text.contains("\"ellipse(0.1,normalized)\",1.000000000000e0"));
    }

    #[test]
    fn csv_layout() {
        let text = sample().to_csv();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "name,value,count");
        assert_eq!(lines[1], "alpha,1.500000000000e0,3");
        assert_eq!(lines[2], "beta,nan,0");
    }

    #[test]
    fn json_mirrors_columns() {
        let text = sample().to_json();
        assert!(text.contains("\"name\": \"alpha\""));
        assert!(text.contains("\"value\": 1.500000000000e0"));
        assert!(text.contains("\"value\": null"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let a = sample().render(OutputFormat::Json);
        let b = sample().render(OutputFormat::Json);
        assert_eq!(a, b);
    }
}
