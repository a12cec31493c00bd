//! Tabular output in JSON, CSV and LaTeX.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::{to_text, ParamScalar, Style};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "latex" | "tex" => Ok(Format::Latex),
            other => Err(Error::Parse(format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Latex => "latex",
        })
    }
}

/// One table cell.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Text(String),
    Scalar(ParamScalar),
    Bool(bool),
    Int(i64),
    Float(f64),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Scalar(x) => x.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format!("{x:e}"),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Scalar(x) => json!(x.to_string()),
            Cell::Bool(b) => json!(b),
            Cell::Int(i) => json!(i),
            Cell::Float(x) => json!(x),
        }
    }

    fn latex(&self) -> String {
        match self {
            Cell::Scalar(x) => format!("${}$", to_text(x, Style::Latex)),
            Cell::Text(s) => escape_latex(s),
            other => other.plain(),
        }
    }
}

impl From<ParamScalar> for Cell {
    fn from(x: ParamScalar) -> Self {
        Cell::Scalar(x)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

fn escape_latex(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            _ => out.push(c),
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }
}

/// A command's result, with enough context to reproduce it.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub params: Vec<(String, String)>,
    pub table: Table,
    pub elapsed_ms: f64,
}

impl OutputRecord {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json()).expect("serializable")),
            Format::Csv => self.to_csv(),
            Format::Latex => Ok(self.to_latex()),
        }
    }

    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let rows: Vec<Value> = self
            .table
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self
                    .table
                    .columns
                    .iter()
                    .cloned()
                    .zip(r.iter().map(Cell::json))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        json!({
            "command": self.command,
            "params": params,
            "columns": self.table.columns,
            "rows": rows,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&self.table.columns).map_err(io)?;
        for r in &self.table.rows {
            w.write_record(r.iter().map(Cell::plain)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("utf-8"))
    }

    fn to_latex(&self) -> String {
        let mut s = format!("% {}\n", self.command);
        for (k, v) in &self.params {
            s.push_str(&format!("% {k} = {v}\n"));
        }
        s.push_str(&format!("\\begin{{tabular}}{{{}}}\n\\hline\n", "l".repeat(self.table.columns.len())));
        let head: Vec<String> = self.table.columns.iter().map(|c| escape_latex(c)).collect();
        s.push_str(&format!("{} \\\\\n\\hline\n", head.join(" & ")));
        for r in &self.table.rows {
            let cells: Vec<String> = r.iter().map(Cell::latex).collect();
            s.push_str(&format!("{} \\\\\n", cells.join(" & ")));
        }
        s.push_str("\\hline\n\\end{tabular}\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::parse_scalar;

    fn record() -> OutputRecord {
        let mut t = Table::new(["lambda", "alpha"]);
        t.push(vec!["[2]".into(), ParamScalar::one().into()]);
        t.push(vec!["[1,1]".into(), parse_scalar("-2*kappa/(kappa + 1)").unwrap().into()]);
        OutputRecord {
            command: "coeff 2".into(),
            params: vec![("kappa".into(), "symbolic".into())],
            table: t,
            elapsed_ms: 0.5,
        }
    }

    #[test]
    fn json_payload_roundtrips() {
        let v = record().to_json();
        let s = v["rows"][1]["alpha"].as_str().unwrap();
        assert_eq!(parse_scalar(s).unwrap().to_string(), s);
        assert_eq!(v["params"]["kappa"], "symbolic");
    }

    #[test]
    fn csv_and_latex() {
        let csv = record().render(Format::Csv).unwrap();
        assert_eq!(csv, "lambda,alpha\n[2],1\n\"[1,1]\",-2*kappa/(kappa + 1)\n");
        let tex = record().render(Format::Latex).unwrap();
        assert!(tex.contains("$-\\frac{2 \\kappa}{\\kappa + 1}$"), "{tex}");
        assert_eq!("LaTeX".parse::<Format>().unwrap(), Format::Latex);
    }
}
