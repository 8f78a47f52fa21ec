use biquandle_core::{FiniteBiquandle, OperationTable};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};

/// Version tag carried by every JSON object and CSV row.
pub const SCHEMA: &str = "biquandle-cli/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    /// Human-readable text. Table outputs are valid input files.
    #[default]
    Table,
    Json,
    Csv,
}

/// One command result in all three renderings.
#[derive(Debug, Default)]
pub struct Output {
    pub json: Map<String, Value>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: String,
}

impl Output {
    pub fn new(command: &str) -> Self {
        let mut json = Map::new();
        json.insert("schema".into(), SCHEMA.into());
        json.insert("command".into(), command.into());
        Output {
            json,
            ..Default::default()
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.json.insert(key.into(), value.into());
        self
    }

    pub fn columns(&mut self, names: &[&str]) -> &mut Self {
        self.header = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn row(&mut self, cells: Vec<String>) -> &mut Self {
        self.rows.push(cells);
        self
    }

    pub fn line(&mut self, s: impl AsRef<str>) -> &mut Self {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
        self
    }

    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Table => Ok(self.text.clone()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&Value::Object(self.json.clone()))
                    .map_err(|e| CliError::Json(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| CliError::Json(format!("csv: {e}"));
                let mut header = vec!["schema".to_string()];
                header.extend(self.header.iter().cloned());
                w.write_record(&header).map_err(io)?;
                for r in &self.rows {
                    let mut rec = vec![SCHEMA.to_string()];
                    rec.extend(r.iter().cloned());
                    w.write_record(&rec).map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Json(format!("csv: {e}")))?;
                Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
            }
        }
    }
}

pub fn rows_json(t: &OperationTable) -> Value {
    json!(t.rows_one_based())
}

/// Adds the loadable JSON fields and long-form CSV rows of a biquandle.
pub fn put_biquandle(out: &mut Output, b: &FiniteBiquandle) {
    out.set("kind", "biquandle");
    out.set("order", b.order());
    out.set("under", rows_json(b.under_table()));
    out.set("over", rows_json(b.over_table()));
    out.columns(&["operation", "x", "y", "value"]);
    for (name, t) in [("under", b.under_table()), ("over", b.over_table())] {
        put_table_rows(out, name, t);
    }
}

pub fn put_table_rows(out: &mut Output, name: &str, t: &OperationTable) {
    for (x, row) in t.rows_one_based().iter().enumerate() {
        for (y, v) in row.iter().enumerate() {
            out.row(vec![name.into(), (x + 1).to_string(), (y + 1).to_string(), v.to_string()]);
        }
    }
}

/// `[1,2,3]` style, 1-based.
pub fn vector(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| (x + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

pub fn one_based(v: &[Vec<usize>]) -> Vec<Vec<usize>> {
    v.iter().map(|f| f.iter().map(|x| x + 1).collect()).collect()
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
