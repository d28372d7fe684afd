//! Tabular output as CSV or JSON lines, written atomically.

use std::io::{self, Write};
use std::path::Path;

use clap::ValueEnum;
use ferrers_core::text::format_real17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    #[value(name = "json-lines", alias = "jsonl")]
    JsonLines,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Real(f64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Real(x) => format_real17(*x),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Real(x) if x.is_finite() => format_real17(*x),
            Cell::Real(x) => serde_json::Value::String(x.to_string()).to_string(),
            Cell::Text(s) => serde_json::Value::String(s.clone()).to_string(),
        }
    }
}

pub struct Table {
    pub columns: &'static [&'static str],
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &'static [&'static str]) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> io::Result<Vec<u8>> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(self.columns)?;
                for row in &self.rows {
                    w.write_record(row.iter().map(Cell::csv))?;
                }
                w.into_inner().map_err(|e| e.into_error())
            }
            Format::JsonLines => {
                let mut out = Vec::new();
                for row in &self.rows {
                    let fields: Vec<String> = self
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(k, v)| {
                            format!("{}:{}", serde_json::Value::String(k.to_string()), v.json())
                        })
                        .collect();
                    writeln!(out, "{{{}}}", fields.join(","))?;
                }
                Ok(out)
            }
        }
    }
}

/// Write to `path` through a temporary file in the same directory, or to
/// stdout when no path is given.
pub fn emit(bytes: &[u8], path: Option<&Path>) -> io::Result<()> {
    match path {
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(bytes)?;
            tmp.as_file().sync_all()?;
            tmp.persist(path).map_err(|e| e.error)?;
            Ok(())
        }
    }
}
