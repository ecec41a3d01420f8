//! Row-oriented output: CSV (locale-independent, newline-terminated) or JSON,
//! to standard output or a file.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, ValueEnum};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Output format for tabular results.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Decimal places for floating-point columns (1..=15).
    #[arg(long, default_value_t = 6)]
    pub precision: usize,
}

impl OutputArgs {
    pub fn validate(&self) -> Result<(), CliError> {
        if !(1..=15).contains(&self.precision) {
            return Err(CliError::Domain(format!(
                "precision must be in 1..=15, got {}",
                self.precision
            )));
        }
        Ok(())
    }

    pub fn write_table(&self, table: &Table) -> Result<(), CliError> {
        let rendered = match self.format {
            Format::Csv => table.to_csv(self.precision),
            Format::Json => table.to_json(),
        };
        self.write_str(&rendered)
    }

    pub fn write_str(&self, content: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => std::fs::write(path, content)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(content.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum Cell {
    UInt(u64),
    Float(f64),
    /// Column pinned to 2 decimal places regardless of the precision flag.
    Fixed2(f64),
    Str(String),
}

#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn to_csv(&self, precision: usize) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let fields: Vec<String> = row
                .iter()
                .map(|cell| match cell {
                    Cell::UInt(v) => v.to_string(),
                    Cell::Float(v) => format!("{v:.precision$}"),
                    Cell::Fixed2(v) => format!("{v:.2}"),
                    Cell::Str(s) => s.clone(),
                })
                .collect();
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(&name, cell)| {
                        let value = match cell {
                            Cell::UInt(v) => serde_json::json!(v),
                            Cell::Float(v) => serde_json::json!(v),
                            Cell::Fixed2(v) => serde_json::json!((v * 100.0).round() / 100.0),
                            Cell::Str(s) => serde_json::json!(s),
                        };
                        (name.to_string(), value)
                    })
                    .collect();
                serde_json::Value::Object(map)
            })
            .collect();
        let mut rendered = serde_json::to_string_pretty(&rows).expect("JSON rows cannot fail");
        rendered.push('\n');
        rendered
    }
}
