//! Tabular results and their CSV/JSON renderings.

use std::io::Write;

use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Cell {
    /// CSV text: floats with 12 significant digits.
    fn render(&self) -> String {
        match self {
            Self::Int(i) => i.to_string(),
            Self::Float(x) => format!("{x:.11e}"),
            Self::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Self::Int(i) => Value::from(*i),
            Self::Float(x) => Value::from(*x),
            Self::Text(s) => Value::from(s.as_str()),
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Self::Float(x)
    }
}

impl From<usize> for Cell {
    fn from(i: usize) -> Self {
        Self::Int(i as i64)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Self::Text(s.to_owned())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub unit: String,
}

impl Column {
    pub fn new(name: &str, unit: &str) -> Self {
        Self {
            name: name.to_owned(),
            unit: unit.to_owned(),
        }
    }
}

/// Rows under named columns, each with a unit.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<Column>) -> Self {
        Self {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Header line, units line, then one line per row.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(self.columns.iter().map(|c| c.name.as_str()))?;
        w.write_record(self.columns.iter().map(|c| c.unit.as_str()))?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()?;
        Ok(())
    }

    /// `{"units": {...}, "rows": [{...}, ...]}`.
    pub fn to_json(&self) -> Value {
        let units: Map<String, Value> = self
            .columns
            .iter()
            .map(|c| (c.name.clone(), Value::from(c.unit.as_str())))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.name.clone(), cell.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::json!({ "units": units, "rows": rows })
    }
}
