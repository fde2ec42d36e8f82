//! Plain CSV tables. Numbers use Rust's shortest round-trip rendering,
//! rows end in `\n`, no quoting (no cell ever contains a comma).

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Result, VsaError};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Numeric column by name; text cells read as NaN.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| *c == name)?;
        Some(
            self.rows
                .iter()
                .map(|r| match &r[i] {
                    Cell::Num(v) => *v,
                    Cell::Text(_) => f64::NAN,
                })
                .collect(),
        )
    }

    pub fn render(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                match cell {
                    Cell::Num(v) => write!(out, "{v}").expect("write to String"),
                    Cell::Text(s) => out.push_str(s),
                }
            }
            out.push('\n');
        }
        out
    }
}

pub fn write_csv(table: &Table, path: &Path) -> Result<()> {
    std::fs::write(path, table.render()).map_err(|source| VsaError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Header and raw cells of a CSV produced by [`write_csv`].
pub fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .map(|l| l.split(',').map(str::to_string).collect())
        .unwrap_or_default();
    let rows = lines.map(|l| l.split(',').map(str::to_string).collect()).collect();
    (header, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only() {
        assert_eq!(Table::new(&["x_r", "k"]).render(), "x_r,k\n");
    }

    #[test]
    fn shortest_form() {
        let mut t = Table::new(&["a", "b", "flags"]);
        t.push(vec![0.1.into(), (-0.0).into(), "ok".into()]);
        t.push(vec![1e-7.into(), 2025.0.into(), "stop|sat_m2".into()]);
        assert_eq!(t.render(), "a,b,flags\n0.1,-0,ok\n0.0000001,2025,stop|sat_m2\n");
    }

    #[test]
    fn round_trip() {
        let vals = [0.1, 1.0 / 3.0, 253.125, 5e-324, 1.7976931348623157e308, -2.2e-16];
        let mut t = Table::new(&["v"]);
        for v in vals {
            t.push(vec![v.into()]);
        }
        let (_, rows) = parse_csv(&t.render());
        for (v, r) in vals.iter().zip(rows) {
            assert_eq!(r[0].parse::<f64>().unwrap().to_bits(), v.to_bits());
        }
    }
}
