//! CSV tables and plain-text run reports.
//!
//! Real numbers are written in scientific notation with a fixed number of
//! fractional digits, so identical inputs give byte-identical files.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

pub const DEFAULT_DIGITS: usize = 12;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Real(f64),
    Text(String),
}

impl Value {
    fn render(&self, digits: usize) -> String {
        match self {
            Value::Int(i) => i.to_string(),
            Value::Real(x) => format!("{x:.digits$e}"),
            Value::Text(s) => s.clone(),
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}

impl From<i64> for Value {
    fn from(i: i64) -> Self {
        Value::Int(i)
    }
}

impl From<u64> for Value {
    fn from(i: u64) -> Self {
        Value::Int(i as i64)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

/// Column names and rows. Rows need not match the header until written.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        Self {
            header: header.iter().map(|s| s.as_ref().to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<I: IntoIterator<Item = Value>>(&mut self, row: I) {
        self.rows.push(row.into_iter().collect());
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn check_rectangular(&self) -> Result<()> {
        let expected = self.header.len();
        match self.rows.iter().position(|r| r.len() != expected) {
            Some(row) => Err(Error::RaggedTable {
                row,
                got: self.rows[row].len(),
                expected,
            }),
            None => Ok(()),
        }
    }

    /// The CSV bytes: header, then one `\n`-terminated record per row.
    pub fn to_csv(&self, digits: usize) -> Result<Vec<u8>> {
        self.check_rectangular()?;
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let wrap = |source| Error::Csv {
            path: "<memory>".into(),
            source,
        };
        w.write_record(&self.header).map_err(wrap)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| v.render(digits))).map_err(wrap)?;
        }
        w.into_inner().map_err(|e| Error::Io {
            path: "<memory>".into(),
            source: e.into_error(),
        })
    }
}

/// Writes `table` to `path`. Nothing is created if the table is ragged.
pub fn write_csv(table: &Table, path: &Path, digits: usize) -> Result<()> {
    let bytes = table.to_csv(digits).map_err(|e| match e {
        Error::Csv { source, .. } => Error::Csv {
            path: path.to_owned(),
            source,
        },
        other => other,
    })?;
    fs::write(path, bytes).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

/// One invariant with its measured residual and the tolerance it was held to.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    /// Passes when `residual <= tolerance`.
    pub fn at_most(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance,
            passed: residual <= tolerance,
        }
    }

    /// Passes when `residual >= threshold`.
    pub fn at_least(name: impl Into<String>, residual: f64, threshold: f64) -> Self {
        Self {
            name: name.into(),
            residual,
            tolerance: threshold,
            passed: residual >= threshold,
        }
    }
}

/// Plain-text report: the command, the configuration, then one line per check.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub config: String,
    pub parameters: Vec<(String, String)>,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, config: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            config: config.into(),
            ..Self::default()
        }
    }

    pub fn parameter(&mut self, name: &str, value: impl ToString) {
        self.parameters.push((name.to_owned(), value.to_string()));
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, digits: usize) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "COMMAND {}", self.command);
        out.push_str("CONFIG\n");
        for line in self.config.lines() {
            let _ = writeln!(out, "  {line}");
        }
        for (k, v) in &self.parameters {
            let _ = writeln!(out, "PARAM {k} = {v}");
        }
        for c in &self.checks {
            let _ = writeln!(out, "TOLERANCE {} = {:.3e}", c.name, c.tolerance);
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "CHECK {}: {verdict} (residual={:.digits$e})", c.name, c.residual);
        }
        let _ = writeln!(out, "RESULT {}", if self.all_passed() { "PASS" } else { "FAIL" });
        out
    }

    pub fn write(&self, path: &Path, digits: usize) -> Result<()> {
        fs::write(path, self.render(digits)).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })
    }
}
