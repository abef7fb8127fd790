use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by the numerical modules and the report writers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("quantum number must be >= {min}, got {got}")]
    QuantumNumber { got: i64, min: i64 },

    #[error("state is not normalized on the well interval (norm = {norm:.9})")]
    NotNormalized { norm: f64 },

    #[error("aliasing: density {edge_density:.3e} at the box edge exceeds {threshold:.1e}")]
    Aliasing { edge_density: f64, threshold: f64 },

    #[error("grid spacing {spacing:.4e} exceeds the limit {limit:.4e} (magnetic length / 8)")]
    Resolution { spacing: f64, limit: f64 },

    #[error("far-field map needs t > 0")]
    ZeroTime,

    #[error("table row {row} has {got} fields, header has {expected}")]
    RaggedTable { row: usize, got: usize, expected: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            value,
            reason: "must be positive and finite",
        })
    }
}
