//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by mesh construction, parsing and numerical kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Syntax error while parsing a polyMesh file.
    #[error("parse error in {file} at line {line}: {message}")]
    Parse {
        file: String,
        line: usize,
        message: String,
    },

    /// A structural mesh invariant does not hold.
    #[error("mesh validation failed: {0}")]
    Validation(String),

    /// Degenerate or inconsistent geometry.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// Integer overflow in an index computation.
    #[error("index overflow in {0}")]
    Overflow(&'static str),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
