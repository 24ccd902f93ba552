use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("inversion of zero in F_{0}")]
    ZeroInverse(u64),

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u64, right: u64 },

    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },

    #[error("expected a point of length {expected}, got {got}")]
    PointLength { expected: usize, got: usize },

    #[error("malformed branching program: {0}")]
    Structure(String),

    #[error("{what}: estimated size {estimate} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        estimate: u128,
        limit: u128,
    },

    #[error("program is not k-pass: {0}")]
    NotKPass(String),

    #[error("gap bound violated: prefix of length {prefix} has {gaps} gaps, more than {bound}")]
    GapViolation {
        prefix: usize,
        gaps: usize,
        bound: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid index sets: {0}")]
    InvalidPartition(String),

    #[error("hitting set missed a nonzero restriction at iteration {iteration}")]
    HittingSetMiss { iteration: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid argument: {0}")]
    Argument(String),
}
