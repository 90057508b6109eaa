use thiserror::Error;

/// Errors surfaced by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Malformed or inconsistent input (dimension mismatch, odd degree sum, bad syntax).
    #[error("input error: {0}")]
    Input(String),

    /// Edge-list or spec text that failed to parse, with a 1-based line number.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Arguments outside the domain of a formula (e.g. `n < 3`, `lambda <= 0`).
    #[error("domain error: {0}")]
    Domain(String),

    /// A theorem hypothesis the computation relies on does not hold.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// A Monte Carlo trial failed; carries the trial index.
    #[error("trial {index}: {source}")]
    Trial {
        index: u64,
        #[source]
        source: Box<Error>,
    },

    /// An internal consistency check failed.
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit code for this error class: 1 input, 2 domain/hypothesis, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Parse { .. } => 1,
            Error::Domain(_) | Error::Hypothesis(_) => 2,
            Error::Trial { source, .. } => source.exit_code(),
            Error::Invariant(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
