use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed algebra file; line and column are 1-based.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("path length bound {0} exceeded; the ideal is not admissible or the bound is too small")]
    LengthBound(usize),

    /// The caller supplied something unusable (bad label, wrong algebra, ...).
    #[error("{0}")]
    Input(String),

    /// A structural invariant failed to hold; this is a bug, not an input error.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Invariant(_))
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Invariant(format!($($msg)+)));
        }
    };
}
pub(crate) use ensure;
