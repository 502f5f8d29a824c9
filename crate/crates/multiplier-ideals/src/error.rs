use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Parse errors (`Parse`) are distinguished from domain errors (everything
/// else) so that callers such as the command-line front end can map them to
/// different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("generators have mixed dimensions")]
    MixedDimensions,

    #[error("the zero ideal has no Newton polyhedron or multiplier ideals")]
    ZeroIdeal,

    #[error("the unit ideal has no finite threshold or jumping numbers")]
    UnitIdeal,

    #[error("exponent must be nonnegative, got {0}")]
    NegativeExponent(String),

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("symbolic power exponent must be at least 1, got {0}")]
    NonpositivePower(i64),

    #[error("Skoda extension requires {requirement}, got {found}")]
    SkodaRange {
        requirement: &'static str,
        found: String,
    },
}

impl Error {
    /// True for errors caused by unparseable input rather than by a value
    /// outside an operation's domain.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
