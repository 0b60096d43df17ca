use thiserror::Error;

/// Errors raised across the library.
///
/// Every variant maps onto one of the CLI exit classes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus {0} is too small, surfaces need genus at least 2")]
    GenusTooSmall(usize),
    #[error("bad letter {0:?}")]
    BadLetter(String),
    #[error("the word represents the trivial element")]
    TrivialClass,
    #[error("representation solve failed after {0} attempts")]
    SolveFailed(usize),
    #[error("reduction budget of {0} moves exceeded")]
    ReductionBudgetExceeded(usize),
    #[error("expansion budget exceeded (depth {0})")]
    ExpansionBudgetExceeded(usize),
    #[error("curve {0} is not simple")]
    NotSimple(String),
    #[error("image of simple curve {0} is not simple")]
    NotSimpleImage(String),
    #[error("index {index} out of range, expected one of 0..{count}")]
    BadIndex { index: usize, count: usize },
    #[error("components {0} and {1} intersect")]
    NotDisjoint(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: usize, found: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Exit status used by the command line front end: 2 for input errors,
    /// 3 for budget, solver and geometry failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SolveFailed(_)
            | Error::ReductionBudgetExceeded(_)
            | Error::ExpansionBudgetExceeded(_)
            | Error::DegenerateGeometry(_)
            | Error::NotSimpleImage(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
