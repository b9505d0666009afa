use std::fmt;

use thiserror::Error;

use crate::quasidet::BoxPosition;

/// Where a partial computation broke down.
///
/// `operation` names the public entry point, `factor` the sub-expression
/// (e.g. `q^y_{zt}`), and `position` the boxed entry of the quasideterminant
/// whose inverted corner vanished, when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blame {
    pub operation: &'static str,
    pub factor: String,
    pub position: Option<BoxPosition>,
}

impl Blame {
    pub fn new(operation: &'static str, factor: impl Into<String>) -> Self {
        Blame {
            operation,
            factor: factor.into(),
            position: None,
        }
    }

    pub fn at(mut self, position: BoxPosition) -> Self {
        self.position = Some(position);
        self
    }

    /// Re-attribute to an outer operation, keeping the inner factor as a suffix.
    pub fn within(self, operation: &'static str, factor: &str) -> Self {
        let factor = if self.factor.is_empty() {
            factor.to_string()
        } else if self.factor.starts_with(factor) {
            self.factor
        } else {
            format!("{factor}: {}", self.factor)
        };
        Blame {
            operation,
            factor,
            position: self.position,
        }
    }
}

impl fmt::Display for Blame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.operation)?;
        if !self.factor.is_empty() {
            write!(f, " [{}]", self.factor)?;
        }
        if let Some(pos) = self.position {
            write!(f, " at box ({},{})", pos.row(), pos.col())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("undefined: {0}")]
    Undefined(Blame),
    #[error("degenerate coordinates: {0}")]
    DegenerateCoordinates(String),
    #[error("degenerate entry: {0}")]
    DegenerateEntry(Blame),
    #[error("degenerate: {0}")]
    Degenerate(String),
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("not conjugate: {0}")]
    NotConjugate(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for {len} columns")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid literal: {0}")]
    InvalidLiteral(String),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("gave up after {attempts} resampling attempts")]
    ResampleExhausted { attempts: u32 },
    #[error("witness failed verification: {0}")]
    WitnessInvalid(String),
}

impl Error {
    /// True for the "not defined on this input" family, as opposed to misuse.
    pub fn is_irregular(&self) -> bool {
        matches!(
            self,
            Error::ZeroInverse
                | Error::Singular(_)
                | Error::Undefined(_)
                | Error::DegenerateCoordinates(_)
                | Error::DegenerateEntry(_)
                | Error::Degenerate(_)
                | Error::DegenerateConfiguration(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
