use thiserror::Error;

use crate::field::Field;
use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("multiplication is not associative")]
    NotAssociative,
    #[error("twisting map is not an algebra endomorphism")]
    NotEndomorphism,
    #[error("{0} is not invertible")]
    Singular(String),
    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        report: Option<Box<CheckReport>>,
    },
    #[error("characteristic 2 has no inverse of 2")]
    CharacteristicTwo,
    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("no constraint registered for {0}")]
    MissingEntry(String),
    #[error("map does not satisfy the classical Yang-Baxter equation")]
    ClassicalYbeFails,
    #[error("twisting map does not commute with the braiding map")]
    CompatibilityFails,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn dim(msg: impl Into<String>) -> Error {
        Error::Dimension(msg.into())
    }

    pub(crate) fn precondition(what: impl Into<String>, report: Option<CheckReport>) -> Error {
        Error::Precondition {
            what: what.into(),
            report: report.map(Box::new),
        }
    }
}
