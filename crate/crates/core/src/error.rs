use thiserror::Error;

/// Errors raised by parsing, domain validation and series preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("path is not a Dyck path: prefix of length {index} goes below the axis or the path is unbalanced")]
    NotDyck { index: usize },

    #[error("{map}: input violates domain condition: {condition}")]
    Domain {
        map: &'static str,
        condition: String,
    },

    #[error("{map}: input is not in the image of the forward map")]
    NotInImage { map: &'static str },

    #[error("{op}: precondition violated: {condition}")]
    Precondition {
        op: &'static str,
        condition: String,
    },

    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),

    #[error("no applicable theorem for pattern {0}")]
    NoApplicableTheorem(String),

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),

    #[error("internal disagreement in {what}: {detail}")]
    Disagreement { what: &'static str, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(map: &'static str, condition: impl Into<String>) -> Error {
    Error::Domain {
        map,
        condition: condition.into(),
    }
}

pub(crate) fn precondition(op: &'static str, condition: impl Into<String>) -> Error {
    Error::Precondition {
        op,
        condition: condition.into(),
    }
}
