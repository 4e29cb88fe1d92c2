use thiserror::Error;

use crate::cycle_type::CycleType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A cover model contains a type that no candidate covers.
    #[error("infeasible cover model: no candidate covers {uncoverable}")]
    Infeasible { uncoverable: CycleType },

    /// A family construction was requested outside its hypotheses.
    #[error("{provenance} is not applicable: {hypothesis}")]
    Inapplicable {
        provenance: String,
        hypothesis: String,
    },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
