//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown function head `{0}`")]
    UnknownHead(String),

    #[error("no derivative rule for `{0}`")]
    UnknownDerivativeRule(String),

    #[error("no series rule for `{0}`")]
    NoSeriesRule(String),

    #[error("series expansion not supported here: {0}")]
    SeriesUnsupported(String),

    #[error("cannot evaluate `{0}` exactly at the expansion point")]
    NonExactConstant(String),

    #[error("mixing distinct quadratic extensions (sqrt({0}) and sqrt({1})) is not supported")]
    MixedExtensions(i64, i64),

    #[error("no simple differential equation of order <= {max_order} found")]
    NoDEFound { max_order: u32 },

    #[error("intermediate polynomial degree exceeded the guard ({guard}) at order {order}")]
    DegreeGuardExceeded { guard: u32, order: u32 },

    #[error("recurrence is not valid for all integers k; apply extend_validity first")]
    ValidityNotForAllK,

    #[error("denominator factor of degree >= 3 (or with symbolic discriminant) not supported")]
    DenominatorFactorUnsupported,

    #[error("characteristic roots outside the supported fields")]
    CharacteristicRootsUnsupported,

    #[error("term is not a sum of hypergeometric components: {0}")]
    NonHypergeometricComponent(String),

    #[error("no recurrence of order <= {max_order} with coefficient degree <= {max_degree} found")]
    NoRecurrenceFound { max_order: u32, max_degree: u32 },

    #[error("closure basis dimension exceeded the cap ({0})")]
    ClosureBoundExceeded(usize),

    #[error("series is not of an implemented type")]
    NotOfImplementedType(Box<NotImplementedInfo>),

    #[error("the zero function has an empty series")]
    ZeroFunction,

    #[error("{stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },

    #[error("{0}")]
    Unsupported(String),
}

/// Attached diagnostics when the series driver exhausts its strategies.
#[derive(Debug, Clone, Default)]
pub struct NotImplementedInfo {
    pub ode: Option<crate::ode::LinearODE>,
    pub recurrence: Option<crate::recurrence::LinearRecurrence>,
    pub note: String,
}

impl Error {
    pub fn stage(stage: &str, e: Error) -> Error {
        Error::Stage { stage: stage.to_string(), source: Box::new(e) }
    }
}
