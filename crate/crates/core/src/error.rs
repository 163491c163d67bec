use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("invalid part specification: {0}")]
    InvalidSpec(String),
    #[error("domain: {0}")]
    Domain(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("integrality: {0}")]
    Integrality(String),
    #[error("positivity required: {0}")]
    PositivityRequired(String),
    #[error("sequence window too short: need {needed}, have {have}")]
    WindowTooShort { needed: usize, have: usize },
    #[error("budget exceeded: {work} units of work exceed the budget of {budget}; try empirical mode")]
    BudgetExceeded { work: u128, budget: u128 },
    #[error("degenerate second-order term")]
    DegenerateSecondOrder,
    #[error("criterion inapplicable: {0}")]
    CriterionInapplicable(String),
    #[error("series: {0}")]
    Series(String),
    #[error("parse: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
