use crate::exactmath::Int;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An identity that must produce an integer did not. Never rounded away.
    #[error("non-integral result: {numerator} is not divisible by {denominator}")]
    NonIntegralResult { numerator: Int, denominator: Int },

    #[error("division by zero")]
    DivisionByZero,

    #[error("a must be ≥ {min} (got {a})")]
    ParameterOutOfRange { a: u64, min: u64 },

    #[error("invalid range: a_min = {a_min}, a_max = {a_max} (need 2 ≤ a_min ≤ a_max)")]
    InvalidRange { a_min: u64, a_max: u64 },

    #[error("internal inconsistency at a = {a}: {identity} fails ({lhs} vs {rhs})")]
    InternalInconsistency {
        a: u64,
        identity: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("unknown check name `{name}`; valid names: {}", valid.join(", "))]
    UnknownCheckName {
        name: String,
        valid: Vec<&'static str>,
    },

    #[error("unknown example `{name}`; valid names: genus7, genus9")]
    UnknownExampleName { name: String },

    #[error("unknown output format `{0}`; valid formats: json, csv, markdown, plain")]
    UnknownFormat(String),
}
