//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the verification engine.
#[derive(Debug, Error)]
pub enum Error {
    /// A theta-sum exponent evaluated to a non-integer rational for a
    /// summation index whose binomial is nonzero.
    #[error("theta-sum exponent is not an integer at j = {j}")]
    NonIntegerExponent { j: i64 },

    /// A theta-sum exponent evaluated to a negative integer for a
    /// summation index whose binomial is nonzero.
    #[error("theta-sum exponent is negative ({exp}) at j = {j}")]
    NegativeExponent { j: i64, exp: i64 },

    /// A truncated series was requested from a Laurent polynomial with
    /// terms below q^0.
    #[error("cannot truncate a Laurent polynomial with minimum exponent {min_exp} < 0")]
    NegativeMinExp { min_exp: i64 },

    /// Series inversion requires constant term +1 or -1.
    #[error("series constant term {constant} is not a unit")]
    NonUnitConstant { constant: String },

    /// A multi-sum spec whose term exponents do not grow along an index;
    /// enumeration cannot be pruned.
    #[error("multi-sum over `{id}` has no usable pruning bound on index {index}")]
    PruningBoundUnavailable { id: String, index: usize },

    /// Identity id not present in the registry.
    #[error("unknown identity `{id}`")]
    UnknownIdentity { id: String },

    /// A required parameter was not supplied.
    #[error("identity `{id}` requires parameter `{param}`")]
    MissingParam { id: String, param: String },

    /// A parameter value violates the identity's constraints.
    #[error("invalid parameter for `{id}`: {reason}")]
    InvalidParam { id: String, reason: String },

    /// Polynomial text that does not match the rendering grammar.
    #[error("cannot parse polynomial text: {reason}")]
    PolyParse { reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
