//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator {poly} vanishes at delta = {at}")]
    PoleAtDelta { poly: String, at: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("identity `{identity}` uses a second product, which this algebra lacks")]
    MissingProduct { identity: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("combination `{which}` is undefined at delta = {delta}")]
    ExcludedDelta { which: String, delta: String },

    #[error("unsupported dimension {0}: exact simplicity test needs dimension 2")]
    UnsupportedDimension(usize),

    #[error("algebra is not commutative and associative: {0}")]
    NotCommutativeAssociative(String),

    #[error("map is not a {delta}-derivation: fails on (e{i}, e{j})")]
    NotADerivation { delta: String, i: usize, j: usize },

    #[error("not a {delta}-Novikov-Poisson algebra: {detail}")]
    NotNovikovPoisson { delta: String, detail: String },

    #[error("delta mismatch: {left} vs {right}")]
    DeltaMismatch { left: String, right: String },

    #[error("derivations do not commute")]
    DerivationsDoNotCommute,

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("degree {degree} exceeds the cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("delta = {0} is excluded for this computation")]
    DeltaExcluded(String),

    #[error("parameter {param} = {value} is excluded for fixture {fixture}")]
    ExcludedParameter {
        fixture: String,
        param: String,
        value: String,
    },

    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}
