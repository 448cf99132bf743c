use thiserror::Error;

use crate::schur::LaurentPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing at index {index}")]
    NotWeaklyDecreasing { index: usize },

    #[error("negative part {value} at index {index}")]
    NegativePart { index: usize, value: i64 },

    #[error("beta-set entries are not strictly increasing at index {index}")]
    NotStrictlyIncreasing { index: usize },

    #[error("a symbol needs at least one component")]
    EmptySymbol,

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("common charge {charge} is smaller than the {required} parts it must hold")]
    ChargeTooSmall { charge: usize, required: usize },

    #[error("charges are not all equal: {charges:?}")]
    UnequalCharges { charges: Vec<usize> },

    #[error("abacus width {width} is too small, need at least {required}")]
    WidthTooSmall { width: usize, required: usize },

    #[error("component index {index} out of range 1..={l}")]
    IndexOutOfRange { index: usize, l: usize },

    #[error("({a},{b},{i},{j}) is not a hook")]
    NotAHook {
        a: usize,
        b: usize,
        i: usize,
        j: usize,
    },

    #[error("{a} is not a bead of component {i}")]
    NotABead { a: usize, i: usize },

    #[error("parameter {name} must be positive")]
    NonPositive { name: &'static str },

    #[error("empty range {lo}..={hi} for {name}")]
    InvalidRange {
        name: &'static str,
        lo: usize,
        hi: usize,
    },

    #[error("residue {d} out of range 0..{l}")]
    ResidueOutOfRange { d: usize, l: usize },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("not divisible, remainder {remainder}")]
    NotDivisible { remainder: Box<LaurentPoly> },

    #[error("the polynomial is zero")]
    ZeroPolynomial,

    #[error("factorization failed: {0}")]
    FactorizationFailed(String),

    #[error("divisibility failed: {0}")]
    DivisibilityFailed(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

impl Error {
    /// Short machine-readable tag, used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotWeaklyDecreasing { .. } => "NotWeaklyDecreasing",
            Error::NegativePart { .. } => "NegativePart",
            Error::NotStrictlyIncreasing { .. } => "NotStrictlyIncreasing",
            Error::EmptySymbol => "EmptySymbol",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::ChargeTooSmall { .. } => "ChargeTooSmall",
            Error::UnequalCharges { .. } => "UnequalCharges",
            Error::WidthTooSmall { .. } => "WidthTooSmall",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotAHook { .. } => "NotAHook",
            Error::NotABead { .. } => "NotABead",
            Error::NonPositive { .. } => "NonPositive",
            Error::InvalidRange { .. } => "InvalidRange",
            Error::ResidueOutOfRange { .. } => "ResidueOutOfRange",
            Error::VariableCountMismatch { .. } => "VariableCountMismatch",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotDivisible { .. } => "NotDivisible",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::FactorizationFailed(_) => "FactorizationFailed",
            Error::DivisibilityFailed(_) => "DivisibilityFailed",
            Error::UnknownTheoremId(_) => "UnknownTheoremId",
            Error::InternalInvariantViolation(_) => "InternalInvariantViolation",
        }
    }
}

pub(crate) fn check_positive(value: usize, name: &'static str) -> Result<()> {
    if value == 0 {
        Err(Error::NonPositive { name })
    } else {
        Ok(())
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        Err(Error::LengthMismatch { expected, found })
    } else {
        Ok(())
    }
}
