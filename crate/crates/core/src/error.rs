use alloc::string::String;

use crate::parametrization::Basis;
use crate::series::Domain;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coefficient domains differ: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },

    #[error("constant term {0} is not invertible in the coefficient domain")]
    NotInvertible(String),

    #[error("cannot convert a series from {from} to {to}")]
    UnsupportedConversion { from: Domain, to: Domain },

    #[error("residue modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("negative q-shift {0} would put a pole at q = 0")]
    NegativeShift(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("enumeration is limited to n <= {limit}, got {n}")]
    EnumerationTooLarge { n: u64, limit: u64 },

    #[error("term {term}: exponent of {slot} differs from the common part by a non-integer")]
    NonIntegralExponent { term: usize, slot: Basis },

    #[error("term {term}: residual power of {slot} is not a polynomial in p")]
    NotPolynomial { term: usize, slot: Basis },

    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("square {0} is not congruent to 1 mod 24")]
    NonIntegralShift(u64),

    #[error("representative with lower-left entry c = 0 is not supported")]
    DegenerateRepresentative,

    #[error("hypothesis fails at gamma_{delta}: p_mr + p_star = {sum} < 0")]
    HypothesisFailed { delta: u64, sum: String },

    #[error("membership in the admissible tuple set has not been asserted")]
    DeltaStarNotAsserted,
}
