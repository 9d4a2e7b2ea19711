use thiserror::Error;

use crate::homology::HomologyClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: i64 },

    #[error("divisor power {0} is not supported (expected 0, 1 or 2)")]
    UnsupportedPower(u32),

    #[error("m must be nonzero: classes with A13 = A23 = 0 have obstructed moduli")]
    ZeroM,

    #[error("matrix shape invalid: {0}")]
    Shape(String),

    #[error("homomorphism is not a lattice homomorphism (commutativity or integrality fails)")]
    InvalidHom,

    #[error("homomorphism is not reduced (dp h1, dp h2 must vanish)")]
    NotReduced,

    #[error("dp h3 = 0: tau1 is undetermined and the moduli space is obstructed")]
    Obstructed,

    #[error("class {0} not representable by tori (Plücker)")]
    Plucker(HomologyClass),

    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(i64),

    #[error("three-class has nonzero E124 component")]
    NonzeroE124,

    #[error("{d} does not divide gcd(m, n) = {g}")]
    NotADivisor { d: i64, g: i64 },

    #[error("dq h1 = 0: the translation constant has no n2 solution")]
    DegenerateDq,

    #[error("grid must have at least 2 points per side, got {0}")]
    GridTooSmall(usize),

    #[error("label out of range: {0}")]
    LabelRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
