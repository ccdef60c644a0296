use thiserror::Error;

use crate::rational::Rational;

/// Errors raised by the interpolation library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,

    #[error("invalid rational {0:?}")]
    ParseRational(String),

    #[error("interpolation data has no nodes")]
    NoNodes,

    #[error("duplicate node {0}")]
    DuplicateNode(Rational),

    #[error("node {0} has no prescribed values")]
    EmptyValues(Rational),

    #[error("the pair does not satisfy the weak interpolation conditions")]
    NotWeak,

    #[error("the denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("the denominator vanishes at node {0}")]
    DenominatorVanishesAtNode(Rational),

    #[error("the second input of the Euclidean algorithm is zero")]
    ZeroSecondInput,

    #[error("the Euclidean algorithm needs deg r0 >= deg r1 with r0 nonzero")]
    DegreeOrder,

    #[error("deg r0 = deg r1; the decomposition needs deg r0 > deg r1")]
    DegreeTie,

    #[error("the triple is not a syzygy of the trace")]
    NotASyzygy,

    #[error("row index {index} out of range (allowed 0..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("the rational function does not interpolate the data")]
    NotAnInterpolant,

    #[error("delta-degree {0} is not admissible")]
    DegreeNotAdmissible(usize),

    #[error("kappa-degree {0} is not admissible")]
    KappaNotAdmissible(usize),

    #[error("degree split d = {d} out of range (allowed 0..={max})")]
    SplitOutOfRange { d: usize, max: usize },

    #[error("parameter scan exhausted after {0} candidates")]
    ScanExhausted(usize),

    #[error("invalid parametrization: {0}")]
    InvalidParametrization(&'static str),

    #[error("no index satisfies the degree-sum condition")]
    NoCriticalIndex,
}

pub type Result<T> = std::result::Result<T, Error>;
