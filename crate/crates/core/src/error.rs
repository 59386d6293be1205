use crate::exact::Rational;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rational function has a pole at t = {0}")]
    Pole(Rational),
    #[error("operation requires a nonzero function")]
    ZeroFunction,
    #[error("denominator polynomial is zero")]
    ZeroDenominator,
    #[error("rational function is not proper (deg num = {num}, deg den = {den})")]
    Improper { num: usize, den: usize },
    #[error("denominator does not split over the declared poles (leftover degree {leftover})")]
    UndeclaredPole { leftover: usize },
    #[error("declared pole at {location} of order {order} is not a factor of the denominator")]
    PoleOrder { location: Rational, order: u32 },
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("index n = {n} is outside the supported range (need n >= {min})")]
    IndexRange { n: u64, min: u64 },
    #[error("residues do not sum to zero (sum = {sum}); the function is not O(t^-2) at infinity")]
    ResidueSum { sum: Rational },
    #[error("closed-form coefficient disagrees with the residue at k = {k}")]
    ClosedFormMismatch { k: usize },
    #[error("linear system is singular or underdetermined")]
    Singular,
    #[error("fitted coefficients fail held-out verification at n = {n}")]
    HeldOut { n: u64 },
    #[error("no rational fit up to total degree {max_degree}")]
    NoFit { max_degree: usize },
    #[error("not enough sequence terms: have {have}, need {need}")]
    InsufficientTerms { have: usize, need: usize },
    #[error("division by zero in sequence at index {index}")]
    ZeroTerm { index: u64 },
    #[error("cross-determinant vanishes at index {index}")]
    ZeroCrossDeterminant { index: usize },
    #[error("equivalence scale factor c_{index} is zero or c_0 != 1")]
    BadScale { index: usize },
    #[error("precision cap of {cap} digits reached without meeting the accuracy target")]
    PrecisionCap { cap: u32 },
    #[error("value is not strictly positive at working precision")]
    NotPositive,
    #[error("divisor enclosure contains zero")]
    ContainsZero,
}
