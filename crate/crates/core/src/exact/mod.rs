//! Exact arithmetic substrate: big rationals, dense polynomials, rational
//! functions and residue-based partial fractions.

mod combinat;
mod factored;
pub mod linalg;
mod partial_fraction;
mod poly;
mod ratfun;

pub use combinat::{
    binom, harmonic, lcm_upto, neg_pochhammer_poly, pochhammer_poly, HarmonicTable,
};
pub use factored::FactoredRatFun;
pub use partial_fraction::{partial_fraction, reassemble, PartialFraction, Pole, PoleTerm};
pub use poly::Poly;
pub use ratfun::RatFun;

pub use num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}
