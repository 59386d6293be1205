use super::{Poly, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Quotient of two polynomials. The denominator is kept monic; common factors
/// are removed only by [`RatFun::canonical`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let lead = den.leading().recip();
        Ok(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n < d,
            (Some(_), None) => unreachable!("denominator is never zero"),
        }
    }

    /// Remove the polynomial gcd of numerator and denominator.
    pub fn canonical(&self) -> Self {
        if self.num.is_zero() {
            return Self::from_poly(Poly::zero());
        }
        let g = self.num.gcd(&self.den);
        if g.degree() == Some(0) {
            return self.clone();
        }
        let (num, _) = self.num.div_rem(&g);
        let (den, _) = self.den.div_rem(&g);
        Self::new(num, den).expect("gcd quotient of a nonzero denominator")
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        let d = self.den.eval(t);
        if !d.is_zero() {
            return Ok(self.num.eval(t) / d);
        }
        let c = self.canonical();
        let d = c.den.eval(t);
        if d.is_zero() {
            return Err(Error::Pole(t.clone()));
        }
        Ok(c.num.eval(t) / d)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(num, &self.den * &self.den).expect("square of a nonzero denominator")
    }

    /// `f'/f`, canonicalized.
    pub fn log_derivative(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Ok(Self::new(num, &self.num * &self.den)?.canonical())
    }

    /// Exact identity test by cross multiplication.
    pub fn same_function(&self, other: &RatFun) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFun::new(num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}
