//! Decimal fixed-point balls: `mid/10^scale` with an absolute error of at
//! most `rad/10^scale`.

use crate::error::{Error, Result};
use crate::exact::{BigInt, Rational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub(crate) fn pow10(k: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// `ceil(a/b)` for `a >= 0`, `b > 0`.
pub(crate) fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        q
    } else {
        q + 1
    }
}

fn digit_len(v: &BigInt) -> u32 {
    if v.is_zero() {
        1
    } else {
        v.magnitude().to_str_radix(10).len() as u32
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPrecisionValue {
    mid: BigInt,
    rad: BigInt,
    scale: u32,
}

impl FixedPrecisionValue {
    pub fn new(mid: BigInt, rad: BigInt, scale: u32) -> Self {
        Self {
            mid,
            rad: rad.abs(),
            scale,
        }
    }

    pub fn zero(scale: u32) -> Self {
        Self::new(BigInt::zero(), BigInt::zero(), scale)
    }

    pub fn from_int(v: &BigInt, scale: u32) -> Self {
        Self::new(v * pow10(scale), BigInt::zero(), scale)
    }

    /// Nearest-below decimal of `r`; exact when `r` has a terminating
    /// expansion within `scale` digits.
    pub fn from_rational(r: &Rational, scale: u32) -> Self {
        let num = r.numer() * pow10(scale);
        let (q, rem) = num.div_mod_floor(r.denom());
        let rad = if rem.is_zero() {
            BigInt::zero()
        } else {
            BigInt::one()
        };
        Self::new(q, rad, scale)
    }

    pub fn mid(&self) -> &BigInt {
        &self.mid
    }

    pub fn rad(&self) -> &BigInt {
        &self.rad
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    fn at(&self, v: BigInt) -> Rational {
        Rational::new(v, pow10(self.scale))
    }

    pub fn midpoint(&self) -> Rational {
        self.at(self.mid.clone())
    }

    pub fn lower(&self) -> Rational {
        self.at(&self.mid - &self.rad)
    }

    pub fn upper(&self) -> Rational {
        self.at(&self.mid + &self.rad)
    }

    pub fn radius(&self) -> Rational {
        self.at(self.rad.clone())
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.lower() <= *r && *r <= self.upper()
    }

    pub fn is_positive(&self) -> bool {
        self.mid > self.rad
    }

    pub fn is_negative(&self) -> bool {
        -&self.mid > self.rad
    }

    /// `Some(sign)` when the enclosure excludes zero.
    pub fn sign(&self) -> Option<i32> {
        if self.is_positive() {
            Some(1)
        } else if self.is_negative() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn rescale(&self, scale: u32) -> Self {
        match scale.cmp(&self.scale) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => {
                let f = pow10(scale - self.scale);
                Self::new(&self.mid * &f, &self.rad * &f, scale)
            }
            Ordering::Less => {
                let f = pow10(self.scale - scale);
                let (q, r) = self.mid.div_mod_floor(&f);
                let slack = u8::from(!r.is_zero());
                Self::new(q, ceil_div(&self.rad, &f) + slack, scale)
            }
        }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let s = self.scale.max(other.scale);
        (self.rescale(s), other.rescale(s))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        Self::new(&a.mid + &b.mid, &a.rad + &b.rad, a.scale)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.mid, self.rad.clone(), self.scale)
    }

    pub fn abs(&self) -> Self {
        Self::new(self.mid.abs(), self.rad.clone(), self.scale)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mid = &self.mid * &other.mid;
        let rad =
            self.mid.abs() * &other.rad + other.mid.abs() * &self.rad + &self.rad * &other.rad;
        let full = Self::new(mid, rad, self.scale + other.scale);
        full.rescale(self.scale.max(other.scale))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let (x, y) = self.aligned(other);
        let my = y.mid.abs();
        if my <= y.rad {
            return Err(Error::ContainsZero);
        }
        let f = pow10(x.scale);
        let mid = (&x.mid * &f).div_floor(&y.mid);
        let num = (&x.rad * &my + x.mid.abs() * &y.rad) * &f;
        let den = &my * (&my - &y.rad);
        Ok(Self::new(mid, ceil_div(&num, &den) + 1, x.scale))
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self::new(&self.mid * k, &self.rad * k.abs(), self.scale)
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "division by zero");
        let (q, r) = self.mid.div_mod_floor(k);
        let slack = u8::from(!r.is_zero());
        Self::new(q, ceil_div(&self.rad, &k.abs()) + slack, self.scale)
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        self.mul_int(r.numer()).div_int(r.denom())
    }

    /// `rad / |mid|`, or `None` for a zero midpoint.
    pub fn relative_radius(&self) -> Option<Rational> {
        if self.mid.is_zero() {
            None
        } else {
            Some(Rational::new(self.rad.clone(), self.mid.abs()))
        }
    }

    /// Whether `rad <= |mid| * 10^-digits`.
    pub fn has_relative_digits(&self, digits: u32) -> bool {
        !self.mid.is_zero() && &self.rad * pow10(digits) <= self.mid.abs()
    }

    /// Square root; the enclosure must be strictly positive.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        let s = self.scale;
        let root = (&self.mid * pow10(s)).sqrt();
        let low = (&(&self.mid - &self.rad) * pow10(s)).sqrt();
        let rad = if self.rad.is_zero() {
            BigInt::one()
        } else if low.is_zero() {
            (&self.rad * pow10(s)).sqrt() + 2
        } else {
            ceil_div(&(&self.rad * pow10(s)), &low) + 1
        };
        Ok(Self::new(root, rad, s))
    }

    /// Decimal approximation to `f64`, good to a few ulps of the midpoint.
    pub fn to_f64(&self) -> f64 {
        self.to_scientific(17).parse().unwrap_or(f64::NAN)
    }

    fn sci_parts(&self, sig: u32) -> (bool, BigInt, i64) {
        let sig = sig.max(1);
        let neg = self.mid.is_negative();
        let m = self.mid.abs();
        if m.is_zero() {
            return (false, BigInt::zero(), 0);
        }
        let len = digit_len(&m);
        let mut exp = len as i64 - 1 - self.scale as i64;
        let mut t = if len > sig {
            let f = pow10(len - sig);
            let (q, r) = m.div_rem(&f);
            if r * 2 >= f {
                q + 1
            } else {
                q
            }
        } else {
            m * pow10(sig - len)
        };
        if digit_len(&t) > sig {
            t /= 10;
            exp += 1;
        }
        (neg, t, exp)
    }

    /// Midpoint in scientific notation with `sig` significant digits,
    /// e.g. `2.795e-153`.
    pub fn to_scientific(&self, sig: u32) -> String {
        let (neg, t, exp) = self.sci_parts(sig);
        let digits = t.to_string();
        let (head, tail) = digits.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }

    /// Whether every point of the enclosure rounds to the same `sig` digits.
    pub fn is_certain_to(&self, sig: u32) -> bool {
        let lo = Self::new(&self.mid - &self.rad, BigInt::zero(), self.scale);
        let hi = Self::new(&self.mid + &self.rad, BigInt::zero(), self.scale);
        lo.sci_parts(sig) == hi.sci_parts(sig)
    }

    /// Midpoint truncated toward zero to `places` decimals.
    pub fn to_decimal(&self, places: u32) -> String {
        let places = places.min(self.scale);
        let f = pow10(self.scale - places);
        let digits = (self.mid.abs() / f).to_string();
        let width = places as usize;
        let padded = format!("{digits:0>w$}", w = width + 1);
        let (int_part, frac) = padded.split_at(padded.len() - width);
        let sign = if self.mid.is_negative() { "-" } else { "" };
        if frac.is_empty() {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac}")
        }
    }
}

impl fmt::Display for FixedPrecisionValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} +/- {}",
            self.to_scientific(10),
            Self::new(self.rad.clone(), BigInt::zero(), self.scale).to_scientific(2)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn fp(r: Rational, s: u32) -> FixedPrecisionValue {
        FixedPrecisionValue::from_rational(&r, s)
    }

    #[test]
    fn rational_roundtrip() {
        let x = fp(rat(1, 3), 10);
        assert!(x.contains(&rat(1, 3)));
        assert_eq!(x.to_decimal(5), "0.33333");
        assert!(fp(rat(1, 4), 2).rad().is_zero());
        assert_eq!(fp(rat(-5, 4), 3).to_decimal(3), "-1.250");
    }

    #[test]
    fn arithmetic_encloses() {
        let (a, b) = (rat(2, 7), rat(-13, 11));
        let (x, y) = (fp(a.clone(), 12), fp(b.clone(), 9));
        assert!(x.add(&y).contains(&(&a + &b)));
        assert!(x.mul(&y).contains(&(&a * &b)));
        assert!(x.div(&y).unwrap().contains(&(&a / &b)));
        assert!(y.div_int(&BigInt::from(7)).contains(&(&b / int(7))));
    }

    #[test]
    fn division_by_uncertain_zero() {
        let z = FixedPrecisionValue::new(BigInt::from(1), BigInt::from(2), 3);
        assert_eq!(fp(int(1), 3).div(&z), Err(Error::ContainsZero));
    }

    #[test]
    fn sqrt_two() {
        let r = fp(int(2), 30).sqrt().unwrap();
        assert_eq!(r.to_decimal(12), "1.414213562373");
        let sq = r.mul(&r);
        assert!(sq.contains(&int(2)));
    }

    #[test]
    fn scientific() {
        let x = FixedPrecisionValue::new(BigInt::from(27949), BigInt::from(1), 157);
        assert_eq!(x.to_scientific(4), "2.795e-153");
        assert!(!x.is_certain_to(5));
        let y = FixedPrecisionValue::new(BigInt::from(99996), BigInt::zero(), 5);
        assert_eq!(y.to_scientific(4), "1.000e0");
        assert!((y.to_f64() - 0.99996).abs() < 1e-15);
    }
}
