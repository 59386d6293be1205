use super::{BigInt, PoleTerm, Poly, RatFun, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// `scale * cofactor(t) * prod (t - root)^exponent`, with integer exponents of
/// either sign. Linear factors cancel as they are multiplied in, so the
/// product is kept free of common linear factors; `cofactor` is assumed to
/// share no root with the listed factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRatFun {
    scale: Rational,
    factors: BTreeMap<Rational, i32>,
    cofactor: Poly,
}

impl FactoredRatFun {
    pub fn constant(scale: Rational) -> Self {
        Self {
            scale,
            factors: BTreeMap::new(),
            cofactor: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn cofactor(&self) -> &Poly {
        &self.cofactor
    }

    /// Factors with their (nonzero) exponents, ordered by root.
    pub fn factors(&self) -> impl Iterator<Item = (&Rational, i32)> {
        self.factors.iter().map(|(r, &e)| (r, e))
    }

    pub fn exponent_at(&self, root: &Rational) -> i32 {
        self.factors.get(root).copied().unwrap_or(0)
    }

    /// Multiply by `(t - root)^exponent`.
    pub fn mul_root(mut self, root: Rational, exponent: i32) -> Self {
        if exponent == 0 {
            return self;
        }
        let e = self.factors.entry(root).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.factors.retain(|_, e| *e != 0);
        }
        self
    }

    /// Multiply by `(t + shift)^exponent`.
    pub fn mul_shift(self, shift: Rational, exponent: i32) -> Self {
        self.mul_root(-shift, exponent)
    }

    /// Multiply by `(slope * t + offset)^exponent`; `slope` must be nonzero.
    pub fn mul_affine(mut self, slope: Rational, offset: Rational, exponent: i32) -> Self {
        let root = -(&offset / &slope);
        self.scale *= pow_signed(&slope, exponent);
        self.mul_root(root, exponent)
    }

    /// Multiply by `((t + shift)_n)^exponent`.
    pub fn mul_pochhammer(self, shift: Rational, n: usize, exponent: i32) -> Self {
        (0..n).fold(self, |acc, l| {
            acc.mul_shift(&shift + Rational::from_integer(BigInt::from(l)), exponent)
        })
    }

    /// Multiply by `((shift - t)_n)^exponent`.
    pub fn mul_neg_pochhammer(mut self, shift: Rational, n: usize, exponent: i32) -> Self {
        // (shift - t + l) = -(t - (shift + l))
        if (n as i64 * exponent as i64) % 2 != 0 {
            self.scale = -self.scale;
        }
        (0..n).fold(self, |acc, l| {
            acc.mul_root(&shift + Rational::from_integer(BigInt::from(l)), exponent)
        })
    }

    pub fn mul_cofactor(mut self, p: &Poly) -> Self {
        self.cofactor = &self.cofactor * p;
        self
    }

    pub fn mul_scalar(mut self, c: &Rational) -> Self {
        self.scale *= c;
        self
    }

    pub fn mul(mut self, other: &FactoredRatFun) -> Self {
        self.scale *= &other.scale;
        self.cofactor = &self.cofactor * &other.cofactor;
        for (r, &e) in &other.factors {
            self = self.mul_root(r.clone(), e);
        }
        self
    }

    fn numerator_factors(&self) -> Poly {
        self.factors
            .iter()
            .filter(|(_, &e)| e > 0)
            .fold(Poly::one(), |acc, (r, &e)| {
                &acc * &Poly::linear(-r).pow(e as u32)
            })
    }

    fn denominator_factors(&self) -> Poly {
        self.factors
            .iter()
            .filter(|(_, &e)| e < 0)
            .fold(Poly::one(), |acc, (r, &e)| {
                &acc * &Poly::linear(-r).pow((-e) as u32)
            })
    }

    /// Expand into a (canonical, when the cofactor has no listed root) RatFun.
    pub fn to_ratfun(&self) -> RatFun {
        let num = (&self.numerator_factors() * &self.cofactor).scale(&self.scale);
        RatFun::new(num, self.denominator_factors()).expect("monic product is nonzero")
    }

    /// Poles with their orders, ordered by location.
    pub fn poles(&self) -> Vec<(Rational, u32)> {
        self.factors
            .iter()
            .filter(|(_, &e)| e < 0)
            .map(|(r, &e)| (r.clone(), (-e) as u32))
            .collect()
    }

    /// Degree of numerator minus degree of denominator.
    pub fn degree_at_infinity(&self) -> i64 {
        let lin: i64 = self.factors.values().map(|&e| e as i64).sum();
        lin + self.cofactor.degree().map_or(0, |d| d as i64)
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        let mut acc = &self.scale * self.cofactor.eval(t);
        for (r, &e) in &self.factors {
            let base = t - r;
            if base.is_zero() {
                if e < 0 {
                    return Err(Error::Pole(t.clone()));
                }
                return Ok(Rational::zero());
            }
            acc *= pow_signed(&base, e);
        }
        Ok(acc)
    }

    /// Exact derivative. For `f = s C(t) prod L_i^{m_i}` this is
    /// `s prod L_i^{m_i - 1} [C'(t) prod L_i + C(t) sum_i m_i prod_{j != i} L_j]`,
    /// which is already free of common factors with its denominator.
    pub fn derivative(&self) -> RatFun {
        let roots: Vec<(&Rational, i32)> = self.factors.iter().map(|(r, &e)| (r, e)).collect();
        let lins: Vec<Poly> = roots
            .iter()
            .map(|(r, _)| Poly::linear(-(*r).clone()))
            .collect();
        let all = lins.iter().fold(Poly::one(), |acc, l| &acc * l);
        let mut sum = Poly::zero();
        for (i, (_, m)) in roots.iter().enumerate() {
            let others = lins
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .fold(Poly::one(), |acc, (_, l)| &acc * l);
            sum = &sum + &others.scale(&Rational::from_integer(BigInt::from(*m)));
        }
        let bracket = &(&self.cofactor.derivative() * &all) + &(&self.cofactor * &sum);
        let mut num = bracket.scale(&self.scale);
        let mut den = Poly::one();
        for ((_, m), l) in roots.iter().zip(&lins) {
            let e = m - 1;
            if e > 0 {
                num = &num * &l.pow(e as u32);
            } else if e < 0 {
                den = &den * &l.pow((-e) as u32);
            }
        }
        RatFun::new(num, den).expect("monic product is nonzero")
    }

    /// Partial fraction terms at every pole (ascending location), read off
    /// the factored form: with `g = (t-p)^m f`, the double coefficient is
    /// `-g(p)` and the simple one `g'(p)` (or `g(p)` when `m = 1`).
    pub fn pole_terms(&self) -> Result<Vec<PoleTerm>> {
        if self.degree_at_infinity() >= 0 {
            let den = self.poles().iter().map(|(_, o)| *o as usize).sum();
            let lin: usize = self
                .factors
                .values()
                .filter(|&&e| e > 0)
                .map(|&e| e as usize)
                .sum();
            let num = lin + self.cofactor.degree().unwrap_or(0);
            return Err(Error::Improper { num, den });
        }
        let mut out = Vec::new();
        for (p, order) in self.poles() {
            if order > 2 {
                return Err(Error::PoleOrder { location: p, order });
            }
            let mut prod = self.scale.clone();
            let mut log_sum = Rational::zero();
            for (r, &e) in &self.factors {
                if *r == p {
                    continue;
                }
                let d = &p - r;
                prod *= pow_signed(&d, e);
                log_sum += Rational::from_integer(BigInt::from(e)) / d;
            }
            let c = self.cofactor.eval(&p);
            let g = &prod * &c;
            let (simple, double) = if order == 2 {
                let dg = &prod * (self.cofactor.derivative().eval(&p) + &c * &log_sum);
                (dg, -g)
            } else {
                (g, Rational::zero())
            };
            out.push(PoleTerm {
                location: p,
                order,
                simple,
                double,
            });
        }
        Ok(out)
    }

    /// `f'/f` as a canonical RatFun.
    pub fn log_derivative(&self) -> Result<RatFun> {
        if self.scale.is_zero() || self.cofactor.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let mut acc = RatFun::new(self.cofactor.derivative(), self.cofactor.clone())?;
        for (r, &e) in &self.factors {
            let term = RatFun::new(
                Poly::constant(Rational::from_integer(BigInt::from(e))),
                Poly::linear(-r),
            )?;
            acc = &acc + &term;
        }
        Ok(acc.canonical())
    }
}

fn pow_signed(base: &Rational, e: i32) -> Rational {
    let p = num_traits::pow(base.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}
