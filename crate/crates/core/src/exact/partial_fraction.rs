use super::{BigInt, Poly, RatFun, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;

/// A declared pole of a rational function; `order` is 1 or 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pole {
    pub location: Rational,
    pub order: u32,
}

impl Pole {
    pub fn new(location: Rational, order: u32) -> Self {
        assert!(
            (1..=2).contains(&order),
            "only simple and double poles are supported"
        );
        Self { location, order }
    }
}

/// Local expansion at one pole: `simple/(t - p) - double/(t - p)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub location: Rational,
    pub order: u32,
    pub simple: Rational,
    pub double: Rational,
}

/// Expand a proper rational function over declared simple/double poles.
///
/// The double-pole coefficient is `-((t-p)^2 f)(p)`; the simple one is
/// `((t-p)^2 f)'(p)` (or `((t-p) f)(p)` for a simple pole). If the
/// denominator does not split over the declared list, common factors are
/// removed once and the split is retried.
pub fn partial_fraction(f: &RatFun, poles: &[Pole]) -> Result<Vec<PoleTerm>> {
    if !f.is_proper() {
        return Err(Error::Improper {
            num: f.num().degree().unwrap_or(0),
            den: f.den().degree().unwrap_or(0),
        });
    }
    match split(f, poles) {
        Err(Error::UndeclaredPole { .. }) | Err(Error::PoleOrder { .. }) => {
            split(&f.canonical(), poles)
        }
        other => other,
    }
}

fn split(f: &RatFun, poles: &[Pole]) -> Result<Vec<PoleTerm>> {
    let mut rest = f.den().clone();
    for pole in poles {
        for _ in 0..pole.order {
            let (q, r) = rest.div_linear(&pole.location);
            if !r.is_zero() {
                return Err(Error::PoleOrder {
                    location: pole.location.clone(),
                    order: pole.order,
                });
            }
            rest = q;
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::UndeclaredPole {
            leftover: rest.degree().unwrap_or(0),
        });
    }
    let num = f.num();
    let dnum = num.derivative();
    poles
        .iter()
        .map(|pole| {
            let p = &pole.location;
            let mut cof = f.den().clone();
            for _ in 0..pole.order {
                cof = cof.div_linear(p).0;
            }
            let d = cof.eval(p);
            let n = num.eval(p);
            if pole.order == 1 {
                return Ok(PoleTerm {
                    location: p.clone(),
                    order: 1,
                    simple: n / d,
                    double: Rational::zero(),
                });
            }
            let dd = cof.derivative().eval(p);
            let simple = (dnum.eval(p) * &d - &n * dd) / (&d * &d);
            Ok(PoleTerm {
                location: p.clone(),
                order: 2,
                simple,
                double: -(n / d),
            })
        })
        .collect()
}

/// Sum the local expansions back into a single rational function.
pub fn reassemble(terms: &[PoleTerm]) -> RatFun {
    let den = terms.iter().fold(Poly::one(), |acc, t| {
        &acc * &Poly::linear(-&t.location).pow(t.order)
    });
    let mut num = Poly::zero();
    for t in terms {
        let once = den.div_linear(&t.location).0;
        num = &num + &once.scale(&t.simple);
        if t.order == 2 {
            let twice = once.div_linear(&t.location).0;
            num = &num - &twice.scale(&t.double);
        }
    }
    RatFun::new(num, den).expect("product of monic factors")
}

/// Partial fractions over the consecutive poles `t = -(k+1)`:
/// `f(t) = sum_k a_k/(t+k+1) - sum_k b_k/(t+k+1)^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFraction {
    pub n: u64,
    /// Simple-pole coefficients, `k = 0..a.len()`.
    pub a: Vec<Rational>,
    /// Double-pole coefficients, `k = 0..b.len()`; may be shorter than `a`.
    pub b: Vec<Rational>,
}

impl PartialFraction {
    /// Collect terms whose poles are exactly `-1, -2, ..., -m` in order.
    pub fn from_terms(n: u64, terms: &[PoleTerm]) -> Self {
        let mut a = Vec::with_capacity(terms.len());
        let mut b = Vec::with_capacity(terms.len());
        for (k, t) in terms.iter().enumerate() {
            debug_assert_eq!(
                t.location,
                -Rational::from_integer(BigInt::from(k as i64 + 1))
            );
            a.push(t.simple.clone());
            b.push(t.double.clone());
        }
        while b.last().is_some_and(Zero::is_zero) && terms[b.len() - 1].order == 1 {
            b.pop();
        }
        Self { n, a, b }
    }

    pub fn residue_sum(&self) -> Rational {
        self.a.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn to_terms(&self) -> Vec<PoleTerm> {
        self.a
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let double = self.b.get(k).cloned().unwrap_or_else(Rational::zero);
                PoleTerm {
                    location: -Rational::from_integer(BigInt::from(k as i64 + 1)),
                    order: if k < self.b.len() { 2 } else { 1 },
                    simple: a.clone(),
                    double,
                }
            })
            .collect()
    }

    pub fn to_ratfun(&self) -> RatFun {
        reassemble(&self.to_terms())
    }

    /// `A(z) = sum_k a_k z^k`.
    pub fn a_poly(&self) -> Poly {
        Poly::from_coeffs(self.a.clone())
    }

    /// `B(z) = sum_k b_k z^k`.
    pub fn b_poly(&self) -> Poly {
        Poly::from_coeffs(self.b.clone())
    }

    /// `sum_j a_j/(x+j+1) - sum_j b_j/(x+j+1)^2`, the moment `int_0^1 F(u) u^x du`.
    pub fn first_moment(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (j, a) in self.a.iter().enumerate() {
            acc += a / (x + Rational::from_integer(BigInt::from(j as i64 + 1)));
        }
        for (j, b) in self.b.iter().enumerate() {
            let s = x + Rational::from_integer(BigInt::from(j as i64 + 1));
            acc -= b / (&s * &s);
        }
        acc
    }

    /// `-sum_j a_j/(x+j+1)^2 + 2 sum_j b_j/(x+j+1)^3`, the moment of `F log u`.
    pub fn second_moment(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (j, a) in self.a.iter().enumerate() {
            let s = x + Rational::from_integer(BigInt::from(j as i64 + 1));
            acc -= a / (&s * &s);
        }
        let two = Rational::from_integer(BigInt::from(2));
        for (j, b) in self.b.iter().enumerate() {
            let s = x + Rational::from_integer(BigInt::from(j as i64 + 1));
            acc += &two * b / (&s * &s * &s);
        }
        acc
    }
}
