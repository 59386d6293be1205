//! Wronskians and second-order recurrences `alpha_n y_{n+2} + beta_n y_{n+1} + gamma_n y_n = 0`.

mod closed_form;
mod fit;

pub use closed_form::{
    apery_recurrence, n_poly, n_quadratic_has_integer_root, recurrence_closed_form_12,
    wronskian_closed_form_12,
};
pub use fit::{discover_recurrence, fit_beta, fit_wronskian, FIT_MAX_DEGREE};

use crate::error::{Error, Result};
use crate::exact::{int, Poly, Rational};
use crate::families::{approximant_unchecked, Source};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence2 {
    pub alpha: Poly,
    pub beta: Poly,
    pub gamma: Poly,
    pub valid_from: u64,
}

impl Recurrence2 {
    pub fn new(alpha: Poly, beta: Poly, gamma: Poly, valid_from: u64) -> Self {
        Self {
            alpha,
            beta,
            gamma,
            valid_from,
        }
    }

    /// Scale all three coefficients to coprime integers with `alpha` having
    /// a positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let mut content = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::from(1);
        for p in [&self.alpha, &self.beta, &self.gamma] {
            for c in p.coeffs() {
                content = content.gcd(c.numer());
                den = den.lcm(c.denom());
            }
        }
        if content.is_zero() {
            return self.clone();
        }
        let mut s = Rational::new(den, content);
        if self.alpha.leading().is_negative() {
            s = -s;
        }
        Self::new(
            self.alpha.scale(&s),
            self.beta.scale(&s),
            self.gamma.scale(&s),
            self.valid_from,
        )
    }

    /// `alpha(n) y2 + beta(n) y1 + gamma(n) y0`.
    pub fn residual(&self, n: u64, y0: &Rational, y1: &Rational, y2: &Rational) -> Rational {
        let nn = int(n as i64);
        self.alpha.eval(&nn) * y2 + self.beta.eval(&nn) * y1 + self.gamma.eval(&nn) * y0
    }

    /// `lc(alpha) t^2 + lc(beta) t + lc(gamma)`, taken at the common top degree.
    pub fn characteristic(&self) -> Poly {
        let d = [&self.alpha, &self.beta, &self.gamma]
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0);
        Poly::from_coeffs(vec![
            self.gamma.coeff(d),
            self.beta.coeff(d),
            self.alpha.coeff(d),
        ])
    }

    /// The characteristic polynomial made monic.
    pub fn characteristic_monic(&self) -> Poly {
        self.characteristic().monic()
    }
}

impl fmt::Display for Recurrence2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha_n = {}", self.alpha.display_with("n"))?;
        writeln!(f, "beta_n  = {}", self.beta.display_with("n"))?;
        write!(f, "gamma_n = {}", self.gamma.display_with("n"))
    }
}

/// `W(x, y)_n = x_n y_{n+1} - x_{n+1} y_n`.
pub fn wronskian(q_n: &Rational, p_n: &Rational, q_n1: &Rational, p_n1: &Rational) -> Rational {
    q_n * p_n1 - q_n1 * p_n
}

/// Consecutive terms `p_n`, `q_n` for `n = start, start+1, ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Terms {
    pub start: u64,
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
}

impl Terms {
    /// Terms `start..=end` of the given source. Counterexamples are built with
    /// the unchecked constructor so the second variant can be examined too.
    pub fn of(source: &Source, start: u64, end: u64) -> Result<Self> {
        let mut p = Vec::new();
        let mut q = Vec::new();
        for n in start..=end {
            let a = approximant_unchecked(source, n)?;
            p.push(a.p);
            q.push(a.q);
        }
        Ok(Self { start, p, q })
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn end(&self) -> u64 {
        self.start + self.len() as u64 - 1
    }

    pub fn q_at(&self, n: u64) -> &Rational {
        &self.q[(n - self.start) as usize]
    }

    pub fn p_at(&self, n: u64) -> &Rational {
        &self.p[(n - self.start) as usize]
    }

    /// `W(q, p)_n` for `n = start..end`.
    pub fn wronskians(&self) -> Vec<(u64, Rational)> {
        (self.start..self.end())
            .map(|n| {
                (
                    n,
                    wronskian(
                        self.q_at(n),
                        self.p_at(n),
                        self.q_at(n + 1),
                        self.p_at(n + 1),
                    ),
                )
            })
            .collect()
    }
}

/// Exact check of the recurrence on `y` (indexed from `start`) for
/// `n = max(valid_from, start) ..= last` where `y_{n+2}` is available and `n <= upto`.
pub fn verify_recurrence(
    rec: &Recurrence2,
    y: &[Rational],
    start: u64,
    upto: u64,
) -> Vec<(u64, bool)> {
    let first = rec.valid_from.max(start);
    let last = (start + y.len() as u64).saturating_sub(3).min(upto);
    (first..=last)
        .filter(|_| y.len() >= 3)
        .map(|n| {
            let i = (n - start) as usize;
            (n, rec.residual(n, &y[i], &y[i + 1], &y[i + 2]).is_zero())
        })
        .collect()
}

/// Global sign `s` with `W_n = s * closed_form(n)` for every sample, if one exists.
pub fn wronskian_sign(terms: &Terms, theta: i64) -> Result<Option<i32>> {
    let mut sign = None;
    for (n, w) in terms.wronskians() {
        let c = wronskian_closed_form_12(theta, n)?;
        let s = if w == c {
            1
        } else if w == -c {
            -1
        } else {
            return Ok(None);
        };
        if *sign.get_or_insert(s) != s {
            return Ok(None);
        }
    }
    Ok(sign)
}

pub(crate) fn require_terms(have: usize, need: usize) -> Result<()> {
    if have < need {
        return Err(Error::InsufficientTerms { have, need });
    }
    Ok(())
}
