//! Irregular continued fractions `a_0 + b_1/(a_1 + b_2/(a_2 + ...))`.

use crate::error::{Error, Result};
use crate::exact::{int, Poly, Rational};
use crate::recurrence::Recurrence2;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrregularCF {
    pub a0: Rational,
    /// Partial denominators `a_1, a_2, ...`.
    pub a: Vec<Rational>,
    /// Partial numerators `b_1, b_2, ...`.
    pub b: Vec<Rational>,
}

/// One term `b_k | a_k`, rendered as strings for export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfTerm {
    pub k: usize,
    pub b: String,
    pub a: String,
}

impl IrregularCF {
    pub fn new(a0: Rational, a: Vec<Rational>, b: Vec<Rational>) -> Self {
        assert_eq!(
            a.len(),
            b.len(),
            "partial numerators and denominators must pair up"
        );
        Self { a0, a, b }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// The unique fraction with convergents `p_k/q_k`, `k = 0..p.len()`, using
    /// `p_{-1} = 1`, `q_{-1} = 0` and requiring `q_0 = 1`.
    pub fn from_convergents(p: &[Rational], q: &[Rational]) -> Result<Self> {
        if p.len() != q.len() || p.is_empty() {
            return Err(Error::InsufficientTerms {
                have: p.len().min(q.len()),
                need: 1,
            });
        }
        if !q[0].is_one() {
            return Err(Error::InvalidParams(
                "continued fraction needs q_0 = 1".into(),
            ));
        }
        let m = p.len();
        let mut a = Vec::with_capacity(m.saturating_sub(1));
        let mut b = Vec::with_capacity(m.saturating_sub(1));
        if m > 1 {
            a.push(q[1].clone());
            b.push(&p[1] - &p[0] * &q[1]);
        }
        for n in 2..m {
            let den = &p[n - 1] * &q[n - 2] - &p[n - 2] * &q[n - 1];
            if den.is_zero() {
                return Err(Error::ZeroCrossDeterminant { index: n - 1 });
            }
            a.push((&p[n] * &q[n - 2] - &p[n - 2] * &q[n]) / &den);
            b.push((&p[n - 1] * &q[n] - &p[n] * &q[n - 1]) / &den);
        }
        Ok(Self {
            a0: p[0].clone(),
            a,
            b,
        })
    }

    /// Numerators and denominators `(P_k, Q_k)` for `k = 0..=len`.
    pub fn convergents(&self) -> Vec<(Rational, Rational)> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let (mut p2, mut q2) = (Rational::one(), Rational::zero());
        let (mut p1, mut q1) = (self.a0.clone(), Rational::one());
        out.push((p1.clone(), q1.clone()));
        for (a, b) in self.a.iter().zip(&self.b) {
            let p = a * &p1 + b * &p2;
            let q = a * &q1 + b * &q2;
            p2 = std::mem::replace(&mut p1, p.clone());
            q2 = std::mem::replace(&mut q1, q.clone());
            out.push((p, q));
        }
        out
    }

    /// Convergent values `P_k/Q_k`.
    pub fn convergent_values(&self) -> Result<Vec<Rational>> {
        self.convergents()
            .into_iter()
            .enumerate()
            .map(|(k, (p, q))| {
                if q.is_zero() {
                    Err(Error::ZeroTerm { index: k as u64 })
                } else {
                    Ok(p / q)
                }
            })
            .collect()
    }

    /// `a'_n = c_n a_n`, `b'_n = c_n c_{n-1} b_n`; needs `c_0 = 1` and
    /// nonzero `c_1..c_len`.
    pub fn equivalence_transform(&self, c: &[Rational]) -> Result<Self> {
        if c.len() < self.len() + 1 {
            return Err(Error::InsufficientTerms {
                have: c.len(),
                need: self.len() + 1,
            });
        }
        if !c[0].is_one() {
            return Err(Error::BadScale { index: 0 });
        }
        if let Some(k) = c[..=self.len()].iter().position(Zero::is_zero) {
            return Err(Error::BadScale { index: k });
        }
        let a = (1..=self.len()).map(|n| &c[n] * &self.a[n - 1]).collect();
        let b = (1..=self.len())
            .map(|n| &c[n] * &c[n - 1] * &self.b[n - 1])
            .collect();
        Ok(Self {
            a0: self.a0.clone(),
            a,
            b,
        })
    }

    pub fn truncate(&mut self, len: usize) {
        self.a.truncate(len);
        self.b.truncate(len);
    }

    pub fn terms(&self) -> Vec<CfTerm> {
        self.a
            .iter()
            .zip(&self.b)
            .enumerate()
            .map(|(i, (a, b))| CfTerm {
                k: i + 1,
                b: b.to_string(),
                a: a.to_string(),
            })
            .collect()
    }

    /// Bar notation `a0 + b1|/|a1 - |b2||/|a2 + ...`.
    pub fn render_bars(&self) -> String {
        let mut out = String::new();
        if !self.a0.is_zero() {
            out.push_str(&self.a0.to_string());
        }
        for (a, b) in self.a.iter().zip(&self.b) {
            let neg = b.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&format!("{}|/|{}", b.abs(), a));
        }
        out
    }
}

impl fmt::Display for IrregularCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_bars())
    }
}

/// `Q_3 = 6(476*3^6 - 2907*3^5 + 7077*3^4 - 8715*3^3 + 5715*3^2 - 1926*3 + 264)`.
pub fn icf2_q_poly() -> Poly {
    Poly::from_ints(&[264, -1926, 5715, -8715, 7077, -2907, 476]).scale(&int(6))
}

/// `P_n = -9(n-2)^3(n-1)^3(28n^3-213n^2+543n-464)(28n^3-45n^2+27n-6)`.
pub fn icf2_p_poly() -> Poly {
    let m2 = Poly::linear(int(-2)).pow(3);
    let m1 = Poly::linear(int(-1)).pow(3);
    let f = Poly::from_ints(&[-464, 543, -213, 28]);
    let g = Poly::from_ints(&[-6, 27, -45, 28]);
    (&(&m2 * &m1) * &(&f * &g)).scale(&int(-9))
}

/// `(P_n, Q_n)` of the integer fraction for `n >= 4`.
pub fn icf2_terms(n: u64) -> Result<(Rational, Rational)> {
    if n < 4 {
        return Err(Error::IndexRange { n, min: 4 });
    }
    let nn = int(n as i64);
    Ok((icf2_p_poly().eval(&nn), icf2_q_poly().eval(&nn)))
}

/// The integer continued fraction of family `(1,2)`, `theta = 2`, with
/// `len` terms: `9|/|8 - 184|/|359 - 30672|/|Q_3 + P_4|/|Q_4 + ...`.
pub fn icf2(len: usize) -> IrregularCF {
    let mut a = Vec::with_capacity(len);
    let mut b = Vec::with_capacity(len);
    let q3 = icf2_q_poly().eval(&int(3));
    let heads = [(int(9), int(8)), (int(-184), int(359)), (int(-30672), q3)];
    for k in 1..=len as u64 {
        let (bk, ak) = if k <= 3 {
            heads[k as usize - 1].clone()
        } else {
            icf2_terms(k).expect("k >= 4")
        };
        a.push(ak);
        b.push(bk);
    }
    IrregularCF::new(Rational::zero(), a, b)
}

/// Scales `c_0 = c_1 = 1`, `c_2 = 24`, `c_n = alpha_{n-2}` for `n >= 3`.
pub fn icf2_scales(rec: &Recurrence2, len: usize) -> Vec<Rational> {
    (0..=len as u64)
        .map(|n| match n {
            0 | 1 => Rational::one(),
            2 => int(24),
            _ => rec.alpha.eval(&int(n as i64 - 2)),
        })
        .collect()
}

/// Scales `c_k = k^3` (with `c_0 = 1`) that clear Apéry's fraction.
pub fn apery_scales(len: usize) -> Vec<Rational> {
    (0..=len as i64)
        .map(|k| {
            if k == 0 {
                Rational::one()
            } else {
                int(k * k * k)
            }
        })
        .collect()
}

/// Apéry's fraction in integer form, from the general term:
/// `6|/|5 - 1|/|117 - 64|/|535 - ... - m^6|/|34m^3+51m^2+27m+5` with `m = k-1`.
pub fn apery_cf(len: usize) -> IrregularCF {
    let mut a = Vec::with_capacity(len);
    let mut b = Vec::with_capacity(len);
    for k in 1..=len as i64 {
        if k == 1 {
            a.push(int(5));
            b.push(int(6));
        } else {
            let m = k - 1;
            a.push(int(34 * m * m * m + 51 * m * m + 27 * m + 5));
            b.push(-int(m.pow(6)));
        }
    }
    IrregularCF::new(Rational::zero(), a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn toy_fraction() {
        let cf = IrregularCF::from_convergents(&[int(0), int(1)], &[int(1), int(2)]).unwrap();
        assert_eq!(cf.b, vec![int(1)]);
        assert_eq!(cf.a, vec![int(2)]);
        assert_eq!(cf.convergent_values().unwrap()[1], rat(1, 2));
    }

    #[test]
    fn initial_terms_of_family_12() {
        let p = [int(0), int(9), rat(1077, 8)];
        let q = [int(1), int(8), int(112)];
        let cf = IrregularCF::from_convergents(&p, &q).unwrap();
        assert_eq!(cf.a, vec![int(8), rat(359, 24)]);
        assert_eq!(cf.b, vec![int(9), rat(-23, 3)]);
    }

    #[test]
    fn q3_value() {
        assert_eq!(icf2_q_poly().eval(&int(3)), int(146736));
    }

    #[test]
    fn transform_identity_and_errors() {
        let cf = apery_cf(6);
        let ones = vec![Rational::one(); 7];
        assert_eq!(cf.equivalence_transform(&ones).unwrap(), cf);
        let mut bad = ones.clone();
        bad[3] = Rational::zero();
        assert_eq!(
            cf.equivalence_transform(&bad),
            Err(Error::BadScale { index: 3 })
        );
    }

    #[test]
    fn rendering() {
        let s = apery_cf(3).render_bars();
        assert_eq!(s, "6|/|5 - 1|/|117 - 64|/|535");
    }

    #[test]
    fn zero_cross_determinant() {
        let p = [int(0), int(1), int(2), int(3)];
        let q = [int(1), int(1), int(2), int(3)];
        assert!(matches!(
            IrregularCF::from_convergents(&p, &q),
            Err(Error::ZeroCrossDeterminant { index: 2 })
        ));
    }
}
