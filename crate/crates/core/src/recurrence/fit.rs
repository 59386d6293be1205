use super::{require_terms, verify_recurrence, Recurrence2, Terms};
use crate::error::{Error, Result};
use crate::exact::linalg::{rational_fit_possible, rational_interpolate, solve};
use crate::exact::{int, Poly, Rational};
use num_traits::{One, Zero};

/// Largest total degree tried when fitting a rational function of `n`.
pub const FIT_MAX_DEGREE: usize = 24;

const HELD_OUT: usize = 2;
const RATIONAL_CHECKS: usize = 3;

fn beta_tilde(q: &[Rational], start: u64, alpha: &Poly, gamma: &Poly, n: u64) -> Result<Rational> {
    let i = (n - start) as usize;
    if q[i + 1].is_zero() {
        return Err(Error::ZeroTerm { index: n + 1 });
    }
    let nn = int(n as i64);
    Ok((alpha.eval(&nn) * &q[i + 2] + gamma.eval(&nn) * &q[i]) / &q[i + 1])
}

/// Fit `beta~_n = (alpha_n q_{n+2} + gamma_n q_n)/q_{n+1}` by a polynomial of
/// the given degree on `n = window..window+degree`, confirm it on the next
/// two indices, and return `beta = -beta~`.
pub fn fit_beta(
    q: &[Rational],
    start: u64,
    alpha: &Poly,
    gamma: &Poly,
    degree: usize,
    window: u64,
) -> Result<Poly> {
    if window < start {
        return Err(Error::IndexRange {
            n: window,
            min: start,
        });
    }
    let offset = (window - start) as usize;
    require_terms(q.len(), offset + degree + HELD_OUT + 3)?;
    let samples: Vec<u64> = (0..=degree as u64).map(|d| window + d).collect();
    let mut rows = Vec::with_capacity(samples.len());
    let mut rhs = Vec::with_capacity(samples.len());
    for &n in &samples {
        let nn = int(n as i64);
        let mut pw = Rational::one();
        let mut row = Vec::with_capacity(degree + 1);
        for _ in 0..=degree {
            row.push(pw.clone());
            pw *= &nn;
        }
        rows.push(row);
        rhs.push(beta_tilde(q, start, alpha, gamma, n)?);
    }
    let coeffs = solve(&rows, &rhs)?;
    let bt = Poly::from_coeffs(coeffs);
    for h in 1..=HELD_OUT as u64 {
        let n = window + degree as u64 + h;
        if bt.eval(&int(n as i64)) != beta_tilde(q, start, alpha, gamma, n)? {
            return Err(Error::HeldOut { n });
        }
    }
    Ok(-bt)
}

/// Lowest-degree `P/Q` matching every sample, found by growing the total
/// degree; the first `d + 4` samples determine the fit and the rest check it.
fn fit_rational(points: &[(Rational, Rational)]) -> Result<(Poly, Poly)> {
    for d in 0..=FIT_MAX_DEGREE {
        let need = d + 1 + RATIONAL_CHECKS;
        if points.len() < need {
            return Err(Error::InsufficientTerms {
                have: points.len(),
                need,
            });
        }
        for dq in 0..=d {
            if rational_fit_possible(points, d - dq, dq) == Some(false) {
                continue;
            }
            let Some((p, q)) = rational_interpolate(&points[..need], d - dq, dq) else {
                continue;
            };
            let fits = points[need..].iter().all(|(x, y)| {
                let qx = q.eval(x);
                !qx.is_zero() && p.eval(x) == y * qx
            });
            if fits {
                return Ok((p, q));
            }
        }
    }
    Err(Error::NoFit {
        max_degree: FIT_MAX_DEGREE,
    })
}

/// `W(q, p)_n` as a rational function of `n`.
pub fn fit_wronskian(terms: &Terms) -> Result<(Poly, Poly)> {
    let points: Vec<_> = terms
        .wronskians()
        .into_iter()
        .map(|(n, w)| (int(n as i64), w))
        .collect();
    fit_rational(&points)
}

/// Recover a recurrence satisfied by both `p` and `q` from their Wronskian:
/// with `W_n = P(n)/Q(n)`, take `alpha ~ P(n)Q(n+1)` and `gamma ~ P(n+1)Q(n)`,
/// then fit `beta` (polynomial first, rational if that fails) and verify.
pub fn discover_recurrence(terms: &Terms) -> Result<Recurrence2> {
    let (wp, wq) = fit_wronskian(terms)?;
    let one = Rational::one();
    let a0 = &wp * &wq.shift(&one);
    let g0 = &wp.shift(&one) * &wq;
    let g = a0.gcd(&g0);
    let a1 = a0.div_rem(&g).0;
    let scale = a1.content().recip();
    let alpha = a1.scale(&scale);
    let gamma = g0.div_rem(&g).0.scale(&scale);
    let start = terms.start;
    let degree = alpha.degree().unwrap_or(0);
    let rec = match fit_beta(&terms.q, start, &alpha, &gamma, degree, start) {
        Ok(beta) => Recurrence2::new(alpha, beta, gamma, start),
        Err(Error::HeldOut { .. }) | Err(Error::Singular) => {
            let last = terms.end() - 2;
            let points = (start..=last)
                .map(|n| {
                    Ok((
                        int(n as i64),
                        beta_tilde(&terms.q, start, &alpha, &gamma, n)?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let (u, v) = fit_rational(&points)?;
            Recurrence2::new(&alpha * &v, -u, &gamma * &v, start)
        }
        Err(e) => return Err(e),
    }
    .normalized();
    for y in [&terms.q, &terms.p] {
        if let Some((n, _)) = verify_recurrence(&rec, y, start, u64::MAX)
            .into_iter()
            .find(|r| !r.1)
        {
            return Err(Error::HeldOut { n });
        }
    }
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{FamilyParams, Source};
    use crate::recurrence::{apery_recurrence, recurrence_closed_form_12};

    #[test]
    fn recovers_family_12_beta() {
        let params = FamilyParams::theta(1, 2).unwrap();
        let t = Terms::of(&Source::Family(params), 1, 11).unwrap();
        let rec = recurrence_closed_form_12(2).unwrap();
        let beta = fit_beta(&t.q, 1, &rec.alpha, &rec.gamma, 6, 1).unwrap();
        assert_eq!(beta, rec.beta);
    }

    #[test]
    fn recovers_apery_beta() {
        let t = Terms::of(&Source::Apery, 0, 10).unwrap();
        let rec = apery_recurrence();
        let beta = fit_beta(&t.q, 0, &rec.alpha, &rec.gamma, 3, 0).unwrap();
        assert_eq!(beta, rec.beta);
    }

    #[test]
    fn wrong_degree_is_caught() {
        let t = Terms::of(&Source::Apery, 0, 10).unwrap();
        let rec = apery_recurrence();
        assert!(matches!(
            fit_beta(&t.q, 0, &rec.alpha, &rec.gamma, 2, 0),
            Err(Error::HeldOut { .. })
        ));
    }

    #[test]
    fn discovers_apery() {
        let t = Terms::of(&Source::Apery, 0, 14).unwrap();
        let rec = discover_recurrence(&t).unwrap();
        assert_eq!(rec.alpha, apery_recurrence().alpha);
        assert_eq!(rec.beta, apery_recurrence().beta);
        assert_eq!(rec.gamma, apery_recurrence().gamma);
    }
}
