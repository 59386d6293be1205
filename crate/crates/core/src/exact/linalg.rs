//! Exact linear algebra over the rationals.

use super::{Poly, Rational};
use crate::error::{Error, Result};
use num_traits::{One, Zero};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let (head, tail) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&mut a[i], &b[0])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&mut b[0], &a[r])
                };
                for (x, y) in head.iter_mut().zip(tail.iter()) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solve a square system `a x = b`.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Basis of the right nullspace of `m` (columns = unknowns).
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -work[r][f].clone();
            }
            v
        })
        .collect()
}

/// Interpolating polynomial through `(x_i, y_i)` (Newton divided differences).
pub fn interpolate(points: &[(Rational, Rational)]) -> Poly {
    let n = points.len();
    let mut coef: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (&points[i].0 - &points[i - j].0);
        }
    }
    let mut p = Poly::zero();
    for i in (0..n).rev() {
        p = &(&p * &Poly::linear(-points[i].0.clone())) + &Poly::constant(coef[i].clone());
    }
    p
}

/// Rational function `P/Q` with `deg P <= dp`, `deg Q <= dq` through the
/// points, normalized to a monic `Q` and reduced. Needs at least
/// `dp + dq + 1` points; any extra points are fitted as well.
pub fn rational_interpolate(
    points: &[(Rational, Rational)],
    dp: usize,
    dq: usize,
) -> Option<(Poly, Poly)> {
    let unknowns = dp + dq + 2;
    if points.len() < unknowns - 1 {
        return None;
    }
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|(x, y)| {
            let mut row = Vec::with_capacity(unknowns);
            let mut xp = Rational::one();
            for _ in 0..=dp {
                row.push(xp.clone());
                xp *= x;
            }
            let mut xq = Rational::one();
            for _ in 0..=dq {
                row.push(-(y * &xq));
                xq *= x;
            }
            row
        })
        .collect();
    let basis = nullspace(&rows, unknowns);
    for v in basis {
        let p = Poly::from_coeffs(v[..=dp].to_vec());
        let q = Poly::from_coeffs(v[dp + 1..].to_vec());
        if q.is_zero() {
            continue;
        }
        let g = p.gcd(&q);
        let (p, q) = if g.is_zero() || g.degree() == Some(0) {
            (p, q)
        } else {
            (p.div_rem(&g).0, q.div_rem(&g).0)
        };
        if points.iter().any(|(x, _)| q.eval(x).is_zero()) {
            continue;
        }
        let lead = q.leading().recip();
        return Some((p.scale(&lead), q.scale(&lead)));
    }
    None
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn big_mod(v: &num_bigint::BigInt) -> u64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    v.mod_floor(&num_bigint::BigInt::from(PRIME))
        .to_u64()
        .expect("reduced below the modulus")
}

/// `r` modulo a fixed 61-bit prime, if its denominator is invertible there.
fn rational_mod(r: &Rational) -> Option<u64> {
    let d = big_mod(r.denom());
    (d != 0).then(|| mul_mod(big_mod(r.numer()), pow_mod(d, PRIME - 2)))
}

fn rank_mod(mut m: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = pow_mod(m[rank][c], PRIME - 2);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = mul_mod(m[r][c], inv);
                for k in c..cols {
                    let sub = mul_mod(f, m[rank][k]);
                    m[r][k] = (m[r][k] + PRIME - sub) % PRIME;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Necessary condition for `y = P(x)/Q(x)` with `deg P <= dp`, `deg Q <= dq`
/// on every point: the homogeneous system must be singular modulo a prime.
/// `None` when some value cannot be reduced.
pub fn rational_fit_possible(
    points: &[(Rational, Rational)],
    dp: usize,
    dq: usize,
) -> Option<bool> {
    let unknowns = dp + dq + 2;
    let mut rows = Vec::with_capacity(points.len());
    for (x, y) in points {
        let (x, y) = (rational_mod(x)?, rational_mod(y)?);
        let neg_y = (PRIME - y) % PRIME;
        let mut row = Vec::with_capacity(unknowns);
        let mut xp = 1;
        for _ in 0..=dp {
            row.push(xp);
            xp = mul_mod(xp, x);
        }
        let mut xq = 1;
        for _ in 0..=dq {
            row.push(mul_mod(neg_y, xq));
            xq = mul_mod(xq, x);
        }
        rows.push(row);
    }
    Some(rank_mod(rows, unknowns) < unknowns)
}
