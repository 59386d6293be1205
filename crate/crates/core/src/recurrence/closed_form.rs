use super::Recurrence2;
use crate::error::{Error, Result};
use crate::exact::{int, BigInt, Poly, Rational};
use num_traits::{Signed, Zero};

fn theta_poly(theta: i64, sq: &[i64], lin: &[i64], free: &[i64]) -> Poly {
    let t = theta as i128;
    let coeffs: Vec<i64> = (0..sq.len())
        .map(|k| {
            let v = t * t * sq[k] as i128
                + t * lin.get(k).copied().unwrap_or(0) as i128
                + free[k] as i128;
            i64::try_from(v).expect("coefficient fits in i64")
        })
        .collect();
    Poly::from_ints(&coeffs)
}

/// `N_n = (24n^3+30n^2+16n+3) theta^2 + (9n^2+5n+1) theta - (12n^3+21n^2+11n+2)`.
pub fn n_poly(theta: i64) -> Poly {
    theta_poly(theta, &[3, 16, 30, 24], &[1, 5, 9], &[-2, -11, -21, -12])
}

fn cube(shift: i64) -> Poly {
    Poly::linear(int(shift)).pow(3)
}

/// `2 N_n / (n^3 (n+1)^3)`.
pub fn wronskian_closed_form_12(theta: i64, n: u64) -> Result<Rational> {
    if theta < 2 {
        return Err(Error::InvalidParams(format!(
            "theta = {theta} must be a natural number >= 2"
        )));
    }
    if n == 0 {
        return Err(Error::IndexRange { n, min: 1 });
    }
    let nn = int(n as i64);
    let d = (&nn * &nn * &nn) * num_traits::pow(&nn + int(1), 3);
    Ok(int(2) * n_poly(theta).eval(&nn) / d)
}

/// Whether `N_n`, viewed as a quadratic in `theta`, has an integer root.
pub fn n_quadratic_has_integer_root(n: u64) -> bool {
    let n = BigInt::from(n);
    let a: BigInt = BigInt::from(24) * &n * &n * &n
        + BigInt::from(30) * &n * &n
        + BigInt::from(16) * &n
        + BigInt::from(3);
    let b: BigInt = BigInt::from(9) * &n * &n + BigInt::from(5) * &n + BigInt::from(1);
    let c: BigInt = -(BigInt::from(12) * &n * &n * &n
        + BigInt::from(21) * &n * &n
        + BigInt::from(11) * &n
        + BigInt::from(2));
    let disc = &b * &b - BigInt::from(4) * &a * &c;
    if disc.is_negative() {
        return false;
    }
    let s = disc.sqrt();
    if &s * &s != disc {
        return false;
    }
    let two_a = BigInt::from(2) * &a;
    [-&b + &s, -&b - &s]
        .iter()
        .any(|num| (num % &two_a).is_zero())
}

/// The explicit second-order recurrence of family `(1,2)`.
pub fn recurrence_closed_form_12(theta: i64) -> Result<Recurrence2> {
    if theta < 2 {
        return Err(Error::InvalidParams(format!(
            "theta = {theta} must be a natural number >= 2"
        )));
    }
    let alpha = &cube(2) * &n_poly(theta);
    let beta = theta_poly(
        theta,
        &[172, 1268, 3810, 6130, 5336, 2346, 408],
        &[52, 382, 1143, 1417, 769, 153],
        &[-120, -886, -2667, -4011, -3181, -1275, -204],
    )
    .scale(&int(-2));
    let gamma = &cube(0)
        * &theta_poly(
            theta,
            &[73, 148, 102, 24],
            &[15, 23, 9],
            &[-46, -89, -57, -12],
        );
    Ok(Recurrence2::new(alpha, beta, gamma, 1))
}

/// `(n+1)^3 y_{n+1} - (2n+1)(17n^2+17n+5) y_n + n^3 y_{n-1} = 0`, `n >= 1`,
/// re-indexed to the `y_{n+2}, y_{n+1}, y_n` convention (valid from 0).
pub fn apery_recurrence() -> Recurrence2 {
    let up = cube(1);
    let mid = -(&Poly::from_ints(&[1, 2]) * &Poly::from_ints(&[5, 17, 17]));
    let down = cube(0);
    let one = int(1);
    Recurrence2::new(up.shift(&one), mid.shift(&one), down.shift(&one), 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_values() {
        assert_eq!(n_poly(2).eval(&int(1)), int(276));
        assert_eq!(wronskian_closed_form_12(2, 1).unwrap(), int(69));
        assert!(wronskian_closed_form_12(1, 1).is_err());
    }

    #[test]
    fn first_coefficients() {
        let rec = recurrence_closed_form_12(2).unwrap();
        let one = int(1);
        assert_eq!(rec.alpha.eval(&one), int(7452));
        assert_eq!(rec.beta.eval(&one), int(-146736));
        assert_eq!(rec.gamma.eval(&one), int(1278));
        // 7452 q_3 - 146736 * 112 + 1278 * 8 = 0
        let q3 = (int(146736) * int(112) - int(1278) * int(8)) / int(7452);
        assert_eq!(q3, int(2204));
    }

    #[test]
    fn gamma_is_shifted_n() {
        let rec = recurrence_closed_form_12(5).unwrap();
        let shifted = &cube(0) * &n_poly(5).shift(&int(1));
        assert_eq!(rec.gamma, shifted);
    }

    #[test]
    fn apery_shift() {
        let rec = apery_recurrence();
        assert_eq!(rec.alpha, cube(2));
        assert_eq!(rec.gamma, cube(1));
        let expected = -(&Poly::from_ints(&[3, 2]) * &Poly::from_ints(&[39, 51, 17]));
        assert_eq!(rec.beta, expected);
    }

    #[test]
    fn quadratic_roots() {
        assert!((1..=200).all(|n| !n_quadratic_has_integer_root(n)));
    }
}
