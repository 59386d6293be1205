use super::{BigInt, Poly, Rational};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Binomial coefficient; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized harmonic number `H_k^{(r)} = sum_{l=1}^k l^{-r}`.
pub fn harmonic(k: u64, r: u32) -> Rational {
    (1..=k).fold(Rational::zero(), |acc, l| {
        acc + Rational::new(BigInt::one(), BigInt::from(l).pow(r))
    })
}

/// `lcm(1, ..., n)`; `lcm_upto(0) = 1`.
pub fn lcm_upto(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, m| acc.lcm(&BigInt::from(m)))
}

/// Prefix table of `H_k^{(r)}` for `k = 0..=max`.
#[derive(Clone, Debug)]
pub struct HarmonicTable {
    values: Vec<Rational>,
}

impl HarmonicTable {
    pub fn new(max: u64, r: u32) -> Self {
        let mut values = Vec::with_capacity(max as usize + 1);
        let mut acc = Rational::zero();
        values.push(acc.clone());
        for l in 1..=max {
            acc += Rational::new(BigInt::one(), BigInt::from(l).pow(r));
            values.push(acc.clone());
        }
        Self { values }
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `(t + shift)_n = prod_{l=0}^{n-1} (t + shift + l)`.
pub fn pochhammer_poly(shift: &Rational, n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, l| {
        acc * Poly::linear(shift + Rational::from_integer(BigInt::from(l)))
    })
}

/// `(shift - t)_n = prod_{l=0}^{n-1} (shift - t + l)`.
pub fn neg_pochhammer_poly(shift: &Rational, n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, l| {
        let c = shift + Rational::from_integer(BigInt::from(l));
        acc * Poly::from_coeffs(vec![c, -Rational::one()])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(3, 1), BigInt::from(3));
        assert_eq!(binom(17, 0), BigInt::one());
        assert_eq!(binom(2, 5), BigInt::zero());
        assert_eq!(
            binom(60, 30),
            "118264581564861424".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn harmonic_numbers() {
        assert_eq!(harmonic(0, 1), int(0));
        assert_eq!(harmonic(3, 1), rat(11, 6));
        assert_eq!(harmonic(2, 2), rat(5, 4));
        let table = HarmonicTable::new(10, 3);
        for k in 0..=10 {
            assert_eq!(table.get(k), &harmonic(k as u64, 3));
        }
    }

    #[test]
    fn lcm_values() {
        // pairwise lcm fold, written out independently
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let oracle = |n: u64| (1..=n).fold(1u64, |acc, m| acc / gcd(acc, m) * m);
        assert_eq!(lcm_upto(1), BigInt::one());
        assert_eq!(oracle(6), 60);
        assert_eq!(oracle(10), 2520);
        assert_eq!(lcm_upto(6), BigInt::from(60));
        assert_eq!(lcm_upto(10), BigInt::from(2520));
        for n in 1..=40 {
            assert_eq!(lcm_upto(n), BigInt::from(oracle(n)));
        }
    }

    #[test]
    fn pochhammer() {
        assert_eq!(pochhammer_poly(&int(0), 0), Poly::one());
        assert_eq!(
            pochhammer_poly(&int(1), 2),
            Poly::from_coeffs(vec![int(2), int(3), int(1)])
        );
        // (-t)_2 = (-t)(1 - t) = t^2 - t
        assert_eq!(
            neg_pochhammer_poly(&int(0), 2),
            Poly::from_coeffs(vec![int(0), int(-1), int(1)])
        );
    }
}
