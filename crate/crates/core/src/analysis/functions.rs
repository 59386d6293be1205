//! Elementary functions and constants on decimal balls.

use super::fixed::{ceil_div, pow10, FixedPrecisionValue as Fpv};
use crate::error::{Error, Result};
use crate::exact::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::sync::Mutex;

const GUARD: u32 = 10;

/// Keeps the most precise value computed so far and serves lower
/// precisions by rounding it.
struct Cache(Mutex<Option<Fpv>>);

impl Cache {
    const fn new() -> Self {
        Self(Mutex::new(None))
    }

    fn get(&self, scale: u32, compute: impl FnOnce(u32) -> Fpv) -> Fpv {
        let mut slot = self.0.lock().unwrap_or_else(|e| e.into_inner());
        match slot.as_ref() {
            Some(v) if v.scale() >= scale => v.rescale(scale),
            _ => {
                let v = compute(scale);
                *slot = Some(v.clone());
                v
            }
        }
    }
}

static LN2: Cache = Cache::new();
static LN10: Cache = Cache::new();
static PI: Cache = Cache::new();
static ZETA3: Cache = Cache::new();

/// `sum_j s^j / ((2j+1) k^{2j+1})` with `s = 1` (atanh) or `-1` (atan).
fn inverse_series(k: u64, alternating: bool, scale: u32) -> Fpv {
    let w = scale + GUARD;
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = pow10(w) / &k;
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut j = 0u64;
    while !power.is_zero() {
        let t = &power / BigInt::from(2 * j + 1);
        if alternating && j % 2 == 1 {
            sum -= t;
        } else {
            sum += t;
        }
        power /= &k2;
        j += 1;
        terms += 1;
    }
    Fpv::new(sum, BigInt::from(2 * terms + 2), w).rescale(scale)
}

pub fn ln2(scale: u32) -> Fpv {
    LN2.get(scale, |s| {
        inverse_series(3, false, s + 2)
            .mul_int(&BigInt::from(2))
            .rescale(s)
    })
}

pub fn ln10(scale: u32) -> Fpv {
    LN10.get(scale, |s| {
        let w = s + 4;
        let t = inverse_series(9, false, w).mul_int(&BigInt::from(2));
        ln2(w).mul_int(&BigInt::from(3)).add(&t).rescale(s)
    })
}

/// Machin: `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(scale: u32) -> Fpv {
    PI.get(scale, |s| {
        let w = s + 4;
        let a = inverse_series(5, true, w).mul_int(&BigInt::from(16));
        let b = inverse_series(239, true, w).mul_int(&BigInt::from(4));
        a.sub(&b).rescale(s)
    })
}

/// `zeta(3) = 5/2 sum_{k>=1} (-1)^{k+1} / (k^3 C(2k,k))`; the tail of the
/// alternating series is bounded by its first omitted term.
pub fn zeta3(scale: u32) -> Fpv {
    ZETA3.get(scale, |s| {
        let w = s + GUARD;
        let one = pow10(w);
        let mut central = BigInt::from(2);
        let mut sum = BigInt::zero();
        let mut k = 1u64;
        loop {
            let kb = BigInt::from(k);
            let t = &one / (&kb * &kb * &kb * &central);
            if t.is_zero() {
                break;
            }
            if k % 2 == 1 {
                sum += t;
            } else {
                sum -= t;
            }
            k += 1;
            central = central * BigInt::from(2 * (2 * k - 1)) / BigInt::from(k);
        }
        let series = Fpv::new(sum, BigInt::from(k + 1), w);
        series
            .mul_int(&BigInt::from(5))
            .div_int(&BigInt::from(2))
            .rescale(s)
    })
}

/// `ζ(3)` with an error bound below `10^-digits`.
pub fn zeta3_reference(digits: u32) -> Fpv {
    zeta3(digits.max(1) + 2)
}

/// Number of bits of `|v|`.
fn bit_len(v: &BigInt) -> u64 {
    v.bits()
}

/// `atanh(Z/10^w)` for `0 <= Z/10^w <= 1/3`, treating `Z` as exact.
fn atanh_fixed(z: &BigInt, w: u32) -> Fpv {
    let one = pow10(w);
    let z2 = z * z / &one;
    let mut power = z.clone();
    let mut sum = BigInt::zero();
    let mut terms = 0u64;
    let mut j = 0u64;
    while !power.is_zero() {
        sum += &power / BigInt::from(2 * j + 1);
        power = &power * &z2 / &one;
        j += 1;
        terms += 1;
    }
    Fpv::new(sum, BigInt::from(4 * terms + 8), w)
}

/// Natural logarithm of a strictly positive enclosure.
pub fn ln(x: &Fpv) -> Result<Fpv> {
    if !x.is_positive() {
        return Err(Error::NotPositive);
    }
    let s = x.scale();
    let m = x.mid();
    let k = bit_len(m) - 1;
    let w = s + GUARD + (k.max(1).ilog10() + 1) + (s.max(1).ilog10() + 1);
    let two_k = BigInt::one() << k;
    let num = m - &two_k;
    let den = m + &two_k;
    let z = (&num * pow10(w)).div_floor(&den);
    let a = atanh_fixed(&z, w);
    let a = Fpv::new(a.mid().clone(), a.rad() + 2, w).mul_int(&BigInt::from(2));
    let body = ln2(w).mul_int(&BigInt::from(k)).add(&a);
    let shift = ln10(w).mul_int(&BigInt::from(s));
    let point = body.sub(&shift);
    let spread = ceil_div(&(x.rad() * pow10(w)), &(m - x.rad()));
    Ok(Fpv::new(point.mid().clone(), point.rad() + spread, w).rescale(s))
}

/// Exponential, with the result at the input scale.
pub fn exp(x: &Fpv) -> Result<Fpv> {
    let s = x.scale();
    let m = x.mid();
    let int_part = (m.abs() / pow10(s)).bits();
    let k = int_part + 8;
    let w = s + GUARD + (k as u32 * 3).div_ceil(10);
    let one = pow10(w);
    let u = (m * pow10(w - s)) >> k;
    let mut term = one.clone();
    let mut sum = one.clone();
    let mut terms = 1u64;
    let mut j = 1u64;
    loop {
        term = &term * &u / (&one * BigInt::from(j));
        if term.is_zero() {
            break;
        }
        sum += &term;
        j += 1;
        terms += 1;
    }
    let mut v = Fpv::new(sum, BigInt::from(2 * terms + 6), w);
    for _ in 0..k {
        v = v.mul(&v);
    }
    let r = x.rad();
    if !r.is_zero() {
        if *r >= pow10(s) {
            return Err(Error::PrecisionCap { cap: s });
        }
        let top = v.mid().abs() + v.rad();
        let widen = ceil_div(&(top * r * 2u32), &pow10(s));
        v = Fpv::new(v.mid().clone(), v.rad() + widen, w);
    }
    Ok(v.rescale(s))
}

/// `e^3 (sqrt 2 - 1)^4 = e^3 (17 - 12 sqrt 2)`.
pub fn decay_constant(scale: u32) -> Result<Fpv> {
    let w = scale + GUARD;
    let s4 = sqrt2_minus_1_pow4(w)?;
    let e3 = exp(&Fpv::from_int(&BigInt::from(3), w))?;
    Ok(e3.mul(&s4).rescale(scale))
}

/// `(sqrt 2 - 1)^4 = 17 - 12 sqrt 2`.
pub fn sqrt2_minus_1_pow4(scale: u32) -> Result<Fpv> {
    let w = scale + GUARD;
    let root = Fpv::from_int(&BigInt::from(2), w).sqrt()?;
    Ok(Fpv::from_int(&BigInt::from(17), w)
        .sub(&root.mul_int(&BigInt::from(12)))
        .rescale(scale))
}

/// `1 + (L+3)/(L-3)` with `L = log (sqrt 2 + 1)^4 = log(17 + 12 sqrt 2)`.
pub fn mu_constant(scale: u32) -> Result<Fpv> {
    let w = scale + GUARD;
    let root = Fpv::from_int(&BigInt::from(2), w).sqrt()?;
    let l = ln(&Fpv::from_int(&BigInt::from(17), w).add(&root.mul_int(&BigInt::from(12))))?;
    let three = Fpv::from_int(&BigInt::from(3), w);
    let frac = l.add(&three).div(&l.sub(&three))?;
    Ok(Fpv::from_int(&BigInt::one(), w).add(&frac).rescale(scale))
}
