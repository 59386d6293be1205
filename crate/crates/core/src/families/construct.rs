use super::params::{FamilyParams, Perturbation};
use crate::error::{Error, Result};
use crate::exact::{
    binom, harmonic, int, FactoredRatFun, HarmonicTable, PartialFraction, PoleTerm, RatFun,
    Rational,
};
use num_traits::{One, Zero};
use std::fmt;

/// Where an approximant comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Source {
    Apery,
    Family(FamilyParams),
    /// The two non-certifying modifications, numbered 1 and 2.
    Counterexample(u8),
}

impl Source {
    /// Integrality exponent, when the source comes with one.
    pub fn omega(&self) -> Option<u32> {
        match self {
            Source::Apery => Some(0),
            Source::Family(p) => Some(p.omega()),
            Source::Counterexample(_) => None,
        }
    }

    pub fn first_index(&self) -> u64 {
        match self {
            Source::Apery => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Apery => f.write_str("apery"),
            Source::Family(p) => write!(f, "{p}"),
            Source::Counterexample(v) => write!(f, "counterexample{v}"),
        }
    }
}

/// The `n`-th approximant `p/q` together with the partial fraction data it
/// was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Approximant {
    pub source: Source,
    pub n: u64,
    pub p: Rational,
    pub q: Rational,
    pub coefficients: PartialFraction,
    /// `sum_k a_k`; zero except for the unchecked second counterexample.
    pub residue_sum: Rational,
}

impl Approximant {
    pub fn value(&self) -> Rational {
        &self.p / &self.q
    }
}

fn check_n(n: u64, min: u64) -> Result<()> {
    if n < min {
        return Err(Error::IndexRange { n, min });
    }
    Ok(())
}

fn nint(n: u64) -> Rational {
    int(n as i64)
}

/// `(-t)_n^2 / (t+1)_{n+1}^2`.
fn kernel(n: u64) -> FactoredRatFun {
    FactoredRatFun::one()
        .mul_neg_pochhammer(Rational::zero(), n as usize, 2)
        .mul_pochhammer(Rational::one(), n as usize + 1, -2)
}

fn theta_factored(params: &FamilyParams, n: u64) -> FactoredRatFun {
    let i = params.i();
    let e = if i == 2 { 2 } else { 1 };
    let nn = nint(n);
    let base = match params.perturbation() {
        Perturbation::Rho(rho) => FactoredRatFun::one().mul_shift(&nn + int(rho), e),
        Perturbation::Theta(th) => {
            FactoredRatFun::one().mul_shift(int(th) * &nn + Rational::one(), e)
        }
        Perturbation::Affine { upsilon, chi, psi } => {
            FactoredRatFun::one().mul_affine(int(upsilon), -(int(chi) * &nn + int(psi)), e)
        }
    };
    let den_exp = if i == 1 { 1 } else { 2 };
    let out = base.mul_shift(Rational::one() - &nn, -den_exp);
    if i == 3 {
        out.mul_shift(nn + Rational::one(), 1)
    } else {
        out
    }
}

/// `theta^{(i,j)}(t)` for index `n`.
pub fn theta(params: &FamilyParams, n: u64) -> Result<RatFun> {
    check_n(n, 1)?;
    Ok(theta_factored(params, n).to_ratfun())
}

/// `phi = d/dt log theta`.
pub fn phi(params: &FamilyParams, n: u64) -> Result<RatFun> {
    check_n(n, 1)?;
    theta_factored(params, n).log_derivative()
}

pub fn r1_factored(params: &FamilyParams, n: u64) -> Result<FactoredRatFun> {
    check_n(n, 1)?;
    Ok(kernel(n).mul(&theta_factored(params, n)))
}

/// `R_{1,n}^{(i,j)}(t) = (-t)_n^2/(t+1)_{n+1}^2 * theta(t)`.
pub fn r1(params: &FamilyParams, n: u64) -> Result<RatFun> {
    Ok(r1_factored(params, n)?.to_ratfun())
}

/// `R_{2,n} = d/dt R_{1,n}`, by exact differentiation.
pub fn r2(params: &FamilyParams, n: u64) -> Result<RatFun> {
    Ok(r1_factored(params, n)?.derivative())
}

/// Apéry's kernel `(-t)_n^2/(t+1)_{n+1}^2`.
pub fn apery_r1(n: u64) -> RatFun {
    kernel(n).to_ratfun()
}

/// Pole terms ordered `-1, -2, ...`.
fn descending_terms(f: &FactoredRatFun) -> Result<Vec<PoleTerm>> {
    let mut terms = f.pole_terms()?;
    terms.reverse();
    Ok(terms)
}

/// Partial fractions of `R_{1,n}` over `-1, ..., -(n+1)`, checked against the
/// closed forms for `b_k` and, for `i = 3`, for the simple-pole `a_{n,n}`.
pub fn coefficients(params: &FamilyParams, n: u64) -> Result<PartialFraction> {
    let fac = r1_factored(params, n)?;
    let pf = PartialFraction::from_terms(n, &descending_terms(&fac)?);
    let th = theta_factored(params, n);
    for (k, b) in pf.b.iter().enumerate() {
        if *b != b_closed_form(&th, n, k as u64) {
            return Err(Error::ClosedFormMismatch { k });
        }
    }
    if params.i() == 3 && pf.a[n as usize] != a_nn_closed_form(params, n) {
        return Err(Error::ClosedFormMismatch { k: n as usize });
    }
    Ok(pf)
}

fn b_closed_form(theta: &FactoredRatFun, n: u64, k: u64) -> Rational {
    let c = Rational::from_integer(binom(n + k, k) * binom(n, k));
    let th = theta
        .eval(&-nint(k + 1))
        .expect("theta is regular at negative integers");
    -(&c * &c) * th
}

/// `(-1)^{[j=3]} C(2n-1, n-1)^2 sigma / n^{2-[j=2]}`.
pub fn a_nn_closed_form(params: &FamilyParams, n: u64) -> Rational {
    let nn = nint(n);
    let (sigma, pow) = match params.perturbation() {
        Perturbation::Rho(rho) => (int(rho - 1), 2),
        Perturbation::Theta(th) => (int(th - 1), 1),
        Perturbation::Affine { upsilon, chi, psi } => (
            -(int(upsilon) * (&nn + Rational::one()) + int(chi) * &nn + int(psi)),
            2,
        ),
    };
    let c = Rational::from_integer(binom(2 * n - 1, n - 1));
    &c * &c * sigma / num_traits::pow(nn, pow)
}

/// `q = 2 sum b_k`, `p = 2 sum_{k>=1} b_k H_k^(3) - sum_{k>=1} a_k H_k^(2)`.
fn assemble(pf: &PartialFraction) -> (Rational, Rational) {
    let m = pf.a.len().max(pf.b.len()) as u64;
    let h2 = HarmonicTable::new(m, 2);
    let h3 = HarmonicTable::new(m, 3);
    let two = int(2);
    let q = &two * pf.b.iter().fold(Rational::zero(), |acc, b| acc + b);
    let mut p = Rational::zero();
    for (k, b) in pf.b.iter().enumerate().skip(1) {
        p += &two * b * h3.get(k);
    }
    for (k, a) in pf.a.iter().enumerate().skip(1) {
        p -= a * h2.get(k);
    }
    (p, q)
}

/// The `n`-th approximant of family `(i,j)`.
pub fn sequence(params: &FamilyParams, n: u64) -> Result<Approximant> {
    let pf = coefficients(params, n)?;
    let residue_sum = pf.residue_sum();
    if !residue_sum.is_zero() {
        return Err(Error::ResidueSum { sum: residue_sum });
    }
    let (p, q) = assemble(&pf);
    Ok(Approximant {
        source: Source::Family(*params),
        n,
        p,
        q,
        coefficients: pf,
        residue_sum,
    })
}

/// Apéry's `q_n = sum_k C(n+k,k)^2 C(n,k)^2` and
/// `p_n = sum_{k>=1} (b_k H_k^(3) - a_k H_k^(2))`,
/// `a_k = (H_{n+k} - 2H_k + H_{n-k}) b_k`.
pub fn apery_sequence(n: u64) -> Approximant {
    let h1 = HarmonicTable::new(2 * n, 1);
    let h2 = HarmonicTable::new(n, 2);
    let h3 = HarmonicTable::new(n, 3);
    let mut a = Vec::with_capacity(n as usize + 1);
    let mut b = Vec::with_capacity(n as usize + 1);
    let mut p = Rational::zero();
    let mut q = Rational::zero();
    for k in 0..=n {
        let c = Rational::from_integer(binom(n + k, k) * binom(n, k));
        let bk = &c * &c;
        let ku = k as usize;
        let nu = n as usize;
        let ak = (h1.get(nu + ku) - int(2) * h1.get(ku) + h1.get(nu - ku)) * &bk;
        q += &bk;
        if k >= 1 {
            p += &bk * h3.get(ku) - &ak * h2.get(ku);
        }
        a.push(ak);
        b.push(bk);
    }
    Approximant {
        source: Source::Apery,
        n,
        p,
        q,
        coefficients: PartialFraction { n, a, b },
        residue_sum: Rational::zero(),
    }
}

/// `a_n = 4n(2H_n - H_{2n-1}) - 1` and `b_n = (n+1)a_n - 2n` of the second
/// counterexample.
pub fn counterexample2_constants(n: u64) -> (Rational, Rational) {
    let nn = nint(n);
    let a = int(4) * &nn * (int(2) * harmonic(n, 1) - harmonic(2 * n - 1, 1)) - Rational::one();
    let b = (&nn + Rational::one()) * &a - int(2) * &nn;
    (a, b)
}

/// The rational function behind counterexample `variant` (1 or 2).
pub fn counterexample_r1(variant: u8, n: u64) -> Result<FactoredRatFun> {
    check_n(n, 1)?;
    let nn = nint(n);
    match variant {
        1 => Ok(kernel(n)
            .mul_shift(&nn + Rational::one(), 1)
            .mul_shift(&nn + int(2), -1)),
        2 => {
            let (a, b) = counterexample2_constants(n);
            let quad = crate::exact::Poly::from_coeffs(vec![b, Rational::zero(), a]);
            Ok(kernel(n)
                .mul_shift(Rational::one() - nn, -1)
                .mul_cofactor(&quad))
        }
        _ => Err(Error::InvalidParams(format!(
            "counterexample variant {variant} must be 1 or 2"
        ))),
    }
}

/// Counterexample approximant, built without requiring `sum a_k = 0`; the
/// residue sum is carried along so `r_n = q zeta(3) - p - (sum a) zeta(2)`.
pub fn counterexample_sequence_unchecked(variant: u8, n: u64) -> Result<Approximant> {
    let fac = counterexample_r1(variant, n)?;
    let pf = PartialFraction::from_terms(n, &descending_terms(&fac)?);
    let residue_sum = pf.residue_sum();
    let (p, q) = assemble(&pf);
    Ok(Approximant {
        source: Source::Counterexample(variant),
        n,
        p,
        q,
        coefficients: pf,
        residue_sum,
    })
}

/// Counterexample approximant; rejects functions whose residues do not close.
pub fn counterexample_sequence(variant: u8, n: u64) -> Result<Approximant> {
    let appr = counterexample_sequence_unchecked(variant, n)?;
    if !appr.residue_sum.is_zero() {
        return Err(Error::ResidueSum {
            sum: appr.residue_sum,
        });
    }
    Ok(appr)
}

/// Dispatch on the source.
pub fn approximant(source: &Source, n: u64) -> Result<Approximant> {
    match source {
        Source::Apery => Ok(apery_sequence(n)),
        Source::Family(p) => sequence(p, n),
        Source::Counterexample(v) => counterexample_sequence(*v, n),
    }
}

/// Like [`approximant`], but counterexamples skip the residue-sum check.
pub fn approximant_unchecked(source: &Source, n: u64) -> Result<Approximant> {
    match source {
        Source::Counterexample(v) => counterexample_sequence_unchecked(*v, n),
        _ => approximant(source, n),
    }
}
