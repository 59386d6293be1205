use super::construct::{coefficients, phi, r1, r2, Approximant, Source};
use super::params::FamilyParams;
use crate::error::Result;
use crate::exact::{harmonic, int, lcm_upto, BigInt, PartialFraction, Poly, RatFun, Rational};
use num_traits::{One, Zero};

/// `A_n(z) = sum a_k z^k` and `B(z) = sum b_k z^k`.
pub fn polynomials_ab(params: &FamilyParams, n: u64) -> Result<(Poly, Poly)> {
    let pf = coefficients(params, n)?;
    Ok((pf.a_poly(), pf.b_poly()))
}

/// Moment vanishing results: `(k, r1(k) == 0)` and `(k, r2(k) == 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    pub first: Vec<(u64, bool)>,
    pub second: Vec<(u64, bool)>,
}

impl OrthogonalityReport {
    pub fn passed(&self) -> bool {
        self.first.iter().chain(&self.second).all(|(_, ok)| *ok)
    }
}

fn moments(
    pf: &PartialFraction,
    first_upto: Option<u64>,
    second_upto: Option<u64>,
) -> OrthogonalityReport {
    let first = first_upto
        .map(|m| {
            (0..=m)
                .map(|k| (k, pf.first_moment(&int(k as i64)).is_zero()))
                .collect()
        })
        .unwrap_or_default();
    let second = second_upto
        .map(|m| {
            (0..=m)
                .map(|k| (k, pf.second_moment(&int(k as i64)).is_zero()))
                .collect()
        })
        .unwrap_or_default();
    OrthogonalityReport { first, second }
}

/// Check that the first moments vanish for `k = 0..=n-2+[i=1]` and the
/// second ones for `k = 0..=n-2`, via exact partial fraction sums.
pub fn orthogonality_check(params: &FamilyParams, n: u64) -> Result<OrthogonalityReport> {
    let pf = coefficients(params, n)?;
    let d = u64::from(params.i() == 1);
    Ok(moments(&pf, (n + d).checked_sub(2), n.checked_sub(2)))
}

/// Apéry's kernel: both moment families vanish for `k = 0..=n-1`.
pub fn apery_orthogonality_check(n: u64) -> Result<OrthogonalityReport> {
    let f = super::construct::apery_r1(n);
    let poles: Vec<_> = (0..=n)
        .map(|k| crate::exact::Pole::new(-int(k as i64 + 1), 2))
        .collect();
    let terms = crate::exact::partial_fraction(&f, &poles)?;
    let pf = PartialFraction::from_terms(n, &terms);
    Ok(moments(&pf, n.checked_sub(1), n.checked_sub(1)))
}

/// Parameter-independent checks on `A` and `B`:
/// `A(1) = 0`, `b_0 = -theta(-1)`, `2B(1) = q_n`.
pub fn ab_identities(params: &FamilyParams, n: u64) -> Result<[bool; 3]> {
    let (a, b) = polynomials_ab(params, n)?;
    let th = super::construct::theta(params, n)?;
    let q = super::construct::sequence(params, n)?.q;
    Ok([
        a.eval(&Rational::one()).is_zero(),
        b.coeff(0) == -th.eval(&int(-1))?,
        int(2) * b.eval(&Rational::one()) == q,
    ])
}

/// Closed-form simple-pole coefficients evaluated next to the residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormRow {
    pub k: usize,
    pub residue: Rational,
    /// `2b[H_{n+k-1} - 2H_k + H_{n-k-d} - phi(-k-1)]`, as printed.
    pub printed: Rational,
    /// `2b[H_{n+k} - 2H_k + H_{n-k} - phi(-k-1)/2]`.
    pub corrected: Rational,
}

impl ClosedFormRow {
    pub fn printed_agrees(&self) -> bool {
        self.printed == self.residue
    }

    pub fn corrected_agrees(&self) -> bool {
        self.corrected == self.residue
    }
}

/// Compare the residue values `a_k` (double poles only) with both closed forms.
pub fn a_closed_form_diagnostics(params: &FamilyParams, n: u64) -> Result<Vec<ClosedFormRow>> {
    let pf = coefficients(params, n)?;
    let ph = phi(params, n)?;
    let d = params.delta_i3() as u64;
    let two = int(2);
    let mut rows = Vec::with_capacity(pf.b.len());
    for (k, b) in pf.b.iter().enumerate() {
        let ku = k as u64;
        let pv = ph.eval(&-int(k as i64 + 1))?;
        let hk2 = &two * harmonic(ku, 1);
        let printed_h = harmonic(n + ku - 1, 1) - &hk2
            + n.checked_sub(ku + d)
                .map_or_else(Rational::zero, |m| harmonic(m, 1))
            - &pv;
        let corrected_h = harmonic(n + ku, 1) - &hk2 + harmonic(n - ku, 1) - &pv / &two;
        rows.push(ClosedFormRow {
            k,
            residue: pf.a[k].clone(),
            printed: &two * b * printed_h,
            corrected: &two * b * corrected_h,
        });
    }
    Ok(rows)
}

/// `2 R_1 [sum_{k=0}^{n-2} 1/(t-k) - sum_{k=1}^{n-d+1} 1/(t+k) + phi]`, as printed.
pub fn r2_sum_form_printed(params: &FamilyParams, n: u64) -> Result<RatFun> {
    let d = params.delta_i3() as u64;
    let bracket =
        &(&recip_sum(0..n.saturating_sub(1), -1) - &recip_sum(1..n - d + 2, 1)) + &phi(params, n)?;
    Ok((&r1(params, n)? * &bracket).scale(&int(2)))
}

/// `R_1 [2 sum_{k=0}^{n-1} 1/(t-k) - 2 sum_{k=1}^{n+1} 1/(t+k) + phi]`.
pub fn r2_sum_form_corrected(params: &FamilyParams, n: u64) -> Result<RatFun> {
    let sums = (&recip_sum(0..n, -1) - &recip_sum(1..n + 2, 1)).scale(&int(2));
    let bracket = &sums + &phi(params, n)?;
    Ok(&r1(params, n)? * &bracket)
}

/// `sum_k 1/(t + sign*k)` over the range.
fn recip_sum(range: std::ops::Range<u64>, sign: i64) -> RatFun {
    let mut num = Poly::zero();
    let mut den = Poly::one();
    for k in range {
        let lin = Poly::linear(int(sign * k as i64));
        num = &(&num * &lin) + &den;
        den = &den * &lin;
    }
    RatFun::new(num, den).expect("nonzero product")
}

/// Whether each sum form equals the exact derivative: `(printed, corrected)`.
pub fn r2_sum_form_check(params: &FamilyParams, n: u64) -> Result<(bool, bool)> {
    let exact = r2(params, n)?;
    Ok((
        r2_sum_form_printed(params, n)?.same_function(&exact),
        r2_sum_form_corrected(params, n)?.same_function(&exact),
    ))
}

/// Integrality of the scaled coefficients and of the scaled `q`, `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityReport {
    pub n: u64,
    pub omega: Option<u32>,
    /// `n^omega b_k` all integral.
    pub b_scaled: bool,
    /// `n^omega l_n a_k` all integral.
    pub a_scaled: bool,
    /// `n^omega q` integral.
    pub q_scaled: bool,
    /// `n^omega l_n^3 p` integral.
    pub p_scaled: bool,
    /// Smallest `e <= 6` with `n^e q` and `n^e l_n^3 p` both integral.
    pub minimal_exponent: Option<u32>,
}

impl IntegralityReport {
    pub fn passed(&self) -> bool {
        self.b_scaled && self.a_scaled && self.q_scaled && self.p_scaled
    }
}

pub const MAX_PROBED_EXPONENT: u32 = 6;

/// Check the integrality scalings. Sources without an exponent of their own
/// (the counterexamples) are tested against the family exponent 2, the
/// largest in the table.
pub fn integrality(appr: &Approximant) -> IntegralityReport {
    let n = appr.n;
    let omega = appr.source.omega();
    let w = omega.unwrap_or(2);
    let nbig = BigInt::from(n.max(1));
    let nw = Rational::from_integer(num_traits::pow(nbig.clone(), w as usize));
    let ln = Rational::from_integer(lcm_upto(n.max(1)));
    let ln3 = &ln * &ln * &ln;
    let pf = &appr.coefficients;
    let b_scaled = pf.b.iter().all(|b| (&nw * b).is_integer());
    let a_scaled = pf.a.iter().all(|a| (&nw * &ln * a).is_integer());
    let q_scaled = (&nw * &appr.q).is_integer();
    let p_scaled = (&nw * &ln3 * &appr.p).is_integer();
    let minimal_exponent = (0..=MAX_PROBED_EXPONENT).find(|&e| {
        let ne = Rational::from_integer(num_traits::pow(nbig.clone(), e as usize));
        (&ne * &appr.q).is_integer() && (&ne * &ln3 * &appr.p).is_integer()
    });
    IntegralityReport {
        n,
        omega,
        b_scaled,
        a_scaled,
        q_scaled,
        p_scaled,
        minimal_exponent,
    }
}

/// Plain Apéry integrality: `q_n` and `l_n^3 p_n` integral.
pub fn is_apery_integral(appr: &Approximant) -> bool {
    appr.source == Source::Apery && integrality(appr).passed()
}
