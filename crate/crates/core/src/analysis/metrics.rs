use super::fixed::FixedPrecisionValue as Fpv;
use super::functions::{exp, ln, pi, sqrt2_minus_1_pow4, zeta3};
use crate::error::{Error, Result};
use crate::exact::{lcm_upto, BigInt, Rational};
use crate::families::{
    approximant_unchecked, figure1_families, integrality, Approximant, FamilyParams,
    IntegralityReport, Source,
};
use num_traits::Zero;
use serde::Serialize;

pub const DEFAULT_PRECISION_CAP: u32 = 2000;
pub const PRECISION_CAP_ENV: &str = "ZETA3_PRECISION_CAP";

/// Relative accuracy, in decimal digits, of values returned by [`error`].
pub const ERROR_RELATIVE_DIGITS: u32 = 8;

/// Precision cap from the environment, falling back to the default.
pub fn precision_cap() -> u32 {
    std::env::var(PRECISION_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&v: &u32| v > 0)
        .unwrap_or(DEFAULT_PRECISION_CAP)
}

fn digits_of(v: &BigInt) -> u32 {
    v.magnitude().to_str_radix(10).len() as u32
}

fn starting_digits(value: &Rational) -> u32 {
    40 + 2 * (digits_of(value.numer()) + digits_of(value.denom()))
}

/// Evaluate `f` at increasing precision until its result carries
/// `rel_digits` relative digits.
fn escalate(
    start: u32,
    rel_digits: u32,
    cap: u32,
    mut f: impl FnMut(u32) -> Result<Fpv>,
) -> Result<Fpv> {
    let mut d = start.min(cap);
    loop {
        match f(d) {
            Ok(v) if v.has_relative_digits(rel_digits) => return Ok(v),
            Ok(_) | Err(Error::NotPositive) | Err(Error::ContainsZero) => {}
            Err(e) => return Err(e),
        }
        if d >= cap {
            return Err(Error::PrecisionCap { cap });
        }
        d = (2 * d).min(cap);
    }
}

/// `zeta(3) - p/q` with the requested relative accuracy.
pub fn signed_error(appr: &Approximant, rel_digits: u32, cap: u32) -> Result<Fpv> {
    if appr.q.is_zero() {
        return Err(Error::ZeroTerm { index: appr.n });
    }
    let v = appr.value();
    escalate(starting_digits(&v), rel_digits, cap, |d| {
        Ok(zeta3(d).sub(&Fpv::from_rational(&v, d)))
    })
}

/// `|zeta(3) - p/q|`.
pub fn error_with(appr: &Approximant, rel_digits: u32, cap: u32) -> Result<Fpv> {
    Ok(signed_error(appr, rel_digits, cap)?.abs())
}

/// `|zeta(3) - p/q|` to [`ERROR_RELATIVE_DIGITS`] relative digits.
pub fn error(appr: &Approximant) -> Result<Fpv> {
    error_with(appr, ERROR_RELATIVE_DIGITS, precision_cap())
}

/// `r_n = q zeta(3) - p`.
pub fn linear_form(appr: &Approximant, rel_digits: u32, cap: u32) -> Result<Fpv> {
    Ok(signed_error(appr, rel_digits, cap)?.mul_rational(&appr.q))
}

/// `f = 1/|log|zeta(3) - p/q||`.
pub fn figure_metric(appr: &Approximant) -> Result<Fpv> {
    let e = error_with(appr, 14, precision_cap())?;
    let l = ln(&e)?.abs();
    Fpv::from_int(&BigInt::from(1), e.scale()).div(&l)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateRow {
    pub n: u64,
    pub omega: u32,
    /// `n^omega q_n`.
    pub q_scaled: String,
    /// `n^omega l_n^3 p_n`.
    pub p_scaled: String,
    #[serde(skip)]
    pub value: Fpv,
    #[serde(skip)]
    pub nth_root: Fpv,
    #[serde(skip)]
    pub integrality: IntegralityReport,
}

impl CertificateRow {
    pub fn integral(&self) -> bool {
        self.integrality.passed()
    }
}

/// `n^omega l_n^3 |r_n|` and its `n`-th root. Sources without an exponent
/// use 2.
pub fn certificate_row(appr: &Approximant) -> Result<CertificateRow> {
    let n = appr.n;
    let omega = appr.source.omega().unwrap_or(2);
    let nb = BigInt::from(n.max(1));
    let nw = Rational::from_integer(num_traits::pow(nb, omega as usize));
    let l = Rational::from_integer(lcm_upto(n.max(1)));
    let l3 = &l * &l * &l;
    let r = linear_form(appr, ERROR_RELATIVE_DIGITS, precision_cap())?.abs();
    let value = r.mul_rational(&(&nw * &l3));
    let nth_root = if n == 0 {
        value.clone()
    } else {
        let lv = ln(&value)?.div_int(&BigInt::from(n));
        exp(&lv)?
    };
    Ok(CertificateRow {
        n,
        omega,
        q_scaled: (&nw * &appr.q).to_string(),
        p_scaled: (&nw * &l3 * &appr.p).to_string(),
        value,
        nth_root,
        integrality: integrality(appr),
    })
}

pub fn certificate(source: &Source, ns: &[u64]) -> Result<Vec<CertificateRow>> {
    ns.iter()
        .map(|&n| certificate_row(&approximant_unchecked(source, n)?))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticRow {
    pub n: u64,
    /// Sign of `r_n`.
    pub sign: i32,
    /// `r_n n^{3/2-d} (sqrt 2 - 1)^{-4n} 2^{1/4} / pi^{3/2}`.
    pub normalized: f64,
    /// `|r_{n+1}/r_n|`, when the next term is part of the report.
    pub ratio: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AsymptoticReport {
    pub source: String,
    /// Limit of `normalized`: `-eta`.
    pub expected_limit: i32,
    /// `(sqrt 2 - 1)^4`.
    pub target_ratio: f64,
    /// `-(3/2 - d)` with `d = [i = 4]`.
    pub expected_slope: f64,
    pub slope: f64,
    pub rows: Vec<AsymptoticRow>,
}

impl AsymptoticReport {
    pub fn ratio_deviation(&self, n: u64) -> Option<f64> {
        let r = self.rows.iter().find(|r| r.n == n)?.ratio?;
        Some((r / self.target_ratio - 1.0).abs())
    }

    pub fn max_ratio_deviation(&self, from: u64, to: u64) -> Option<f64> {
        (from..=to)
            .map(|n| self.ratio_deviation(n))
            .try_fold(0.0f64, |m, d| d.map(|d| m.max(d)))
    }

    pub fn signs_match(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.sign == self.expected_limit.signum())
    }

    pub fn slope_deviation(&self) -> f64 {
        (self.slope / self.expected_slope - 1.0).abs()
    }
}

/// Least-squares slope of `y` against `x`.
pub fn regression_slope(points: &[(f64, f64)]) -> f64 {
    let m = points.len() as f64;
    let (sx, sy) = points
        .iter()
        .fold((0.0, 0.0), |(a, b), (x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (num, den) = points.iter().fold((0.0, 0.0), |(a, b), (x, y)| {
        (a + (x - mx) * (y - my), b + (x - mx) * (x - mx))
    });
    num / den
}

/// Slope window for the prefactor exponent.
pub const SLOPE_WINDOW: (u64, u64) = (20, 50);

/// Drift of `r_n` toward the asymptotic prefactor. The slope regresses
/// `log|r_n| - 4n log(sqrt 2 - 1)` on `log n` over [`SLOPE_WINDOW`]
/// (or all of `ns` when fewer than three points fall inside it).
pub fn asymptotic_check(params: &FamilyParams, ns: &[u64]) -> Result<AsymptoticReport> {
    asymptotic_report(
        &Source::Family(*params),
        -params.eta(),
        1.5 - f64::from(u8::from(params.i() == 4)),
        ns,
    )
}

/// The same report for any source, against Apéry's normalization.
pub fn asymptotic_report(
    source: &Source,
    expected_limit: i32,
    exponent: f64,
    ns: &[u64],
) -> Result<AsymptoticReport> {
    let cap = precision_cap();
    let w = 40;
    let s4 = sqrt2_minus_1_pow4(w)?;
    let log_s4 = ln(&s4)?.to_f64();
    let log_pi = ln(&pi(w))?.to_f64();
    let log2 = std::f64::consts::LN_2;
    let mut logs = Vec::with_capacity(ns.len());
    for &n in ns {
        let r = linear_form(
            &approximant_unchecked(source, n)?,
            ERROR_RELATIVE_DIGITS,
            cap,
        )?;
        let sign = r.sign().ok_or(Error::PrecisionCap { cap })?;
        logs.push((n, sign, ln(&r.abs())?.to_f64()));
    }
    let mut rows = Vec::with_capacity(logs.len());
    for (idx, &(n, sign, lr)) in logs.iter().enumerate() {
        let nf = n as f64;
        let log_norm = lr + exponent * nf.ln() - nf * log_s4 + 0.25 * log2 - 1.5 * log_pi;
        let ratio = logs
            .get(idx + 1)
            .filter(|next| next.0 == n + 1)
            .map(|next| (next.2 - lr).exp());
        rows.push(AsymptoticRow {
            n,
            sign,
            normalized: f64::from(sign) * log_norm.exp(),
            ratio,
        });
    }
    let fit = |lo: u64, hi: u64| -> Vec<(f64, f64)> {
        logs.iter()
            .filter(|(n, _, _)| (lo..=hi).contains(n))
            .map(|&(n, _, lr)| ((n as f64).ln(), lr - n as f64 * log_s4))
            .collect()
    };
    let mut pts = fit(SLOPE_WINDOW.0, SLOPE_WINDOW.1);
    if pts.len() < 3 {
        pts = fit(0, u64::MAX);
    }
    Ok(AsymptoticReport {
        source: source.to_string(),
        expected_limit,
        target_ratio: s4.to_f64(),
        expected_slope: -exponent,
        slope: if pts.len() >= 2 {
            regression_slope(&pts)
        } else {
            f64::NAN
        },
        rows,
    })
}

/// Decay ratios `|e_{n+1}/e_n|` of `e_n = |zeta(3) - p_n/q_n|`.
pub fn error_ratios(source: &Source, ns: &[u64]) -> Result<Vec<(u64, f64)>> {
    let cap = precision_cap();
    let mut logs = Vec::with_capacity(ns.len());
    for &n in ns {
        let e = error_with(
            &approximant_unchecked(source, n)?,
            ERROR_RELATIVE_DIGITS,
            cap,
        )?;
        logs.push((n, ln(&e)?.to_f64()));
    }
    Ok(logs
        .windows(2)
        .filter(|w| w[1].0 == w[0].0 + 1)
        .map(|w| (w[0].0, (w[1].1 - w[0].1).exp()))
        .collect())
}

/// One row of a figure: a source and its `f` values for `n = 2..=10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureRow {
    pub source: Source,
    pub values: Vec<Fpv>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureGrid {
    pub ns: Vec<u64>,
    pub rows: Vec<FigureRow>,
}

impl FigureGrid {
    pub fn build(sources: &[Source], ns: &[u64]) -> Result<Self> {
        let rows = sources
            .iter()
            .map(|s| {
                let values = ns
                    .iter()
                    .map(|&n| figure_metric(&approximant_unchecked(s, n)?))
                    .collect::<Result<Vec<_>>>()?;
                Ok(FigureRow { source: *s, values })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ns: ns.to_vec(),
            rows,
        })
    }

    fn extreme(&self, pick_max: bool) -> Option<&Fpv> {
        self.rows.iter().flat_map(|r| &r.values).reduce(|a, b| {
            let better = if pick_max {
                b.midpoint() > a.midpoint()
            } else {
                b.midpoint() < a.midpoint()
            };
            if better {
                b
            } else {
                a
            }
        })
    }

    pub fn min(&self) -> Option<&Fpv> {
        self.extreme(false)
    }

    pub fn max(&self) -> Option<&Fpv> {
        self.extreme(true)
    }
}

pub const FIGURE_NS: std::ops::RangeInclusive<u64> = 2..=10;

/// Thirteen rows: Apéry followed by the twelve caption families.
pub fn figure1_sources() -> Vec<Source> {
    std::iter::once(Source::Apery)
        .chain(figure1_families().into_iter().map(Source::Family))
        .collect()
}

pub fn figure1_grid() -> Result<FigureGrid> {
    FigureGrid::build(&figure1_sources(), &FIGURE_NS.collect::<Vec<_>>())
}

/// Apéry against both counterexamples.
pub fn figure2_sources() -> Vec<Source> {
    vec![
        Source::Apery,
        Source::Counterexample(1),
        Source::Counterexample(2),
    ]
}

pub fn figure2_series() -> Result<FigureGrid> {
    FigureGrid::build(&figure2_sources(), &FIGURE_NS.collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::apery_sequence;

    #[test]
    fn apery_n2_error() {
        let e = error(&apery_sequence(2)).unwrap();
        assert_eq!(e.to_scientific(4), "2.109e-6");
        assert!(e.is_certain_to(4));
        let f = figure_metric(&apery_sequence(2)).unwrap();
        assert!((f.to_f64() - 0.0765).abs() < 1e-3);
    }

    #[test]
    fn cap_is_reported() {
        let appr = apery_sequence(40);
        assert_eq!(
            error_with(&appr, 8, 50),
            Err(Error::PrecisionCap { cap: 50 })
        );
    }

    #[test]
    fn slope_of_a_line() {
        let pts: Vec<_> = (0..5).map(|x| (x as f64, 3.0 * x as f64 - 1.0)).collect();
        assert!((regression_slope(&pts) - 3.0).abs() < 1e-12);
    }
}
