use serde_json::{json, Value};
use zeta3_core::analysis::{
    certificate, error_with, figure1_grid, figure2_series, precision_cap, FigureGrid,
    ERROR_RELATIVE_DIGITS,
};
use zeta3_core::contfrac::{apery_cf, apery_scales, icf2, icf2_scales};
use zeta3_core::families::approximant_unchecked;
use zeta3_core::recurrence::{
    apery_recurrence, discover_recurrence, recurrence_closed_form_12, verify_recurrence,
};
use zeta3_core::{
    BigInt, FixedPrecisionValue, IrregularCF, Perturbation, Poly, Rational, Recurrence2, Source,
    Terms,
};

use crate::args::{Preset, RunConfig};
use crate::report::Report;
use crate::CliError;

/// A finished report and whether the command met its own checks.
pub struct Outcome {
    pub report: Report,
    pub ok: bool,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Self { report, ok: true }
    }
}

const FAMILY_TERMS_FOR_FIT: u64 = 31;

fn certain(v: &FixedPrecisionValue, digits: u32, what: &str) -> Result<String, CliError> {
    if !v.is_certain_to(digits) {
        return Err(CliError::Internal(format!(
            "{what} is not certain to {digits} significant digits; raise the precision cap"
        )));
    }
    Ok(v.to_scientific(digits))
}

pub fn table(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut report = Report::new("table", cfg.to_json(), &["n", "p/q", "error"]);
    let rel = ERROR_RELATIVE_DIGITS.max(cfg.digits + 4);
    let cap = precision_cap();
    let mut residue = None;
    for &n in &cfg.ns {
        let appr = approximant_unchecked(&cfg.source, n)?;
        if appr.residue_sum != Rational::from_integer(BigInt::from(0)) {
            residue
                .get_or_insert_with(Vec::new)
                .push(json!({"n": n, "sum": appr.residue_sum.to_string()}));
        }
        let e = error_with(&appr, rel, cap)?;
        report.push(vec![
            json!(n),
            json!(appr.value().to_string()),
            json!(certain(&e, cfg.digits, "error")?),
        ]);
    }
    report.note("rows", report.rows.len());
    if let Some(r) = residue {
        report.note("nonzero_residue_sums", Value::Array(r));
    }
    Ok(Outcome::ok(report))
}

pub fn figure(preset: Preset, digits: u32) -> Result<Outcome, CliError> {
    let (name, grid) = match preset {
        Preset::Figure1 => ("figure1", figure1_grid()?),
        Preset::Figure2 => ("figure2", figure2_series()?),
    };
    let config = json!({"preset": name, "n": grid.ns, "digits": digits});
    let mut columns = vec!["source".to_string()];
    columns.extend(grid.ns.iter().map(|n| format!("f_{n}")));
    let mut report = Report::new("figure", config, &columns);
    for row in &grid.rows {
        let mut cells = vec![json!(row.source.to_string())];
        for v in &row.values {
            cells.push(json!(certain(v, digits, "f")?));
        }
        report.push(cells);
    }
    report.note("series", grid.rows.len());
    report.note("points_per_series", grid.ns.len());
    if let (Some(lo), Some(hi)) = (grid.min(), grid.max()) {
        report.note("min", certain(lo, digits, "min")?);
        report.note("argmin", locate(&grid, lo));
        report.note("max", certain(hi, digits, "max")?);
        report.note("argmax", locate(&grid, hi));
    }
    Ok(Outcome::ok(report))
}

fn locate(grid: &FigureGrid, target: &FixedPrecisionValue) -> String {
    for row in &grid.rows {
        for (n, v) in grid.ns.iter().zip(&row.values) {
            if v == target {
                return format!("{} n={n}", row.source);
            }
        }
    }
    String::new()
}

/// Convergent sequences with `p_0/q_0 = 0/1` in front when the source starts at 1.
fn convergent_terms(source: &Source, len: u64) -> Result<(Vec<Rational>, Vec<Rational>), CliError> {
    let first = source.first_index();
    let t = Terms::of(source, first, len)?;
    let zero = Rational::from_integer(BigInt::from(0));
    let one = Rational::from_integer(BigInt::from(1));
    let (mut p, mut q) = if first == 0 {
        (Vec::new(), Vec::new())
    } else {
        (vec![zero], vec![one])
    };
    p.extend(t.p);
    q.extend(t.q);
    Ok((p, q))
}

pub fn cf(cfg: &RunConfig, canonical: bool) -> Result<Outcome, CliError> {
    let len = *cfg.ns.last().expect("validated non-empty") as usize;
    if len == 0 {
        return Err(CliError::Usage("--n must ask for at least one term".into()));
    }
    let (p, q) = convergent_terms(&cfg.source, len as u64)?;
    let raw = IrregularCF::from_convergents(&p, &q)?;
    let fraction = if canonical {
        let (scales, expected) = match cfg.source {
            Source::Apery => (apery_scales(len), apery_cf(len)),
            Source::Family(f) if f.i() == 1 && f.perturbation() == Perturbation::Theta(2) => {
                (icf2_scales(&recurrence_closed_form_12(2)?, len), icf2(len))
            }
            _ => {
                return Err(CliError::Usage(format!(
                    "--canonical is available for apery and family 1,2 with --theta 2, not {}",
                    cfg.source
                )))
            }
        };
        let scaled = raw.equivalence_transform(&scales)?;
        if scaled != expected {
            return Err(CliError::Internal(
                "transformed fraction differs from the integer form".into(),
            ));
        }
        scaled
    } else {
        raw
    };
    let values = fraction.convergent_values()?;
    let mut config = cfg.to_json();
    config["canonical"] = json!(canonical);
    config["terms"] = json!(len);
    let mut report = Report::new("cf", config, &["k", "b", "a", "convergent"]);
    for (t, v) in fraction.terms().into_iter().zip(values.iter().skip(1)) {
        if *v != &p[t.k] / &q[t.k] {
            return Err(CliError::Internal(format!(
                "convergent {} differs from p/q",
                t.k
            )));
        }
        report.push(vec![
            json!(t.k),
            json!(t.b),
            json!(t.a),
            json!(v.to_string()),
        ]);
    }
    report.note("a0", fraction.a0.to_string());
    report.note("bars", fraction.render_bars());
    Ok(Outcome::ok(report))
}

pub fn recurrence(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let upto = *cfg.ns.last().expect("validated non-empty");
    let first = cfg.source.first_index();
    let closed = match cfg.source {
        Source::Apery => Some(apery_recurrence()),
        Source::Family(f) if f.i() == 1 => match f.perturbation() {
            Perturbation::Theta(th) if th >= 2 => Some(recurrence_closed_form_12(th)?),
            _ => None,
        },
        _ => None,
    };
    let method = if closed.is_some() {
        "closed form"
    } else {
        "fitted"
    };
    let rec = match closed {
        Some(r) => Ok(r),
        None => Terms::of(&cfg.source, first, first + FAMILY_TERMS_FOR_FIT - 1)
            .and_then(|t| discover_recurrence(&t)),
    };
    let mut report = Report::new("recurrence", cfg.to_json(), &["n", "q", "p"]);
    report.note("method", method);
    let rec = match rec {
        Ok(r) => r,
        Err(e) => {
            report.note("fit", "failed");
            report.note("diagnostics", e.to_string());
            return Ok(Outcome { report, ok: false });
        }
    };
    let terms = Terms::of(&cfg.source, first, upto.max(first) + 2)?;
    let vq = verify_recurrence(&rec, &terms.q, first, upto);
    let vp = verify_recurrence(&rec, &terms.p, first, upto);
    for ((n, okq), (_, okp)) in vq.iter().zip(&vp) {
        report.push(vec![json!(n), json!(okq), json!(okp)]);
    }
    let verified = vq.iter().chain(&vp).all(|r| r.1);
    describe(&mut report, &rec);
    match (vq.first(), vq.last()) {
        (Some(a), Some(b)) => report.note("verified_range", format!("{}..{}", a.0, b.0)),
        _ => report.note("verified_range", Value::Null),
    }
    report.note("verified", verified);
    Ok(Outcome {
        report,
        ok: verified,
    })
}

fn describe(report: &mut Report, rec: &Recurrence2) {
    report.note("alpha", rec.alpha.display_with("n"));
    report.note("beta", rec.beta.display_with("n"));
    report.note("gamma", rec.gamma.display_with("n"));
    report.note("valid_from", rec.valid_from);
    let ch = rec.characteristic_monic();
    report.note("characteristic", ch.to_string());
    report.note("roots", quadratic_roots(&ch));
}

/// Roots of a monic quadratic `t^2 + c t + d` as `u ± v√m` with `m` squarefree.
pub fn quadratic_roots(ch: &Poly) -> String {
    if ch.degree() != Some(2) {
        return String::from("n/a");
    }
    let two = Rational::from_integer(BigInt::from(2));
    let (c, d) = (ch.coeff(1), ch.coeff(0));
    let disc = &c * &c - &d * Rational::from_integer(BigInt::from(4));
    let centre = -c / &two;
    let zero = BigInt::from(0);
    let negative = disc.numer() < &zero;
    let m = disc.numer() * disc.denom() * if negative { -1 } else { 1 };
    let (k, rest) = square_part(&m);
    let coef = Rational::new(k, disc.denom() * 2);
    let radical = if rest == BigInt::from(1) {
        String::new()
    } else {
        format!("√{rest}")
    };
    let imag = if negative { "i" } else { "" };
    if rest == BigInt::from(1) && !negative {
        let (a, b) = (&centre - &coef, &centre + &coef);
        return if a == b {
            a.to_string()
        } else {
            format!("{a}, {b}")
        };
    }
    match coef.to_string().as_str() {
        "1" => format!("{centre} ± {imag}{radical}"),
        s => format!("{centre} ± {s}{imag}{radical}"),
    }
}

/// `m = k^2 r` with `r` free of small square factors.
fn square_part(m: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::from(1);
    let mut r = m.clone();
    let zero = BigInt::from(0);
    if r == zero {
        return (zero, BigInt::from(1));
    }
    let mut f = 2u64;
    while f < 100_000 && BigInt::from(f * f) <= r {
        let sq = BigInt::from(f * f);
        while &r % &sq == zero {
            r /= &sq;
            k *= f;
        }
        f += 1;
    }
    (k, r)
}

pub fn certify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let rows = certificate(&cfg.source, &cfg.ns)?;
    let columns = [
        "n",
        "omega",
        "integral",
        "b_scaled",
        "a_scaled",
        "q_scaled_integral",
        "p_scaled_integral",
        "minimal_exponent",
        "value",
        "nth_root",
        "q_scaled",
        "p_scaled",
    ];
    let mut report = Report::new("certify", cfg.to_json(), &columns);
    let one = Rational::from_integer(BigInt::from(1));
    let mut failures = Vec::new();
    let mut below: Vec<(u64, bool)> = Vec::new();
    for r in &rows {
        let ir = &r.integrality;
        if !r.integral() {
            let mut which = Vec::new();
            for (name, ok) in [
                ("b", ir.b_scaled),
                ("a", ir.a_scaled),
                ("q", ir.q_scaled),
                ("p", ir.p_scaled),
            ] {
                if !ok {
                    which.push(name);
                }
            }
            failures.push(
                json!({"n": r.n, "scalings": which, "minimal_exponent": ir.minimal_exponent}),
            );
        }
        below.push((r.n, r.nth_root.upper() < one));
        report.push(vec![
            json!(r.n),
            json!(r.omega),
            json!(r.integral()),
            json!(ir.b_scaled),
            json!(ir.a_scaled),
            json!(ir.q_scaled),
            json!(ir.p_scaled),
            json!(ir.minimal_exponent),
            json!(certain(&r.value, cfg.digits, "certificate value")?),
            json!(certain(&r.nth_root, cfg.digits, "nth root")?),
            json!(r.q_scaled),
            json!(r.p_scaled),
        ]);
    }
    let integral = failures.is_empty();
    let last_below = below.last().is_some_and(|b| b.1);
    let crossover = below
        .iter()
        .rposition(|b| !b.1)
        .map_or(below.first().map(|b| b.0), |i| {
            below.get(i + 1).map(|b| b.0)
        });
    report.note("integrality", if integral { "pass" } else { "fail" });
    if !integral {
        report.note("integrality_failures", Value::Array(failures));
    }
    report.note("nth_root_below_one_at_max_n", last_below);
    report.note("nth_root_crossover", crossover);
    report.note(
        "verdict",
        if integral && last_below {
            "PASS"
        } else {
            "FAIL"
        },
    );
    Ok(Outcome::ok(report))
}
