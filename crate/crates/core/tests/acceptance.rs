//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

mod common;

use common::*;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use std::time::{Duration, Instant};
use zeta3_core::analysis::{
    asymptotic_check, asymptotic_report, certificate, error, error_ratios, figure1_grid,
    sqrt2_minus_1_pow4, zeta3_reference,
};
use zeta3_core::contfrac::{apery_cf, apery_scales, icf2, icf2_scales, IrregularCF};
use zeta3_core::exact::{int, rat, reassemble};
use zeta3_core::families::{
    approximant, coefficients, integrality, orthogonality_check, r1, sequence, smoke_grid,
};
use zeta3_core::recurrence::{
    apery_recurrence, discover_recurrence, fit_beta, recurrence_closed_form_12, verify_recurrence,
    wronskian_sign,
};
use zeta3_core::{FamilyParams, Poly, Source, Terms};

/// Tolerances and budgets.
const TABLE_RUNTIME: Duration = Duration::from_secs(1);
const ERROR_RUNTIME: Duration = Duration::from_secs(30);
const RECURRENCE_RUNTIME: Duration = Duration::from_secs(60);
const REFERENCE_DIGITS: u32 = 170;
const ERROR_SIG_DIGITS: u32 = 4;
const FIGURE_SIG_DIGITS: u32 = 6;
const RATIO_TOLERANCE: f64 = 0.01;
const RATIO_AT: u64 = 40;
const SLOPE_TOLERANCE: f64 = 0.10;
const COUNTEREXAMPLE_TOLERANCE: f64 = 0.05;
const COUNTEREXAMPLE_WINDOW: (u64, u64) = (20, 40);
const SMOKE_MAX_N: u64 = 25;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn theta_family(theta: i64) -> FamilyParams {
    FamilyParams::theta(1, theta).unwrap()
}

fn table_fractions() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (source, rows, _) in table_rows() {
        for (n, frac) in rows {
            let got = approximant(&source, n).map(|a| a.value());
            if got.as_ref().ok() != Some(&parse_fraction(frac)) {
                bad.push(format!("{source} n={n}: {got:?} != {frac}"));
            }
        }
    }
    let t = start.elapsed();
    let pass = bad.is_empty() && t < TABLE_RUNTIME;
    outcome(
        pass,
        format!(
            "12 fractions, {} mismatches, {:.3}s {}",
            bad.len(),
            t.as_secs_f64(),
            bad.join("; ")
        ),
    )
}

fn table_errors() -> Outcome {
    let start = Instant::now();
    let reference = zeta3_reference(REFERENCE_DIGITS);
    let certified = reference.radius() < rat(1, 10).pow(REFERENCE_DIGITS as i32);
    let mut got = Vec::new();
    let mut pass = certified;
    for (source, _, expected) in table_rows() {
        match approximant(&source, 50).and_then(|a| error(&a)) {
            Ok(e) => {
                let s = e.to_scientific(ERROR_SIG_DIGITS);
                let ok = s == expected
                    && e.is_certain_to(ERROR_SIG_DIGITS)
                    && e.scale() >= REFERENCE_DIGITS;
                pass &= ok;
                got.push(format!("{source}: {s} (scale {})", e.scale()));
            }
            Err(err) => {
                pass = false;
                got.push(format!("{source}: {err}"));
            }
        }
    }
    let t = start.elapsed();
    pass &= t < ERROR_RUNTIME;
    outcome(pass, format!("{}; {:.2}s", got.join(", "), t.as_secs_f64()))
}

fn recurrences() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let apery = Terms::of(&Source::Apery, 0, 102).unwrap();
    let rec = apery_recurrence();
    let ap_ok = [&apery.q, &apery.p]
        .iter()
        .all(|y| verify_recurrence(&rec, y, 0, 100).iter().all(|r| r.1));
    notes.push(format!("apery n<=100 {ap_ok}"));
    let mut closed_ok = true;
    for theta in 2..=5 {
        let t = Terms::of(&Source::Family(theta_family(theta)), 1, 52).unwrap();
        let rec = recurrence_closed_form_12(theta).unwrap();
        let ok = [&t.q, &t.p]
            .iter()
            .all(|y| verify_recurrence(&rec, y, 1, 50).iter().all(|r| r.1));
        closed_ok &= ok;
    }
    notes.push(format!("closed form theta 2..5 n<=50 {closed_ok}"));
    let mut fit_ok = true;
    for theta in 2..=6 {
        let t = Terms::of(&Source::Family(theta_family(theta)), 1, 11).unwrap();
        let rec = recurrence_closed_form_12(theta).unwrap();
        let beta = fit_beta(&t.q, 1, &rec.alpha, &rec.gamma, 6, 1);
        fit_ok &= beta.as_ref() == Ok(&rec.beta);
    }
    notes.push(format!("fit_beta theta 2..6 {fit_ok}"));
    let t = start.elapsed();
    notes.push(format!("{:.2}s", t.as_secs_f64()));
    outcome(
        ap_ok && closed_ok && fit_ok && t < RECURRENCE_RUNTIME,
        notes.join(", "),
    )
}

fn wronskians() -> Outcome {
    let mut signs = Vec::new();
    for theta in 2..=5 {
        let t = Terms::of(&Source::Family(theta_family(theta)), 1, 31).unwrap();
        signs.push(wronskian_sign(&t, theta).unwrap());
    }
    let global = signs[0];
    let pass = global.is_some() && signs.iter().all(|s| *s == global);
    outcome(
        pass,
        format!("global sign {global:?} for theta 2..5, n<=30"),
    )
}

fn continued_fractions() -> Outcome {
    const LEN: usize = 30;
    let mut notes = Vec::new();
    let head =
        IrregularCF::from_convergents(&[int(0), int(9), rat(1077, 8)], &[int(1), int(8), int(112)])
            .unwrap();
    let initial = head.a == [int(8), rat(359, 24)] && head.b == [int(9), rat(-23, 3)];
    notes.push(format!("initial terms {initial}"));
    let canonical = icf2(LEN);
    let heads = canonical.b[..3] == [int(9), int(-184), int(-30672)]
        && canonical.a[..3] == [int(8), int(359), int(146736)];
    notes.push(format!("integer heads {heads}"));
    let t = Terms::of(&Source::Family(theta_family(2)), 1, LEN as u64).unwrap();
    let mut p = vec![int(0)];
    let mut q = vec![int(1)];
    p.extend(t.p.iter().cloned());
    q.extend(t.q.iter().cloned());
    let raw = IrregularCF::from_convergents(&p, &q).unwrap();
    let rec = recurrence_closed_form_12(2).unwrap();
    let scaled = raw.equivalence_transform(&icf2_scales(&rec, LEN)).unwrap();
    let values = canonical.convergent_values().unwrap();
    let conv = scaled == canonical && (1..=LEN).all(|k| values[k] == &p[k] / &q[k]);
    notes.push(format!("{LEN} convergents {conv}"));
    let a = Terms::of(&Source::Apery, 0, LEN as u64).unwrap();
    let apery = IrregularCF::from_convergents(&a.p, &a.q)
        .and_then(|cf| cf.equivalence_transform(&apery_scales(LEN)))
        .map(|cf| cf == apery_cf(LEN))
        .unwrap_or(false);
    notes.push(format!("apery general term n<={LEN} {apery}"));
    outcome(initial && heads && conv && apery, notes.join(", "))
}

fn figure() -> Outcome {
    match figure1_grid() {
        Ok(g) => {
            let (min, max) = (g.min().unwrap(), g.max().unwrap());
            let smin = min.to_scientific(FIGURE_SIG_DIGITS);
            let smax = max.to_scientific(FIGURE_SIG_DIGITS);
            let certain =
                min.is_certain_to(FIGURE_SIG_DIGITS) && max.is_certain_to(FIGURE_SIG_DIGITS);
            let pass =
                g.rows.len() == 13 && smin == "1.44346e-2" && smax == "1.37009e-1" && certain;
            outcome(
                pass,
                format!(
                    "{}x{} grid, min {smin}, max {smax}",
                    g.rows.len(),
                    g.ns.len()
                ),
            )
        }
        Err(e) => outcome(false, e.to_string()),
    }
}

fn properties() -> Outcome {
    let mut notes = Vec::new();
    let mut residue = true;
    let mut integral = true;
    let mut ortho = true;
    let mut round_trip = true;
    for params in smoke_grid() {
        for n in 1..=SMOKE_MAX_N {
            let appr = sequence(&params, n).unwrap();
            residue &= appr.coefficients.residue_sum() == int(0);
            integral &= integrality(&appr).passed();
            ortho &= orthogonality_check(&params, n).unwrap().passed();
            if n <= 10 {
                let back = reassemble(&appr.coefficients.to_terms());
                round_trip &= back.same_function(&r1(&params, n).unwrap());
            }
        }
    }
    notes.push(format!("sum a = 0 {residue}"));
    notes.push(format!("integrality {integral}"));
    notes.push(format!("orthogonality {ortho}"));
    notes.push(format!("round trip (n<=10) {round_trip}"));

    let config = Config {
        cases: 64,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let rationals = || (-500i64..500, 1i64..200).prop_map(|(a, b)| rat(a, b));
    let nonzero = move || rationals().prop_filter("nonzero", |r| *r != int(0));
    let strategy = (
        prop::collection::vec(nonzero(), 1..10),
        prop::collection::vec(nonzero(), 10),
        prop::collection::vec(nonzero(), 10),
    );
    let transform = runner
        .run(&strategy, |(a, b, c)| {
            let len = a.len();
            let cf = IrregularCF::new(int(0), a, b[..len].to_vec());
            let mut scales = vec![int(1)];
            scales.extend(c[..len].iter().cloned());
            let t = cf.equivalence_transform(&scales).unwrap();
            for ((p, q), (p2, q2)) in cf.convergents().iter().zip(&t.convergents()) {
                prop_assert_eq!(p * q2, p2 * q);
            }
            Ok(())
        })
        .is_ok();
    notes.push(format!("cf transform {transform}"));
    let family_pf = coefficients(&theta_family(2), 1).unwrap();
    let sample = family_pf.a == [int(5), int(-5)];
    outcome(
        residue && integral && ortho && round_trip && transform && sample,
        notes.join(", "),
    )
}

fn asymptotics() -> Outcome {
    let ns: Vec<u64> = (20..=50).collect();
    let grid = smoke_grid();
    let mut ratio_fail = Vec::new();
    let mut slope_fail = Vec::new();
    let mut sign_fail = Vec::new();
    let mut worst_ratio: (f64, String) = (0.0, String::new());
    let mut worst_slope: (f64, String) = (0.0, String::new());
    for params in &grid {
        let rep = match asymptotic_check(params, &ns) {
            Ok(r) => r,
            Err(e) => return outcome(false, format!("{params}: {e}")),
        };
        let dev = rep.ratio_deviation(RATIO_AT).unwrap_or(f64::INFINITY);
        if dev > worst_ratio.0 {
            worst_ratio = (dev, params.to_string());
        }
        if dev > RATIO_TOLERANCE {
            ratio_fail.push(params.to_string());
        }
        let sd = rep.slope_deviation();
        if sd > worst_slope.0 {
            worst_slope = (
                sd,
                format!(
                    "{params} slope {:.3} vs {:.1}",
                    rep.slope, rep.expected_slope
                ),
            );
        }
        if sd > SLOPE_TOLERANCE {
            slope_fail.push(params.to_string());
        }
        if !rep.signs_match() {
            sign_fail.push(params.to_string());
        }
    }
    let pass = ratio_fail.is_empty() && slope_fail.is_empty();
    outcome(
        pass,
        format!(
            "{} families; ratio within {:.0}% at n={RATIO_AT}: {}/{} (worst {:.2}% {}); slope within {:.0}%: {}/{} (worst {:.1}% {}); sign vs -eta: {}/{} match",
            grid.len(),
            RATIO_TOLERANCE * 100.0,
            grid.len() - ratio_fail.len(),
            grid.len(),
            worst_ratio.0 * 100.0,
            worst_ratio.1,
            SLOPE_TOLERANCE * 100.0,
            grid.len() - slope_fail.len(),
            grid.len(),
            worst_slope.0 * 100.0,
            worst_slope.1,
            grid.len() - sign_fail.len(),
            grid.len(),
        ),
    )
}

fn counterexamples() -> Outcome {
    let (lo, hi) = COUNTEREXAMPLE_WINDOW;
    let ns: Vec<u64> = (lo..=hi + 1).collect();
    let target = sqrt2_minus_1_pow4(20).unwrap().to_f64();
    let apery = asymptotic_report(&Source::Apery, 1, 1.5, &ns).unwrap();
    let apery_dev = apery.max_ratio_deviation(lo, hi).unwrap();
    let apery_err = error_ratios(&Source::Apery, &ns)
        .unwrap()
        .iter()
        .filter(|(n, _)| *n <= hi)
        .map(|(_, r)| (r / target - 1.0).abs())
        .fold(0.0, f64::max);
    let mut notes = vec![format!(
        "apery itself: |e_(n+1)/e_n| {:.2}%, |r_(n+1)/r_n| {:.2}%",
        apery_err * 100.0,
        apery_dev * 100.0
    )];
    let mut pass = true;
    let characteristic = Poly::from_ints(&[1, -34, 1]);
    for v in [1u8, 2] {
        let s = Source::Counterexample(v);
        let rep = asymptotic_report(&s, 1, 1.5, &ns).unwrap();
        let dev = rep.max_ratio_deviation(lo, hi).unwrap();
        let err_dev = error_ratios(&s, &ns)
            .unwrap()
            .iter()
            .filter(|(n, _)| *n <= hi)
            .map(|(_, r)| (r / target - 1.0).abs())
            .fold(0.0, f64::max);
        let ratio_ok = err_dev <= COUNTEREXAMPLE_TOLERANCE;
        let fitted = Terms::of(&s, 1, 31).and_then(|t| discover_recurrence(&t));
        let char_ok = fitted
            .as_ref()
            .map(|r| r.characteristic_monic() == characteristic);
        let cert = certificate(&s, &(2..=30).collect::<Vec<_>>()).unwrap();
        let non_integral = cert.iter().filter(|r| !r.integral()).count();
        let cert_ok = non_integral > 0;
        pass &= ratio_ok && char_ok == Ok(true) && cert_ok;
        notes.push(format!(
            "variant {v}: |e_(n+1)/e_n| max deviation {:.2}% ({}), |r_(n+1)/r_n| max deviation {:.2}%, characteristic {}, integrality fails at {}/29 n",
            err_dev * 100.0,
            if ratio_ok { "ok" } else { "over" },
            dev * 100.0,
            match &fitted {
                Ok(r) => format!("{}", r.characteristic_monic()),
                Err(e) => format!("none ({e})"),
            },
            non_integral,
        ));
    }
    outcome(pass, notes.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("table fractions", table_fractions),
        ("table errors", table_errors),
        ("recurrences", recurrences),
        ("wronskian", wronskians),
        ("continued fractions", continued_fractions),
        ("figure grid", figure),
        ("property suites", properties),
        ("asymptotics", asymptotics),
        ("counterexamples", counterexamples),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {} {name}: {} [{:.1}s] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
