use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use zeta3_bench::table_sources;
use zeta3_core::contfrac::{icf2, icf2_scales, IrregularCF};
use zeta3_core::exact::int;
use zeta3_core::families::approximant;
use zeta3_core::recurrence::{discover_recurrence, recurrence_closed_form_12, Terms};
use zeta3_core::{FamilyParams, Source};

fn build(c: &mut Criterion) {
    let mut g = c.benchmark_group("approximant");
    for (name, source) in table_sources() {
        for n in [10u64, 50] {
            g.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| approximant(black_box(&source), n).unwrap())
            });
        }
    }
    g.finish();
}

fn fractions(c: &mut Criterion) {
    let source = Source::Family(FamilyParams::theta(1, 2).unwrap());
    let t = Terms::of(&source, 1, 30).unwrap();
    let mut p = vec![int(0)];
    let mut q = vec![int(1)];
    p.extend(t.p.iter().cloned());
    q.extend(t.q.iter().cloned());
    let scales = icf2_scales(&recurrence_closed_form_12(2).unwrap(), 30);
    c.bench_function("cf/from_convergents_30", |b| {
        b.iter(|| IrregularCF::from_convergents(black_box(&p), black_box(&q)).unwrap())
    });
    let raw = IrregularCF::from_convergents(&p, &q).unwrap();
    c.bench_function("cf/transform_30", |b| {
        b.iter(|| raw.equivalence_transform(black_box(&scales)).unwrap())
    });
    c.bench_function("cf/icf2_30", |b| b.iter(|| icf2(black_box(30))));
}

fn recurrences(c: &mut Criterion) {
    let mut g = c.benchmark_group("recurrence");
    g.sample_size(10);
    let source = Source::Family(FamilyParams::rho(1, 2).unwrap());
    let terms = Terms::of(&source, 1, 31).unwrap();
    g.bench_function("discover_rho2", |b| {
        b.iter(|| discover_recurrence(black_box(&terms)).unwrap())
    });
    g.finish();
}

criterion_group!(benches, build, fractions, recurrences);
criterion_main!(benches);
