use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gorbetti_bench::{bound_inputs, example1};
use gorbetti_core::binomial::macaulay_bound;
use gorbetti_core::hvector::{enumerate_symmetric_osequences, forbidden_nu, EnumerationLimits};
use gorbetti_core::pfaffian::{codim3_experiment, default_profiles};
use gorbetti_core::polyring::{hilbert_function, PrimeField, Rationals};
use gorbetti_core::resolution::koszul_betti;

fn binomial(c: &mut Criterion) {
    let inputs = bound_inputs();
    c.bench_function("macaulay_bound", |b| {
        b.iter(|| {
            for (h, j) in &inputs {
                black_box(macaulay_bound(h, *j));
            }
        })
    });
    c.bench_function("forbidden_nu(4,4)", |b| b.iter(|| forbidden_nu(black_box(4), 4).unwrap()));
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for (gg, p) in [(3, 3), (4, 3)] {
        g.bench_function(format!("g{gg}_p{p}_s8"), |b| {
            b.iter(|| enumerate_symmetric_osequences(gg, p, 8, EnumerationLimits::default()).unwrap())
        });
    }
    g.finish();
}

fn example(c: &mut Criterion) {
    let mut g = c.benchmark_group("example1");
    g.sample_size(10);
    let fp = example1(&PrimeField::default());
    let q = example1(&Rationals);
    g.bench_function("hilbert_function_fp", |b| b.iter(|| hilbert_function(&fp, 9)));
    g.bench_function("betti_fp", |b| b.iter(|| koszul_betti(&fp, 11).unwrap()));
    g.bench_function("betti_q", |b| b.iter(|| koszul_betti(&q, 11).unwrap()));
    g.finish();
}

fn pfaffian(c: &mut Criterion) {
    let mut g = c.benchmark_group("pfaffian");
    g.sample_size(10);
    let f = PrimeField::default();
    let profiles = default_profiles();
    g.bench_function("experiment_22_trials", |b| {
        b.iter(|| codim3_experiment(&f, 22, &profiles, 9).unwrap())
    });
    g.finish();
}

criterion_group!(benches, binomial, enumeration, example, pfaffian);
criterion_main!(benches);
