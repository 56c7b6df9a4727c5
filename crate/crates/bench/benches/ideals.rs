use criterion::{criterion_group, criterion_main, Criterion};
use hopfideal_bench::random_elements;
use hopfideal_core::catalog;
use hopfideal_core::ideals::{
    annihilator_formula_m, annihilator_oracle, enumerate_ideals, DEFAULT_CAP,
};
use hopfideal_core::modules::build_m;
use hopfideal_core::Ideal;

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("principal_closure");
    for (name, d) in [
        ("klein", catalog::klein()),
        ("taft5", catalog::taft(5)),
        ("z9_nonnilpotent", catalog::z9_non_nilpotent()),
    ] {
        let xs = random_elements(&d, 4);
        group.bench_function(name, |b| {
            b.iter(|| {
                for x in &xs {
                    Ideal::from_elements(&d, std::slice::from_ref(x)).unwrap();
                }
            })
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let d = catalog::klein();
    c.bench_function("enumerate_klein", |b| {
        b.iter(|| enumerate_ideals(&d, DEFAULT_CAP).unwrap())
    });
}

fn annihilators(c: &mut Criterion) {
    let d = catalog::taft(4);
    let module = build_m(&d, 2, 1).unwrap();
    c.bench_function("ann_formula_taft4", |b| {
        b.iter(|| annihilator_formula_m(&d, 2, 1).unwrap())
    });
    c.bench_function("ann_oracle_taft4", |b| {
        b.iter(|| annihilator_oracle(&module).unwrap())
    });
}

criterion_group!(benches, closure, enumeration, annihilators);
criterion_main!(benches);
