use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use stringcone::lusztig::antichains;
use stringcone::strings::strings_by_filter;
use stringcone::verify::check_theorem;
use stringcone::{ConeSpec, LusztigCrystal};
use stringcone_bench::{ar, d4, linear_a, orientations_a, strings, wiring};

fn antichain_enumeration(c: &mut Criterion) {
    let a6 = ar(&linear_a(6));
    c.bench_function("antichains A6 all types", |b| {
        b.iter(|| {
            (1..=6)
                .map(|i| antichains(black_box(&a6), i).len())
                .sum::<usize>()
        })
    });
}

fn gp_paths(c: &mut Criterion) {
    let wd = wiring(&linear_a(6));
    c.bench_function("K^GP A6", |b| {
        b.iter(|| black_box(&wd).k_gp().unwrap().len())
    });
}

fn theorem_sweep(c: &mut Criterion) {
    let quivers = orientations_a(5);
    c.bench_function("theorem all A5 orientations", |b| {
        b.iter(|| {
            quivers
                .iter()
                .filter(|q| check_theorem(q, &q.adapted_word(), false).unwrap().pass)
                .count()
        })
    });
}

fn string_sets(c: &mut Criterion) {
    let q = d4();
    let crystal = strings(&q);
    let cone = ConeSpec::new(LusztigCrystal::new(&ar(&q)).moves());
    let mut group = c.benchmark_group("D4 box 1");
    group.sample_size(20);
    group.bench_function("closure", |b| {
        b.iter(|| crystal.generate(black_box(1)).len())
    });
    group.bench_function("filter", |b| {
        b.iter(|| strings_by_filter(&crystal, black_box(1)).len())
    });
    group.bench_function("cone points", |b| {
        b.iter(|| cone.points(12, black_box(1)).unwrap().len())
    });
    group.finish();
}

fn crystal_growth(c: &mut Criterion) {
    let lusztig = LusztigCrystal::new(&ar(&linear_a(4)));
    c.bench_function("Lusztig crystal A4 depth 5", |b| {
        b.iter(|| lusztig.crystal(black_box(5)).unwrap().len())
    });
}

criterion_group!(
    benches,
    antichain_enumeration,
    gp_paths,
    theorem_sweep,
    string_sets,
    crystal_growth
);
criterion_main!(benches);
