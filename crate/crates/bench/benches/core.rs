use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use factorlab_bench::{random_qudit, random_states};
use factorlab_core::linalg::herm_eigensystem;
use factorlab_core::measures::{concurrence, ppt_check};
use factorlab_core::protocols::{swap_all, teleport_all, Isometry};
use factorlab_core::witness_bell::{chsh_maximize, horodecki_bmax};

fn eigen(c: &mut Criterion) {
    let mut group = c.benchmark_group("herm_eigensystem");
    for (d1, d2) in [(2, 2), (3, 3), (4, 4)] {
        let states = random_states(8, (d1, d2), 1);
        group.bench_with_input(BenchmarkId::from_parameter(d1 * d2), &states, |b, states| {
            b.iter(|| {
                for s in states {
                    black_box(herm_eigensystem(s.matrix()).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn two_qubit_measures(c: &mut Criterion) {
    let states = random_states(64, (2, 2), 2);
    c.bench_function("concurrence", |b| {
        b.iter(|| states.iter().map(|s| concurrence(s).unwrap()).sum::<f64>())
    });
    c.bench_function("ppt_check", |b| {
        b.iter(|| states.iter().filter(|s| ppt_check(s).is_npt()).count())
    });
    c.bench_function("horodecki_bmax", |b| {
        b.iter(|| states.iter().map(|s| horodecki_bmax(s).unwrap()).sum::<f64>())
    });
    c.bench_function("chsh_maximize", |b| {
        b.iter(|| chsh_maximize(black_box(&states[0]), 3).unwrap())
    });
}

fn protocols(c: &mut Criterion) {
    let mut group = c.benchmark_group("protocols");
    for d in [2, 3] {
        let phi = random_qudit(d, 4);
        group.bench_with_input(BenchmarkId::new("teleport_all", d), &phi, |b, phi| {
            b.iter(|| teleport_all(phi).unwrap())
        });
        let id = Isometry::identity(d);
        group.bench_with_input(BenchmarkId::new("swap_all", d), &id, |b, id| {
            b.iter(|| swap_all(id, id).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, eigen, two_qubit_measures, protocols);
criterion_main!(benches);
