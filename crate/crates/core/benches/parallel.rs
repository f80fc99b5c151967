//! Sequential versus data-parallel execution of the heavy kernels: codeword
//! enumeration, column-subset search, locality certification and repair
//! campaigns. Parallel runs are repeated for several pool sizes.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use islrc::constructions::{construct1, construct2, ConstructionOptions, Fill};
use islrc::distance::{min_distance_enumerate, min_distance_subsets, DistanceConfig};
use islrc::lrc::check_islrc_with;
use islrc::par::{with_workers, Exec};
use islrc::repair::{campaign, Codec};
use islrc::{FieldSpec, StandardParityCheck};

/// `(label, exec, workers)` for every mode being compared.
fn modes() -> Vec<(String, Exec, Option<usize>)> {
    let mut out = vec![("sequential".to_string(), Exec::Sequential, None)];
    if cfg!(feature = "parallel") {
        for w in [1, 2, 4] {
            out.push((format!("parallel/{w}"), Exec::Parallel, Some(w)));
        }
    }
    out
}

fn code1(p: u32) -> StandardParityCheck {
    construct1(p, 1, &ConstructionOptions::default())
        .unwrap()
        .check
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    let binary = construct2(3, 1, &ConstructionOptions::default())
        .unwrap()
        .check;
    let ternary = construct1(
        2,
        1,
        &ConstructionOptions {
            target: FieldSpec::with_order(7).unwrap(),
            fill: Fill::Random(1),
            ..Default::default()
        },
    )
    .unwrap()
    .check;
    for (name, code) in [("gf2_c2_p3", &binary), ("gf7_c1_p2", &ternary)] {
        for (label, exec, workers) in modes() {
            let cfg = DistanceConfig {
                exec,
                ..Default::default()
            };
            group.bench_with_input(BenchmarkId::new(name, &label), code, |b, code| {
                with_workers(workers, || {
                    b.iter(|| min_distance_enumerate(black_box(code), &cfg).unwrap())
                })
            });
        }
    }
    group.finish();
}

fn subsets(c: &mut Criterion) {
    let mut group = c.benchmark_group("subsets");
    group.sample_size(10);
    let code = code1(5);
    for (label, exec, workers) in modes() {
        let cfg = DistanceConfig {
            exec,
            split_half: false,
            ..Default::default()
        };
        group.bench_with_input(BenchmarkId::new("c1_p5_w6", &label), &code, |b, code| {
            with_workers(workers, || {
                b.iter(|| min_distance_subsets(black_box(code), 6, &cfg).unwrap())
            })
        });
    }
    group.finish();
}

fn locality(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_islrc");
    let code = code1(7);
    for (label, exec, workers) in modes() {
        group.bench_with_input(BenchmarkId::new("c1_p7", &label), &code, |b, code| {
            with_workers(workers, || {
                b.iter(|| check_islrc_with(black_box(code), 7, 7, exec))
            })
        });
    }
    group.finish();
}

fn campaigns(c: &mut Criterion) {
    let mut group = c.benchmark_group("campaign");
    let codec = Codec::new(code1(5), 5, 5).unwrap();
    for (label, exec, workers) in modes() {
        group.bench_with_input(
            BenchmarkId::new("c1_p5_1000", &label),
            &codec,
            |b, codec| {
                with_workers(workers, || {
                    b.iter(|| campaign(black_box(codec), 7, 1000, exec).unwrap())
                })
            },
        );
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().measurement_time(Duration::from_secs(3)).warm_up_time(Duration::from_secs(1));
    targets = enumeration, subsets, locality, campaigns
}
criterion_main!(benches);
