//! Benchmarks for the data-parallel hot paths.
//!
//! The crate's `parallel` feature (on by default) fans the outer δ-sums
//! and enumeration sweeps over rayon; compare the two modes with
//!
//! ```text
//! cargo bench -p lrspin
//! cargo bench -p lrspin --no-default-features
//! ```
//!
//! Bench names carry the active mode so the two runs line up.

use criterion::{criterion_group, criterion_main, Criterion};
use lrspin::branching::{self, BranchingQuery, Group, Method};
use lrspin::genexp;
use lrspin::partition::{enumerate_partitions, Partition};
use lrspin::separation::separate;
use lrspin::spinor::enumerate_lrd;
use std::hint::black_box;

fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn bench_branch_flagged(c: &mut Criterion) {
    let q = BranchingQuery::new(
        8,
        p(&[5, 4, 4, 3, 2, 2]),
        p(&[2, 2, 2, 1, 1]),
        Group::O,
    )
    .unwrap();
    c.bench_function(&format!("branch_flagged_n8/{}", mode()), |b| {
        b.iter(|| branching::multiplicity(black_box(&q), Method::Flagged).unwrap())
    });
}

fn bench_branch_barred_sweep(c: &mut Criterion) {
    let instances: Vec<BranchingQuery> = enumerate_partitions(7, 6)
        .into_iter()
        .filter(|l| l.size() == 7 || l.size() == 6)
        .map(|l| BranchingQuery::new(6, l, p(&[1]), Group::O))
        .filter_map(Result::ok)
        .collect();
    c.bench_function(&format!("branch_barred_sweep_n6/{}", mode()), |b| {
        b.iter(|| {
            instances
                .iter()
                .map(|q| branching::multiplicity(q, Method::Barred).unwrap())
                .sum::<usize>()
        })
    });
}

fn bench_direct_enumeration(c: &mut Criterion) {
    let mu = p(&[2, 2, 2, 1, 1]);
    let lambda = p(&[5, 4, 4, 3, 2, 2]);
    c.bench_function(&format!("enumerate_direct_n8/{}", mode()), |b| {
        b.iter(|| enumerate_lrd(black_box(&mu), black_box(&lambda), 8).len())
    });
}

fn bench_separation(c: &mut Criterion) {
    let mu = p(&[4, 3, 3, 2]);
    let lambda = p(&[6, 5, 5, 4, 1, 1, 1, 1]);
    let elements = enumerate_lrd(&mu, &lambda, 8);
    assert!(!elements.is_empty());
    c.bench_function(&format!("separate_n8/{}", mode()), |b| {
        b.iter(|| {
            elements
                .iter()
                .map(|e| separate(e, None).unwrap().delta.size())
                .sum::<usize>()
        })
    });
}

fn bench_genexp(c: &mut Criterion) {
    let mu = p(&[2, 1]);
    c.bench_function(&format!("k_so_odd_rank3/{}", mode()), |b| {
        b.iter(|| genexp::k_so_odd(black_box(&mu), 3).unwrap())
    });
}

criterion_group!(
    benches,
    bench_branch_flagged,
    bench_branch_barred_sweep,
    bench_direct_enumeration,
    bench_separation,
    bench_genexp
);
criterion_main!(benches);
