//! Compares the rayon-backed scans against their sequential fallbacks on
//! the workloads that dominate real use: exact Hadamard certificates,
//! family equivalence scans, and search restart batches.
//!
//! Run `cargo bench -p skewhad` for the parallel-vs-sequential comparison;
//! with `--no-default-features` only the sequential side is measured.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use skewhad::catalog;
use skewhad::diffsets::families_equivalent_seq;
use skewhad::gsmatrix::{goethals_seidel, verify_block_identity_seq, SignMatrix};
use skewhad::modring::Modulus;
use skewhad::searcher::{search_seq, SearchSpec};

#[cfg(feature = "parallel")]
use skewhad::diffsets::families_equivalent;
#[cfg(feature = "parallel")]
use skewhad::gsmatrix::verify_block_identity;
#[cfg(feature = "parallel")]
use skewhad::searcher::search;

fn entry_matrix(name: &str) -> SignMatrix {
    let entry = catalog::entry(name).expect("catalog name");
    let blocks: Vec<SignMatrix> = entry
        .family
        .blocks()
        .iter()
        .map(SignMatrix::circulant_of_set)
        .collect();
    goethals_seidel(&[
        blocks[0].clone(),
        blocks[1].clone(),
        blocks[2].clone(),
        blocks[3].clone(),
    ])
    .expect("uniform block order")
}

fn entry_blocks(name: &str) -> [SignMatrix; 4] {
    let entry = catalog::entry(name).expect("catalog name");
    let b: Vec<SignMatrix> = entry
        .family
        .blocks()
        .iter()
        .map(SignMatrix::circulant_of_set)
        .collect();
    [b[0].clone(), b[1].clone(), b[2].clone(), b[3].clone()]
}

fn bench_hadamard_certificate(c: &mut Criterion) {
    let mut group = c.benchmark_group("hadamard_certificate");
    for name in ["47-X", "97-U"] {
        let m = entry_matrix(name);
        group.bench_function(format!("seq/{}", m.order()), |b| {
            b.iter(|| black_box(&m).is_hadamard_seq())
        });
        #[cfg(feature = "parallel")]
        group.bench_function(format!("par/{}", m.order()), |b| {
            b.iter(|| black_box(&m).is_hadamard())
        });
    }
    group.finish();
}

fn bench_block_identity(c: &mut Criterion) {
    let mut group = c.benchmark_group("block_identity");
    let blocks = entry_blocks("97-U");
    group.bench_function("seq/97", |b| {
        b.iter(|| verify_block_identity_seq(black_box(&blocks)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par/97", |b| {
        b.iter(|| verify_block_identity(black_box(&blocks)))
    });
    group.finish();
}

fn bench_equivalence_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("equivalence_scan");
    group.sample_size(20);
    // X vs Y triples are inequivalent, so both sides pay for the full scan.
    let x = catalog::entry("47-X").unwrap().triple().unwrap();
    let y = catalog::entry("47-Y").unwrap().triple().unwrap();
    group.bench_function("seq/47-triple", |b| {
        b.iter(|| families_equivalent_seq(black_box(&x), black_box(&y)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par/47-triple", |b| {
        b.iter(|| families_equivalent(black_box(&x), black_box(&y)))
    });
    group.finish();
}

fn bench_search_restarts(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_restarts");
    group.sample_size(10);
    // A batch of bounded descents on the Z_47 triple parameters; budgets are
    // tight enough that the batch runs to exhaustion either way.
    let spec = SearchSpec::new(Modulus::new(47).unwrap(), vec![30, 22, 22], 39)
        .unwrap()
        .with_seed(1)
        .with_restarts(8)
        .with_max_steps(60)
        .with_sideways_limit(0);
    group.bench_function("seq/47-triple", |b| {
        b.iter(|| search_seq(black_box(&spec)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par/47-triple", |b| {
        b.iter(|| search(black_box(&spec)))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_hadamard_certificate,
    bench_block_identity,
    bench_equivalence_scan,
    bench_search_restarts,
);
criterion_main!(benches);
