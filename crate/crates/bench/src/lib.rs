//! Benchmarks for the group, table and classification layers. Each group
//! is rebuilt per iteration so cached classes and tables are not reused.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use diffclass_core::classify::{central_gagola, gagola_witness, scan_group, verify};
use diffclass_core::{make, FamilySpec, PermGroup};

fn group(spec: &str) -> PermGroup {
    make(&spec.parse::<FamilySpec>().expect("valid spec")).expect("constructible")
}

pub fn construction(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct");
    for spec in ["dihedral 64", "sl2 7", "esp_sdp 5 sl2_3"] {
        g.bench_with_input(BenchmarkId::from_parameter(spec), spec, |b, s| {
            b.iter(|| black_box(group(s).order()))
        });
    }
    g.finish();
}

pub fn classes(c: &mut Criterion) {
    let mut g = c.benchmark_group("classes");
    for spec in ["symmetric 5", "esp_sdp 3 q8", "esp_sdp 5 sl2_3"] {
        g.bench_with_input(BenchmarkId::from_parameter(spec), spec, |b, s| {
            b.iter(|| black_box(group(s).num_classes().unwrap()))
        });
    }
    g.finish();
}

pub fn character_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("character_table");
    g.sample_size(10);
    for spec in ["alternating 5", "sl2 5", "esp_sdp 3 q8", "esp_sdp 5 sl2_3"] {
        g.bench_with_input(BenchmarkId::from_parameter(spec), spec, |b, s| {
            b.iter(|| black_box(group(s).character_table().unwrap().num_classes()))
        });
    }
    g.finish();
}

pub fn classification(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for spec in ["dihedral 16", "sl2 3", "agl1 13", "esp_sdp 3 q8"] {
        g.bench_with_input(BenchmarkId::new("scan_group", spec), spec, |b, s| {
            b.iter(|| black_box(scan_group(&group(s)).unwrap().falsified.len()))
        });
    }
    g.bench_function("thm3.2 dihedral 32", |b| {
        b.iter(|| black_box(verify(&group("dihedral 32"), "thm3.2").unwrap().evaluated))
    });
    g.bench_function("gagola agl1 13", |b| {
        b.iter(|| black_box(gagola_witness(&group("agl1 13")).unwrap().is_some()))
    });
    g.bench_function("central_gagola semidihedral 32", |b| {
        b.iter(|| black_box(central_gagola(&group("semidihedral 32")).unwrap().is_some()))
    });
    g.finish();
}

pub fn benchmarks(c: &mut Criterion) {
    construction(c);
    classes(c);
    character_tables(c);
    classification(c);
}
