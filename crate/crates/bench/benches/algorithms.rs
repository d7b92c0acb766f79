use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use dgroup::derange::derangement_subgroup;
use dgroup::families::{pgammal_28, semilinear_example};
use dgroup::gf::FieldSpec;
use dgroup::matgrp::named;
use dgroup::permgrp::{standard, PermGroup};

fn schreier_sims(c: &mut Criterion) {
    let s8 = standard::symmetric(8);
    let gens = s8.generators().to_vec();
    c.bench_function("schreier_sims S8", |b| b.iter(|| PermGroup::new(8, black_box(gens.clone())).unwrap().order()));
    let g = pgammal_28().unwrap();
    let gens = g.generators().to_vec();
    c.bench_function("schreier_sims PGammaL(2,8) on 28", |b| {
        b.iter(|| PermGroup::new(28, black_box(gens.clone())).unwrap().order())
    });
}

fn derangements(c: &mut Criterion) {
    let g = semilinear_example(5).unwrap();
    c.bench_function("D(G) semilinear q=5", |b| b.iter(|| derangement_subgroup(black_box(&g), 2_000_000).unwrap()));
    let g = pgammal_28().unwrap();
    c.bench_function("D(G) PGammaL(2,8)", |b| b.iter(|| derangement_subgroup(black_box(&g), 2_000_000).unwrap()));
}

fn field_arithmetic(c: &mut Criterion) {
    for (p, f) in [(59u64, 1u32), (2, 8), (3, 5)] {
        let k = FieldSpec::new(p, f).unwrap();
        let q = k.order();
        c.bench_function(&format!("GF({p}^{f}) mul+inv sweep"), |b| {
            b.iter(|| {
                let mut acc = 1;
                for x in 1..q {
                    acc = k.mul(acc, k.inv(x).unwrap());
                }
                black_box(acc)
            })
        });
    }
}

fn r_subgroup(c: &mut Criterion) {
    let gl = named::general_linear(&FieldSpec::new(5, 1).unwrap(), 2);
    c.bench_function("R(H) GL(2,5)", |b| b.iter(|| black_box(&gl).r_subgroup(2_000_000).unwrap()));
    let gl = named::general_linear(&FieldSpec::new(2, 1).unwrap(), 4);
    c.bench_function("R(H) GL(4,2)", |b| b.iter(|| black_box(&gl).r_subgroup(2_000_000).unwrap()));
}

criterion_group!(benches, schreier_sims, derangements, field_arithmetic, r_subgroup);
criterion_main!(benches);
