use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hurwitz_core::bsgs::{group_order, Budget};
use hurwitz_core::ff::{Field, FieldElement};
use hurwitz_core::forms::invariant_trilinear;
use hurwitz_core::matlin::{absolutely_irreducible, similarity_invariants};
use hurwitz_core::seeds::{self, Family};
use hurwitz_core::tensor::{fixed_dims, induced_action, FunctorKind};

fn field_mul(c: &mut Criterion) {
    let f = Field::of_order(64).unwrap();
    c.bench_function("gf64_mul_all_pairs", |b| {
        b.iter(|| {
            let mut acc = 0;
            for x in f.elements() {
                for y in f.elements() {
                    acc ^= f.mul(black_box(x), black_box(y));
                }
            }
            acc
        })
    });
}

fn linear_algebra(c: &mut Criterion) {
    let f = Field::of_order(25).unwrap();
    let t = seeds::build(Family::G2Odd, Some(&seeds::search_r(Family::G2Odd, &f).unwrap())).unwrap();
    c.bench_function("similarity_invariants_7x7_gf25", |b| b.iter(|| similarity_invariants(black_box(&t.xy)).unwrap()));
    c.bench_function("burnside_7x7_gf25", |b| b.iter(|| absolutely_irreducible(black_box(&t.gens())).unwrap()));
}

fn tensors(c: &mut Criterion) {
    let f = Field::of_order(11).unwrap();
    let t = seeds::g2_odd(&FieldElement::new(&f, 0)).unwrap();
    c.bench_function("induced_ext3dual_7", |b| b.iter(|| induced_action(black_box(&t.x), FunctorKind::ExtCubeDual).unwrap()));
    c.bench_function("scott_conj_7", |b| b.iter(|| fixed_dims(&t.x, &t.y, FunctorKind::ConjMat).unwrap()));
    c.bench_function("invariant_trilinear_7", |b| b.iter(|| invariant_trilinear(black_box(&t.gens())).unwrap()));
}

fn orders(c: &mut Criterion) {
    let j2 = seeds::j2_generators();
    let mut g = c.benchmark_group("group_order");
    g.sample_size(10);
    g.bench_function("j2", |b| b.iter(|| group_order(&j2.gens(), 42, &Budget::default()).unwrap()));
    g.finish();
}

criterion_group!(benches, field_mul, linear_algebra, tensors, orders);
criterion_main!(benches);
