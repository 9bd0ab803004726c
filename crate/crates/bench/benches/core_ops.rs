//! Benchmarks for the hot paths: closing a generator set, saturating a
//! two-sided ideal, evaluating a full character table, enumerating diagrams,
//! and the order-embedding plus longest-bad-sequence machinery.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ydeal_core::{
    character, character_table, closure, embed_in_product, enumerate_diagrams, ideal_generated,
    max_bad_length, central_idempotent, Diagram, DiagramSet, SizeRange, UpSet,
};

fn diagram(rows: &[i64]) -> Diagram {
    Diagram::new(rows).expect("valid rows")
}

fn non_closed_generators() -> DiagramSet {
    [diagram(&[4, 2]), diagram(&[2, 2, 1, 1])].into_iter().collect()
}

fn bench_closure(c: &mut Criterion) {
    let gens = non_closed_generators();
    c.bench_function("closure/minimal-generators", |b| {
        b.iter(|| closure(black_box(&gens)).expect("nonempty"))
    });

    let upset = UpSet::generated_by(non_closed_generators()).expect("nonempty");
    c.bench_function("closure/non-closed-witness", |b| {
        b.iter(|| black_box(&upset).non_closed_witness())
    });
}

fn bench_ideal(c: &mut Criterion) {
    let generator = central_idempotent(&diagram(&[2, 2]));
    c.bench_function("ideal/saturation-degree-4", |b| {
        b.iter(|| ideal_generated(black_box(std::slice::from_ref(&generator))).expect("one generator"))
    });
}

fn bench_characters(c: &mut Criterion) {
    let shapes = enumerate_diagrams(5, SizeRange::Exact);
    c.bench_function("characters/all-values-degree-5", |b| {
        b.iter(|| {
            let mut sum = 0i64;
            for shape in &shapes {
                for class in &shapes {
                    sum += character(black_box(shape), black_box(class)).expect("same size");
                }
            }
            sum
        })
    });
    c.bench_function("characters/cached-table-degree-5", |b| {
        b.iter(|| character_table(black_box(5)))
    });
}

fn bench_diagrams(c: &mut Criterion) {
    c.bench_function("diagrams/enumerate-up-to-size-12", |b| {
        b.iter(|| enumerate_diagrams(black_box(12), SizeRange::UpTo))
    });
}

fn bench_wpo(c: &mut Criterion) {
    let pool = enumerate_diagrams(6, SizeRange::UpTo);
    c.bench_function("wpo/product-embedding-size-6", |b| {
        b.iter(|| {
            for d in &pool {
                let m = d.first_row() + 2;
                let n = d.rows().len() as u32 + 2;
                embed_in_product(black_box(d), m, n).expect("room on both sides");
            }
        })
    });
    c.bench_function("wpo/longest-bad-size-5", |b| {
        b.iter(|| max_bad_length(black_box(5)))
    });
}

criterion_group!(
    benches,
    bench_closure,
    bench_ideal,
    bench_characters,
    bench_diagrams,
    bench_wpo
);
criterion_main!(benches);
