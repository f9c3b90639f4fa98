use criterion::{black_box, criterion_group, criterion_main, Criterion};
use num_bigint::BigInt;
use pytree_bench::{descent_primes, sample_words};
use pytree_core::{
    children, lagrange_descent, level_iter, locate, node_at, root_triple_for_difference,
    triples_with_hypotenuse_at_most, word_for, ChildKind, TreePath,
};

fn bench_level_enumeration(c: &mut Criterion) {
    c.bench_function("level_iter depth 9 (19683 nodes)", |b| {
        b.iter(|| level_iter(black_box(9)).count())
    });
}

fn bench_child_maps(c: &mut Criterion) {
    let deep = node_at(&TreePath::new(vec![ChildKind::UPlus; 64]));
    c.bench_function("children at level 64", |b| {
        b.iter(|| children(black_box(&deep)))
    });
    c.bench_function("locate from level 64", |b| {
        b.iter(|| locate(black_box(&deep)))
    });
}

fn bench_word_evaluation(c: &mut Criterion) {
    let words = sample_words(64, 48, 7);
    c.bench_function("evaluate 64 words of 48 syllables", |b| {
        b.iter(|| {
            for w in &words {
                black_box(w.evaluate());
            }
        })
    });
    let path = TreePath::new((0..96).map(|i| ChildKind::ALL[i % 3]).collect::<Vec<_>>());
    c.bench_function("word_for on a 96-step path", |b| {
        b.iter(|| word_for(black_box(&path)))
    });
}

fn bench_descent(c: &mut Criterion) {
    let primes = descent_primes(2_000);
    c.bench_function("descent+reconstruct, primes 1 mod 8 below 2000", |b| {
        b.iter(|| {
            for &p in &primes {
                black_box(lagrange_descent(p).unwrap().reconstruct());
            }
        })
    });
    c.bench_function("root triple for difference -8009", |b| {
        b.iter(|| root_triple_for_difference(black_box(-8009)).unwrap())
    });
}

fn bench_bounded_enumeration(c: &mut Criterion) {
    c.bench_function("all triples with hypotenuse <= 1e5", |b| {
        b.iter(|| triples_with_hypotenuse_at_most(&BigInt::from(100_000)).len())
    });
}

criterion_group!(
    benches,
    bench_level_enumeration,
    bench_child_maps,
    bench_word_evaluation,
    bench_descent,
    bench_bounded_enumeration
);
criterion_main!(benches);
