use bistone::bitop::{dspec, stone_space_from_poset};
use bistone::corpus::unlabeled_posets;
use bistone::duality::{counit_roundtrip, unit_roundtrip};
use bistone::ideals::{prime_d_ideals_brute, prime_d_ideals_structural};
use bistone::{birkhoff, find_lattice_iso, lambda, FinitePoset};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

/// Two five-point posets at opposite ends of the generation order.
fn samples() -> Vec<(&'static str, FinitePoset)> {
    let mut ps = unlabeled_posets(5);
    let last = ps.pop().unwrap();
    vec![("first", ps.swap_remove(0)), ("last", last)]
}

fn primes(c: &mut Criterion) {
    let mut g = c.benchmark_group("prime_d_ideals");
    for (name, p) in samples() {
        let a = lambda(&birkhoff(&p)).unwrap();
        g.bench_with_input(BenchmarkId::new("structural", name), &a, |b, a| b.iter(|| prime_d_ideals_structural(black_box(a))));
        g.bench_with_input(BenchmarkId::new("brute", name), &a, |b, a| b.iter(|| prime_d_ideals_brute(black_box(a))));
    }
    g.finish();
}

fn spectra(c: &mut Criterion) {
    let mut g = c.benchmark_group("duality");
    for (name, p) in samples() {
        let a = lambda(&birkhoff(&p)).unwrap();
        let x = stone_space_from_poset(&p);
        g.bench_with_input(BenchmarkId::new("dspec", name), &a, |b, a| b.iter(|| dspec(black_box(a)).unwrap()));
        g.bench_with_input(BenchmarkId::new("unit_roundtrip", name), &a, |b, a| {
            b.iter(|| unit_roundtrip(black_box(a)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("counit_roundtrip", name), &x, |b, x| {
            b.iter(|| counit_roundtrip(black_box(x)).unwrap())
        });
    }
    g.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut g = c.benchmark_group("find_lattice_iso");
    for (name, p) in samples() {
        let l = birkhoff(&p);
        let m = birkhoff(&p.dual()).dual();
        g.bench_function(name, |b| b.iter(|| find_lattice_iso(black_box(&l), black_box(&m))));
    }
    g.finish();
}

criterion_group!(benches, primes, spectra, isomorphism);
criterion_main!(benches);
