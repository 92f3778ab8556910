use criterion::{black_box, criterion_group, criterion_main, Criterion};
use transversal_core::generators::{cyclic_boundary, gamma_nk, sphere_d};
use transversal_core::{are_isomorphic, parse_complex, serialize_complex, Validation};

fn build(c: &mut Criterion) {
    c.bench_function("build/cyclic-30-6", |b| b.iter(|| cyclic_boundary(black_box(30), 6).unwrap()));
    c.bench_function("build/D-30-5", |b| b.iter(|| sphere_d(black_box(30), 5).unwrap()));
    c.bench_function("build/gamma-20-3", |b| b.iter(|| gamma_nk(black_box(20), 3).unwrap()));
}

fn checks(c: &mut Criterion) {
    let s = cyclic_boundary(20, 5).unwrap();
    c.bench_function("check/pseudomanifold-cyclic-20-5", |b| b.iter(|| black_box(&s).is_closed_pseudomanifold()));
    c.bench_function("check/eulerian-cyclic-20-5", |b| b.iter(|| black_box(&s).is_eulerian()));
    let d = sphere_d(10, 3).unwrap();
    let e = cyclic_boundary(10, 4).unwrap();
    c.bench_function("iso/D-vs-cyclic-10", |b| b.iter(|| are_isomorphic(black_box(&d), black_box(&e))));
}

fn io(c: &mut Criterion) {
    let s = cyclic_boundary(30, 6).unwrap();
    let text = serialize_complex(&s, "cyclic");
    c.bench_function("io/serialize-cyclic-30-6", |b| b.iter(|| serialize_complex(black_box(&s), "cyclic")));
    c.bench_function("io/parse-cyclic-30-6", |b| {
        b.iter(|| parse_complex(black_box(&text), Validation::Strict).unwrap())
    });
}

criterion_group!(benches, build, checks, io);
criterion_main!(benches);
