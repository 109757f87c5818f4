use criterion::{black_box, criterion_group, criterion_main, Criterion};
use triring::corpus::standard_corpus;
use triring::{FiniteCommRing, Limits, Trispectrum};

fn triideals(c: &mut Criterion) {
    let limits = Limits::default();
    for ring in standard_corpus(&limits).unwrap() {
        c.bench_function(&format!("triideals/{}", ring.name()), |b| {
            b.iter(|| black_box(&ring).enumerate_triideals(&limits).unwrap())
        });
    }
}

fn spectrum(c: &mut Criterion) {
    let limits = Limits::default();
    for ring in standard_corpus(&limits).unwrap() {
        c.bench_function(&format!("spectrum/{}", ring.name()), |b| {
            b.iter(|| Trispectrum::new(black_box(&ring), &limits).unwrap().len())
        });
    }
}

fn nilradical(c: &mut Criterion) {
    let limits = Limits::default();
    for ring in standard_corpus(&limits).unwrap() {
        c.bench_function(&format!("trinilradical/{}", ring.name()), |b| {
            b.iter(|| black_box(&ring).trinilradical())
        });
    }
}

fn component_ideals(c: &mut Criterion) {
    let limits = Limits::default();
    for n in [16usize, 36, 64] {
        let ring = FiniteCommRing::integers_mod(n).unwrap();
        c.bench_function(&format!("ideals/z{n}"), |b| {
            b.iter(|| black_box(&ring).enumerate_ideals(&limits).unwrap().len())
        });
    }
}

criterion_group!(benches, triideals, spectrum, nilradical, component_ideals);
criterion_main!(benches);
