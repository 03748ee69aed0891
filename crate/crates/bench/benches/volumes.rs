use conevol::riley::{build_cone_equation, cone_a, solve_cone_equation};
use conevol::volume::{compute_volume, volume_schlafli, VolumeOptions};
use conevol_bench::{regime_specs, CELLS};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn cone_roots(c: &mut Criterion) {
    let mut g = c.benchmark_group("cone_roots");
    for (family, n) in CELLS {
        g.bench_with_input(BenchmarkId::from_parameter(format!("{family}/{n}")), &(family, n), |b, &(f, n)| {
            b.iter(|| solve_cone_equation(&build_cone_equation(f, n, cone_a(black_box(1.3)))).unwrap())
        });
    }
    g.finish();
}

fn volumes(c: &mut Criterion) {
    let opts = VolumeOptions::default();
    let mut g = c.benchmark_group("volume");
    for (family, n) in CELLS {
        let (hyp, sph) = regime_specs(family, n);
        let id = format!("{family}/{n}");
        g.bench_with_input(BenchmarkId::new("hyperbolic", &id), &hyp, |b, s| {
            b.iter(|| compute_volume(black_box(s), &opts).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("spherical", &id), &sph, |b, s| {
            b.iter(|| compute_volume(black_box(s), &opts).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("schlafli", &id), &hyp, |b, s| {
            b.iter(|| volume_schlafli(black_box(s), &opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, cone_roots, volumes);
criterion_main!(benches);
