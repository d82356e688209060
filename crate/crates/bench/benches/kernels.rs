use coxreg::arith::Field;
use coxreg::cohomology::{sheaf_cohomology_dim, Stabilization};
use coxreg::groebner::{intersect, saturate, Ideal};
use coxreg::lab::is_l_regular;
use coxreg::resolution::{resolve, GradedModule, Presented};
use coxreg::ring::MultiDegree;
use coxreg_bench::{curve, ring};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn groebner(c: &mut Criterion) {
    let mut g = c.benchmark_group("groebner");
    for (name, field) in [("gf32003", Field::default()), ("qq", Field::Rational)] {
        g.bench_function(BenchmarkId::new("curve basis", name), |b| {
            b.iter(|| curve(field).0.gb().polys.len())
        });
    }
    g.bench_function("saturate five equations", |b| {
        b.iter(|| {
            let (_, five) = curve(Field::default());
            saturate(&five, &Ideal::irrelevant(five.ring()))
        })
    });
    g.bench_function("intersect with y-primary part", |b| {
        b.iter(|| {
            let (six, _) = curve(Field::default());
            let y = Ideal::parse(six.ring(), &["y2^2", "y1*y2", "y1^2 - y0*y2", "y0*y1", "y0^2"]).unwrap();
            intersect(&six, &y)
        })
    });
    g.finish();
}

fn resolutions(c: &mut Criterion) {
    c.bench_function("schreyer resolution of the curve", |b| {
        b.iter(|| resolve(&curve(Field::default()).0, Presented::Quotient, 0).ranks())
    });
}

fn cohomology(c: &mut Criterion) {
    let mut g = c.benchmark_group("cohomology");
    let params = Stabilization::default();
    let r = ring(&[2, 2], Field::default());
    let free = GradedModule::free(&r, MultiDegree::from([3, 0]));
    g.bench_function("free module cell on P2 x P2", |b| {
        b.iter(|| sheaf_cohomology_dim(&free, 2, &MultiDegree::from([0, 0]), params).unwrap())
    });
    let quotient = GradedModule::Quotient(curve(Field::default()).0);
    g.bench_function("curve quotient h^1 at (-2,-2)", |b| {
        b.iter(|| sheaf_cohomology_dim(&quotient, 1, &MultiDegree::from([-2, -2]), params).unwrap())
    });
    g.sample_size(10);
    let ideal = GradedModule::Ideal(curve(Field::default()).0);
    g.bench_function("curve regularity at (1,5)", |b| {
        b.iter(|| {
            is_l_regular(&ideal, &MultiDegree::from([1, 5]), params)
                .unwrap()
                .regular
        })
    });
    g.finish();
}

criterion_group!(benches, groebner, resolutions, cohomology);
criterion_main!(benches);
