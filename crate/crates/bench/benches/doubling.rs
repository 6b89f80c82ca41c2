use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use doublekit::double::{double_matrix_hom, double_module, DoubleContext};
use doublekit::verify::{gen_submodule, run_property, Gen, InstanceSpec};
use doublekit::Submodule;

/// Fresh copies so that cached Gröbner bases are not reused across iterations.
fn fresh(m: &Submodule) -> Submodule {
    Submodule::new(m.ring(), m.rank(), m.generators().to_vec()).unwrap()
}

fn instances(n: u64) -> Vec<Submodule> {
    let spec = InstanceSpec::default();
    (0..n).map(|s| gen_submodule(&spec, s)).collect()
}

fn groebner(c: &mut Criterion) {
    let ms = instances(32);
    c.bench_function("groebner/32 modules", |b| {
        b.iter_batched(
            || ms.iter().map(fresh).collect::<Vec<_>>(),
            |ms| {
                for m in &ms {
                    black_box(m.groebner());
                }
            },
            BatchSize::SmallInput,
        )
    });
    let doubled: Vec<Submodule> = ms
        .iter()
        .map(|m| {
            let ctx = DoubleContext::new(m.ring()).unwrap();
            double_module(&ctx, m).unwrap().into_value()
        })
        .collect();
    c.bench_function("groebner/32 doubled modules", |b| {
        b.iter_batched(
            || doubled.iter().map(fresh).collect::<Vec<_>>(),
            |ms| {
                for m in &ms {
                    black_box(m.groebner());
                }
            },
            BatchSize::SmallInput,
        )
    });
}

fn doubling(c: &mut Criterion) {
    let ms = instances(32);
    c.bench_function("double_module/32 modules", |b| {
        b.iter(|| {
            for m in &ms {
                let ctx = DoubleContext::new(m.ring()).unwrap();
                black_box(double_module(&ctx, m).unwrap());
            }
        })
    });
}

fn kernel(c: &mut Criterion) {
    let spec = InstanceSpec::default();
    let homs: Vec<_> = (0..16)
        .map(|s| {
            let h = Gen::new(&spec, s).hom().hom;
            let ctx = DoubleContext::new(h.domain().ring()).unwrap();
            double_matrix_hom(&ctx, &h).unwrap().into_hom()
        })
        .collect();
    c.bench_function("kernel/16 doubled homs", |b| {
        b.iter(|| {
            for h in &homs {
                black_box(h.kernel());
            }
        })
    });
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    g.bench_function("P3.4-a/20 trials", |b| {
        b.iter(|| run_property("P3.4-a", &InstanceSpec::default(), 20).unwrap())
    });
    g.finish();
}

criterion_group!(benches, groebner, doubling, kernel, suite);
criterion_main!(benches);
