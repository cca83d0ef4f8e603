use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sadik_bench::{fractional_params, laplace, response_grid, ML_POINTS};
use sadik_core::control::{impulse_response, impulse_response_numeric, TransferFunction};
use sadik_core::fode::adams_oracle;
use sadik_core::fractional::{
    caputo_derivative_with, rl_integral, DerivativeData, FracOptions, FracOrder,
};
use sadik_core::mittag_leffler::ml;
use sadik_core::transform::{forward_known, inverse_numeric, InverseOptions};
use sadik_core::{image_of, KnownFunction};

fn mittag_leffler(c: &mut Criterion) {
    let mut g = c.benchmark_group("ml");
    for (p, q, z) in ML_POINTS {
        g.bench_with_input(
            BenchmarkId::from_parameter(format!("{p},{q},{z}")),
            &z,
            |b, &z| b.iter(|| ml(black_box(p), black_box(q), black_box(z)).unwrap()),
        );
    }
    g.finish();
}

fn fractional_ops(c: &mut Criterion) {
    let mut g = c.benchmark_group("fractional");
    for n in [100, 400, 1600] {
        g.bench_with_input(BenchmarkId::new("rl_integral", n), &n, |b, &n| {
            b.iter(|| rl_integral(f64::sin, black_box(0.5), 2.0, n).unwrap())
        });
    }
    let order = FracOrder::new(0.5).unwrap();
    let opts = FracOptions::default().with_rtol(1e-3);
    g.bench_function("caputo_differenced_200", |b| {
        b.iter(|| {
            caputo_derivative_with(
                f64::sin,
                DerivativeData::Differenced,
                order,
                black_box(2.0),
                200,
                &opts,
            )
            .unwrap()
        })
    });
    g.finish();
}

fn transform(c: &mut Criterion) {
    let f = KnownFunction::Sine(2.0);
    let p = fractional_params();
    c.bench_function("forward_known/sin2", |b| {
        b.iter(|| forward_known(&f, &p, black_box(2.0)).unwrap())
    });
    let img = image_of(&f).unwrap();
    let opts = InverseOptions::default();
    c.bench_function("inverse_numeric/sin2", |b| {
        b.iter(|| inverse_numeric(&img, &p, black_box(1.3), &opts).unwrap())
    });
}

fn fode(c: &mut Criterion) {
    let mut g = c.benchmark_group("adams_oracle");
    g.sample_size(10);
    for h in [1e-2, 1e-3] {
        g.bench_with_input(BenchmarkId::from_parameter(h), &h, |b, &h| {
            b.iter(|| adams_oracle(0.7, |_, y| 3.0 * y, 1.0, h, 1.0).unwrap())
        });
    }
    g.finish();
}

fn control(c: &mut Criterion) {
    let grid = response_grid();
    c.bench_function("impulse_closed/50", |b| {
        b.iter(|| impulse_response(1.0, 1.0, 0.6, &grid).unwrap())
    });
    let tf = TransferFunction::new(vec![(1.0, 1.2), (0.5, 0.6), (1.0, 0.0)]).unwrap();
    let opts = InverseOptions::default();
    c.bench_function("impulse_numeric_three_term/50", |b| {
        b.iter(|| impulse_response_numeric(&tf, &laplace(), &grid, &opts).unwrap())
    });
}

criterion_group!(
    benches,
    mittag_leffler,
    fractional_ops,
    transform,
    fode,
    control
);
criterion_main!(benches);
