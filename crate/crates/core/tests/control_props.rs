use sadik_core::control::*;
use sadik_core::fractional::{
    caputo_derivative_with, rl_integral_with, DerivativeData, FracOptions, FracOrder,
};
use sadik_core::transform::{
    convolve_images, final_value, image_of, InverseOptions, KnownFunction,
};
use sadik_core::{linspace, SadikParams};

fn params(a: f64, b: f64) -> SadikParams {
    SadikParams::numeric(a, b).unwrap()
}

#[test]
fn numeric_impulse_matches_closed_form() {
    let grid = linspace(0.2, 3.0, 29);
    for &g in &[0.5, 0.6, 0.8, 1.0] {
        let tf = TransferFunction::two_term(1.0, g, 1.0).unwrap();
        let closed = impulse_response(1.0, 1.0, g, &grid).unwrap();
        for &(a, b) in &[(1.0, 0.0), (0.5, 1.0), (2.0, -1.0)] {
            let num =
                impulse_response_numeric(&tf, &params(a, b), &grid, &InverseOptions::default())
                    .unwrap();
            for ((t, x), y) in num.iter().zip(closed.y()) {
                assert!(
                    (x - y).abs() < 1e-4 * y.abs(),
                    "g={g} a={a} b={b} t={t}: {x} vs {y}"
                );
            }
        }
    }
}

#[test]
fn classical_first_order_system() {
    let tf = TransferFunction::new(vec![(1.0, 1.0), (1.0, 0.0)]).unwrap();
    let grid = linspace(0.1, 5.0, 50);
    let num = impulse_response_numeric(
        &tf,
        &SadikParams::laplace(),
        &grid,
        &InverseOptions::default(),
    )
    .unwrap();
    for (t, y) in num.iter() {
        assert!((y - (-t).exp()).abs() < 1e-6, "t={t}");
    }
    // γ = 1 closed forms against the classics, r = 2, d = 3
    let imp = impulse_response(2.0, 3.0, 1.0, &grid).unwrap();
    let step = step_response(2.0, 3.0, 1.0, &grid).unwrap();
    for ((t, i), s) in imp.iter().zip(step.y()) {
        assert!((i - (-1.5 * t).exp() / 2.0).abs() < 1e-6);
        assert!((s - (1.0 - (-1.5 * t).exp()) / 3.0).abs() < 1e-6);
    }
}

#[test]
fn three_term_system_self_converges() {
    let tf = TransferFunction::new(vec![(1.0, 1.2), (0.5, 0.6), (1.0, 0.0)]).unwrap();
    let grid = linspace(0.2, 3.0, 15);
    let opts = InverseOptions {
        rtol: 1e-4,
        ..InverseOptions::default()
    };
    let a = impulse_response_numeric(&tf, &SadikParams::laplace(), &grid, &opts).unwrap();
    let b = impulse_response_numeric(&tf, &params(0.5, 2.0), &grid, &opts).unwrap();
    for (x, y) in a.y().iter().zip(b.y()) {
        assert!((x - y).abs() < 1e-6 * (1.0 + y.abs()));
    }
    // its step response integrates the impulse
    let s = step_response_numeric(&tf, &SadikParams::laplace(), &[2.0], &opts).unwrap();
    let fine = linspace(0.001, 2.0, 2000);
    let imp = impulse_response_numeric(&tf, &SadikParams::laplace(), &fine, &opts).unwrap();
    let trap: f64 = imp
        .y()
        .windows(2)
        .map(|w| 0.5 * (w[0] + w[1]) * (fine[1] - fine[0]))
        .sum();
    assert!((s.y()[0] - trap).abs() < 2e-3, "{} vs {trap}", s.y()[0]);
}

#[test]
fn step_is_integral_of_impulse() {
    for &g in &[0.5, 0.8] {
        for &t in &[0.5, 1.0, 2.0] {
            let imp = |x: f64| impulse_response(1.0, 1.0, g, &[x]).unwrap().y()[0];
            let int = rl_integral_with(imp, 1.0, t, 400, &FracOptions::graded(2.0 / g)).unwrap();
            let step = step_response(1.0, 1.0, g, &[t]).unwrap().y()[0];
            assert!((int - step).abs() < 1e-4, "g={g} t={t}: {int} vs {step}");
        }
    }
}

#[test]
fn step_response_solves_the_equation() {
    for &g in &[0.5, 0.8] {
        for &(r, d) in &[(1.0, 1.0), (2.0, 0.5)] {
            let phi = |x: f64| step_response(r, d, g, &[x]).unwrap().y()[0];
            for &t in &[0.5, 1.0, 2.0] {
                let dphi = caputo_derivative_with(
                    phi,
                    DerivativeData::Differenced,
                    FracOrder::new(g).unwrap(),
                    t,
                    200,
                    &FracOptions::default().with_rtol(1e-2),
                )
                .unwrap();
                let residual = r * dphi + d * phi(t) - 1.0;
                assert!(residual.abs() < 2e-3, "g={g} r={r} d={d} t={t}: {residual}");
            }
        }
    }
}

#[test]
fn step_settles_at_one_over_d() {
    for &g in &[0.8, 1.0] {
        let s = step_response(1.0, 1.0, g, &[50.0]).unwrap().y()[0];
        assert!((s - 1.0).abs() < 2e-2, "g={g}: {s}");
    }
    // the algebraic tail of E_{1/2} keeps γ = 1/2 far slower: 1 − E_{1/2}(−√50)
    let s = step_response(1.0, 1.0, 0.5, &[50.0]).unwrap().y()[0];
    assert!((s - 0.920986611797228).abs() < 1e-10);
    // the value theorem on K·S[1] still gives 1/d
    for &g in &[0.5, 0.8, 1.0] {
        let d = 4.0;
        let k = TransferFunction::two_term(1.0, g, d)
            .unwrap()
            .impulse_image()
            .unwrap();
        let img = convolve_images(&k, &image_of(&KnownFunction::One).unwrap());
        let fv = final_value(&img, &params(1.0, 0.0)).unwrap();
        assert!((fv - 1.0 / d).abs() < 1e-4, "g={g}: {fv}");
    }
}
