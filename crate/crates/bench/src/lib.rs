//! Fixed workloads shared by the benchmarks.

use sadik_core::{linspace, SadikParams};

/// Arguments covering the series, asymptotic and contour regimes of E_{p,q}.
pub const ML_POINTS: [(f64, f64, f64); 4] = [
    (0.5, 1.0, -2.0),
    (0.5, 1.0, -30.0),
    (0.8, 0.8, -7.0),
    (1.5, 1.0, 4.0),
];

pub fn laplace() -> SadikParams {
    SadikParams::laplace()
}

pub fn fractional_params() -> SadikParams {
    SadikParams::numeric(0.5, 1.0).expect("valid parameters")
}

/// Response grid used by the control benchmarks.
pub fn response_grid() -> Vec<f64> {
    linspace(0.1, 5.0, 50)
}
