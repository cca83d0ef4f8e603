//! Bromwich-integral inversion on a Talbot-type cotangent contour.
//!
//! The contour is
//!
//! ```text
//! s(θ) = σ + μ·(−0.6122 + 0.5017·θ·cot(0.6407·θ) + 0.2645·i·θ),  −π < θ < π
//! ```
//!
//! sampled with the midpoint trapezoid rule. With μ = N/t the rule converges
//! geometrically in N for images analytic off the negative real axis. Poles
//! elsewhere are handled by shifting σ right of every singularity and, when
//! a singularity sits high in the plane, enlarging μ (and N with it) until
//! the contour wraps it.

use num_complex::Complex64;

use crate::error::{Result, SadikError};

const C_SHIFT: f64 = -0.6122;
const C_COT: f64 = 0.5017;
const C_ARG: f64 = 0.6407;
const C_IMAG: f64 = 0.2645;

// Contour parameter at which the highest singularity may sit; keeping it
// well inside the flat part of the contour keeps the trapezoid rule fast.
const MAX_POLE_THETA: f64 = 0.6;

#[derive(Debug, Clone)]
pub struct ContourOptions {
    /// Base node count N; the refinement check uses 2N on the same contour.
    pub nodes: usize,
    /// Relative agreement demanded between the N and 2N estimates.
    pub rtol: f64,
    /// Absolute floor for the agreement test near zeros of f.
    pub atol: f64,
    /// Singularities of F(s) other than the branch cut on (−∞, 0].
    pub singularities: Vec<Complex64>,
    /// Upper bound for the refined node count.
    pub max_nodes: usize,
}

impl Default for ContourOptions {
    fn default() -> Self {
        Self {
            nodes: 32,
            rtol: 1e-5,
            atol: 1e-10,
            singularities: Vec::new(),
            max_nodes: 400,
        }
    }
}

impl ContourOptions {
    pub fn with_singularities(mut self, singularities: Vec<Complex64>) -> Self {
        self.singularities = singularities;
        self
    }
}

/// Real part of the dimensionless contour at parameter θ.
fn contour_re(theta: f64) -> f64 {
    if theta == 0.0 {
        return C_SHIFT + C_COT / C_ARG;
    }
    C_SHIFT + C_COT * theta / (C_ARG * theta).tan()
}

/// Contour geometry (σ, μ, N) for time `t`.
#[derive(Debug, Clone, Copy)]
pub struct ContourPlan {
    pub sigma: f64,
    pub mu: f64,
    pub nodes: usize,
}

/// Chooses σ, μ and N so that every singularity lies strictly inside the
/// contour (to its left).
pub fn plan(t: f64, nodes: usize, singularities: &[Complex64]) -> ContourPlan {
    let sigma = singularities.iter().map(|z| z.re).fold(0.0, f64::max);
    let mut mu = nodes as f64 / t;
    let inside = |mu: f64| {
        singularities.iter().all(|z| {
            let x = z.re - sigma;
            let y = z.im.abs();
            if y == 0.0 {
                return true;
            }
            let theta = y / (C_IMAG * mu);
            theta <= MAX_POLE_THETA && mu * contour_re(theta) >= x + 0.25 * y
        })
    };
    let base = mu;
    let mut guard = 0;
    while !inside(mu) && guard < 200 {
        mu *= 1.1;
        guard += 1;
    }
    let n = if mu > base {
        nodes.max((1.25 * mu * t).ceil() as usize)
    } else {
        nodes
    };
    ContourPlan {
        sigma,
        mu,
        nodes: n + n % 2,
    }
}

/// Trapezoid sum of the Bromwich integral at `t` for a fixed plan.
pub fn bromwich_sum<F>(f: &F, t: f64, plan: &ContourPlan) -> f64
where
    F: Fn(Complex64) -> Complex64,
{
    let n = plan.nodes;
    let mut acc = 0.0;
    for j in 0..n / 2 {
        let theta = (2 * j + 1) as f64 * std::f64::consts::PI / n as f64;
        let at = C_ARG * theta;
        let (sin_at, cos_at) = at.sin_cos();
        let cot = cos_at / sin_at;
        let s = Complex64::new(
            plan.sigma + plan.mu * (C_SHIFT + C_COT * theta * cot),
            plan.mu * C_IMAG * theta,
        );
        let ds = Complex64::new(
            plan.mu * C_COT * (cot - at / (sin_at * sin_at)),
            plan.mu * C_IMAG,
        );
        let g = (s * t).exp() * f(s) * ds;
        acc += g.im;
    }
    2.0 * acc / n as f64
}

/// Inverts the Laplace image `f` at time `t > 0`, comparing N and 2N nodes.
pub fn invert_laplace<F>(f: F, t: f64, opts: &ContourOptions) -> Result<f64>
where
    F: Fn(Complex64) -> Complex64,
{
    if !(t > 0.0) || !t.is_finite() {
        return Err(SadikError::InvalidParams(format!(
            "inversion time must be positive, got {t}"
        )));
    }
    let coarse = plan(t, opts.nodes, &opts.singularities);
    // refine the trapezoid rule on the same contour
    let fine = ContourPlan {
        nodes: (2 * coarse.nodes).min(opts.max_nodes.max(coarse.nodes + 2)),
        ..coarse
    };
    let a = bromwich_sum(&f, t, &coarse);
    let b = bromwich_sum(&f, t, &fine);
    if !a.is_finite() || !b.is_finite() {
        return Err(SadikError::ContourFailure(format!(
            "non-finite contour sum at t = {t}"
        )));
    }
    let diff = (a - b).abs();
    if diff > opts.rtol * b.abs().max(opts.atol) {
        return Err(SadikError::ContourFailure(format!(
            "N = {} and N = {} disagree at t = {t}: {a:e} vs {b:e}",
            coarse.nodes, fine.nodes
        )));
    }
    Ok(b)
}
