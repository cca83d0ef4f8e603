//! Linear Caputo fractional ODEs: closed Mittag-Leffler solutions and an
//! independent fractional Adams–Bashforth–Moulton oracle.

use std::fmt;

use crate::error::{Result, SadikError};
use crate::fractional::rl_integral;
use crate::image::TransformImage;
use crate::mittag_leffler::ml;
use crate::signal::SampledSignal;
use crate::special::gamma;
use crate::transform::{image_of, KnownFunction, Sign};

/// Past this magnitude the oracle gives up.
pub const OVERFLOW_LIMIT: f64 = 1e12;

fn check_gamma(g: f64) -> Result<()> {
    if g > 0.0 && g <= 1.0 {
        Ok(())
    } else {
        Err(SadikError::InvalidOrder(g))
    }
}

/// ᶜD^γ y − b·y = 0, y(0) = y0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelaxationProblem {
    pub gamma: f64,
    pub b: f64,
    pub y0: f64,
}

impl RelaxationProblem {
    /// `gamma` may be 1, where the problem is the ordinary y' = b·y.
    pub fn new(gamma: f64, b: f64, y0: f64) -> Result<Self> {
        check_gamma(gamma)?;
        if !b.is_finite() || !y0.is_finite() {
            return Err(SadikError::InvalidParams(format!(
                "rate and initial value must be finite (b = {b}, y0 = {y0})"
            )));
        }
        Ok(Self { gamma, b, y0 })
    }

    /// Y(v) = y0·v^(αγ−α−β)/(v^(αγ) − b).
    pub fn image(&self) -> TransformImage {
        let kernel = KnownFunction::MlKernel {
            p: self.gamma,
            q: 1.0,
            m: 0,
            a: self.b.abs(),
            sign: if self.b < 0.0 {
                Sign::Minus
            } else {
                Sign::Plus
            },
        };
        image_of(&kernel)
            .expect("validated problem has a valid kernel")
            .scale(self.y0)
    }
}

/// ᶜD^γ u = f(t), u(0) = u0.
pub struct ForcedProblem<'a> {
    pub gamma: f64,
    pub u0: f64,
    pub forcing: &'a dyn Fn(f64) -> f64,
}

impl<'a> ForcedProblem<'a> {
    pub fn new(gamma: f64, u0: f64, forcing: &'a dyn Fn(f64) -> f64) -> Result<Self> {
        check_gamma(gamma)?;
        Ok(Self { gamma, u0, forcing })
    }
}

impl fmt::Debug for ForcedProblem<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ForcedProblem")
            .field("gamma", &self.gamma)
            .field("u0", &self.u0)
            .finish_non_exhaustive()
    }
}

/// |φ(t)| ≤ M·e^(σt) for t ≥ T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpBound {
    pub m: f64,
    pub sigma: f64,
    pub t: f64,
}

impl ExpBound {
    pub fn new(m: f64, sigma: f64, t: f64) -> Result<Self> {
        if !(m > 0.0) || !sigma.is_finite() || !(t >= 0.0) {
            return Err(SadikError::InvalidParams(format!(
                "need M > 0, finite sigma, T >= 0 (M = {m}, sigma = {sigma}, T = {t})"
            )));
        }
        Ok(Self { m, sigma, t })
    }
}

/// y(t) = y0·E_{γ,1}(b t^γ) on `grid`.
pub fn solve_relaxation(p: &RelaxationProblem, grid: &[f64]) -> Result<SampledSignal> {
    SampledSignal::try_from_fn(
        grid,
        |t| Ok(p.y0 * ml(p.gamma, 1.0, p.b * t.powf(p.gamma))?),
    )
}

/// u(t) = u0 + I^γ f(t) on `grid`.
pub fn solve_forced(p: &ForcedProblem<'_>, grid: &[f64], panels: usize) -> Result<SampledSignal> {
    SampledSignal::try_from_fn(grid, |t| {
        Ok(p.u0 + rl_integral(p.forcing, p.gamma, t, panels)?)
    })
}

/// Fractional Adams–Bashforth–Moulton PECE for ᶜD^γ y = g(t, y), y(0) = y0,
/// on the uniform grid 0, h, …, t_end. Rectangle-weight predictor, one
/// trapezoid-weight corrector; error O(h^(1+γ)) for smooth data.
pub fn adams_oracle<G>(order: f64, rhs: G, y0: f64, h: f64, t_end: f64) -> Result<SampledSignal>
where
    G: Fn(f64, f64) -> f64,
{
    check_gamma(order)?;
    if !(h > 0.0) || !h.is_finite() || !(t_end >= h) || !t_end.is_finite() {
        return Err(SadikError::InvalidGrid(format!(
            "need 0 < h <= t_end (h = {h}, t_end = {t_end})"
        )));
    }
    let g = order;
    let n = (t_end / h).round() as usize;
    let t: Vec<f64> = (0..=n).map(|k| k as f64 * h).collect();
    let hg = h.powf(g);
    // predictor weights by lag l = k − j: ((l+1)^γ − l^γ)·h^γ/Γ(γ+1)
    let pred: Vec<f64> = (0..=n)
        .map(|l| ((l + 1) as f64).powf(g) - (l as f64).powf(g))
        .map(|w| w * hg / gamma(g + 1.0))
        .collect();
    // corrector interior weights by lag l = k+1−j ≥ 1:
    // (l+1)^(γ+1) − 2 l^(γ+1) + (l−1)^(γ+1)
    let g1 = g + 1.0;
    let corr: Vec<f64> = (0..=n + 1)
        .map(|l| {
            if l == 0 {
                0.0
            } else {
                let l = l as f64;
                (l + 1.0).powf(g1) - 2.0 * l.powf(g1) + (l - 1.0).powf(g1)
            }
        })
        .collect();
    let c = hg / gamma(g + 2.0);

    let mut y = vec![y0; n + 1];
    let mut f = vec![0.0; n + 1];
    f[0] = rhs(0.0, y0);
    for k in 0..n {
        let mut p_sum = 0.0;
        for j in 0..=k {
            p_sum += pred[k - j] * f[j];
        }
        let y_pred = y0 + p_sum;
        let kf = k as f64;
        let a0 = kf.powf(g1) - (kf - g) * (kf + 1.0).powf(g);
        let mut c_sum = a0 * f[0];
        for j in 1..=k {
            c_sum += corr[k + 1 - j] * f[j];
        }
        let y_next = y0 + c * (rhs(t[k + 1], y_pred) + c_sum);
        if !(y_next.abs() <= OVERFLOW_LIMIT) {
            return Err(SadikError::StepOverflow { t: t[k + 1] });
        }
        y[k + 1] = y_next;
        f[k + 1] = rhs(t[k + 1], y_next);
    }
    SampledSignal::new(t, y)
}

/// [`adams_oracle`] at steps h and h/2, combined by Richardson extrapolation
/// with the scheme's order 1 + γ. Values are returned on the h grid.
pub fn adams_oracle_extrapolated<G>(
    order: f64,
    rhs: G,
    y0: f64,
    h: f64,
    t_end: f64,
) -> Result<SampledSignal>
where
    G: Fn(f64, f64) -> f64,
{
    let coarse = adams_oracle(order, &rhs, y0, h, t_end)?;
    let fine = adams_oracle(order, &rhs, y0, 0.5 * h, t_end)?;
    let r = 2f64.powf(1.0 + order);
    let y = coarse
        .y()
        .iter()
        .enumerate()
        .map(|(k, &yc)| {
            let yf = fine.y()[2 * k];
            (r * yf - yc) / (r - 1.0)
        })
        .collect();
    SampledSignal::new(coarse.t().to_vec(), y)
}

/// Whether |y(t_i)| ≤ M·e^(σ t_i) at every sample with t_i ≥ T.
pub fn check_exp_bound(sig: &SampledSignal, bound: &ExpBound) -> bool {
    sig.iter()
        .filter(|&(t, _)| t >= bound.t)
        .all(|(t, y)| y.abs() <= bound.m * (bound.sigma * t).exp() * (1.0 + 4.0 * f64::EPSILON))
}
