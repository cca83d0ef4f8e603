//! Fractional-order transfer functions K(v) = 1 / Σ r_k v^(γ_k α) and their
//! impulse and step responses.

use nalgebra::linalg::Schur;
use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Result, SadikError};
use crate::image::{DenomFactor, Exponent, ImageTerm, TransformImage, DEFAULT_POLE_GUARD};
use crate::mittag_leffler::ml;
use crate::params::SadikParams;
use crate::signal::SampledSignal;
use crate::transform::{inverse_numeric_fn, InverseOptions};

// Largest common denominator tried when looking for rational orders.
const MAX_ORDER_DENOM: u32 = 60;

/// Σ r_k·ᶜD^(γ_k) with the orders listed in strictly decreasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct TransferFunction {
    terms: Vec<(f64, f64)>,
}

impl TransferFunction {
    /// `terms` are (r_k, γ_k) pairs, highest order first.
    pub fn new(terms: Vec<(f64, f64)>) -> Result<Self> {
        if terms.is_empty() {
            return Err(SadikError::InvalidParams(
                "transfer function has no terms".into(),
            ));
        }
        if terms
            .iter()
            .any(|&(r, g)| !r.is_finite() || !(g >= 0.0) || !g.is_finite())
        {
            return Err(SadikError::InvalidParams(
                "coefficients must be finite and orders >= 0".into(),
            ));
        }
        if terms.windows(2).any(|w| w[1].1 >= w[0].1) {
            return Err(SadikError::InvalidParams(
                "orders must be strictly decreasing".into(),
            ));
        }
        if terms[0].0 == 0.0 {
            return Err(SadikError::InvalidParams(
                "leading coefficient is zero".into(),
            ));
        }
        Ok(Self { terms })
    }

    /// r·ᶜD^γ + d, the two-term system with a closed-form response.
    pub fn two_term(r: f64, gamma: f64, d: f64) -> Result<Self> {
        if d == 0.0 {
            Self::new(vec![(r, gamma)])
        } else {
            Self::new(vec![(r, gamma), (d, 0.0)])
        }
    }

    pub fn terms(&self) -> &[(f64, f64)] {
        &self.terms
    }

    pub fn leading_order(&self) -> f64 {
        self.terms[0].1
    }

    /// Σ r_k s^(γ_k) at complex s (principal branch).
    pub fn characteristic(&self, s: Complex64) -> Complex64 {
        self.terms.iter().map(|&(r, g)| s.powf(g) * r).sum()
    }

    /// The impulse-response image v^(−β)·K as a closed form, when K has at
    /// most one term besides a constant.
    pub fn impulse_image(&self) -> Option<TransformImage> {
        match *self.terms.as_slice() {
            [(r, g)] => Some(TransformImage::monomial(
                1.0 / r,
                Exponent::new(-g, -1.0, 0.0),
            )),
            [(r, g), (d, z)] if z == 0.0 => Some(TransformImage::new(vec![ImageTerm::monomial(
                1.0 / r,
                Exponent::beta(-1.0),
            )
            .with_denom(DenomFactor::new(g, -d / r, 1))])),
            _ => None,
        }
    }

    /// Zeros of Σ r_k s^(γ_k) on the principal sheet, when all orders are
    /// rational with a small common denominator Q. They come from the roots
    /// of the polynomial in w = s^(1/Q). With integer orders there is no
    /// branch cut and every root counts.
    pub fn singularities(&self) -> Vec<Complex64> {
        let q = match (1..=MAX_ORDER_DENOM).find(|&q| {
            self.terms
                .iter()
                .all(|&(_, g)| (g * q as f64 - (g * q as f64).round()).abs() < 1e-9)
        }) {
            Some(q) => q,
            None => return Vec::new(),
        };
        let degree = (self.terms[0].1 * q as f64).round() as usize;
        if degree == 0 {
            return Vec::new();
        }
        let mut coeffs = vec![0.0; degree + 1];
        for &(r, g) in &self.terms {
            coeffs[(g * q as f64).round() as usize] += r;
        }
        let half_sector = std::f64::consts::PI / q as f64;
        polynomial_roots(&coeffs)
            .into_iter()
            .filter(|w| w.norm() > 1e-12 && (q == 1 || w.arg().abs() < half_sector))
            .map(|w| Complex64::from_polar(w.norm().powi(q as i32), w.arg() * q as f64))
            .collect()
    }
}

/// Roots of Σ c_j w^j (c ascending, leading coefficient non-zero) as
/// eigenvalues of the companion matrix, polished by Newton steps.
fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let lead = coeffs[degree];
    let mut companion = DMatrix::<f64>::zeros(degree, degree);
    for i in 1..degree {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..degree {
        companion[(i, degree - 1)] = -coeffs[i] / lead;
    }
    // unshifted QR can stall on symmetric spectra such as w^4 + 1
    let scale = companion.norm().max(1.0);
    let roots = [0.0, 0.37, -0.61, 1.13].iter().find_map(|&shift| {
        let m = &companion + DMatrix::<f64>::identity(degree, degree) * (shift * scale);
        Schur::try_new(m, 1e-15, 2000).map(|s| {
            s.complex_eigenvalues()
                .iter()
                .map(|z| z - shift * scale)
                .collect::<Vec<_>>()
        })
    });
    let Some(mut roots) = roots else {
        return Vec::new();
    };
    let eval = |w: Complex64| {
        let mut p = Complex64::new(0.0, 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            dp = dp * w + p;
            p = p * w + c;
        }
        (p, dp)
    };
    for w in &mut roots {
        for _ in 0..3 {
            let (p, dp) = eval(*w);
            if dp.norm() == 0.0 {
                break;
            }
            *w -= p / dp;
        }
    }
    roots
}

/// K(v) = [Σ r_k v^(γ_k α)]^(−1).
pub fn transfer_eval(tf: &TransferFunction, params: &SadikParams, v: f64) -> Result<f64> {
    params.require_numeric()?;
    if !(v > 0.0) || !v.is_finite() {
        return Err(SadikError::InvalidParams(format!(
            "v must be positive, got {v}"
        )));
    }
    let parts: Vec<f64> = tf
        .terms
        .iter()
        .map(|&(r, g)| r * v.powf(g * params.alpha))
        .collect();
    let sum: f64 = parts.iter().sum();
    let scale: f64 = parts.iter().map(|x| x.abs()).sum();
    if sum.abs() < DEFAULT_POLE_GUARD * scale {
        return Err(SadikError::PoleAtEvaluationPoint { v, gap: sum.abs() });
    }
    Ok(1.0 / sum)
}

fn check_two_term(r: f64, d: f64, gamma: f64) -> Result<()> {
    if r == 0.0 || !r.is_finite() || !d.is_finite() {
        return Err(SadikError::InvalidParams(format!(
            "need r != 0 and finite d (r = {r}, d = {d})"
        )));
    }
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(SadikError::InvalidOrder(gamma));
    }
    Ok(())
}

/// Unit-impulse response of r·ᶜD^γ + d: (1/r) t^(γ−1) E_{γ,γ}(−(d/r) t^γ).
pub fn impulse_response(r: f64, d: f64, gamma: f64, grid: &[f64]) -> Result<SampledSignal> {
    check_two_term(r, d, gamma)?;
    if grid.first().is_some_and(|&t| t <= 0.0) {
        return Err(SadikError::InvalidGrid(
            "impulse response needs strictly positive times".into(),
        ));
    }
    SampledSignal::try_from_fn(grid, |t| {
        Ok(t.powf(gamma - 1.0) * ml(gamma, gamma, -(d / r) * t.powf(gamma))? / r)
    })
}

/// Unit-step response of r·ᶜD^γ + d: (1/r) t^γ E_{γ,γ+1}(−(d/r) t^γ).
pub fn step_response(r: f64, d: f64, gamma: f64, grid: &[f64]) -> Result<SampledSignal> {
    check_two_term(r, d, gamma)?;
    SampledSignal::try_from_fn(grid, |t| {
        if t == 0.0 {
            return Ok(0.0);
        }
        let tg = t.powf(gamma);
        Ok(tg * ml(gamma, gamma + 1.0, -(d / r) * tg)? / r)
    })
}

fn numeric_response(
    tf: &TransferFunction,
    params: &SadikParams,
    grid: &[f64],
    opts: &InverseOptions,
    step: bool,
) -> Result<SampledSignal> {
    params.require_numeric()?;
    if !(tf.leading_order() > 0.0) {
        return Err(SadikError::InvalidParams(
            "transfer function must be strictly proper (leading order > 0)".into(),
        ));
    }
    if grid.first().is_some_and(|&t| t <= 0.0) {
        return Err(SadikError::InvalidGrid(
            "numeric responses need strictly positive times".into(),
        ));
    }
    let mut opts = opts.clone();
    opts.singularities.extend(tf.singularities());
    // v^(−β)K inverts to a β-independent response; the step adds a factor 1/s
    SampledSignal::try_from_fn(grid, |t| {
        inverse_numeric_fn(
            |arg| {
                let s = arg.pow(params.alpha);
                let k = arg.pow(-params.beta) / tf.characteristic(s);
                if step {
                    k / s
                } else {
                    k
                }
            },
            params,
            t,
            &opts,
        )
    })
}

/// Impulse response of any strictly proper K by numeric inversion.
pub fn impulse_response_numeric(
    tf: &TransferFunction,
    params: &SadikParams,
    grid: &[f64],
    opts: &InverseOptions,
) -> Result<SampledSignal> {
    numeric_response(tf, params, grid, opts, false)
}

/// Step response of any strictly proper K by numeric inversion.
pub fn step_response_numeric(
    tf: &TransferFunction,
    params: &SadikParams,
    grid: &[f64],
    opts: &InverseOptions,
) -> Result<SampledSignal> {
    numeric_response(tf, params, grid, opts, true)
}
