//! Operational rules acting on closed-form images.
//!
//! These are purely symbolic in (α, β), so none of them takes parameters.

use crate::error::{Result, SadikError};
use crate::fractional::FracOrder;
use crate::image::{Exponent, TransformImage};

fn check_len(init: &[f64], n: usize) -> Result<()> {
    if init.len() != n {
        return Err(SadikError::LengthMismatch {
            expected: n,
            got: init.len(),
        });
    }
    Ok(())
}

/// v^(nα)Φ − Σ_{k<n} v^(kα−β) φ^(n−1−k)(0), with `init = [φ(0), φ'(0), …]`.
pub fn derivative_image(phi: &TransformImage, init: &[f64], n: u32) -> Result<TransformImage> {
    if n == 0 {
        return Err(SadikError::InvalidOrder(0.0));
    }
    check_len(init, n as usize)?;
    let mut out = phi.shift_exponent(Exponent::alpha(n as f64));
    for k in 0..n as usize {
        let c = init[n as usize - 1 - k];
        if c != 0.0 {
            out = out - TransformImage::monomial(c, Exponent::new(k as f64, -1.0, 0.0));
        }
    }
    Ok(out)
}

/// v^(γα)Φ − Σ_{k<n} v^((γ−n+k)α−β) φ^(n−1−k)(0+).
pub fn caputo_image(
    phi: &TransformImage,
    order: FracOrder,
    init: &[f64],
) -> Result<TransformImage> {
    if order.is_integer() {
        return Err(SadikError::InvalidOrder(order.gamma));
    }
    let n = order.n as usize;
    check_len(init, n)?;
    let g = order.gamma;
    let mut out = phi.shift_exponent(Exponent::alpha(g));
    for k in 0..n {
        let c = init[n - 1 - k];
        if c != 0.0 {
            out = out
                - TransformImage::monomial(c, Exponent::new(g - n as f64 + k as f64, -1.0, 0.0));
        }
    }
    Ok(out)
}

/// Image of ∫_0^t φ: Φ/v^α.
pub fn integrate_image(phi: &TransformImage) -> TransformImage {
    phi.shift_exponent(Exponent::alpha(-1.0))
}

/// Image of φ(t − a)η(t − a): e^(−a v^α)Φ.
pub fn delay_image(phi: &TransformImage, a: f64) -> Result<TransformImage> {
    if !(a >= 0.0) || !a.is_finite() {
        return Err(SadikError::NegativeDelay(a));
    }
    Ok(phi.add_delay(a))
}

/// Image of the causal convolution ∫_0^t φ₁(τ)φ₂(t−τ)dτ: v^β Φ₁Φ₂.
pub fn convolve_images(phi1: &TransformImage, phi2: &TransformImage) -> TransformImage {
    phi1.product(phi2).shift_exponent(Exponent::beta(1.0))
}
