use crate::error::{Result, SadikError};

/// The (α, β) pair of the transform Φ(v, α, β) = v^(−β) ∫₀^∞ e^(−t v^α) φ(t) dt.
///
/// The transform itself is defined for any non-zero α; every numeric routine
/// in this crate additionally requires α > 0 and checks it through
/// [`SadikParams::require_numeric`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SadikParams {
    pub alpha: f64,
    pub beta: f64,
}

impl SadikParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(SadikError::InvalidParams(format!(
                "alpha and beta must be finite (alpha = {alpha}, beta = {beta})"
            )));
        }
        if alpha == 0.0 {
            return Err(SadikError::InvalidParams("alpha must be non-zero".into()));
        }
        Ok(Self { alpha, beta })
    }

    /// Parameters valid for numeric work (α > 0).
    pub fn numeric(alpha: f64, beta: f64) -> Result<Self> {
        let p = Self::new(alpha, beta)?;
        p.require_numeric()?;
        Ok(p)
    }

    /// (α, β) = (1, 0), where the transform is the Laplace transform.
    pub fn laplace() -> Self {
        Self {
            alpha: 1.0,
            beta: 0.0,
        }
    }

    pub fn require_numeric(&self) -> Result<()> {
        if self.alpha > 0.0 && self.alpha.is_finite() && self.beta.is_finite() {
            Ok(())
        } else {
            Err(SadikError::InvalidParams(format!(
                "numeric evaluation needs alpha > 0, got {}",
                self.alpha
            )))
        }
    }

    /// v^α, the Laplace variable s seen through the transform.
    #[inline]
    pub fn v_alpha(&self, v: f64) -> f64 {
        v.powf(self.alpha)
    }

    /// Inverse of [`v_alpha`](Self::v_alpha) on the positive ray.
    #[inline]
    pub fn v_from_s(&self, s: f64) -> f64 {
        s.powf(1.0 / self.alpha)
    }
}
