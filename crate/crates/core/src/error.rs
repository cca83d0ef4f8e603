use thiserror::Error;

/// Errors raised by the numeric and symbolic operations of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SadikError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("denominator vanishes at v = {v} (|v^(p·alpha) - pole| = {gap:e})")]
    PoleAtEvaluationPoint { v: f64, gap: f64 },

    #[error("image has a pole on the positive v^alpha axis at {location}")]
    PoleOnPositiveAxis { location: f64 },

    #[error("invalid fractional order {0}")]
    InvalidOrder(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("negative delay {0}")]
    NegativeDelay(f64),

    #[error("expected {expected} initial values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("function {0} has no closed-form image")]
    UnsupportedFunction(String),

    #[error("transform diverges: v^alpha = {v_alpha} does not exceed growth rate {growth}")]
    DivergentTransform { v_alpha: f64, growth: f64 },

    #[error("quadrature failed: {0}")]
    QuadratureFailure(String),

    #[error("limit estimate did not converge: {0}")]
    NotConvergent(String),

    #[error("contour inversion failed: {0}")]
    ContourFailure(String),

    #[error("value overflows f64 range: {0}")]
    Overflow(String),

    #[error("series did not converge: {0}")]
    NonConvergent(String),

    #[error("solution exceeded 1e12 at t = {t}")]
    StepOverflow { t: f64 },
}

pub type Result<T> = std::result::Result<T, SadikError>;
