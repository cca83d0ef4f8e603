//! The Sadik transform Φ(v, α, β) = v^(−β) ∫_0^∞ e^(−t v^α) φ(t) dt: the
//! image table, operational rules, numeric forward transform and inversion,
//! and value theorems.

mod limits;
mod numeric;
mod rules;
mod table;

pub use limits::{
    final_value, final_value_fn, initial_value, initial_value_fn, FVT_POINTS, IVT_POINTS,
    LIMIT_RTOL,
};
pub use numeric::{
    forward_known, forward_numeric, inverse_numeric, inverse_numeric_fn, tn_multiply_check,
    ForwardOptions, InverseOptions,
};
pub use rules::{caputo_image, convolve_images, delay_image, derivative_image, integrate_image};
pub use table::{image_of, KnownFunction, Sign};
