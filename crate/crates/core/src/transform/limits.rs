//! Initial- and final-value estimates from an image.
//!
//! Both limits are taken along a geometric sequence of v^α values. The
//! returned quantity is v^(α+β)·Φ, which by the value theorems tends to
//! φ(0+) as v^α → ∞ and to lim φ(t) as v^α → 0+.

use crate::error::{Result, SadikError};
use crate::image::TransformImage;
use crate::params::SadikParams;

pub const IVT_POINTS: [f64; 4] = [1e3, 1e4, 1e5, 1e6];
pub const FVT_POINTS: [f64; 4] = [1e-3, 1e-4, 1e-5, 1e-6];
pub const LIMIT_RTOL: f64 = 1e-4;

/// Checks that the sequence settles and returns its Aitken-extrapolated
/// limit. Successive differences must shrink, and the estimated distance from
/// the last value to the limit must be within `LIMIT_RTOL·max(1, |L|)`.
/// Extrapolating matters for fractional images, whose sequences converge
/// only like a fractional power of v^α.
fn settle(values: &[f64], what: &str) -> Result<f64> {
    let fail = || SadikError::NotConvergent(format!("{what}: sequence {values:?} does not settle"));
    if values.iter().any(|x| !x.is_finite()) {
        return Err(SadikError::NotConvergent(format!(
            "{what}: non-finite values {values:?}"
        )));
    }
    let scale = values.iter().fold(1.0f64, |m, x| m.max(x.abs()));
    // differences at roundoff level count as zero
    let noise = 1e-12 * scale;
    let diffs: Vec<f64> = values
        .windows(2)
        .map(|w| w[1] - w[0])
        .map(|d| if d.abs() <= noise { 0.0 } else { d })
        .collect();
    let shrinking = diffs
        .windows(2)
        .all(|d| d[1].abs() <= d[0].abs() * (1.0 + 1e-9));
    if !shrinking {
        return Err(fail());
    }
    let last = *values.last().expect("sequence is non-empty");
    let aitken = |d1: f64, d2: f64, x: f64| {
        if d2 == 0.0 {
            return Some(x);
        }
        let ratio = d2 / d1;
        (ratio.abs() < 0.9).then(|| x + d2 * ratio / (1.0 - ratio))
    };
    // two overlapping Aitken estimates must agree
    let n = diffs.len();
    let earlier = aitken(diffs[n - 3], diffs[n - 2], values[n - 1]).ok_or_else(fail)?;
    let limit = aitken(diffs[n - 2], diffs[n - 1], last).ok_or_else(fail)?;
    if (limit - earlier).abs() > LIMIT_RTOL * limit.abs().max(1.0) {
        return Err(fail());
    }
    Ok(limit)
}

fn sample<F>(phi: F, params: &SadikParams, points: &[f64]) -> Result<Vec<f64>>
where
    F: Fn(f64) -> Result<f64>,
{
    params.require_numeric()?;
    points
        .iter()
        .map(|&x| {
            let v = params.v_from_s(x);
            Ok(v.powf(params.alpha + params.beta) * phi(v)?)
        })
        .collect()
}

/// φ(0+) from Φ given as a function of real v.
pub fn initial_value_fn<F>(phi: F, params: &SadikParams) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    settle(&sample(phi, params, &IVT_POINTS)?, "initial value")
}

/// lim φ(t), t → ∞, from Φ given as a function of real v.
pub fn final_value_fn<F>(phi: F, params: &SadikParams) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    settle(&sample(phi, params, &FVT_POINTS)?, "final value")
}

pub fn initial_value(phi: &TransformImage, params: &SadikParams) -> Result<f64> {
    initial_value_fn(|v| phi.eval(v, params), params)
}

/// Final value of a closed-form image. The denominators are inspected first:
/// a pole at positive v^α means exponential growth, and poles elsewhere in
/// the closed right half-plane (other than a simple one at 0) mean
/// oscillation or growth, so the theorem does not apply.
pub fn final_value(phi: &TransformImage, params: &SadikParams) -> Result<f64> {
    params.require_numeric()?;
    for term in phi.terms() {
        for f in &term.denom {
            if f.pole == 0.0 {
                if f.multiplicity > 1 {
                    return Err(SadikError::NotConvergent(
                        "repeated pole at v^alpha = 0".into(),
                    ));
                }
                continue;
            }
            for r in f.roots_s() {
                if r.im.abs() <= 1e-12 * r.norm() && r.re > 0.0 {
                    return Err(SadikError::PoleOnPositiveAxis { location: r.re });
                }
            }
            if let Some(r) = f.roots_s().into_iter().find(|r| r.re >= -1e-12 * r.norm()) {
                return Err(SadikError::NotConvergent(format!(
                    "pole at s = {r} in the closed right half-plane"
                )));
            }
        }
    }
    final_value_fn(|v| phi.eval(v, params), params)
}
