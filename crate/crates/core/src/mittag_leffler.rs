//! Two-parameter Mittag-Leffler function E_{p,q}(z) and its derivatives
//! E^{(m)}_{p,q}(z) = Σ_k ((k+m)!/k!) z^k / Γ(p(k+m)+q) for real z.
//!
//! Three evaluators are combined:
//!
//! * the power series, terms built from log-gamma with explicit signs and
//!   summed in double-double; used for all z ≥ 0 and for moderate z < 0;
//! * the algebraic asymptotic expansion −Σ z^(−k)/Γ(q−pk) (differentiated
//!   m times), truncated at its smallest term; used for z < −5 when p < 2;
//! * Bromwich inversion of m!·s^(p−q)/(s^p − z)^(m+1) at t = 1, used only
//!   when neither of the above reaches its tolerance (strong cancellation in
//!   the series for small p combined with a slowly decaying exponential
//!   remainder in the expansion).
//!
//! Each evaluator returns an error estimate and the most accurate admissible
//! one wins.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::contour::{bromwich_sum, plan, ContourPlan};
use crate::error::{Result, SadikError};
use crate::special::{ln_gamma, DoubleDouble};

/// Boundary of the pure-series regime on the negative axis.
pub const Z_SWITCH: f64 = 5.0;

const MAX_TERMS: usize = 20_000;
const LN_MAX: f64 = 709.0;
const EPS: f64 = f64::EPSILON;

/// Absolute accuracy accepted when no evaluator reaches 1e-12 relative.
pub const TAIL_ABS_TOL: f64 = 1e-8;

/// (p, q, m) of E^{(m)}_{p,q}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLSpec {
    pub p: f64,
    pub q: f64,
    pub m: u32,
}

impl MLSpec {
    pub fn new(p: f64, q: f64, m: u32) -> Result<Self> {
        if !(p > 0.0 && p.is_finite()) || !(q > 0.0 && q.is_finite()) {
            return Err(SadikError::InvalidParams(format!(
                "Mittag-Leffler parameters need p > 0, q > 0 (p = {p}, q = {q})"
            )));
        }
        Ok(Self { p, q, m })
    }

    pub fn eval(&self, z: f64) -> Result<f64> {
        ml_deriv(self, z)
    }
}

/// Which evaluator produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MLMethod {
    Series,
    Asymptotic,
    Contour,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MLEvaluation {
    pub value: f64,
    pub error_estimate: f64,
    pub method: MLMethod,
}

/// E_{p,q}(z).
pub fn ml(p: f64, q: f64, z: f64) -> Result<f64> {
    ml_deriv(&MLSpec::new(p, q, 0)?, z)
}

/// E^{(m)}_{p,q}(z).
pub fn ml_deriv(spec: &MLSpec, z: f64) -> Result<f64> {
    ml_evaluate(spec, z).map(|e| e.value)
}

/// The k-th series term ((k+m)!/k!) z^k / Γ(p(k+m)+q).
pub fn series_term(spec: &MLSpec, z: f64, k: usize) -> f64 {
    let (ln_mag, sign) = series_term_log(spec, z, k);
    sign * ln_mag.exp()
}

fn series_term_log(spec: &MLSpec, z: f64, k: usize) -> (f64, f64) {
    let kf = k as f64;
    let m = spec.m as f64;
    let ln_fall = ln_gamma(kf + m + 1.0).0 - ln_gamma(kf + 1.0).0;
    let ln_pow = if k == 0 { 0.0 } else { kf * z.abs().ln() };
    let ln_mag = ln_fall + ln_pow - ln_gamma(spec.p * (kf + m) + spec.q).0;
    let sign = if z < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    (ln_mag, sign)
}

fn by_series(spec: &MLSpec, z: f64) -> Result<MLEvaluation> {
    let mut acc = DoubleDouble::new();
    let mut err = 0.0;
    let mut prev_ln = f64::NEG_INFINITY;
    let mut small_run = 0;
    for k in 0..MAX_TERMS {
        if z == 0.0 && k > 0 {
            break;
        }
        let (ln_mag, sign) = series_term_log(spec, z, k);
        if ln_mag > LN_MAX {
            return Err(if z > 0.0 {
                SadikError::Overflow(format!(
                    "E^({})_{{{},{}}}({z}) exceeds f64 range",
                    spec.m, spec.p, spec.q
                ))
            } else {
                SadikError::NonConvergent(format!("series terms for z = {z} exceed f64 range"))
            });
        }
        let term = sign * ln_mag.exp();
        acc.add(term);
        // exp(ln) carries a relative error of about eps·|ln| on each term
        let ln_pow = if k == 0 { 0.0 } else { k as f64 * z.abs().ln() };
        err += term.abs() * EPS * (2.0 + ln_mag.abs() + ln_pow.abs());
        let partial = acc.value();
        let decreasing = ln_mag < prev_ln;
        prev_ln = ln_mag;
        if decreasing && (term == 0.0 || term.abs() < 1e-16 * partial.abs()) {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
        if k + 1 == MAX_TERMS {
            return Err(SadikError::NonConvergent(format!(
                "series did not settle within {MAX_TERMS} terms at z = {z}"
            )));
        }
    }
    let value = acc.value();
    if !value.is_finite() {
        return Err(SadikError::Overflow(format!("series sum at z = {z}")));
    }
    Ok(MLEvaluation {
        value,
        error_estimate: err,
        method: MLMethod::Series,
    })
}

/// −Σ_{k≥1} d^m/dz^m[z^(−k)] / Γ(q − pk), truncated at the smallest term.
fn by_asymptotic(spec: &MLSpec, z: f64) -> Option<MLEvaluation> {
    if z >= 0.0 || spec.p >= 2.0 {
        return None;
    }
    let x = -z;
    let m = spec.m as f64;
    let mut sum = 0.0;
    let mut last_mag = f64::INFINITY;
    let mut omitted = 0.0;
    for k in 1..=600usize {
        let kf = k as f64;
        let arg = spec.q - spec.p * kf;
        if crate::special::is_gamma_pole(arg) {
            continue;
        }
        // ln (k)_m = ln Γ(k+m) − ln Γ(k)
        let ln_rising = ln_gamma(kf + m).0 - ln_gamma(kf).0;
        let (lg, gsign) = ln_gamma(arg);
        let ln_mag = ln_rising - (kf + m) * x.ln() - lg;
        let mag = ln_mag.exp();
        if mag > last_mag {
            omitted = mag;
            break;
        }
        // d^m z^(−k) = (−1)^m (k)_m z^(−k−m); z^(−k−m) = (−1)^(k+m) x^(−k−m)
        let sign_pow = if (k + spec.m as usize).is_multiple_of(2) {
            1.0
        } else {
            -1.0
        };
        let sign_m = if spec.m.is_multiple_of(2) { 1.0 } else { -1.0 };
        sum -= sign_m * sign_pow * gsign * mag;
        last_mag = mag;
        omitted = mag;
    }
    let remainder = exponential_remainder(spec, x);
    Some(MLEvaluation {
        value: sum,
        error_estimate: omitted + remainder + EPS * sum.abs(),
        method: MLMethod::Asymptotic,
    })
}

/// Size of the exponentially small contributions dropped by the algebraic
/// expansion on the negative axis (zero when p < 1).
fn exponential_remainder(spec: &MLSpec, x: f64) -> f64 {
    if spec.p < 1.0 {
        return 0.0;
    }
    let r = x.powf(1.0 / spec.p);
    let decay = (r * (PI / spec.p).cos()).exp();
    let amp = r.powf(1.0 - spec.q) / spec.p;
    let deriv = (r.powf(1.0 - spec.p) / spec.p).powi(spec.m as i32);
    2.0 * amp * deriv * decay
}

/// Inverse Laplace transform of m!·s^(p−q)/(s^p − z)^(m+1) at t = 1.
fn by_contour(spec: &MLSpec, z: f64) -> Option<MLEvaluation> {
    let fact: f64 = (1..=spec.m).map(|k| k as f64).product();
    let image =
        |s: Complex64| fact * s.powf(spec.p - spec.q) / (s.powf(spec.p) - z).powu(spec.m + 1);
    let pole = crate::image::DenomFactor::new(spec.p, z, 1);
    let sing = pole.roots_s();
    let coarse = plan(1.0, 40, &sing);
    if coarse.nodes > 120 {
        return None;
    }
    let fine = ContourPlan {
        nodes: 2 * coarse.nodes,
        ..coarse
    };
    let a = bromwich_sum(&image, 1.0, &coarse);
    let b = bromwich_sum(&image, 1.0, &fine);
    if !a.is_finite() || !b.is_finite() {
        return None;
    }
    Some(MLEvaluation {
        value: b,
        error_estimate: (a - b).abs() + 1e3 * EPS * b.abs().max(1.0),
        method: MLMethod::Contour,
    })
}

fn accepted(e: &MLEvaluation) -> bool {
    e.error_estimate <= 1e-12 * e.value.abs() + 1e-15
}

/// Evaluates E^{(m)}_{p,q}(z) and reports the evaluator and its error estimate.
pub fn ml_evaluate(spec: &MLSpec, z: f64) -> Result<MLEvaluation> {
    if !z.is_finite() {
        return Err(SadikError::InvalidParams(format!(
            "argument must be finite, got {z}"
        )));
    }
    if z >= 0.0 {
        return by_series(spec, z);
    }
    let mut candidates: Vec<MLEvaluation> = Vec::new();
    let mut series_err = None;
    if z >= -Z_SWITCH {
        match by_series(spec, z) {
            Ok(e) if accepted(&e) => return Ok(e),
            Ok(e) => candidates.push(e),
            Err(e) => series_err = Some(e),
        }
    }
    if let Some(e) = by_asymptotic(spec, z) {
        if accepted(&e) {
            return Ok(e);
        }
        candidates.push(e);
    }
    if z < -Z_SWITCH {
        if let Ok(e) = by_series(spec, z) {
            if accepted(&e) {
                return Ok(e);
            }
            candidates.push(e);
        }
    }
    if let Some(e) = by_contour(spec, z) {
        candidates.push(e);
    }
    let best = candidates
        .into_iter()
        .min_by(|a, b| a.error_estimate.total_cmp(&b.error_estimate));
    match best {
        Some(e) if e.error_estimate <= TAIL_ABS_TOL => Ok(e),
        Some(e) => Err(SadikError::NonConvergent(format!(
            "best estimate for E^({})_{{{},{}}}({z}) has error {:e}",
            spec.m, spec.p, spec.q, e.error_estimate
        ))),
        None => Err(series_err.unwrap_or_else(|| {
            SadikError::NonConvergent(format!("no evaluator applies at z = {z}"))
        })),
    }
}
