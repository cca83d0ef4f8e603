use num_complex::Complex64;

use crate::contour::{invert_laplace, ContourOptions};
use crate::error::{Result, SadikError};
use crate::image::{ImageArg, TransformImage};
use crate::params::SadikParams;
use crate::quadrature::{integrate_pieces, QuadOptions};

use super::table::KnownFunction;

// e^(−CUT) bounds the neglected tail relative to the integrand's envelope
const CUT: f64 = 50.0;

#[derive(Debug, Clone)]
pub struct ForwardOptions {
    /// Declared exponential order σ_f of the integrand.
    pub growth: f64,
    /// Points where the integrand is not smooth.
    pub breakpoints: Vec<f64>,
    pub rtol: f64,
}

impl Default for ForwardOptions {
    fn default() -> Self {
        Self {
            growth: 0.0,
            breakpoints: Vec::new(),
            rtol: 1e-10,
        }
    }
}

impl ForwardOptions {
    pub fn with_growth(growth: f64) -> Self {
        Self {
            growth,
            ..Self::default()
        }
    }
}

/// v^(−β) ∫_0^∞ e^(−t v^α) f(t) dt, truncated at T with e^(−T(v^α − σ_f)) = e^(−50).
pub fn forward_numeric<F: Fn(f64) -> f64>(
    f: F,
    params: &SadikParams,
    v: f64,
    opts: &ForwardOptions,
) -> Result<f64> {
    params.require_numeric()?;
    if !(v > 0.0) || !v.is_finite() {
        return Err(SadikError::InvalidParams(format!(
            "v must be positive, got {v}"
        )));
    }
    let s = params.v_alpha(v);
    if !(s > opts.growth) {
        return Err(SadikError::DivergentTransform {
            v_alpha: s,
            growth: opts.growth,
        });
    }
    let t_cut = CUT / (s - opts.growth);
    let mut points = vec![0.0];
    let mut bps: Vec<f64> = opts
        .breakpoints
        .iter()
        .copied()
        .filter(|&b| b > 0.0 && b < t_cut)
        .collect();
    bps.sort_by(f64::total_cmp);
    points.extend(bps);
    points.push(t_cut);
    let q = integrate_pieces(
        |t| (-s * t).exp() * f(t),
        &points,
        &QuadOptions::with_rtol(opts.rtol),
    )?;
    Ok(q.value * v.powf(-params.beta))
}

/// Forward transform of a table function; growth and break points come from
/// the table.
pub fn forward_known(f: &KnownFunction, params: &SadikParams, v: f64) -> Result<f64> {
    f.validate()?;
    if matches!(f, KnownFunction::Dirac) {
        return Err(SadikError::UnsupportedFunction(
            "dirac has no numeric forward transform".into(),
        ));
    }
    let opts = ForwardOptions {
        growth: f.growth_rate(),
        breakpoints: f.breakpoints(),
        ..ForwardOptions::default()
    };
    // the ML kernel can fail pointwise; surface that error instead of NaN
    let failure = std::cell::RefCell::new(None);
    let value = forward_numeric(
        |t| match f.eval(t) {
            Ok(y) => y,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        },
        params,
        v,
        &opts,
    );
    if let Some(e) = failure.into_inner() {
        return Err(e);
    }
    value
}

/// Both sides of S[t^n f](v) = (−1)^n (1/(α v^(α−1)) d/dv + β/(α v^α))^n Φ(v).
///
/// The left side is a direct forward transform; the right side applies the
/// operator by nested central differences with step 1e-4·v.
pub fn tn_multiply_check<F: Fn(f64) -> f64>(
    f: F,
    n: u32,
    params: &SadikParams,
    v: f64,
    opts: &ForwardOptions,
) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(SadikError::InvalidOrder(0.0));
    }
    let inner = ForwardOptions {
        rtol: opts.rtol.min(1e-13),
        ..opts.clone()
    };
    let lhs = forward_numeric(|t| t.powi(n as i32) * f(t), params, v, &inner)?;
    let rhs = apply_tn_operator(&|w| forward_numeric(&f, params, w, &inner), n, params, v)?;
    Ok((lhs, rhs))
}

fn apply_tn_operator(
    phi: &dyn Fn(f64) -> Result<f64>,
    n: u32,
    params: &SadikParams,
    v: f64,
) -> Result<f64> {
    if n == 0 {
        return phi(v);
    }
    let (a, b) = (params.alpha, params.beta);
    let h = 1e-4 * v;
    let up = apply_tn_operator(phi, n - 1, params, v + h)?;
    let down = apply_tn_operator(phi, n - 1, params, v - h)?;
    let mid = apply_tn_operator(phi, n - 1, params, v)?;
    let dv = (up - down) / (2.0 * h);
    Ok(-(dv / (a * v.powf(a - 1.0)) + b * mid / (a * v.powf(a))))
}

/// Options for [`inverse_numeric`].
#[derive(Debug, Clone)]
pub struct InverseOptions {
    pub nodes: usize,
    pub rtol: f64,
    pub atol: f64,
    /// Extra singularities in s = v^α; those of closed-form images are found
    /// automatically.
    pub singularities: Vec<Complex64>,
}

impl Default for InverseOptions {
    fn default() -> Self {
        Self {
            nodes: 32,
            rtol: 1e-5,
            atol: 1e-10,
            singularities: Vec::new(),
        }
    }
}

impl InverseOptions {
    fn contour(&self, extra: Vec<Complex64>) -> ContourOptions {
        let mut sing = self.singularities.clone();
        sing.extend(extra);
        ContourOptions {
            nodes: self.nodes,
            rtol: self.rtol,
            atol: self.atol,
            singularities: sing,
            ..ContourOptions::default()
        }
    }
}

/// φ(t) from a closed-form image. Terms are grouped by delay d and each
/// group contributes g_d(t − d) for t > d.
pub fn inverse_numeric(
    phi: &TransformImage,
    params: &SadikParams,
    t: f64,
    opts: &InverseOptions,
) -> Result<f64> {
    params.require_numeric()?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(SadikError::InvalidParams(format!(
            "t must be positive, got {t}"
        )));
    }
    let mut total = 0.0;
    for d in phi.delays() {
        if t - d <= 0.0 {
            continue;
        }
        let part = phi.delay_component(d);
        let copts = opts.contour(part.singularities_s());
        total += invert_laplace(
            |s| {
                let arg = ImageArg::from_s(s, params.alpha);
                arg.pow(params.beta) * part.eval_complex(arg, params)
            },
            t - d,
            &copts,
        )?;
    }
    Ok(total)
}

/// φ(t) from an image given as a function of complex v (on the branch
/// v = s^(1/α)); the caller lists singularities in s through `opts`.
pub fn inverse_numeric_fn<F>(
    phi: F,
    params: &SadikParams,
    t: f64,
    opts: &InverseOptions,
) -> Result<f64>
where
    F: Fn(ImageArg) -> Complex64,
{
    params.require_numeric()?;
    invert_laplace(
        |s| {
            let arg = ImageArg::from_s(s, params.alpha);
            arg.pow(params.beta) * phi(arg)
        },
        t,
        &opts.contour(Vec::new()),
    )
}
