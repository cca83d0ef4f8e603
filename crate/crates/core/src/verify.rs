//! Self-verification suites for the transform rules: each suite compares a
//! symbolic rule with direct quadrature over a small (v, α, β) lattice.

use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SadikError};
use crate::fractional::{caputo_derivative, DerivativeData, FracOrder};
use crate::image::TransformImage;
use crate::params::SadikParams;
use crate::quadrature::{integrate, QuadOptions};
use crate::transform::{
    caputo_image, convolve_images, delay_image, derivative_image, final_value, forward_known,
    forward_numeric, image_of, initial_value, inverse_numeric, tn_multiply_check, ForwardOptions,
    InverseOptions, KnownFunction, Sign, LIMIT_RTOL,
};

pub const LATTICE_V: [f64; 3] = [1.5, 2.0, 4.0];
pub const LATTICE_ALPHA: [f64; 3] = [0.5, 1.0, 2.0];
pub const LATTICE_BETA: [f64; 3] = [-1.0, 0.0, 1.0];

/// The 27 points (v, params) of the test lattice.
pub fn lattice() -> Vec<(f64, SadikParams)> {
    let mut out = Vec::with_capacity(27);
    for &v in &LATTICE_V {
        for &a in &LATTICE_ALPHA {
            for &b in &LATTICE_BETA {
                out.push((
                    v,
                    SadikParams::numeric(a, b).expect("lattice parameters are valid"),
                ));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Derivative,
    Caputo,
    Convolution,
    Delay,
    Ivt,
    Fvt,
    Tn,
    Inversion,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Derivative,
        Suite::Caputo,
        Suite::Convolution,
        Suite::Delay,
        Suite::Ivt,
        Suite::Fvt,
        Suite::Tn,
        Suite::Inversion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Derivative => "derivative",
            Suite::Caputo => "caputo",
            Suite::Convolution => "convolution",
            Suite::Delay => "delay",
            Suite::Ivt => "ivt",
            Suite::Fvt => "fvt",
            Suite::Tn => "tn",
            Suite::Inversion => "inversion",
        }
    }

    pub fn run(self) -> SuiteReport {
        let checks = match self {
            Suite::Derivative => derivative_checks(),
            Suite::Caputo => caputo_checks(),
            Suite::Convolution => convolution_checks(),
            Suite::Delay => delay_checks(),
            Suite::Ivt => ivt_checks(),
            Suite::Fvt => fvt_checks(),
            Suite::Tn => tn_checks(),
            Suite::Inversion => inversion_checks(),
        };
        SuiteReport {
            name: self.name().to_string(),
            checks,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SadikError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| SadikError::InvalidParams(format!("unknown suite '{s}'")))
    }
}

/// One named check: worst error over its cases against a tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub worst: f64,
    pub tol: f64,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn from_errors(name: impl Into<String>, errors: Result<Vec<f64>>, tol: f64) -> Self {
        let name = name.into();
        match errors {
            Ok(errs) => {
                let worst = errs
                    .iter()
                    .fold(0.0f64, |m, &e| if e.is_nan() { f64::NAN } else { m.max(e) });
                Check {
                    name,
                    worst,
                    tol,
                    passed: worst <= tol,
                    detail: format!("{} points", errs.len()),
                }
            }
            Err(e) => Check {
                name,
                worst: f64::NAN,
                tol,
                passed: false,
                detail: e.to_string(),
            },
        }
    }

    fn outcome(name: impl Into<String>, passed: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            worst: 0.0,
            tol: 0.0,
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Largest error relative to its tolerance, as (check name, error).
    pub fn worst(&self) -> Option<(&str, f64)> {
        self.checks
            .iter()
            .filter(|c| c.tol > 0.0)
            .max_by(|a, b| (a.worst / a.tol).total_cmp(&(b.worst / b.tol)))
            .map(|c| (c.name.as_str(), c.worst))
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            if c.tol > 0.0 {
                writeln!(
                    f,
                    "{mark} {}/{}: worst {:.3e} (tol {:.0e}, {})",
                    self.name, c.name, c.worst, c.tol, c.detail
                )?;
            } else {
                writeln!(f, "{mark} {}/{}: {}", self.name, c.name, c.detail)?;
            }
        }
        let status = if self.passed() { "pass" } else { "FAIL" };
        match self.worst() {
            Some((name, w)) => writeln!(f, "{status} {}: worst error {w:.3e} ({name})", self.name),
            None => writeln!(f, "{status} {}", self.name),
        }
    }
}

fn rel(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

fn over_lattice<F>(image: &TransformImage, growth: f64, mut numeric: F) -> Result<Vec<f64>>
where
    F: FnMut(f64, &SadikParams) -> Result<f64>,
{
    let mut errs = Vec::new();
    for (v, p) in lattice() {
        if p.v_alpha(v) <= growth {
            continue;
        }
        errs.push(rel(numeric(v, &p)?, image.eval(v, &p)?));
    }
    Ok(errs)
}

/// Every table entry against quadrature, with a ∈ {1, 2} and n ≤ 3.
pub fn table_report() -> SuiteReport {
    let mut fs = vec![KnownFunction::One];
    fs.extend((0..=3).map(KnownFunction::Power));
    for &a in &[1.0, 2.0] {
        fs.push(KnownFunction::Exponential(a));
        fs.push(KnownFunction::Sine(a));
        fs.push(KnownFunction::Heaviside(a));
        for sign in [Sign::Plus, Sign::Minus] {
            fs.push(KnownFunction::MlKernel {
                p: 0.5,
                q: 1.0,
                m: 0,
                a,
                sign,
            });
            fs.push(KnownFunction::MlKernel {
                p: 0.8,
                q: 0.8,
                m: 1,
                a,
                sign,
            });
        }
    }
    let checks = fs
        .iter()
        .map(|f| {
            let errs = image_of(f)
                .and_then(|img| over_lattice(&img, f.growth_rate(), |v, p| forward_known(f, p, v)));
            Check::from_errors(f.to_string(), errs, 1e-6)
        })
        .collect();
    SuiteReport {
        name: "table".into(),
        checks,
    }
}

fn derivative_checks() -> Vec<Check> {
    type Case = (
        &'static str,
        KnownFunction,
        fn(f64) -> f64,
        fn(f64) -> f64,
        [f64; 2],
    );
    let cases: [Case; 3] = [
        (
            "exp:-1",
            KnownFunction::Exponential(-1.0),
            |t| -(-t).exp(),
            |t| (-t).exp(),
            [1.0, -1.0],
        ),
        (
            "sin:2",
            KnownFunction::Sine(2.0),
            |t| 2.0 * (2.0 * t).cos(),
            |t| -4.0 * (2.0 * t).sin(),
            [0.0, 2.0],
        ),
        (
            "power:2",
            KnownFunction::Power(2),
            |t| 2.0 * t,
            |_| 2.0,
            [0.0, 0.0],
        ),
    ];
    let mut out = Vec::new();
    for (name, f, d1, d2, init) in cases {
        for (n, d) in [(1u32, d1), (2, d2)] {
            let errs = image_of(&f)
                .and_then(|img| derivative_image(&img, &init[..n as usize], n))
                .and_then(|img| {
                    over_lattice(&img, 0.0, |v, p| {
                        forward_numeric(d, p, v, &ForwardOptions::default())
                    })
                });
            out.push(Check::from_errors(format!("{name} n={n}"), errs, 1e-6));
        }
    }
    out
}

fn caputo_checks() -> Vec<Check> {
    let d = |t: f64| 2.0 * t;
    [0.3, 0.5, 0.8]
        .into_iter()
        .map(|g| {
            let errs = FracOrder::new(g).and_then(|order| {
                let img = caputo_image(&image_of(&KnownFunction::Power(2))?, order, &[0.0])?;
                let dphi = |t: f64| {
                    if t == 0.0 {
                        return 0.0;
                    }
                    caputo_derivative(|x| x * x, DerivativeData::Analytic(&d), order, t, 4)
                        .unwrap_or(f64::NAN)
                };
                over_lattice(&img, 0.0, |v, p| {
                    forward_numeric(dphi, p, v, &ForwardOptions::default())
                })
            });
            Check::from_errors(format!("t^2 gamma={g}"), errs, 1e-4)
        })
        .collect()
}

fn convolution_checks() -> Vec<Check> {
    let cases: [(&str, KnownFunction, fn(f64) -> f64); 2] = [
        ("1*1", KnownFunction::One, |_| 1.0),
        ("exp:-1*1", KnownFunction::Exponential(-1.0), |t| (-t).exp()),
    ];
    cases
        .into_iter()
        .map(|(name, f, fx)| {
            let conv = |t: f64| {
                if t == 0.0 {
                    return 0.0;
                }
                integrate(fx, 0.0, t, &QuadOptions::with_rtol(1e-12))
                    .map(|q| q.value)
                    .unwrap_or(f64::NAN)
            };
            let errs = image_of(&f)
                .and_then(|img| Ok(convolve_images(&img, &image_of(&KnownFunction::One)?)))
                .and_then(|img| {
                    over_lattice(&img, 0.0, |v, p| {
                        forward_numeric(conv, p, v, &ForwardOptions::default())
                    })
                });
            Check::from_errors(name, errs, 1e-5)
        })
        .collect()
}

fn delay_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for a in [0.5, 2.0] {
        let cases: [(&str, KnownFunction, fn(f64) -> f64); 2] = [
            ("1", KnownFunction::One, |_| 1.0),
            ("t", KnownFunction::Power(1), |t| t),
        ];
        for (name, f, fx) in cases {
            let opts = ForwardOptions {
                breakpoints: vec![a],
                ..ForwardOptions::default()
            };
            let shifted = |t: f64| if t >= a { fx(t - a) } else { 0.0 };
            let errs = image_of(&f)
                .and_then(|img| delay_image(&img, a))
                .and_then(|img| {
                    over_lattice(&img, 0.0, |v, p| forward_numeric(shifted, p, v, &opts))
                });
            out.push(Check::from_errors(format!("{name} a={a}"), errs, 1e-6));
        }
    }
    out
}

const LIMIT_PARAMS: [(f64, f64); 3] = [(1.0, 0.0), (0.5, 2.0), (2.0, -1.0)];

fn limit_check<F>(name: &str, want: f64, f: &KnownFunction, est: F) -> Check
where
    F: Fn(&TransformImage, &SadikParams) -> Result<f64>,
{
    let mut values = Vec::new();
    let errs = image_of(f).and_then(|img| {
        LIMIT_PARAMS
            .iter()
            .map(|&(a, b)| {
                let x = est(&img, &SadikParams::numeric(a, b)?)?;
                values.push(x);
                Ok((x - want).abs())
            })
            .collect()
    });
    let mut c = Check::from_errors(name, errs, LIMIT_RTOL);
    if c.worst.is_finite() {
        let shown: Vec<String> = values.iter().map(|x| format!("{x:.6}")).collect();
        c.detail = format!("estimates [{}]", shown.join(", "));
    }
    c
}

fn expect_error<F>(
    name: &str,
    f: &KnownFunction,
    est: F,
    want: &str,
    matches: fn(&SadikError) -> bool,
) -> Check
where
    F: Fn(&TransformImage, &SadikParams) -> Result<f64>,
{
    let p = SadikParams::laplace();
    match image_of(f).and_then(|img| est(&img, &p)) {
        Err(e) if matches(&e) => Check::outcome(name, true, format!("{want}: {e}")),
        Err(e) => Check::outcome(name, false, format!("expected {want}, got {e}")),
        Ok(x) => Check::outcome(name, false, format!("expected {want}, got value {x}")),
    }
}

fn ivt_checks() -> Vec<Check> {
    vec![
        limit_check(
            "exp:1 -> 1",
            1.0,
            &KnownFunction::Exponential(1.0),
            initial_value,
        ),
        limit_check("sin:1 -> 0", 0.0, &KnownFunction::Sine(1.0), initial_value),
        expect_error(
            "dirac rejected",
            &KnownFunction::Dirac,
            initial_value,
            "NotConvergent",
            |e| matches!(e, SadikError::NotConvergent(_)),
        ),
    ]
}

fn fvt_checks() -> Vec<Check> {
    vec![
        limit_check("one -> 1", 1.0, &KnownFunction::One, final_value),
        limit_check("dirac -> 0", 0.0, &KnownFunction::Dirac, final_value),
        expect_error(
            "exp:1 rejected",
            &KnownFunction::Exponential(1.0),
            final_value,
            "PoleOnPositiveAxis",
            |e| matches!(e, SadikError::PoleOnPositiveAxis { .. }),
        ),
        expect_error(
            "sin:1 rejected",
            &KnownFunction::Sine(1.0),
            final_value,
            "NotConvergent",
            |e| matches!(e, SadikError::NotConvergent(_)),
        ),
    ]
}

fn tn_checks() -> Vec<Check> {
    let cases: [(&str, fn(f64) -> f64); 2] =
        [("exp:-1", |t| (-t).exp()), ("sin:2", |t| (2.0 * t).sin())];
    let mut out = Vec::new();
    for (name, f) in cases {
        for n in [1u32, 2] {
            let errs = lattice()
                .into_iter()
                .map(|(v, p)| {
                    let (lhs, rhs) = tn_multiply_check(f, n, &p, v, &ForwardOptions::default())?;
                    Ok(rel(rhs, lhs))
                })
                .collect();
            out.push(Check::from_errors(format!("{name} n={n}"), errs, 1e-4));
        }
    }
    out
}

/// Round-trip error is relative to max(|f(t)|, 1) so zeros of sin 2t are
/// measured absolutely.
fn inversion_checks() -> Vec<Check> {
    let cases: [(KnownFunction, fn(f64) -> f64); 4] = [
        (KnownFunction::One, |_| 1.0),
        (KnownFunction::Power(1), |t| t),
        (KnownFunction::Exponential(-1.0), |t| (-t).exp()),
        (KnownFunction::Sine(2.0), |t| (2.0 * t).sin()),
    ];
    let mut out = Vec::new();
    for (f, fx) in cases {
        for (a, b) in [(1.0, 0.0), (2.0, 1.0)] {
            let errs = image_of(&f).and_then(|img| {
                let p = SadikParams::numeric(a, b)?;
                (0..50)
                    .map(|i| {
                        let t = 0.1 + 0.1 * i as f64;
                        let got = inverse_numeric(&img, &p, t, &InverseOptions::default())?;
                        let want = fx(t);
                        Ok((got - want).abs() / want.abs().max(1.0))
                    })
                    .collect()
            });
            out.push(Check::from_errors(
                format!("{f} alpha={a} beta={b}"),
                errs,
                1e-5,
            ));
        }
    }
    out
}

/// Runs every suite in a fixed order.
pub fn run_all() -> Vec<SuiteReport> {
    Suite::ALL.into_iter().map(Suite::run).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("laplace".parse::<Suite>().is_err());
    }

    #[test]
    fn limit_suites_pass() {
        for s in [Suite::Ivt, Suite::Fvt, Suite::Delay] {
            let r = s.run();
            assert!(r.passed(), "{r}");
        }
    }
}
