use std::fmt;
use std::str::FromStr;

use crate::error::{Result, SadikError};
use crate::image::{DenomFactor, Exponent, ImageTerm, TransformImage};
use crate::mittag_leffler::{ml_deriv, MLSpec};
use crate::special::factorial;

/// Sign of the argument ±a·t^p of an ML kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Time functions with a closed-form image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KnownFunction {
    One,
    /// t^n
    Power(u32),
    /// e^(a t)
    Exponential(f64),
    /// sin(a t)
    Sine(f64),
    /// η(t − a), with η(0) = 1
    Heaviside(f64),
    Dirac,
    /// t^(pm+q−1) E^(m)_{p,q}(±a t^p)
    MlKernel {
        p: f64,
        q: f64,
        m: u32,
        a: f64,
        sign: Sign,
    },
}

impl KnownFunction {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(SadikError::InvalidParams(msg));
        match *self {
            KnownFunction::Exponential(a) | KnownFunction::Sine(a) if !a.is_finite() => {
                bad(format!("parameter must be finite, got {a}"))
            }
            KnownFunction::Heaviside(a) if !(a >= 0.0 && a.is_finite()) => {
                bad(format!("Heaviside shift must be >= 0, got {a}"))
            }
            KnownFunction::MlKernel { p, q, a, .. } => {
                MLSpec::new(p, q, 0)?;
                if !a.is_finite() {
                    return bad(format!("kernel scale must be finite, got {a}"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// φ(t) for t ≥ 0. The Dirac delta has no pointwise values.
    pub fn eval(&self, t: f64) -> Result<f64> {
        Ok(match *self {
            KnownFunction::One => 1.0,
            KnownFunction::Power(n) => t.powi(n as i32),
            KnownFunction::Exponential(a) => (a * t).exp(),
            KnownFunction::Sine(a) => (a * t).sin(),
            KnownFunction::Heaviside(a) => {
                if t >= a {
                    1.0
                } else {
                    0.0
                }
            }
            KnownFunction::Dirac => {
                return Err(SadikError::UnsupportedFunction(
                    "dirac has no pointwise values".into(),
                ))
            }
            KnownFunction::MlKernel { p, q, m, a, sign } => {
                let spec = MLSpec::new(p, q, m)?;
                let z = sign.value() * a * t.powf(p);
                t.powf(p * m as f64 + q - 1.0) * ml_deriv(&spec, z)?
            }
        })
    }

    /// Exponential order σ with |φ(t)| ≤ M·e^((σ+ε)t) for every ε > 0.
    pub fn growth_rate(&self) -> f64 {
        match *self {
            KnownFunction::Exponential(a) => a,
            KnownFunction::MlKernel { .. } => image_of(self)
                .map(|img| {
                    img.singularities_s()
                        .iter()
                        .map(|s| s.re)
                        .fold(0.0, f64::max)
                })
                .unwrap_or(f64::INFINITY),
            _ => 0.0,
        }
    }

    /// Points where φ is not smooth.
    pub fn breakpoints(&self) -> Vec<f64> {
        match *self {
            KnownFunction::Heaviside(a) if a > 0.0 => vec![a],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for KnownFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KnownFunction::One => write!(f, "one"),
            KnownFunction::Power(n) => write!(f, "power:{n}"),
            KnownFunction::Exponential(a) => write!(f, "exp:{a}"),
            KnownFunction::Sine(a) => write!(f, "sin:{a}"),
            KnownFunction::Heaviside(a) => write!(f, "heaviside:{a}"),
            KnownFunction::Dirac => write!(f, "dirac"),
            KnownFunction::MlKernel { p, q, m, a, sign } => {
                let s = if sign == Sign::Plus { '+' } else { '-' };
                write!(f, "ml:{p},{q},{m},{s}{a}")
            }
        }
    }
}

/// Parses the forms produced by `Display`, e.g. `power:3`, `exp:-1`,
/// `ml:0.5,1,0,-2`.
impl FromStr for KnownFunction {
    type Err = SadikError;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a.trim())),
            None => (s.trim(), None),
        };
        let num = |a: Option<&str>| -> Result<f64> {
            let a =
                a.ok_or_else(|| SadikError::InvalidParams(format!("{kind} needs a parameter")))?;
            a.parse::<f64>()
                .map_err(|_| SadikError::InvalidParams(format!("bad number '{a}' in '{s}'")))
        };
        let f = match kind {
            "one" | "1" => KnownFunction::One,
            "power" | "t" => {
                let a = arg.ok_or_else(|| SadikError::InvalidParams("power needs n".into()))?;
                KnownFunction::Power(
                    a.parse()
                        .map_err(|_| SadikError::InvalidParams(format!("bad power '{a}'")))?,
                )
            }
            "exp" => KnownFunction::Exponential(num(arg)?),
            "sin" => KnownFunction::Sine(num(arg)?),
            "heaviside" | "step" => KnownFunction::Heaviside(num(arg)?),
            "dirac" | "delta" => KnownFunction::Dirac,
            "ml" => {
                let a = arg.ok_or_else(|| SadikError::InvalidParams("ml needs p,q,m,±a".into()))?;
                let parts: Vec<&str> = a.split(',').map(str::trim).collect();
                if parts.len() != 4 {
                    return Err(SadikError::InvalidParams(format!(
                        "ml expects p,q,m,±a, got '{a}'"
                    )));
                }
                let p = num(Some(parts[0]))?;
                let q = num(Some(parts[1]))?;
                let m = parts[2]
                    .parse()
                    .map_err(|_| SadikError::InvalidParams(format!("bad m '{}'", parts[2])))?;
                let scaled = num(Some(parts[3]))?;
                let sign = if scaled < 0.0 || parts[3].starts_with('-') {
                    Sign::Minus
                } else {
                    Sign::Plus
                };
                KnownFunction::MlKernel {
                    p,
                    q,
                    m,
                    a: scaled.abs(),
                    sign,
                }
            }
            _ => return Err(SadikError::UnsupportedFunction(s.to_string())),
        };
        f.validate()?;
        Ok(f)
    }
}

/// Closed-form image of a table function.
pub fn image_of(f: &KnownFunction) -> Result<TransformImage> {
    f.validate()?;
    Ok(match *f {
        KnownFunction::One => TransformImage::monomial(1.0, Exponent::new(-1.0, -1.0, 0.0)),
        KnownFunction::Power(n) => {
            TransformImage::monomial(factorial(n), Exponent::new(-(n as f64) - 1.0, -1.0, 0.0))
        }
        KnownFunction::Exponential(a) => {
            TransformImage::new(vec![ImageTerm::monomial(1.0, Exponent::beta(-1.0))
                .with_denom(DenomFactor::new(1.0, a, 1))])
        }
        KnownFunction::Sine(a) => {
            TransformImage::new(vec![ImageTerm::monomial(a, Exponent::beta(-1.0))
                .with_denom(DenomFactor::new(2.0, -a * a, 1))])
        }
        KnownFunction::Heaviside(a) => {
            TransformImage::monomial(1.0, Exponent::new(-1.0, -1.0, 0.0)).add_delay(a)
        }
        KnownFunction::Dirac => TransformImage::constant(1.0),
        KnownFunction::MlKernel { p, q, m, a, sign } => {
            TransformImage::new(vec![ImageTerm::monomial(
                factorial(m),
                Exponent::new(p - q, -1.0, 0.0),
            )
            .with_denom(DenomFactor::new(p, sign.value() * a, m + 1))])
        }
    })
}
