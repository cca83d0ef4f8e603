//! Closed-form transform images.
//!
//! Every image produced by the table and the operational rules is a finite
//! sum of terms
//!
//! ```text
//! coeff · v^(c_a·α + c_b·β + c_0) · e^(−delay·v^α) / Π (v^(p·α) − pole)^mult
//! ```
//!
//! The exponent is kept symbolic in (α, β) so that rule outputs can be
//! compared coefficient by coefficient, independent of the evaluation point.
//! A denominator factor `v^(p·α) − pole` is `s^p − pole` in the Laplace
//! variable `s = v^α`, which is what the complex evaluation and the
//! singularity search work with.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Result, SadikError};
use crate::params::SadikParams;
use crate::special::binomial;

/// Default relative pole guard used by [`eval_image`].
pub const DEFAULT_POLE_GUARD: f64 = 1e-12;

const MATCH_TOL: f64 = 1e-12;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= MATCH_TOL * 1f64.max(a.abs()).max(b.abs())
}

/// Affine exponent `alpha·α + beta·β + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Exponent {
    pub alpha: f64,
    pub beta: f64,
    pub constant: f64,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent {
        alpha: 0.0,
        beta: 0.0,
        constant: 0.0,
    };

    pub fn new(alpha: f64, beta: f64, constant: f64) -> Self {
        Self {
            alpha,
            beta,
            constant,
        }
    }

    /// `k·α`
    pub fn alpha(k: f64) -> Self {
        Self::new(k, 0.0, 0.0)
    }

    /// `k·β`
    pub fn beta(k: f64) -> Self {
        Self::new(0.0, k, 0.0)
    }

    pub fn value(&self, params: &SadikParams) -> f64 {
        self.alpha * params.alpha + self.beta * params.beta + self.constant
    }

    pub fn approx_eq(&self, other: &Exponent) -> bool {
        close(self.alpha, other.alpha)
            && close(self.beta, other.beta)
            && close(self.constant, other.constant)
    }
}

impl Add for Exponent {
    type Output = Exponent;
    fn add(self, o: Exponent) -> Exponent {
        Exponent::new(
            self.alpha + o.alpha,
            self.beta + o.beta,
            self.constant + o.constant,
        )
    }
}

impl Sub for Exponent {
    type Output = Exponent;
    fn sub(self, o: Exponent) -> Exponent {
        self + (-o)
    }
}

impl Neg for Exponent {
    type Output = Exponent;
    fn neg(self) -> Exponent {
        Exponent::new(-self.alpha, -self.beta, -self.constant)
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}α{:+}β{:+}", self.alpha, self.beta, self.constant)
    }
}

/// `(v^(power·α) − pole)^multiplicity`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DenomFactor {
    pub power: f64,
    pub pole: f64,
    pub multiplicity: u32,
}

impl DenomFactor {
    pub fn new(power: f64, pole: f64, multiplicity: u32) -> Self {
        Self {
            power,
            pole,
            multiplicity,
        }
    }

    fn same_base(&self, other: &DenomFactor) -> bool {
        close(self.power, other.power) && close(self.pole, other.pole)
    }

    /// Roots of `s^power = pole` on the principal sheet (|arg s| < π).
    pub fn roots_s(&self) -> Vec<Complex64> {
        let p = self.power;
        if self.pole == 0.0 {
            return vec![Complex64::new(0.0, 0.0)];
        }
        let r = self.pole.abs().powf(1.0 / p);
        let base_arg = if self.pole > 0.0 {
            0.0
        } else {
            std::f64::consts::PI
        };
        let mut roots = Vec::new();
        // arg s = (base_arg + 2πj)/p, keep those strictly inside (−π, π)
        let jmax = (p / 2.0).ceil() as i64 + 1;
        for j in -jmax..=jmax {
            let arg = (base_arg + 2.0 * std::f64::consts::PI * j as f64) / p;
            if arg.abs() < std::f64::consts::PI - 1e-12 {
                roots.push(Complex64::from_polar(r, arg));
            }
        }
        roots
    }
}

/// One summand of a [`TransformImage`].
#[derive(Debug, Clone, PartialEq)]
pub struct ImageTerm {
    pub coeff: f64,
    pub exponent: Exponent,
    pub delay: f64,
    pub denom: Vec<DenomFactor>,
}

impl ImageTerm {
    pub fn monomial(coeff: f64, exponent: Exponent) -> Self {
        Self {
            coeff,
            exponent,
            delay: 0.0,
            denom: Vec::new(),
        }
    }

    pub fn with_denom(mut self, factor: DenomFactor) -> Self {
        self.denom.push(factor);
        self.canonicalize();
        self
    }

    /// Merges denominator factors with the same base and sorts them.
    fn canonicalize(&mut self) {
        let mut merged: Vec<DenomFactor> = Vec::with_capacity(self.denom.len());
        for f in self.denom.drain(..) {
            if f.multiplicity == 0 {
                continue;
            }
            match merged.iter_mut().find(|g| g.same_base(&f)) {
                Some(g) => g.multiplicity += f.multiplicity,
                None => merged.push(f),
            }
        }
        merged.sort_by(|a, b| a.power.total_cmp(&b.power).then(a.pole.total_cmp(&b.pole)));
        self.denom = merged;
    }

    fn same_shape(&self, other: &ImageTerm) -> bool {
        self.exponent.approx_eq(&other.exponent)
            && close(self.delay, other.delay)
            && self.denom.len() == other.denom.len()
            && self
                .denom
                .iter()
                .zip(&other.denom)
                .all(|(a, b)| a.same_base(b) && a.multiplicity == b.multiplicity)
    }

    fn eval_complex(&self, arg: ImageArg, params: &SadikParams) -> Complex64 {
        let mut value = arg.pow(self.exponent.value(params)) * self.coeff;
        if self.delay != 0.0 {
            value *= (-arg.pow(params.alpha) * self.delay).exp();
        }
        for f in &self.denom {
            let base = arg.pow(f.power * params.alpha) - f.pole;
            value /= base.powu(f.multiplicity);
        }
        value
    }
}

/// Point at which an image is evaluated, carried as ln v so that powers of
/// complex v stay on the branch fixed by the principal branch of s = v^α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageArg {
    ln_v: Complex64,
}

impl ImageArg {
    /// A point on the positive real ray.
    pub fn real(v: f64) -> Self {
        Self {
            ln_v: Complex64::new(v.ln(), 0.0),
        }
    }

    /// The point v = s^(1/α), principal branch in s.
    pub fn from_s(s: Complex64, alpha: f64) -> Self {
        Self {
            ln_v: s.ln() / alpha,
        }
    }

    pub fn ln_v(&self) -> Complex64 {
        self.ln_v
    }

    pub fn v(&self) -> Complex64 {
        self.ln_v.exp()
    }

    /// v^x on the branch carried by this point.
    pub fn pow(&self, x: f64) -> Complex64 {
        (self.ln_v * x).exp()
    }
}

/// A closed-form image: a finite sum of [`ImageTerm`]s.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TransformImage {
    terms: Vec<ImageTerm>,
}

impl TransformImage {
    pub fn new(terms: Vec<ImageTerm>) -> Self {
        let mut terms = terms;
        for t in &mut terms {
            t.canonicalize();
        }
        Self { terms }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant image `c`.
    pub fn constant(c: f64) -> Self {
        Self::new(vec![ImageTerm::monomial(c, Exponent::ZERO)])
    }

    pub fn monomial(coeff: f64, exponent: Exponent) -> Self {
        Self::new(vec![ImageTerm::monomial(coeff, exponent)])
    }

    pub fn terms(&self) -> &[ImageTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at a real `v > 0` with the default pole guard.
    pub fn eval(&self, v: f64, params: &SadikParams) -> Result<f64> {
        self.eval_with_guard(v, params, DEFAULT_POLE_GUARD)
    }

    pub fn eval_with_guard(&self, v: f64, params: &SadikParams, guard: f64) -> Result<f64> {
        params.require_numeric()?;
        if !(v > 0.0) || !v.is_finite() {
            return Err(SadikError::InvalidParams(format!(
                "evaluation point v must be positive, got {v}"
            )));
        }
        let mut sum = 0.0;
        for term in &self.terms {
            let mut value = term.coeff * v.powf(term.exponent.value(params));
            if term.delay != 0.0 {
                value *= (-term.delay * params.v_alpha(v)).exp();
            }
            for f in &term.denom {
                let x = v.powf(f.power * params.alpha);
                let gap = x - f.pole;
                if gap.abs() < guard * x.abs() {
                    return Err(SadikError::PoleAtEvaluationPoint { v, gap: gap.abs() });
                }
                value /= gap.powi(f.multiplicity as i32);
            }
            sum += value;
        }
        Ok(sum)
    }

    /// Evaluates at a complex point. No pole guard is applied.
    pub fn eval_complex(&self, arg: ImageArg, params: &SadikParams) -> Complex64 {
        self.terms.iter().map(|t| t.eval_complex(arg, params)).sum()
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: f64) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.coeff *= c;
        }
        out
    }

    /// Multiplies every term by `v^e`.
    pub fn shift_exponent(&self, e: Exponent) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.exponent = t.exponent + e;
        }
        out
    }

    /// Multiplies every term by `e^(−a·v^α)`.
    pub fn add_delay(&self, a: f64) -> Self {
        let mut out = self.clone();
        for t in &mut out.terms {
            t.delay += a;
        }
        out
    }

    /// Term-by-term product; delays add and denominators concatenate.
    pub fn product(&self, other: &TransformImage) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut denom = a.denom.clone();
                denom.extend(b.denom.iter().copied());
                terms.push(ImageTerm {
                    coeff: a.coeff * b.coeff,
                    exponent: a.exponent + b.exponent,
                    delay: a.delay + b.delay,
                    denom,
                });
            }
        }
        Self::new(terms)
    }

    /// Merges like terms and drops zero coefficients.
    pub fn normalized(&self) -> Self {
        let mut out: Vec<ImageTerm> = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            match out.iter_mut().find(|u| u.same_shape(t)) {
                Some(u) => u.coeff += t.coeff,
                None => out.push(t.clone()),
            }
        }
        out.retain(|t| t.coeff != 0.0);
        Self { terms: out }
    }

    /// Distinct delays carried by the terms, ascending.
    pub fn delays(&self) -> Vec<f64> {
        let mut ds: Vec<f64> = Vec::new();
        for t in &self.terms {
            if !ds.iter().any(|d| close(*d, t.delay)) {
                ds.push(t.delay);
            }
        }
        ds.sort_by(f64::total_cmp);
        ds
    }

    /// The terms carrying delay `d`, with the delay factor removed.
    pub fn delay_component(&self, d: f64) -> Self {
        Self::new(
            self.terms
                .iter()
                .filter(|t| close(t.delay, d))
                .map(|t| ImageTerm {
                    delay: 0.0,
                    ..t.clone()
                })
                .collect(),
        )
    }

    /// All singularities in the Laplace variable s = v^α (principal sheet),
    /// excluding the branch point at the origin.
    pub fn singularities_s(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = Vec::new();
        for t in &self.terms {
            for f in &t.denom {
                for r in f.roots_s() {
                    if !out.iter().any(|q| (q - r).norm() < 1e-12) {
                        out.push(r);
                    }
                }
            }
        }
        out
    }

    /// Rewrites the image over a common denominator and returns
    /// (denominator factors, numerator monomials with like terms merged).
    pub fn common_form(&self) -> (Vec<DenomFactor>, Vec<ImageTerm>) {
        let mut common: Vec<DenomFactor> = Vec::new();
        for t in &self.terms {
            for f in &t.denom {
                match common.iter_mut().find(|g| g.same_base(f)) {
                    Some(g) => g.multiplicity = g.multiplicity.max(f.multiplicity),
                    None => common.push(*f),
                }
            }
        }
        let mut numerator: Vec<ImageTerm> = Vec::new();
        for t in &self.terms {
            let mut monomials = vec![ImageTerm {
                denom: Vec::new(),
                ..t.clone()
            }];
            for base in &common {
                let have = t
                    .denom
                    .iter()
                    .find(|f| f.same_base(base))
                    .map_or(0, |f| f.multiplicity);
                let missing = base.multiplicity - have;
                if missing == 0 {
                    continue;
                }
                // (x − c)^k = Σ_j C(k,j) x^j (−c)^(k−j),  x = v^(p·α)
                let mut next = Vec::with_capacity(monomials.len() * (missing as usize + 1));
                for m in &monomials {
                    for j in 0..=missing {
                        let c = binomial(missing, j) * (-base.pole).powi((missing - j) as i32);
                        if c == 0.0 {
                            continue;
                        }
                        next.push(ImageTerm {
                            coeff: m.coeff * c,
                            exponent: m.exponent + Exponent::alpha(j as f64 * base.power),
                            delay: m.delay,
                            denom: Vec::new(),
                        });
                    }
                }
                monomials = next;
            }
            numerator.extend(monomials);
        }
        let merged = TransformImage { terms: numerator }.normalized();
        (common, merged.terms)
    }

    /// Symbolic equality in (α, β): the difference, written over a common
    /// denominator, has a numerator whose merged coefficients all vanish to
    /// within `rtol` of the largest input coefficient.
    pub fn equivalent(&self, other: &TransformImage, rtol: f64) -> bool {
        let diff = self.clone() - other.clone();
        let scale = self
            .terms
            .iter()
            .chain(other.terms.iter())
            .map(|t| t.coeff.abs())
            .fold(0.0, f64::max)
            .max(f64::MIN_POSITIVE);
        let (_, numerator) = diff.common_form();
        numerator.iter().all(|m| m.coeff.abs() <= rtol * scale)
    }
}

impl Add for TransformImage {
    type Output = TransformImage;
    fn add(mut self, o: TransformImage) -> TransformImage {
        self.terms.extend(o.terms);
        self
    }
}

impl Neg for TransformImage {
    type Output = TransformImage;
    fn neg(self) -> TransformImage {
        self.scale(-1.0)
    }
}

impl Sub for TransformImage {
    type Output = TransformImage;
    fn sub(self, o: TransformImage) -> TransformImage {
        self + (-o)
    }
}

/// Σ coeff · v^exponent · e^(−delay·v^α) / Π (v^(pα) − pole)^mult at real v.
pub fn eval_image(image: &TransformImage, v: f64, params: &SadikParams) -> Result<f64> {
    image.eval(v, params)
}
