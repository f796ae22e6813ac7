//! Lower Dini directional derivatives from residuated difference quotients.
//!
//! The liminf over `t -> 0+` is approximated on the geometric steps
//! `t_k = t0 * rho^k`. Scalar quotients get one Richardson step to cancel
//! the linear error term before the tail minimum is taken.

use std::fmt;

use crate::error::{Error, Result};
use crate::funcmodel::{scalarize, ScalarEval, SetEval};
use crate::polytope::linalg::{norm, scaled};
use crate::polytope::{lattice_inf, residual_quotient, scale, ConvexCone, DualVector, UpperSet, TAU_H, TAU_STRICT};
use crate::xreals::{inf_residual, liminf_tail, XReal};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiniConfig {
    pub t0: f64,
    pub rho: f64,
    pub steps: usize,
    pub window: usize,
    /// Apply one Richardson step to scalar quotients.
    pub extrapolate: bool,
}

impl Default for DiniConfig {
    fn default() -> Self {
        DiniConfig { t0: 0.1, rho: 0.5, steps: 24, window: 6, extrapolate: true }
    }
}

impl DiniConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.t0 > 0.0 && self.t0.is_finite()) {
            return Err(Error::InvalidArgument(format!("t0 must be positive, got {}", self.t0)));
        }
        if !(self.rho > 0.0 && self.rho < 1.0) {
            return Err(Error::InvalidArgument(format!("rho must lie in (0,1), got {}", self.rho)));
        }
        if self.window == 0 || self.steps <= self.window {
            return Err(Error::InvalidArgument(format!(
                "need 0 < window < steps, got window {} and steps {}",
                self.window, self.steps
            )));
        }
        Ok(())
    }

    /// `t0 * rho^k` for `k < steps`.
    pub fn steps(&self) -> Vec<f64> {
        (0..self.steps).map(|k| self.t0 * self.rho.powi(k as i32)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiniMode {
    Scalar,
    Zstar,
    Residual,
}

impl fmt::Display for DiniMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiniMode::Scalar => "SCALAR",
            DiniMode::Zstar => "ZSTAR",
            DiniMode::Residual => "RESIDUAL",
        })
    }
}

#[derive(Debug, Clone)]
pub struct DiniResult {
    pub scalar_value: XReal,
    pub set_value: UpperSet,
    pub mode: DiniMode,
    /// The tail windows `w` and `2w` disagreed.
    pub low_confidence: bool,
}

fn check_direction(u: &[f64], n: usize) -> Result<()> {
    if u.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: u.len() });
    }
    if u.iter().all(|v| *v == 0.0) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

fn shifted(x: &[f64], u: &[f64], t: f64) -> Vec<f64> {
    x.iter().zip(scaled(u, t)).map(|(a, b)| a + b).collect()
}

/// Largest rounding error tolerated in a quotient that enters the tail.
const QUOTIENT_NOISE: f64 = 1e-8;

/// One difference quotient with its step and rounding error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quotient {
    pub t: f64,
    pub value: XReal,
    pub noise: f64,
}

/// Difference quotients `(φ(x + t_k u) ∸ φ(x)) / t_k`.
pub fn scalar_quotients(phi: &dyn ScalarEval, x: &[f64], u: &[f64], cfg: &DiniConfig) -> Result<Vec<Quotient>> {
    cfg.validate()?;
    check_direction(u, phi.dim())?;
    let base = phi.value(x)?;
    let res = 2.0 * phi.resolution();
    cfg.steps()
        .into_iter()
        .map(|t| {
            let moved = phi.value(&shifted(x, u, t))?;
            let err = match (moved, base) {
                (XReal::Finite(p), XReal::Finite(q)) => 4.0 * f64::EPSILON * p.abs().max(q.abs()) + res,
                _ => 0.0,
            };
            Ok(Quotient { t, value: residual_or_zero(moved, base, err).scale_pos(1.0 / t), noise: err / t })
        })
        .collect()
}

/// `a ∸ b`, read as zero when the finite difference is within `err`.
fn residual_or_zero(a: XReal, b: XReal, err: f64) -> XReal {
    if let (XReal::Finite(p), XReal::Finite(q)) = (a, b) {
        if (p - q).abs() <= err {
            return XReal::ZERO;
        }
    }
    inf_residual(a, b)
}

fn richardson(q: &[Quotient], rho: f64) -> Vec<Quotient> {
    q.windows(2)
        .map(|w| {
            let next = w[1];
            let value = match (w[0].value, next.value) {
                (XReal::Finite(a), XReal::Finite(b)) => XReal::from_f64((b - rho * a) / (1.0 - rho)),
                _ => next.value,
            };
            Quotient { t: next.t, value, noise: (next.noise + rho * w[0].noise) / (1.0 - rho) }
        })
        .collect()
}

/// `liminf_{t -> 0+} (φ(x + tu) ∸ φ(x)) / t`.
///
/// Quotients whose rounding error exceeds [`QUOTIENT_NOISE`] are dropped
/// before the tail is taken; if too few remain the largest steps are used.
/// A result within its own rounding bound of zero is reported as zero. The
/// steps are taken along `u / |u|` and the result scaled by `|u|`, so the
/// probed distances do not depend on the length of `u`.
pub fn scalar_dini(phi: &dyn ScalarEval, x: &[f64], u: &[f64], cfg: &DiniConfig) -> Result<XReal> {
    check_direction(u, phi.dim())?;
    let len = norm(u);
    Ok(unit_scalar_dini(phi, x, &scaled(u, 1.0 / len), cfg)?.scale_pos(len))
}

fn unit_scalar_dini(phi: &dyn ScalarEval, x: &[f64], u: &[f64], cfg: &DiniConfig) -> Result<XReal> {
    let q = scalar_quotients(phi, x, u, cfg)?;
    let q = if cfg.extrapolate { richardson(&q, cfg.rho) } else { q };
    let clean: Vec<Quotient> = q.iter().filter(|s| s.noise <= QUOTIENT_NOISE).copied().collect();
    let tail = if clean.len() >= cfg.window { &clean[..] } else { &q[..cfg.window] };
    let samples: Vec<(f64, XReal)> = tail.iter().map(|s| (s.t, s.value)).collect();
    let v = liminf_tail(&samples, cfg.window)?;
    let noise = tail[tail.len() - cfg.window..].iter().filter(|s| s.value == v).map(|s| s.noise).fold(0.0, f64::max);
    match v {
        XReal::Finite(a) if a.abs() <= noise => Ok(XReal::ZERO),
        _ => Ok(v),
    }
}

/// Derivative of `x -> f(x)` along `u` with respect to one dual direction.
pub fn zstar_dini(f: &dyn SetEval, zstar: &DualVector, x: &[f64], u: &[f64], cfg: &DiniConfig) -> Result<DiniResult> {
    let phi = scalarize(f, zstar)?;
    let v = scalar_dini(&phi, x, u, cfg)?;
    Ok(DiniResult {
        scalar_value: v,
        set_value: UpperSet::dual_halfspace(zstar, v),
        mode: DiniMode::Zstar,
        low_confidence: false,
    })
}

/// Scalar derivative packaged as a set over `(R, R_+)`.
pub fn scalar_dini_result(phi: &dyn ScalarEval, x: &[f64], u: &[f64], cfg: &DiniConfig) -> Result<DiniResult> {
    let v = scalar_dini(phi, x, u, cfg)?;
    let up = DualVector::new(vec![-1.0], &ConvexCone::orthant(1))?;
    Ok(DiniResult {
        scalar_value: v,
        set_value: UpperSet::dual_halfspace(&up, v),
        mode: DiniMode::Scalar,
        low_confidence: false,
    })
}

/// `liminf_{t -> 0+} (1/t)(f(x + tu) ∸ f(x))` using the full set residual.
pub fn residual_dini(f: &dyn SetEval, x: &[f64], u: &[f64], cfg: &DiniConfig) -> Result<DiniResult> {
    cfg.validate()?;
    check_direction(u, f.arg_dim())?;
    let len = norm(u);
    let u = &scaled(u, 1.0 / len);
    let base = f.eval(x)?;
    let quotients = cfg
        .steps()
        .into_iter()
        .map(|t| residual_quotient(&f.eval(&shifted(x, u, t))?, &base, t))
        .collect::<Result<Vec<_>>>()?;
    let w = cfg.window;
    let k = quotients.len();
    let short = lattice_inf(&quotients[k - w..])?;
    let long = lattice_inf(&quotients[k.saturating_sub(2 * w)..])?;
    Ok(DiniResult {
        scalar_value: XReal::PosInf,
        low_confidence: !short.approx_eq(&long, TAU_H),
        set_value: scale(&short, len)?,
        mode: DiniMode::Residual,
    })
}

/// Whether the origin is interior to a z*-derivative halfspace.
pub fn interior_contains_zero(h: &DiniResult) -> Result<bool> {
    if h.mode != DiniMode::Zstar {
        return Err(Error::InvalidArgument(format!("expected a ZSTAR derivative, got {}", h.mode)));
    }
    Ok(h.scalar_value < XReal::Finite(-TAU_STRICT))
}
