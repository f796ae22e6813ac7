//! Extended reals with inf-addition and inf-residuation.
//!
//! `XReal` is totally ordered (`NegInf < Finite(_) < PosInf`) and every
//! operation here is total. Where ordinary float arithmetic would produce
//! `NaN` (for example `+inf + -inf`), the inf-addition rule picks `PosInf`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// An element of `R ∪ {-inf, +inf}`.
#[derive(Debug, Clone, Copy)]
pub enum XReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl XReal {
    pub const ZERO: XReal = XReal::Finite(0.0);

    /// Maps an `f64` onto the extended reals. Infinite floats become the
    /// matching infinity; `NaN` is rejected in debug builds and mapped to
    /// `PosInf` otherwise.
    pub fn from_f64(v: f64) -> XReal {
        debug_assert!(!v.is_nan(), "NaN entered the extended reals");
        if v.is_nan() || v == f64::INFINITY {
            XReal::PosInf
        } else if v == f64::NEG_INFINITY {
            XReal::NegInf
        } else {
            XReal::Finite(v)
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            XReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, XReal::Finite(_))
    }

    pub fn is_pos_inf(self) -> bool {
        matches!(self, XReal::PosInf)
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, XReal::NegInf)
    }

    /// Lossy view as an `f64` (infinities map to float infinities).
    pub fn to_f64(self) -> f64 {
        match self {
            XReal::NegInf => f64::NEG_INFINITY,
            XReal::Finite(v) => v,
            XReal::PosInf => f64::INFINITY,
        }
    }

    /// Multiplication by a strictly positive real; infinities are fixed.
    pub fn scale_pos(self, r: f64) -> XReal {
        debug_assert!(r > 0.0 && r.is_finite());
        match self {
            XReal::Finite(v) => XReal::from_f64(v * r),
            other => other,
        }
    }

    /// Order-reversing negation.
    pub fn neg(self) -> XReal {
        match self {
            XReal::NegInf => XReal::PosInf,
            XReal::Finite(v) => XReal::Finite(-v),
            XReal::PosInf => XReal::NegInf,
        }
    }

    pub fn min(self, other: XReal) -> XReal {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: XReal) -> XReal {
        if other > self {
            other
        } else {
            self
        }
    }

    fn rank(self) -> u8 {
        match self {
            XReal::NegInf => 0,
            XReal::Finite(_) => 1,
            XReal::PosInf => 2,
        }
    }
}

impl PartialEq for XReal {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for XReal {}

impl PartialOrd for XReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for XReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (XReal::Finite(a), XReal::Finite(b)) => a.total_cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl From<f64> for XReal {
    fn from(v: f64) -> Self {
        XReal::from_f64(v)
    }
}

impl fmt::Display for XReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XReal::NegInf => write!(f, "-inf"),
            XReal::PosInf => write!(f, "inf"),
            XReal::Finite(v) => {
                // normalise negative zero so output is stable
                let v = if *v == 0.0 { 0.0 } else { *v };
                write!(f, "{v}")
            }
        }
    }
}

impl FromStr for XReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "+inf" | "Infinity" | "+Infinity" => Ok(XReal::PosInf),
            "-inf" | "-Infinity" => Ok(XReal::NegInf),
            other => other
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(XReal::Finite)
                .ok_or_else(|| Error::Parse(format!("not an extended real: {other:?}"))),
        }
    }
}

/// Inf-addition: `+inf` absorbs everything (including `-inf`), then `-inf`
/// absorbs finite values.
pub fn inf_add(r: XReal, s: XReal) -> XReal {
    match (r, s) {
        (XReal::PosInf, _) | (_, XReal::PosInf) => XReal::PosInf,
        (XReal::NegInf, _) | (_, XReal::NegInf) => XReal::NegInf,
        (XReal::Finite(a), XReal::Finite(b)) => XReal::from_f64(a + b),
    }
}

/// Inf-residuation `r ∸ s`: the least `t` with `r <= s ⊕ t`.
pub fn inf_residual(r: XReal, s: XReal) -> XReal {
    match (r, s) {
        (_, XReal::PosInf) => XReal::NegInf,
        (XReal::NegInf, XReal::NegInf) => XReal::NegInf,
        (_, XReal::NegInf) => XReal::PosInf,
        (XReal::PosInf, XReal::Finite(_)) => XReal::PosInf,
        (XReal::NegInf, XReal::Finite(_)) => XReal::NegInf,
        (XReal::Finite(a), XReal::Finite(b)) => XReal::from_f64(a - b),
    }
}

/// Minimum of `v` over the last `window` samples of a sequence whose `t`
/// values decrease. This is the lower-limit estimator used by every Dini
/// computation in the crate.
pub fn liminf_tail(samples: &[(f64, XReal)], window: usize) -> Result<XReal, Error> {
    if samples.is_empty() {
        return Err(Error::NoSamples);
    }
    if window == 0 || window > samples.len() {
        return Err(Error::InvalidArgument(format!(
            "window {window} outside 1..={}",
            samples.len()
        )));
    }
    debug_assert!(
        samples.windows(2).all(|w| w[1].0 < w[0].0),
        "t values must strictly decrease"
    );
    Ok(samples[samples.len() - window..]
        .iter()
        .map(|s| s.1)
        .min()
        .expect("window is nonempty"))
}
