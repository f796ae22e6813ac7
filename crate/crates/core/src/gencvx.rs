//! Generalized convexity along segments: classifiers, counterexample
//! witnesses, the mean-value witness and a radial lower semicontinuity probe.
//!
//! All radial properties are decided on a `[0, 1]` sample grid, so a `holds`
//! verdict means "no violation at this resolution".

use std::fmt;

use crate::dini::{scalar_dini, DiniConfig};
use crate::error::{Error, Result};
use crate::funcmodel::{restrict_segment, SampleGrid, ScalarEval, Segment, SetEval};
use crate::polytope::{is_subset, lattice_sup, TAU, TAU_STRICT};
use crate::report::fmt_point;
use crate::xreals::{inf_residual, XReal};

/// Slack for lower semicontinuity probes.
pub const EPS_LSC: f64 = 1e-6;

const LSC_NEIGHBOUR: f64 = 1e-9;
const PROBE_STEP: f64 = 1e-4;
const PROBE_RADIUS: f64 = 1e-2;

/// `a <= b + tie`
fn le_tie(a: XReal, b: XReal, tie: f64) -> bool {
    match b {
        XReal::PosInf => true,
        XReal::NegInf => a.is_neg_inf(),
        XReal::Finite(v) => a <= XReal::Finite(v + tie),
    }
}

/// `a < b - tie`
fn lt_tie(a: XReal, b: XReal, tie: f64) -> bool {
    match b {
        XReal::PosInf => !a.is_pos_inf(),
        XReal::NegInf => false,
        XReal::Finite(v) => a < XReal::Finite(v - tie),
    }
}

fn differ(a: XReal, b: XReal, tie: f64) -> bool {
    lt_tie(a, b, tie) || lt_tie(b, a, tie)
}

fn unit_ts(grid: &SampleGrid) -> Result<Vec<f64>> {
    if grid.dim() != 1 {
        return Err(Error::DimensionMismatch { expected: 1, got: grid.dim() });
    }
    let ts: Vec<f64> = grid.points().into_iter().map(|p| p[0]).collect();
    if ts.is_empty() {
        return Err(Error::NoSamples);
    }
    if ts.iter().any(|t| !(0.0..=1.0).contains(t)) {
        return Err(Error::InvalidArgument(format!("segment grid must lie in [0,1], got {}", grid.describe())));
    }
    Ok(ts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentShape {
    DecConstInc,
    Constant,
    MonotoneDec,
    MonotoneInc,
    Irregular,
}

impl fmt::Display for SegmentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SegmentShape::DecConstInc => "DEC_CONST_INC",
            SegmentShape::Constant => "CONSTANT",
            SegmentShape::MonotoneDec => "MONOTONE_DEC",
            SegmentShape::MonotoneInc => "MONOTONE_INC",
            SegmentShape::Irregular => "IRREGULAR",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SegmentProfile {
    /// First grid minimizer.
    pub s0: f64,
    /// Last grid minimizer.
    pub t0: f64,
    pub inf_value: XReal,
    pub shape: SegmentShape,
}

pub const MIN_SEGMENT_POINTS: usize = 33;

/// Fits "strictly decreasing, constant, strictly increasing" to the samples.
pub fn classify_segment(phi_ab: &dyn ScalarEval, grid: &SampleGrid) -> Result<SegmentProfile> {
    let ts = unit_ts(grid)?;
    if ts.len() < MIN_SEGMENT_POINTS {
        return Err(Error::InvalidArgument(format!(
            "segment classification needs at least {MIN_SEGMENT_POINTS} points, got {}",
            ts.len()
        )));
    }
    let vals = ts.iter().map(|t| phi_ab.value(&[*t])).collect::<Result<Vec<_>>>()?;
    let inf_value = *vals.iter().min().expect("nonempty");
    let at_min = |v: XReal| !lt_tie(inf_value, v, TAU);
    let i0 = vals.iter().position(|v| at_min(*v)).expect("minimum is attained");
    let i1 = vals.iter().rposition(|v| at_min(*v)).expect("minimum is attained");
    let decreasing = vals[..=i0].windows(2).all(|w| lt_tie(w[1], w[0], 0.0));
    let flat = vals[i0..=i1].iter().all(|v| at_min(*v));
    let increasing = vals[i1..].windows(2).all(|w| lt_tie(w[0], w[1], 0.0));
    let (s0, t0) = (ts[i0], ts[i1]);
    let last = ts.len() - 1;
    let shape = if !(decreasing && flat && increasing) {
        SegmentShape::Irregular
    } else if i0 == 0 && i1 == last {
        SegmentShape::Constant
    } else if i0 == last {
        SegmentShape::MonotoneDec
    } else if i1 == 0 {
        SegmentShape::MonotoneInc
    } else {
        SegmentShape::DecConstInc
    };
    Ok(SegmentProfile { s0, t0, inf_value, shape })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Quasi,
    SemistrictQuasi,
    Pseudo,
    QconvexAtPoint,
    SetQuasi,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Quasi => "QUASI",
            Property::SemistrictQuasi => "SEMISTRICT_QUASI",
            Property::Pseudo => "PSEUDO",
            Property::QconvexAtPoint => "QCONVEX_AT_POINT",
            Property::SetQuasi => "SET_QUASI",
        })
    }
}

/// Sample points `a + t(b - a)` behind a verdict, with the values seen there.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub ts: Vec<f64>,
    /// Scalar values at `ts`; for point checks the endpoint values come first.
    pub values: Vec<XReal>,
    /// Directional derivative involved, for pseudoconvexity.
    pub dini: Option<XReal>,
}

impl Witness {
    pub fn point(&self, t: f64) -> Vec<f64> {
        self.a.iter().zip(&self.b).map(|(a, b)| a + t * (b - a)).collect()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts: Vec<String> = self.ts.iter().map(|t| crate::report::fmt_num(*t)).collect();
        let vs: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "a={} b={} t=[{}] values=[{}]", fmt_point(&self.a), fmt_point(&self.b), ts.join(","), vs.join(","))?;
        if let Some(d) = self.dini {
            write!(f, " dini={d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvexityVerdict {
    pub property: Property,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub grid: String,
}

impl fmt::Display for ConvexityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.property, if self.holds { "HOLDS" } else { "FAILS" })?;
        if let Some(w) = &self.witness {
            write!(f, " witness {w}")?;
        }
        Ok(())
    }
}

fn verdict(property: Property, grid: &SampleGrid, witness: Option<Witness>) -> ConvexityVerdict {
    ConvexityVerdict { property, holds: witness.is_none(), witness, grid: grid.describe() }
}

/// `φ(a + t(b - a)) <= max{φ(a), φ(b)}` for every sampled `b` and interior `t`.
pub fn qconvex_at_point(phi: &dyn ScalarEval, a: &[f64], grid: &SampleGrid, tgrid: &SampleGrid) -> Result<ConvexityVerdict> {
    let ts: Vec<f64> = unit_ts(tgrid)?.into_iter().filter(|t| *t > 0.0 && *t < 1.0).collect();
    let fa = phi.value(a)?;
    for b in grid.points() {
        if b == a {
            continue;
        }
        let fb = phi.value(&b)?;
        let top = fa.max(fb);
        let seg = restrict_segment(phi, a, &b)?;
        for &t in &ts {
            let v = seg.value(&[t])?;
            if !le_tie(v, top, TAU) {
                let w = Witness { a: a.to_vec(), b, ts: vec![t], values: vec![fa, fb, v], dini: None };
                return Ok(verdict(Property::QconvexAtPoint, tgrid, Some(w)));
            }
        }
    }
    Ok(verdict(Property::QconvexAtPoint, tgrid, None))
}

/// Radial property of `φ` on the segment from `a` to `b`.
pub fn classify_radial(
    phi: &dyn ScalarEval,
    a: &[f64],
    b: &[f64],
    property: Property,
    grid: &SampleGrid,
    cfg: &DiniConfig,
) -> Result<ConvexityVerdict> {
    let seg = restrict_segment(phi, a, b)?;
    let ts = unit_ts(grid)?;
    let vals = ts.iter().map(|t| seg.value(&[*t])).collect::<Result<Vec<_>>>()?;
    let witness = |idx: &[usize], dini: Option<XReal>| Witness {
        a: a.to_vec(),
        b: b.to_vec(),
        ts: idx.iter().map(|i| ts[*i]).collect(),
        values: idx.iter().map(|i| vals[*i]).collect(),
        dini,
    };
    let found = match property {
        Property::Quasi => quasi_violation(&vals).map(|idx| witness(&idx, None)),
        Property::SemistrictQuasi => semistrict_violation(&vals).map(|idx| witness(&idx, None)),
        Property::Pseudo => pseudo_violation(&seg, &ts, &vals, cfg)?.map(|(idx, d)| witness(&idx, Some(d))),
        other => return Err(Error::InvalidArgument(format!("{other} is not a radial property"))),
    };
    Ok(verdict(property, grid, found))
}

/// Indices `[r, t, s]` with `v_t > max{v_r, v_s}`.
fn quasi_violation(vals: &[XReal]) -> Option<Vec<usize>> {
    let n = vals.len();
    let mut suffix = vec![n - 1; n];
    for i in (0..n - 1).rev() {
        suffix[i] = if vals[i] < vals[suffix[i + 1]] { i } else { suffix[i + 1] };
    }
    let mut prefix = 0;
    for t in 1..n.saturating_sub(1) {
        let s = suffix[t + 1];
        if !le_tie(vals[t], vals[prefix].max(vals[s]), TAU) {
            return Some(vec![prefix, t, s]);
        }
        if vals[t] < vals[prefix] {
            prefix = t;
        }
    }
    None
}

/// Indices `[r, t, s]` where `r, s` lie in the domain and either the values
/// differ without a strict interior drop below their maximum, or some
/// interior point leaves the domain.
fn semistrict_violation(vals: &[XReal]) -> Option<Vec<usize>> {
    let n = vals.len();
    for r in 0..n {
        if vals[r].is_pos_inf() {
            continue;
        }
        let mut worst: Option<usize> = None;
        for s in r + 1..n {
            if let Some(t) = worst {
                if !vals[s].is_pos_inf() {
                    let top = vals[r].max(vals[s]);
                    if vals[t].is_pos_inf() || (differ(vals[r], vals[s], TAU) && !lt_tie(vals[t], top, TAU)) {
                        return Some(vec![r, t, s]);
                    }
                }
            }
            if worst.is_none_or(|w| vals[s] > vals[w]) {
                worst = Some(s);
            }
        }
    }
    None
}

/// Indices `[t1, t2]` with `v_t1 < v_t2` but no strict descent from `t2`
/// toward `t1`, plus the derivative seen.
fn pseudo_violation(seg: &Segment, ts: &[f64], vals: &[XReal], cfg: &DiniConfig) -> Result<Option<(Vec<usize>, XReal)>> {
    let mut slopes: Vec<[Option<XReal>; 2]> = vec![[None, None]; ts.len()];
    for (j, t2) in ts.iter().enumerate() {
        for (i, t1) in ts.iter().enumerate() {
            if !lt_tie(vals[i], vals[j], TAU) {
                continue;
            }
            let side = usize::from(t1 > t2);
            let unit = match slopes[j][side] {
                Some(d) => d,
                None => {
                    let d = scalar_dini(seg, &[*t2], &[if side == 1 { 1.0 } else { -1.0 }], cfg)?;
                    slopes[j][side] = Some(d);
                    d
                }
            };
            let d = unit.scale_pos((t1 - t2).abs());
            if !(d < XReal::Finite(-TAU_STRICT)) {
                return Ok(Some((vec![i, j], d)));
            }
        }
    }
    Ok(None)
}

/// Mean-value point `t` in `[0, 1)` with `φ(b) ∸ φ(a) <= φ_ab'(t; 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiewertWitness {
    pub t: f64,
    pub lhs: XReal,
    pub rhs: XReal,
}

pub fn diewert_witness(phi: &dyn ScalarEval, a: &[f64], b: &[f64], grid: &SampleGrid, cfg: &DiniConfig) -> Result<DiewertWitness> {
    let seg = restrict_segment(phi, a, b)?;
    let lhs = inf_residual(phi.value(b)?, phi.value(a)?);
    for t in unit_ts(grid)?.into_iter().filter(|t| *t < 1.0) {
        if lhs.is_neg_inf() {
            return Ok(DiewertWitness { t, lhs, rhs: scalar_dini(&seg, &[t], &[1.0], cfg)? });
        }
        let rhs = scalar_dini(&seg, &[t], &[1.0], cfg)?;
        if le_tie(lhs, rhs, TAU_STRICT) {
            return Ok(DiewertWitness { t, lhs, rhs });
        }
    }
    Err(Error::NoWitness)
}

/// `f(a + t(b - a)) ⊇ f(a) ∩ f(b)` over sampled pairs and interior `t`.
pub fn set_quasiconvex(f: &dyn SetEval, grid: &SampleGrid, tgrid: &SampleGrid) -> Result<ConvexityVerdict> {
    let ts: Vec<f64> = unit_ts(tgrid)?.into_iter().filter(|t| *t > 0.0 && *t < 1.0).collect();
    let pts = grid.points();
    let vals = pts.iter().map(|p| f.eval(p)).collect::<Result<Vec<_>>>()?;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let meet = lattice_sup(&[vals[i].clone(), vals[j].clone()])?;
            if meet.is_empty() {
                continue;
            }
            for &t in &ts {
                let p: Vec<f64> = pts[i].iter().zip(&pts[j]).map(|(a, b)| a + t * (b - a)).collect();
                if !is_subset(&meet, &f.eval(&p)?) {
                    let w = Witness { a: pts[i].clone(), b: pts[j].clone(), ts: vec![t], values: Vec::new(), dini: None };
                    return Ok(verdict(Property::SetQuasi, grid, Some(w)));
                }
            }
        }
    }
    Ok(verdict(Property::SetQuasi, grid, None))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LscVerdict {
    pub holds: bool,
    /// Segment parameter where the value jumps above nearby values.
    pub witness: Option<f64>,
}

/// Probes `φ_ab(t) <= φ_ab(s) + ε` for `s` next to each sampled `t`, with
/// dense probing around piece and domain boundaries.
pub fn radial_lsc_check(phi: &dyn ScalarEval, a: &[f64], b: &[f64], grid: &SampleGrid) -> Result<LscVerdict> {
    let seg = restrict_segment(phi, a, b)?;
    let ts = unit_ts(grid)?;
    let class = |t: f64| -> Result<(Option<usize>, u8)> {
        let v = seg.value(&[t])?;
        Ok((seg.piece_id(&[t]), if v.is_pos_inf() { 2 } else if v.is_neg_inf() { 0 } else { 1 }))
    };
    let mut probes = ts.clone();
    for w in ts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let lo_class = class(lo)?;
        if lo_class == class(hi)? {
            continue;
        }
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if class(mid)? == lo_class {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let edge = (hi * 1e10).round() / 1e10;
        probes.push(edge);
        let steps = (PROBE_RADIUS / PROBE_STEP).round() as i32;
        probes.extend((-steps..=steps).map(|k| edge + k as f64 * PROBE_STEP));
    }
    probes.retain(|t| (0.0..=1.0).contains(t));
    probes.sort_by(f64::total_cmp);
    probes.dedup();
    for t in probes {
        let v = seg.value(&[t])?;
        for s in [t - LSC_NEIGHBOUR, t + LSC_NEIGHBOUR] {
            if !(0.0..=1.0).contains(&s) {
                continue;
            }
            if !le_tie(v, seg.value(&[s])?, EPS_LSC) {
                return Ok(LscVerdict { holds: false, witness: Some(t) });
            }
        }
    }
    Ok(LscVerdict { holds: true, witness: None })
}
