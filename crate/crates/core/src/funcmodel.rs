//! Piecewise function models, scalarizations, segment restrictions and
//! inf-translations.
//!
//! Every function is a list of `(guard, value)` pieces where the first
//! matching guard wins. Scalar functions default to `+inf` and set-valued
//! functions to the empty set outside all guards, so the effective domain is
//! exactly the union of the guards with finite (resp. nonempty) values.

use crate::error::{Error, Result};
use crate::expr::{Expr, Guard};
use crate::polytope::linalg::{add, scaled, sub};
use crate::polytope::{
    halfspace_generators, lattice_inf, support_of_generators, support_scalar, ConvexCone, DualVector, UpperSet,
};
use crate::report::fmt_num;
use crate::xreals::XReal;

/// An extended real-valued function on `R^n`.
pub trait ScalarEval {
    fn dim(&self) -> usize;

    fn value(&self, x: &[f64]) -> Result<XReal>;

    /// Index of the piece that defines the value at `x`, when known.
    fn piece_id(&self, _x: &[f64]) -> Option<usize> {
        None
    }

    /// Absolute accuracy of finite values, beyond floating-point rounding.
    fn resolution(&self) -> f64 {
        0.0
    }
}

/// A function `R^n -> G(R^d, C)`.
pub trait SetEval {
    fn arg_dim(&self) -> usize;

    fn cone(&self) -> &ConvexCone;

    fn eval(&self, x: &[f64]) -> Result<UpperSet>;

    /// The scalarization `inf{-z*·z | z in f(x)}`.
    fn scalar(&self, x: &[f64], zstar: &DualVector) -> Result<XReal> {
        support_scalar(&self.eval(x)?, zstar)
    }

    fn piece_id(&self, _x: &[f64]) -> Option<usize> {
        None
    }
}

fn check_arg(x: &[f64], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    Ok(())
}

fn check_arity(arity: usize, n: usize, what: &str) -> Result<()> {
    if arity > n {
        Err(Error::InvalidArgument(format!("{what} uses x{arity} but the argument space has dimension {n}")))
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScalarValue {
    Expr(Expr),
    PosInf,
    NegInf,
}

impl ScalarValue {
    pub fn parse(src: &str) -> Result<ScalarValue> {
        Ok(match src.trim() {
            "inf" | "+inf" => ScalarValue::PosInf,
            "-inf" => ScalarValue::NegInf,
            _ => ScalarValue::Expr(Expr::parse(src)?),
        })
    }

    fn eval(&self, x: &[f64]) -> Result<XReal> {
        Ok(match self {
            ScalarValue::Expr(e) => XReal::Finite(e.eval(x)?),
            ScalarValue::PosInf => XReal::PosInf,
            ScalarValue::NegInf => XReal::NegInf,
        })
    }

    fn arity(&self) -> usize {
        match self {
            ScalarValue::Expr(e) => e.arity(),
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalarPiece {
    pub guard: Guard,
    pub value: ScalarValue,
}

/// Piecewise scalar function, `+inf` outside every guard.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarFn {
    dim: usize,
    pieces: Vec<ScalarPiece>,
}

impl ScalarFn {
    pub fn new(dim: usize, pieces: Vec<ScalarPiece>) -> Result<ScalarFn> {
        for p in &pieces {
            check_arity(p.guard.arity(), dim, "guard")?;
            check_arity(p.value.arity(), dim, "value")?;
        }
        Ok(ScalarFn { dim, pieces })
    }

    /// Builds from `(guard, value)` source pairs.
    pub fn parse(dim: usize, pieces: &[(&str, &str)]) -> Result<ScalarFn> {
        let pieces = pieces
            .iter()
            .map(|(g, v)| Ok(ScalarPiece { guard: Guard::parse(g)?, value: ScalarValue::parse(v)? }))
            .collect::<Result<Vec<_>>>()?;
        ScalarFn::new(dim, pieces)
    }

    pub fn pieces(&self) -> &[ScalarPiece] {
        &self.pieces
    }

    fn matching(&self, x: &[f64]) -> Result<Option<usize>> {
        check_arg(x, self.dim)?;
        for (i, p) in self.pieces.iter().enumerate() {
            if p.guard.eval(x)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

impl ScalarEval for ScalarFn {
    fn dim(&self) -> usize {
        self.dim
    }

    fn value(&self, x: &[f64]) -> Result<XReal> {
        match self.matching(x)? {
            Some(i) => self.pieces[i].value.eval(x),
            None => Ok(XReal::PosInf),
        }
    }

    fn piece_id(&self, x: &[f64]) -> Option<usize> {
        self.matching(x).ok().map(|i| i.unwrap_or(usize::MAX))
    }
}

/// A scalar function given by a Rust closure.
pub struct ScalarClosure<F> {
    dim: usize,
    f: F,
}

impl<F: Fn(&[f64]) -> XReal> ScalarClosure<F> {
    pub fn new(dim: usize, f: F) -> Self {
        ScalarClosure { dim, f }
    }
}

impl<F: Fn(&[f64]) -> XReal> ScalarEval for ScalarClosure<F> {
    fn dim(&self) -> usize {
        self.dim
    }

    fn value(&self, x: &[f64]) -> Result<XReal> {
        check_arg(x, self.dim)?;
        Ok((self.f)(x))
    }
}

/// Value of one piece of a set-valued function.
#[derive(Debug, Clone, PartialEq)]
pub enum SetValue {
    /// `cl co (vertices + cone(rays ∪ C))`.
    Generators { vertices: Vec<Vec<Expr>>, rays: Vec<Vec<Expr>> },
    /// `{z | a_i·z <= b_i(x)}` with constant normals from `C^-`.
    Halfspaces(Vec<(Vec<f64>, Expr)>),
    Whole,
    Empty,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SetPiece {
    pub guard: Guard,
    pub value: SetValue,
}

/// Piecewise set-valued function, empty outside every guard.
#[derive(Debug, Clone, PartialEq)]
pub struct SetFn {
    n: usize,
    cone: ConvexCone,
    pieces: Vec<SetPiece>,
}

fn eval_tuple(t: &[Expr], x: &[f64]) -> Result<Vec<f64>> {
    t.iter().map(|e| e.eval(x)).collect()
}

impl SetFn {
    pub fn new(n: usize, cone: ConvexCone, pieces: Vec<SetPiece>) -> Result<SetFn> {
        let d = cone.dim();
        for p in &pieces {
            check_arity(p.guard.arity(), n, "guard")?;
            match &p.value {
                SetValue::Generators { vertices, rays } => {
                    for t in vertices.iter().chain(rays) {
                        if t.len() != d {
                            return Err(Error::DimensionMismatch { expected: d, got: t.len() });
                        }
                        for e in t {
                            check_arity(e.arity(), n, "generator")?;
                        }
                    }
                }
                SetValue::Halfspaces(hs) => {
                    for (a, b) in hs {
                        if a.len() != d {
                            return Err(Error::DimensionMismatch { expected: d, got: a.len() });
                        }
                        if !a.iter().all(|v| *v == 0.0) && !cone.dual_contains(a) {
                            return Err(Error::NotInDualCone(a.clone()));
                        }
                        check_arity(b.arity(), n, "offset")?;
                    }
                }
                SetValue::Whole | SetValue::Empty => {}
            }
        }
        Ok(SetFn { n, cone, pieces })
    }

    /// Pieces whose value is a single translated cone `p(x) + C`.
    pub fn parse_points(n: usize, cone: ConvexCone, pieces: &[(&str, &[&str])]) -> Result<SetFn> {
        let pieces = pieces
            .iter()
            .map(|(g, p)| {
                let v = p.iter().map(|e| Expr::parse(e)).collect::<Result<Vec<_>>>()?;
                Ok(SetPiece { guard: Guard::parse(g)?, value: SetValue::Generators { vertices: vec![v], rays: vec![] } })
            })
            .collect::<Result<Vec<_>>>()?;
        SetFn::new(n, cone, pieces)
    }

    pub fn pieces(&self) -> &[SetPiece] {
        &self.pieces
    }

    fn matching(&self, x: &[f64]) -> Result<Option<&SetPiece>> {
        check_arg(x, self.n)?;
        for p in &self.pieces {
            if p.guard.eval(x)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    fn offsets(hs: &[(Vec<f64>, Expr)], x: &[f64]) -> Result<Vec<(Vec<f64>, f64)>> {
        hs.iter().map(|(a, b)| Ok((a.clone(), b.eval(x)?))).collect()
    }
}

impl SetEval for SetFn {
    fn arg_dim(&self) -> usize {
        self.n
    }

    fn cone(&self) -> &ConvexCone {
        &self.cone
    }

    fn eval(&self, x: &[f64]) -> Result<UpperSet> {
        let Some(p) = self.matching(x)? else {
            return Ok(UpperSet::empty(&self.cone));
        };
        match &p.value {
            SetValue::Whole => Ok(UpperSet::whole(&self.cone)),
            SetValue::Empty => Ok(UpperSet::empty(&self.cone)),
            SetValue::Generators { vertices, rays } => {
                let v = vertices.iter().map(|t| eval_tuple(t, x)).collect::<Result<Vec<_>>>()?;
                let r = rays.iter().map(|t| eval_tuple(t, x)).collect::<Result<Vec<_>>>()?;
                UpperSet::from_generators(v, r, &self.cone)
            }
            SetValue::Halfspaces(hs) => UpperSet::from_halfspaces(&Self::offsets(hs, x)?, &self.cone),
        }
    }

    fn scalar(&self, x: &[f64], zstar: &DualVector) -> Result<XReal> {
        if !self.cone.dual_contains(zstar.coeffs()) {
            return Err(Error::NotInDualCone(zstar.coeffs().to_vec()));
        }
        let Some(p) = self.matching(x)? else {
            return Ok(XReal::PosInf);
        };
        let y = zstar.coeffs();
        match &p.value {
            SetValue::Whole => Ok(XReal::NegInf),
            SetValue::Empty => Ok(XReal::PosInf),
            SetValue::Generators { vertices, rays } => {
                let v = vertices.iter().map(|t| eval_tuple(t, x)).collect::<Result<Vec<_>>>()?;
                let mut r = rays.iter().map(|t| eval_tuple(t, x)).collect::<Result<Vec<_>>>()?;
                r.extend(self.cone.generators().iter().cloned());
                Ok(support_of_generators(&v, &r, y))
            }
            SetValue::Halfspaces(hs) => match halfspace_generators(&Self::offsets(hs, x)?, &self.cone)? {
                None => Ok(XReal::PosInf),
                Some((v, mut r)) => {
                    r.extend(self.cone.generators().iter().cloned());
                    Ok(support_of_generators(&v, &r, y))
                }
            },
        }
    }

    fn piece_id(&self, x: &[f64]) -> Option<usize> {
        let p = self.matching(x).ok()?;
        Some(p.map_or(usize::MAX, |p| self.pieces.iter().position(|q| std::ptr::eq(q, p)).unwrap_or(usize::MAX)))
    }
}

/// Value of one piece of a vector function with infinity sentinels.
#[derive(Debug, Clone, PartialEq)]
pub enum VectorValue {
    Point(Vec<Expr>),
    PosInf,
    NegInf,
}

/// A piecewise vector-valued function `R^n -> R^d ∪ {±inf}`, `+inf`
/// outside every guard.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorFn {
    pub n: usize,
    pub d: usize,
    pub pieces: Vec<(Guard, VectorValue)>,
}

/// Evaluated vector function value.
#[derive(Debug, Clone, PartialEq)]
pub enum VectorPoint {
    Point(Vec<f64>),
    PosInf,
    NegInf,
}

impl VectorFn {
    pub fn eval(&self, x: &[f64]) -> Result<VectorPoint> {
        check_arg(x, self.n)?;
        for (g, v) in &self.pieces {
            if g.eval(x)? {
                return Ok(match v {
                    VectorValue::Point(p) => VectorPoint::Point(eval_tuple(p, x)?),
                    VectorValue::PosInf => VectorPoint::PosInf,
                    VectorValue::NegInf => VectorPoint::NegInf,
                });
            }
        }
        Ok(VectorPoint::PosInf)
    }
}

/// The set-valued extension `x -> F(x) + C` (`+inf` gives the empty set,
/// `-inf` the whole space).
pub fn vector_extension(f: &VectorFn, cone: &ConvexCone) -> Result<SetFn> {
    if f.d != cone.dim() {
        return Err(Error::DimensionMismatch { expected: cone.dim(), got: f.d });
    }
    let pieces = f
        .pieces
        .iter()
        .map(|(g, v)| SetPiece {
            guard: g.clone(),
            value: match v {
                VectorValue::Point(p) => SetValue::Generators { vertices: vec![p.clone()], rays: vec![] },
                VectorValue::PosInf => SetValue::Empty,
                VectorValue::NegInf => SetValue::Whole,
            },
        })
        .collect();
    SetFn::new(f.n, cone.clone(), pieces)
}

/// `x -> inf{-z*·z | z in f(x)}`.
pub struct Scalarized<'a> {
    f: &'a dyn SetEval,
    zstar: DualVector,
}

pub fn scalarize<'a>(f: &'a dyn SetEval, zstar: &DualVector) -> Result<Scalarized<'a>> {
    if zstar.dim() != f.cone().dim() {
        return Err(Error::DimensionMismatch { expected: f.cone().dim(), got: zstar.dim() });
    }
    if !f.cone().dual_contains(zstar.coeffs()) {
        return Err(Error::NotInDualCone(zstar.coeffs().to_vec()));
    }
    Ok(Scalarized { f, zstar: zstar.clone() })
}

impl Scalarized<'_> {
    pub fn zstar(&self) -> &DualVector {
        &self.zstar
    }
}

impl ScalarEval for Scalarized<'_> {
    fn dim(&self) -> usize {
        self.f.arg_dim()
    }

    fn value(&self, x: &[f64]) -> Result<XReal> {
        self.f.scalar(x, &self.zstar)
    }

    fn piece_id(&self, x: &[f64]) -> Option<usize> {
        self.f.piece_id(x)
    }
}

/// `t -> φ(a + t(b - a))` on `[0, 1]`, `+inf` elsewhere.
pub struct Segment<'a> {
    phi: &'a dyn ScalarEval,
    a: Vec<f64>,
    dir: Vec<f64>,
}

pub fn restrict_segment<'a>(phi: &'a dyn ScalarEval, a: &[f64], b: &[f64]) -> Result<Segment<'a>> {
    check_arg(a, phi.dim())?;
    check_arg(b, phi.dim())?;
    if a == b {
        return Err(Error::DegenerateSegment);
    }
    Ok(Segment { phi, a: a.to_vec(), dir: sub(b, a) })
}

impl Segment<'_> {
    /// The point `a + t(b - a)`.
    pub fn point(&self, t: f64) -> Vec<f64> {
        self.a.iter().zip(&self.dir).map(|(a, d)| a + t * d).collect()
    }

    pub fn direction(&self) -> &[f64] {
        &self.dir
    }
}

impl ScalarEval for Segment<'_> {
    fn dim(&self) -> usize {
        1
    }

    fn value(&self, t: &[f64]) -> Result<XReal> {
        check_arg(t, 1)?;
        if !(0.0..=1.0).contains(&t[0]) {
            return Ok(XReal::PosInf);
        }
        self.phi.value(&self.point(t[0]))
    }

    fn piece_id(&self, t: &[f64]) -> Option<usize> {
        if !(0.0..=1.0).contains(&t[0]) {
            return Some(usize::MAX - 1);
        }
        self.phi.piece_id(&self.point(t[0]))
    }

    fn resolution(&self) -> f64 {
        self.phi.resolution()
    }
}

/// The inf-translation `x -> inf{f(m + x) | m in M}` for finite `M`.
pub struct InfTranslate<'a> {
    f: &'a dyn SetEval,
    m: Vec<Vec<f64>>,
}

pub fn inf_translate<'a>(f: &'a dyn SetEval, m: &[Vec<f64>]) -> Result<InfTranslate<'a>> {
    if m.is_empty() {
        return Err(Error::EmptyCollection);
    }
    for p in m {
        check_arg(p, f.arg_dim())?;
    }
    Ok(InfTranslate { f, m: m.to_vec() })
}

impl InfTranslate<'_> {
    pub fn points(&self) -> &[Vec<f64>] {
        &self.m
    }
}

impl SetEval for InfTranslate<'_> {
    fn arg_dim(&self) -> usize {
        self.f.arg_dim()
    }

    fn cone(&self) -> &ConvexCone {
        self.f.cone()
    }

    fn eval(&self, x: &[f64]) -> Result<UpperSet> {
        let sets = self.m.iter().map(|m| self.f.eval(&add(m, x))).collect::<Result<Vec<_>>>()?;
        lattice_inf(&sets)
    }

    /// Minimum of the scalarizations at the translated points.
    fn scalar(&self, x: &[f64], zstar: &DualVector) -> Result<XReal> {
        let mut best = XReal::PosInf;
        for m in &self.m {
            best = best.min(self.f.scalar(&add(m, x), zstar)?);
        }
        Ok(best)
    }
}

const HULL_SAMPLES: usize = 65;

/// Accuracy of a hull value found by line search: guard slack lets the
/// search reach values of order `1e-12` just outside a domain edge.
pub const HULL_RESOLUTION: f64 = 1e-11;

/// Scalarization of the inf-translation by the convex hull of `M`,
/// `x -> inf{φ(m + x) | m in co M}`.
///
/// The hull is exact for collinear `M`; otherwise the union of all segments
/// between points of `M` is searched.
pub struct HullScalar<'a> {
    f: &'a dyn SetEval,
    zstar: DualVector,
    point: Option<Vec<f64>>,
    segments: Vec<(Vec<f64>, Vec<f64>)>,
}

pub fn hull_scalarization<'a>(f: &'a dyn SetEval, m: &[Vec<f64>], zstar: &DualVector) -> Result<HullScalar<'a>> {
    let t = inf_translate(f, m)?;
    scalarize(f, zstar)?;
    let mut pts: Vec<Vec<f64>> = Vec::new();
    for p in &t.m {
        crate::polytope::linalg::push_unique(&mut pts, p.clone(), 1e-12);
    }
    let (point, segments) = if pts.len() == 1 {
        (Some(pts[0].clone()), Vec::new())
    } else if let Some(ends) = collinear_ends(&pts) {
        (None, vec![ends])
    } else {
        let mut segs = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                segs.push((pts[i].clone(), pts[j].clone()));
            }
        }
        (None, segs)
    };
    Ok(HullScalar { f, zstar: zstar.clone(), point, segments })
}

/// The two extreme points when all points lie on one line.
fn collinear_ends(pts: &[Vec<f64>]) -> Option<(Vec<f64>, Vec<f64>)> {
    let base = &pts[0];
    let far = pts.iter().max_by(|a, b| dist2(a, base).total_cmp(&dist2(b, base)))?;
    let dir = crate::polytope::linalg::normalized(&sub(far, base))?;
    let proj = |p: &Vec<f64>| crate::polytope::linalg::dot(&sub(p, base), &dir);
    for p in pts {
        let off = sub(&sub(p, base), &scaled(&dir, proj(p)));
        if crate::polytope::linalg::norm(&off) > 1e-9 * (1.0 + crate::polytope::linalg::norm(p)) {
            return None;
        }
    }
    let lo = pts.iter().min_by(|a, b| proj(a).total_cmp(&proj(b)))?;
    let hi = pts.iter().max_by(|a, b| proj(a).total_cmp(&proj(b)))?;
    Some((lo.clone(), hi.clone()))
}

fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

impl HullScalar<'_> {
    fn on_segment(&self, p: &[f64], q: &[f64], x: &[f64]) -> Result<XReal> {
        let g = |s: f64| -> Result<XReal> {
            let m: Vec<f64> = p.iter().zip(q).map(|(a, b)| a + s * (b - a)).collect();
            self.f.scalar(&add(&m, x), &self.zstar)
        };
        segment_inf(g)
    }
}

/// Infimum of `g` over `[0, 1]`: a uniform scan followed by golden-section
/// refinement on both sides of the best sample.
fn segment_inf(g: impl Fn(f64) -> Result<XReal>) -> Result<XReal> {
    let n = HULL_SAMPLES;
    let s = |i: usize| i as f64 / (n - 1) as f64;
    let vals = (0..n).map(|i| g(s(i))).collect::<Result<Vec<_>>>()?;
    let (best_i, &best) = vals.iter().enumerate().min_by(|a, b| a.1.cmp(b.1)).expect("samples");
    if best.is_neg_inf() || best.is_pos_inf() {
        return Ok(best);
    }
    let mut result = best;
    let anchor = s(best_i);
    if best_i > 0 {
        result = result.min(golden(&g, s(best_i - 1), anchor, false)?);
    }
    if best_i + 1 < n {
        result = result.min(golden(&g, anchor, s(best_i + 1), true)?);
    }
    Ok(result)
}

/// Golden-section search on `[lo, hi]`; ties move toward the low end when
/// `toward_lo` holds, so infinite plateaus shrink toward the finite anchor.
fn golden(g: &impl Fn(f64) -> Result<XReal>, mut lo: f64, mut hi: f64, toward_lo: bool) -> Result<XReal> {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - r * (hi - lo);
    let mut d = lo + r * (hi - lo);
    let (mut gc, mut gd) = (g(c)?, g(d)?);
    let mut result = gc.min(gd);
    for _ in 0..100 {
        if hi - lo < 1e-15 {
            break;
        }
        if gc < gd || (gc == gd && toward_lo) {
            hi = d;
            d = c;
            gd = gc;
            c = hi - r * (hi - lo);
            gc = g(c)?;
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + r * (hi - lo);
            gd = g(d)?;
        }
        result = result.min(gc).min(gd);
    }
    Ok(result)
}

impl ScalarEval for HullScalar<'_> {
    fn dim(&self) -> usize {
        self.f.arg_dim()
    }

    fn resolution(&self) -> f64 {
        if self.segments.is_empty() {
            0.0
        } else {
            HULL_RESOLUTION
        }
    }

    fn value(&self, x: &[f64]) -> Result<XReal> {
        check_arg(x, self.f.arg_dim())?;
        if let Some(p) = &self.point {
            return self.f.scalar(&add(p, x), &self.zstar);
        }
        let mut best = XReal::PosInf;
        for (p, q) in &self.segments {
            best = best.min(self.on_segment(p, q, x)?);
        }
        Ok(best)
    }
}

/// `⋂ {z | φ_{f,z*}(x) <= -z*·z}` over the given duals.
pub fn reconstruct(f: &dyn SetEval, x: &[f64], duals: &[DualVector]) -> Result<UpperSet> {
    if duals.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let mut hs = Vec::new();
    for z in duals {
        match f.scalar(x, z)? {
            XReal::PosInf => return Ok(UpperSet::empty(f.cone())),
            XReal::NegInf => {}
            XReal::Finite(v) => hs.push((z.coeffs().to_vec(), -v)),
        }
    }
    if hs.is_empty() {
        return Ok(UpperSet::whole(f.cone()));
    }
    UpperSet::from_halfspaces(&hs, f.cone())
}

/// One axis `lo, lo + step, ..., <= hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
}

impl Axis {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Axis> {
        if !(lo.is_finite() && hi.is_finite() && step.is_finite()) || step <= 0.0 || hi < lo {
            return Err(Error::InvalidArgument(format!("bad grid axis {lo}:{hi}:{step}")));
        }
        Ok(Axis { lo, hi, step })
    }

    pub fn len(&self) -> usize {
        ((self.hi - self.lo) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn value(&self, i: usize) -> f64 {
        snap(self.lo + i as f64 * self.step)
    }
}

/// Rounds to 12 decimals so grid points are reproducible decimals.
fn snap(v: f64) -> f64 {
    let r = (v * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rectangular sample grid, enumerated with the first axis outermost.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    axes: Vec<Axis>,
}

impl SampleGrid {
    pub fn new(axes: Vec<Axis>) -> Result<SampleGrid> {
        if axes.is_empty() {
            return Err(Error::NoSamples);
        }
        Ok(SampleGrid { axes })
    }

    /// `[0, 1]` with `points` equally spaced samples.
    pub fn unit_interval(points: usize) -> SampleGrid {
        let step = 1.0 / (points.max(2) - 1) as f64;
        SampleGrid { axes: vec![Axis { lo: 0.0, hi: 1.0, step }] }
    }

    /// Parses `lo:hi:step[,lo:hi:step...]`.
    pub fn parse(spec: &str) -> Result<SampleGrid> {
        let axes = spec
            .split(',')
            .map(|a| {
                let f: Vec<&str> = a.split(':').collect();
                if f.len() != 3 {
                    return Err(Error::Parse(format!("grid axis {a:?} is not lo:hi:step")));
                }
                let num = |s: &str| s.trim().parse::<f64>().map_err(|_| Error::Parse(format!("bad number {s:?} in grid")));
                Axis::new(num(f[0])?, num(f[1])?, num(f[2])?)
            })
            .collect::<Result<Vec<_>>>()?;
        SampleGrid::new(axes)
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(Axis::len).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn points(&self) -> Vec<Vec<f64>> {
        let mut out = vec![Vec::new()];
        for axis in &self.axes {
            let mut next = Vec::with_capacity(out.len() * axis.len());
            for p in &out {
                for i in 0..axis.len() {
                    let mut q = p.clone();
                    q.push(axis.value(i));
                    next.push(q);
                }
            }
            out = next;
        }
        out
    }

    /// Whether `x` lies on the outer boundary of the grid box.
    pub fn on_boundary(&self, x: &[f64]) -> bool {
        self.axes.iter().zip(x).any(|(a, v)| (*v - a.lo).abs() < 1e-12 || (*v - a.value(a.len() - 1)).abs() < 1e-12)
    }

    pub fn describe(&self) -> String {
        self.axes
            .iter()
            .enumerate()
            .map(|(i, a)| format!("x{} in [{},{}] step {}", i + 1, fmt_num(a.lo), fmt_num(a.hi), fmt_num(a.step)))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{dual_cone_sample, TAU_H};

    fn strict_domination() -> SetFn {
        let cone = ConvexCone::new(2, vec![vec![0.0, 1.0]]).unwrap();
        let v = |a: &str, b: &str| vec![Expr::parse(a).unwrap(), Expr::parse(b).unwrap()];
        SetFn::new(
            1,
            cone,
            vec![SetPiece {
                guard: Guard::always(),
                value: SetValue::Generators { vertices: vec![v("x1^2 - 1", "0"), v("1 - x1^2", "0")], rays: vec![] },
            }],
        )
        .unwrap()
    }

    fn triangle() -> SetFn {
        SetFn::parse_points(2, ConvexCone::orthant(2), &[("1 - x1 <= x2 and 0 <= x1 <= 1", &["x1", "x2"])]).unwrap()
    }

    #[test]
    fn evaluate_cases() {
        let f = strict_domination();
        let a = f.eval(&[0.5]).unwrap();
        assert!(a.contains_point(&[-0.75, 0.0], 1e-12) && a.contains_point(&[0.75, 10.0], 1e-12));
        assert!(!a.contains_point(&[-0.8, 0.0], 1e-9));
        let t = triangle();
        assert!(t.eval(&[0.0, 0.0]).unwrap().is_empty());
        let v = t.eval(&[0.5, 0.5]).unwrap();
        assert!(v.approx_eq(&UpperSet::point(&[0.5, 0.5], &ConvexCone::orthant(2)).unwrap(), 1e-12));
    }

    #[test]
    fn scalarize_cases() {
        let f = strict_domination();
        let z = DualVector::new(vec![-1.0, 0.0], f.cone()).unwrap();
        let phi = scalarize(&f, &z).unwrap();
        for t in [0.0, 0.25, 1.0] {
            assert!((phi.value(&[t]).unwrap().to_f64() - (t * t - 1.0)).abs() < 1e-15);
        }
        let t = triangle();
        let z2 = DualVector::new(vec![-1.0, -1.0], t.cone()).unwrap();
        assert_eq!(scalarize(&t, &z2).unwrap().value(&[5.0, 5.0]).unwrap(), XReal::PosInf);
        let whole = SetFn::new(1, ConvexCone::orthant(1), vec![SetPiece { guard: Guard::always(), value: SetValue::Whole }]).unwrap();
        let zz = DualVector::new(vec![-1.0], whole.cone()).unwrap();
        assert_eq!(whole.scalar(&[0.0], &zz).unwrap(), XReal::NegInf);
        assert!(scalarize(&t, &DualVector::unchecked(&[1.0, 0.0])).is_err());
    }

    #[test]
    fn segment_restriction() {
        let phi = ScalarFn::parse(1, &[("true", "x1^2")]).unwrap();
        let s = restrict_segment(&phi, &[0.0], &[2.0]).unwrap();
        assert_eq!(s.value(&[0.5]).unwrap(), XReal::Finite(1.0));
        assert_eq!(s.value(&[1.5]).unwrap(), XReal::PosInf);
        assert!(matches!(restrict_segment(&phi, &[1.0], &[1.0]), Err(Error::DegenerateSegment)));
        let neg = ScalarFn::parse(1, &[("true", "-inf")]).unwrap();
        let s2 = restrict_segment(&neg, &[0.0], &[1.0]).unwrap();
        assert_eq!(s2.value(&[0.3]).unwrap(), XReal::NegInf);
    }

    #[test]
    fn inf_translation_cases() {
        let t = triangle();
        let m = vec![vec![0.25, 0.75], vec![0.75, 0.25]];
        let fhat = inf_translate(&t, &m).unwrap();
        for z in dual_cone_sample(t.cone(), 2).unwrap() {
            let direct = support_scalar(&fhat.eval(&[0.0, 0.0]).unwrap(), &z).unwrap();
            let want = m.iter().map(|p| t.scalar(p, &z).unwrap()).min().unwrap();
            assert!((direct.to_f64() - want.to_f64()).abs() < 1e-12);
        }
        let one = inf_translate(&t, &m[..1]).unwrap();
        assert!(one.eval(&[0.0, 0.0]).unwrap().approx_eq(&t.eval(&m[0]).unwrap(), 1e-12));
        assert!(fhat.eval(&[-3.0, -3.0]).unwrap().is_empty());
        assert!(matches!(inf_translate(&t, &[]), Err(Error::EmptyCollection)));
    }

    #[test]
    fn vector_extension_cases() {
        let f = VectorFn {
            n: 1,
            d: 1,
            pieces: vec![
                (Guard::parse("x1 < 0").unwrap(), VectorValue::NegInf),
                (Guard::parse("x1 <= 1").unwrap(), VectorValue::Point(vec![Expr::parse("x1").unwrap()])),
            ],
        };
        let g = vector_extension(&f, &ConvexCone::orthant(1)).unwrap();
        assert!(g.eval(&[-1.0]).unwrap().is_whole());
        assert!(g.eval(&[2.0]).unwrap().is_empty());
        assert_eq!(g.eval(&[0.5]).unwrap().vertices(), &[vec![0.5]]);
    }

    #[test]
    fn reconstruct_cases() {
        let t = triangle();
        let duals = dual_cone_sample(t.cone(), 0).unwrap();
        let r = reconstruct(&t, &[1.0, 2.0], &duals).unwrap();
        assert!(r.approx_eq(&t.eval(&[1.0, 2.0]).unwrap(), 1e-12));
        assert!(reconstruct(&t, &[-1.0, 0.0], &duals).unwrap().is_empty());
        let f = strict_domination();
        let duals = dual_cone_sample(f.cone(), 2).unwrap();
        let r = reconstruct(&f, &[0.5], &duals).unwrap();
        assert!(r.approx_eq(&f.eval(&[0.5]).unwrap(), TAU_H));
    }

    #[test]
    fn halfspace_pieces_match_fast_path() {
        let cone = ConvexCone::orthant(2);
        let f = SetFn::new(
            1,
            cone.clone(),
            vec![SetPiece {
                guard: Guard::parse("0 <= x1 <= 1").unwrap(),
                value: SetValue::Halfspaces(vec![
                    (vec![-1.0, 0.0], Expr::parse("0").unwrap()),
                    (vec![-0.5, -0.5], Expr::parse("2 * min(1 - x1, x1)").unwrap()),
                ]),
            }],
        )
        .unwrap();
        for z in dual_cone_sample(&cone, 2).unwrap() {
            for x in [0.0, 0.3, 1.0, 2.0] {
                let fast = f.scalar(&[x], &z).unwrap();
                let slow = support_scalar(&f.eval(&[x]).unwrap(), &z).unwrap();
                assert!(fast == slow || (fast.to_f64() - slow.to_f64()).abs() < 1e-12, "{x} {z}");
            }
        }
    }

    #[test]
    fn hull_scalar_on_segment() {
        let cone = ConvexCone::orthant(2);
        let f = SetFn::parse_points(1, cone.clone(), &[("x1 >= 0", &["0", "x1"])]).unwrap();
        let z = DualVector::new(vec![0.0, -1.0], &cone).unwrap();
        let h = hull_scalarization(&f, &[vec![0.0], vec![1.0]], &z).unwrap();
        assert!(h.value(&[-0.5]).unwrap().to_f64().abs() < 1e-9);
        assert_eq!(h.value(&[0.5]).unwrap(), XReal::Finite(0.5));
        assert_eq!(h.value(&[-1.5]).unwrap(), XReal::PosInf);
        let v = h.value(&[-0.3]).unwrap().to_f64();
        assert!(v.abs() < 1e-9);
    }

    #[test]
    fn grids() {
        let g = SampleGrid::parse("-1:1:0.5,0:1:1").unwrap();
        assert_eq!(g.len(), 10);
        let pts = g.points();
        assert_eq!(pts[0], vec![-1.0, 0.0]);
        assert_eq!(pts[1], vec![-1.0, 1.0]);
        assert_eq!(pts[9], vec![1.0, 1.0]);
        assert!(g.on_boundary(&[0.0, 1.0]));
        assert_eq!(SampleGrid::unit_interval(129).len(), 129);
        assert_eq!(SampleGrid::parse("0:1:0.1").unwrap().points()[3], vec![0.3]);
        assert!(SampleGrid::parse("0:1").is_err());
        assert!(SampleGrid::parse("0:1:0").is_err());
    }
}
