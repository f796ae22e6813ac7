//! Polyhedral upper sets `A = cl co (A + C)` and their lattice calculus.
//!
//! Sets are stored generator-first (vertices plus recession rays, the cone
//! generators always included) with a write-once halfspace cache. Empty and
//! whole-space values are explicit tags. Only dimensions `d <= 3` are
//! supported, where every V/H conversion is exact up to floating point.

mod cone;
pub(crate) mod linalg;

use std::fmt;
use std::sync::OnceLock;

pub use cone::{dual_cone_sample, ConvexCone, DualVector};

use crate::error::{Error, Result};
use crate::xreals::{inf_residual, XReal};
use linalg::{dot, norm, normalized, polar_generators, push_unique};

/// Incidence tolerance.
pub const TAU: f64 = 1e-9;
/// Set-comparison tolerance.
pub const TAU_H: f64 = 1e-6;
/// Tie tolerance for strict inequalities.
pub const TAU_STRICT: f64 = 1e-7;

/// Largest supported value-space dimension.
pub const MAX_DIM: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetTag {
    Empty,
    WholeSpace,
    Proper,
}

impl fmt::Display for SetTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SetTag::Empty => "EMPTY",
            SetTag::WholeSpace => "WHOLE_SPACE",
            SetTag::Proper => "PROPER",
        })
    }
}

/// `{z | normal·z <= offset}` with a unit normal from the negative dual cone.
#[derive(Debug, Clone)]
pub struct Halfspace {
    pub normal: DualVector,
    pub offset: f64,
}

impl Halfspace {
    pub fn contains(&self, z: &[f64], tol: f64) -> bool {
        self.normal.apply(z) <= self.offset + tol * self.offset.abs().max(1.0)
    }
}

#[derive(Debug, Clone)]
enum Body {
    Empty,
    Whole,
    Proper {
        vertices: Vec<Vec<f64>>,
        rays: Vec<Vec<f64>>,
        hrep: OnceLock<Vec<Halfspace>>,
    },
}

/// An element of `G(R^d, C)`.
#[derive(Debug, Clone)]
pub struct UpperSet {
    cone: ConvexCone,
    body: Body,
}

fn check_dim(cone: &ConvexCone) -> Result<usize> {
    let d = cone.dim();
    if d == 0 || d > MAX_DIM {
        Err(Error::DimensionTooLarge(d))
    } else {
        Ok(d)
    }
}

fn check_vectors(list: &[Vec<f64>], d: usize) -> Result<()> {
    for v in list {
        if v.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: v.len() });
        }
        if v.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
    }
    Ok(())
}

impl UpperSet {
    pub fn empty(cone: &ConvexCone) -> UpperSet {
        UpperSet { cone: cone.clone(), body: Body::Empty }
    }

    pub fn whole(cone: &ConvexCone) -> UpperSet {
        UpperSet { cone: cone.clone(), body: Body::Whole }
    }

    /// The cone itself, `{0} + C`, which is the neutral element of `⊕`.
    pub fn cone_set(cone: &ConvexCone) -> UpperSet {
        Self::point(&vec![0.0; cone.dim()], cone).expect("origin has the cone dimension")
    }

    /// The translated cone `p + C`.
    pub fn point(p: &[f64], cone: &ConvexCone) -> Result<UpperSet> {
        Self::from_generators(vec![p.to_vec()], Vec::new(), cone)
    }

    /// Canonical form of `cl co (points + cone(rays ∪ C))`.
    ///
    /// No points gives the empty set; rays spanning the space give the whole
    /// space. Redundant vertices and rays are dropped.
    pub fn from_generators(points: Vec<Vec<f64>>, rays: Vec<Vec<f64>>, cone: &ConvexCone) -> Result<UpperSet> {
        let d = check_dim(cone)?;
        check_vectors(&points, d)?;
        check_vectors(&rays, d)?;
        if points.is_empty() {
            return Ok(Self::empty(cone));
        }
        let mut all_rays: Vec<Vec<f64>> = Vec::new();
        for r in rays.iter().chain(cone.generators()) {
            if let Some(n) = normalized(r) {
                push_unique(&mut all_rays, n, 1e-12);
            }
        }
        if polar_generators(&all_rays, d).is_zero() {
            return Ok(Self::whole(cone));
        }
        let mut verts: Vec<Vec<f64>> = Vec::new();
        for p in points {
            let tol = 1e-12 * norm(&p).max(1.0);
            push_unique(&mut verts, p, tol);
        }
        let hrep = facets(&verts, &all_rays, d);
        let normals: Vec<Vec<f64>> = hrep.iter().map(|h| h.normal.coeffs().to_vec()).collect();
        let (vertices, rays) = if linalg::nullspace(&normals, d).is_empty() {
            prune(&verts, &all_rays, &hrep, d)
        } else {
            let (v, r) = generators_of(&hrep, d);
            (snap(v, &verts), r)
        };
        let cache = OnceLock::new();
        let _ = cache.set(hrep);
        Ok(UpperSet { cone: cone.clone(), body: Body::Proper { vertices, rays, hrep: cache } })
    }

    /// The set `{z | a_i·z <= b_i for all i}` where every `a_i` lies in the
    /// negative dual of `cone`.
    pub fn from_halfspaces(halfspaces: &[(Vec<f64>, f64)], cone: &ConvexCone) -> Result<UpperSet> {
        check_dim(cone)?;
        match halfspace_generators(halfspaces, cone)? {
            None => Ok(Self::empty(cone)),
            Some((points, rays)) => Self::from_generators(points, rays, cone),
        }
    }

    /// `{z | zstar·z <= -level}` over the halfspace cone of `zstar`;
    /// `-inf` gives the whole space and `+inf` the empty set.
    pub fn dual_halfspace(zstar: &DualVector, level: XReal) -> UpperSet {
        let cone = ConvexCone::halfspace(zstar);
        match level {
            XReal::NegInf => Self::whole(&cone),
            XReal::PosInf => Self::empty(&cone),
            XReal::Finite(r) => {
                let p: Vec<f64> = zstar.coeffs().iter().map(|c| -r * c).collect();
                Self::point(&p, &cone).expect("dimension matches")
            }
        }
    }

    pub fn tag(&self) -> SetTag {
        match self.body {
            Body::Empty => SetTag::Empty,
            Body::Whole => SetTag::WholeSpace,
            Body::Proper { .. } => SetTag::Proper,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.tag() == SetTag::Empty
    }

    pub fn is_whole(&self) -> bool {
        self.tag() == SetTag::WholeSpace
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn cone(&self) -> &ConvexCone {
        &self.cone
    }

    /// Vertices of a proper set (empty slice otherwise).
    pub fn vertices(&self) -> &[Vec<f64>] {
        match &self.body {
            Body::Proper { vertices, .. } => vertices,
            _ => &[],
        }
    }

    /// Recession directions of a proper set, cone generators included.
    pub fn rays(&self) -> &[Vec<f64>] {
        match &self.body {
            Body::Proper { rays, .. } => rays,
            _ => &[],
        }
    }

    /// Halfspace description of a proper set. The whole space has none and
    /// the empty set is described by no finite system here, so both yield an
    /// empty slice.
    pub fn hrep(&self) -> &[Halfspace] {
        match &self.body {
            Body::Proper { vertices, rays, hrep } => hrep.get_or_init(|| facets(vertices, rays, self.dim())),
            _ => &[],
        }
    }

    pub fn contains_point(&self, z: &[f64], tol: f64) -> bool {
        match self.body {
            Body::Empty => false,
            Body::Whole => true,
            Body::Proper { .. } => self.hrep().iter().all(|h| h.contains(z, tol)),
        }
    }

    /// Whether `r` is a recession direction.
    pub fn contains_direction(&self, r: &[f64], tol: f64) -> bool {
        match self.body {
            Body::Empty | Body::Whole => true,
            Body::Proper { .. } => match normalized(r) {
                None => true,
                Some(u) => self.hrep().iter().all(|h| h.normal.apply(&u) <= tol),
            },
        }
    }

    fn same_dim(&self, other: &UpperSet) -> Result<()> {
        if self.dim() != other.dim() {
            Err(Error::DimensionMismatch { expected: self.dim(), got: other.dim() })
        } else {
            Ok(())
        }
    }

    /// Equality up to `tol`, checked as inclusion both ways.
    pub fn approx_eq(&self, other: &UpperSet, tol: f64) -> bool {
        self.tag() == other.tag() && is_subset_tol(self, other, tol) && is_subset_tol(other, self, tol)
    }
}

impl fmt::Display for UpperSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::report::fmt_point;
        match &self.body {
            Body::Empty => write!(f, "EMPTY"),
            Body::Whole => write!(f, "WHOLE_SPACE"),
            Body::Proper { vertices, rays, .. } => {
                let v: Vec<String> = vertices.iter().map(|p| fmt_point(p)).collect();
                let r: Vec<String> = rays.iter().map(|p| fmt_point(p)).collect();
                write!(f, "PROPER vertices=[{}] rays=[{}]", v.join(" "), r.join(" "))
            }
        }
    }
}

/// Vertices and rays (lines as two opposite rays) of a halfspace system
/// whose normals lie in the negative dual of `cone`, without pruning.
/// `None` when the system is infeasible.
pub(crate) fn halfspace_generators(
    halfspaces: &[(Vec<f64>, f64)],
    cone: &ConvexCone,
) -> Result<Option<(Vec<Vec<f64>>, Vec<Vec<f64>>)>> {
    let d = cone.dim();
    let mut hs = Vec::new();
    for (a, b) in halfspaces {
        if a.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: a.len() });
        }
        if !b.is_finite() {
            return Err(Error::NonFinite);
        }
        match normalized(a) {
            None if *b < 0.0 => return Ok(None),
            None => continue,
            Some(n) => {
                if !cone.dual_contains(&n) {
                    return Err(Error::NotInDualCone(a.clone()));
                }
                hs.push(Halfspace { normal: DualVector::unchecked(&n), offset: b / norm(a) });
            }
        }
    }
    let (points, rays) = generators_of(&hs, d);
    Ok(if points.is_empty() { None } else { Some((points, rays)) })
}

/// Halfspaces of `conv(vertices) + cone(rays)`, read off the polar of the
/// homogenised generator cone.
fn facets(vertices: &[Vec<f64>], rays: &[Vec<f64>], d: usize) -> Vec<Halfspace> {
    let mut hom: Vec<Vec<f64>> = Vec::new();
    for v in vertices {
        let mut h = v.clone();
        h.push(1.0);
        hom.push(h);
    }
    for r in rays {
        let mut h = r.clone();
        h.push(0.0);
        hom.push(h);
    }
    let polar = polar_generators(&hom, d + 1);
    let mut out: Vec<Halfspace> = Vec::new();
    let mut seen: Vec<Vec<f64>> = Vec::new();
    for y in polar.all_directions() {
        let Some(a) = normalized(&y[..d]) else { continue };
        let a = snap_unit(a);
        let offset = vertices.iter().map(|v| dot(&a, v)).fold(f64::NEG_INFINITY, f64::max);
        if push_unique(&mut seen, a.clone(), 1e-9) {
            out.push(Halfspace { normal: DualVector::unchecked(&a), offset });
        }
    }
    out
}

/// Removes floating noise from unit normals such as `(-1, 1e-17)`.
fn snap_unit(mut a: Vec<f64>) -> Vec<f64> {
    let mut changed = false;
    for x in a.iter_mut() {
        if x.abs() < 1e-13 {
            *x = 0.0;
            changed = true;
        }
    }
    if changed {
        normalized(&a).unwrap_or(a)
    } else {
        a
    }
}

/// Vertices and rays of a halfspace system (no vertices means infeasible).
fn generators_of(hs: &[Halfspace], d: usize) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let mut hom: Vec<Vec<f64>> = hs
        .iter()
        .map(|h| {
            let mut v = h.normal.coeffs().to_vec();
            v.push(-h.offset);
            v
        })
        .collect();
    let mut lift = vec![0.0; d + 1];
    lift[d] = -1.0;
    hom.push(lift);
    let polar = polar_generators(&hom, d + 1);
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for y in &polar.rays {
        let s = y[d];
        if s > 1e-12 {
            points.push(y[..d].iter().map(|x| x / s).collect());
        } else if let Some(r) = normalized(&y[..d]) {
            push_unique(&mut rays, r, 1e-12);
        }
    }
    for l in &polar.lineality {
        if let Some(r) = normalized(&l[..d]) {
            push_unique(&mut rays, linalg::scaled(&r, -1.0), 1e-12);
            push_unique(&mut rays, r, 1e-12);
        }
    }
    (points, rays)
}

/// Keeps the vertices and rays of a pointed polyhedron that are extreme.
fn prune(verts: &[Vec<f64>], rays: &[Vec<f64>], hrep: &[Halfspace], d: usize) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let vertices = verts
        .iter()
        .filter(|v| {
            let active: Vec<Vec<f64>> = hrep
                .iter()
                .filter(|h| (h.normal.apply(v) - h.offset).abs() <= 1e-9 * h.offset.abs().max(1.0))
                .map(|h| h.normal.coeffs().to_vec())
                .collect();
            linalg::rank(&active, d) == d
        })
        .cloned()
        .collect();
    let kept = rays
        .iter()
        .filter(|r| {
            let active: Vec<Vec<f64>> = hrep
                .iter()
                .filter(|h| h.normal.apply(r).abs() <= 1e-9)
                .map(|h| h.normal.coeffs().to_vec())
                .collect();
            linalg::rank(&active, d) == d - 1
        })
        .cloned()
        .collect();
    (vertices, kept)
}

/// Replaces computed points by nearby original points to avoid drift.
fn snap(points: Vec<Vec<f64>>, originals: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for p in points {
        let tol = 1e-9 * norm(&p).max(1.0);
        let q = originals.iter().find(|o| linalg::close(o, &p, tol)).cloned().unwrap_or(p);
        push_unique(&mut out, q, 1e-12);
    }
    out
}

/// Minkowski sum `cl(A + B)`; the empty set absorbs.
pub fn oplus(a: &UpperSet, b: &UpperSet) -> Result<UpperSet> {
    a.same_dim(b)?;
    let cone = a.cone.join(&b.cone);
    Ok(match (&a.body, &b.body) {
        (Body::Empty, _) | (_, Body::Empty) => UpperSet::empty(&cone),
        (Body::Whole, _) | (_, Body::Whole) => UpperSet::whole(&cone),
        _ => {
            let mut pts = Vec::new();
            for u in a.vertices() {
                for v in b.vertices() {
                    pts.push(linalg::add(u, v));
                }
            }
            let mut rays = a.rays().to_vec();
            rays.extend(b.rays().iter().cloned());
            UpperSet::from_generators(pts, rays, &cone)?
        }
    })
}

/// `t·A` for `t >= 0`, with the convention `0·A = C`.
pub fn scale(a: &UpperSet, t: f64) -> Result<UpperSet> {
    if t < 0.0 || !t.is_finite() {
        return Err(Error::NegativeScale(t));
    }
    if t == 0.0 {
        return Ok(UpperSet::cone_set(&a.cone));
    }
    Ok(match &a.body {
        Body::Empty | Body::Whole => a.clone(),
        Body::Proper { vertices, rays, hrep } => {
            let vertices = vertices.iter().map(|v| linalg::scaled(v, t)).collect();
            let cache = OnceLock::new();
            if let Some(h) = hrep.get() {
                let _ = cache.set(
                    h.iter().map(|h| Halfspace { normal: h.normal.clone(), offset: h.offset * t }).collect(),
                );
            }
            UpperSet { cone: a.cone.clone(), body: Body::Proper { vertices, rays: rays.clone(), hrep: cache } }
        }
    })
}

/// Lattice infimum `cl co ⋃ A_i`; the empty set is the top element.
pub fn lattice_inf(sets: &[UpperSet]) -> Result<UpperSet> {
    let first = sets.first().ok_or(Error::EmptyCollection)?;
    let mut cone = first.cone.clone();
    for s in &sets[1..] {
        first.same_dim(s)?;
        cone = cone.join(&s.cone);
    }
    if sets.iter().any(|s| s.is_whole()) {
        return Ok(UpperSet::whole(&cone));
    }
    let mut pts = Vec::new();
    let mut rays = Vec::new();
    for s in sets {
        pts.extend(s.vertices().iter().cloned());
        rays.extend(s.rays().iter().cloned());
    }
    UpperSet::from_generators(pts, rays, &cone)
}

/// Lattice supremum `⋂ A_i`; the whole space is the bottom element.
pub fn lattice_sup(sets: &[UpperSet]) -> Result<UpperSet> {
    let first = sets.first().ok_or(Error::EmptyCollection)?;
    let mut cone = first.cone.clone();
    for s in &sets[1..] {
        first.same_dim(s)?;
        cone = cone.meet(&s.cone);
    }
    if sets.iter().any(|s| s.is_empty()) {
        return Ok(UpperSet::empty(&cone));
    }
    let hs: Vec<(Vec<f64>, f64)> = sets
        .iter()
        .flat_map(|s| s.hrep().iter().map(|h| (h.normal.coeffs().to_vec(), h.offset)))
        .collect();
    if hs.is_empty() {
        return Ok(UpperSet::whole(&cone));
    }
    UpperSet::from_halfspaces(&hs, &cone)
}

/// `A ⊆ B` up to the incidence tolerance.
pub fn is_subset(a: &UpperSet, b: &UpperSet) -> bool {
    is_subset_tol(a, b, TAU)
}

/// `A ⊆ B` with every vertex and ray test slackened by `tol`.
pub fn is_subset_tol(a: &UpperSet, b: &UpperSet, tol: f64) -> bool {
    match (&a.body, &b.body) {
        (Body::Empty, _) => true,
        (_, Body::Empty) => false,
        (_, Body::Whole) => true,
        (Body::Whole, _) => false,
        _ => {
            a.vertices().iter().all(|v| b.contains_point(v, tol))
                && a.rays().iter().all(|r| b.contains_direction(r, tol))
        }
    }
}

/// Scalarization value `inf{-z*·z | z in A}`.
pub fn support_scalar(a: &UpperSet, zstar: &DualVector) -> Result<XReal> {
    if zstar.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: zstar.dim() });
    }
    if !a.cone.dual_contains(zstar.coeffs()) {
        return Err(Error::NotInDualCone(zstar.coeffs().to_vec()));
    }
    Ok(support_unchecked(a, zstar.coeffs()))
}

/// `inf{-y·z | z in A}` without the dual-cone check.
pub(crate) fn support_unchecked(a: &UpperSet, y: &[f64]) -> XReal {
    match &a.body {
        Body::Empty => XReal::PosInf,
        Body::Whole => XReal::NegInf,
        Body::Proper { vertices, rays, .. } => support_of_generators(vertices, rays, y),
    }
}

/// Support value of raw generators, no canonicalisation needed.
pub(crate) fn support_of_generators(vertices: &[Vec<f64>], rays: &[Vec<f64>], y: &[f64]) -> XReal {
    if vertices.is_empty() {
        return XReal::PosInf;
    }
    if rays.iter().any(|r| normalized(r).is_some_and(|u| -dot(y, &u) < -TAU)) {
        return XReal::NegInf;
    }
    XReal::from_f64(vertices.iter().map(|v| -dot(y, v)).fold(f64::INFINITY, f64::min))
}

/// Inf-residual `A ∸ B = {z | B + z ⊆ A}`.
pub fn inf_residual_set(a: &UpperSet, b: &UpperSet) -> Result<UpperSet> {
    residual_quotient(a, b, 1.0)
}

/// `(1/t)(A ∸ B)` for `t > 0`, with offsets divided by `t` before any
/// feasibility test so small residuals are not lost to the tolerance.
pub fn residual_quotient(a: &UpperSet, b: &UpperSet, t: f64) -> Result<UpperSet> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::NegativeScale(t));
    }
    a.same_dim(b)?;
    let cone = &a.cone;
    match (&a.body, &b.body) {
        (_, Body::Empty) => return Ok(UpperSet::whole(cone)),
        (Body::Whole, _) => return Ok(UpperSet::whole(cone)),
        (Body::Empty, _) | (_, Body::Whole) => return Ok(UpperSet::empty(cone)),
        _ => {}
    }
    let mut hs = Vec::new();
    for h in a.hrep() {
        match support_unchecked(b, h.normal.coeffs()).neg() {
            XReal::Finite(sigma) => hs.push((h.normal.coeffs().to_vec(), (h.offset - sigma) / t)),
            XReal::PosInf => return Ok(UpperSet::empty(cone)),
            XReal::NegInf => unreachable!("B is nonempty"),
        }
    }
    UpperSet::from_halfspaces(&hs, cone)
}

/// The z*-residual `(A ⊕ H(z*)) ∸ B`, a halfspace `{z | φ_A ∸ φ_B <= -z*·z}`.
pub fn zstar_residual(a: &UpperSet, b: &UpperSet, zstar: &DualVector) -> Result<UpperSet> {
    let pa = support_scalar(a, zstar)?;
    let pb = support_scalar(b, zstar)?;
    Ok(UpperSet::dual_halfspace(zstar, inf_residual(pa, pb)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orth() -> ConvexCone {
        ConvexCone::orthant(2)
    }

    fn pt(x: f64, y: f64) -> UpperSet {
        UpperSet::point(&[x, y], &orth()).unwrap()
    }

    #[test]
    fn make_upper_set_cases() {
        let a = pt(1.0, 2.0);
        assert_eq!(a.tag(), SetTag::Proper);
        assert_eq!(a.vertices(), &[vec![1.0, 2.0]]);
        let e = UpperSet::from_generators(vec![], vec![vec![1.0, 0.0]], &orth()).unwrap();
        assert!(e.is_empty());
        let w = UpperSet::from_generators(
            vec![vec![0.0, 0.0]],
            vec![vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0], vec![0.0, -1.0]],
            &orth(),
        )
        .unwrap();
        assert!(w.is_whole());
        let bad = UpperSet::from_generators(vec![vec![0.0]], vec![], &orth());
        assert!(matches!(bad, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn redundant_generators_pruned() {
        let a = UpperSet::from_generators(
            vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![0.5, 0.5], vec![2.0, 2.0], vec![1.0, 0.0]],
            vec![vec![1.0, 1.0]],
            &orth(),
        )
        .unwrap();
        assert_eq!(a.vertices().len(), 2);
        assert_eq!(a.rays().len(), 2);
        assert_eq!(a.hrep().len(), 3);
    }

    #[test]
    fn oplus_cases() {
        let s = oplus(&pt(1.0, 2.0), &pt(0.0, 1.0)).unwrap();
        assert!(s.approx_eq(&pt(1.0, 3.0), TAU));
        assert!(oplus(&pt(1.0, 2.0), &UpperSet::empty(&orth())).unwrap().is_empty());
        let n = oplus(&pt(1.0, 2.0), &UpperSet::cone_set(&orth())).unwrap();
        assert!(n.approx_eq(&pt(1.0, 2.0), TAU));
    }

    #[test]
    fn scale_cases() {
        assert!(scale(&pt(2.0, 4.0), 0.5).unwrap().approx_eq(&pt(1.0, 2.0), TAU));
        assert!(scale(&pt(2.0, 4.0), 0.0).unwrap().approx_eq(&UpperSet::cone_set(&orth()), TAU));
        assert!(scale(&UpperSet::empty(&orth()), 2.0).unwrap().is_empty());
        assert!(matches!(scale(&pt(0.0, 0.0), -1.0), Err(Error::NegativeScale(_))));
    }

    #[test]
    fn inf_and_sup() {
        let a = pt(1.0, 0.0);
        let b = pt(0.0, 1.0);
        let inf = lattice_inf(&[a.clone(), b.clone()]).unwrap();
        assert_eq!(inf.vertices().len(), 2);
        assert!(inf.contains_point(&[0.5, 0.5], TAU));
        assert!(!inf.contains_point(&[0.4, 0.4], TAU));
        assert!(lattice_inf(&[a.clone(), UpperSet::empty(&orth())]).unwrap().approx_eq(&a, TAU));
        assert!(lattice_inf(&[a.clone()]).unwrap().approx_eq(&a, TAU));
        let sup = lattice_sup(&[a.clone(), b.clone()]).unwrap();
        assert!(sup.approx_eq(&pt(1.0, 1.0), TAU));
        assert!(lattice_sup(&[a.clone(), UpperSet::whole(&orth())]).unwrap().approx_eq(&a, TAU));
        assert!(lattice_sup(&[a.clone(), UpperSet::empty(&orth())]).unwrap().is_empty());
        assert_eq!(lattice_inf(&[]).unwrap_err(), Error::EmptyCollection);
        assert_eq!(lattice_sup(&[]).unwrap_err(), Error::EmptyCollection);
    }

    #[test]
    fn subset_cases() {
        assert!(is_subset(&pt(1.0, 1.0), &pt(0.0, 0.0)));
        assert!(is_subset(&UpperSet::empty(&orth()), &pt(0.0, 0.0)));
        assert!(!is_subset(&pt(0.0, 0.0), &pt(1.0, 1.0)));
    }

    #[test]
    fn support_cases() {
        let z = DualVector::new(vec![-1.0, 0.0], &orth()).unwrap();
        assert_eq!(support_scalar(&pt(1.0, 2.0), &z).unwrap(), XReal::Finite(1.0));
        assert_eq!(support_scalar(&UpperSet::empty(&orth()), &z).unwrap(), XReal::PosInf);
        assert_eq!(support_scalar(&UpperSet::whole(&orth()), &z).unwrap(), XReal::NegInf);
    }

    #[test]
    fn residual_cases() {
        let r = inf_residual_set(&pt(1.0, 2.0), &pt(0.0, 1.0)).unwrap();
        assert!(r.approx_eq(&pt(1.0, 1.0), TAU));
        let b = UpperSet::from_halfspaces(&[(vec![-2.0, -1.0], 0.0), (vec![-0.5, -1.0], 0.0)], &orth()).unwrap();
        assert!(inf_residual_set(&UpperSet::cone_set(&orth()), &b).unwrap().is_empty());
        assert!(inf_residual_set(&pt(0.0, 0.0), &UpperSet::empty(&orth())).unwrap().is_whole());
    }

    #[test]
    fn zstar_residual_cases() {
        let z = DualVector::new(vec![0.0, -1.0], &orth()).unwrap();
        let h = zstar_residual(&pt(1.0, 2.0), &pt(0.0, 1.0), &z).unwrap();
        assert!(h.contains_point(&[-50.0, 1.0], TAU));
        assert!(!h.contains_point(&[0.0, 0.99], TAU));
        assert!(zstar_residual(&pt(1.0, 2.0), &UpperSet::empty(&orth()), &z).unwrap().is_whole());
        assert!(zstar_residual(&UpperSet::empty(&orth()), &pt(0.0, 1.0), &z).unwrap().is_empty());
    }

    #[test]
    fn degenerate_cone_sets() {
        let c = ConvexCone::new(2, vec![vec![0.0, 1.0]]).unwrap();
        let a = UpperSet::from_generators(vec![vec![-1.0, 0.0], vec![1.0, 0.0]], vec![], &c).unwrap();
        assert_eq!(a.vertices().len(), 2);
        assert_eq!(a.hrep().len(), 3);
        assert!(a.contains_point(&[0.0, 5.0], TAU));
        assert!(!a.contains_point(&[1.5, 5.0], TAU));
    }

    #[test]
    fn sets_with_lines() {
        let c = ConvexCone::orthant(2);
        let half = UpperSet::from_halfspaces(&[(vec![-1.0, -1.0], -1.0)], &c).unwrap();
        assert_eq!(half.tag(), SetTag::Proper);
        assert!(half.contains_point(&[5.0, -4.0], TAU));
        assert!(!half.contains_point(&[0.0, 0.0], TAU));
        let again = UpperSet::from_generators(half.vertices().to_vec(), half.rays().to_vec(), &c).unwrap();
        assert!(again.approx_eq(&half, TAU));
    }

    #[test]
    fn one_and_three_dimensions() {
        let c1 = ConvexCone::orthant(1);
        let a = UpperSet::from_generators(vec![vec![3.0], vec![1.0]], vec![], &c1).unwrap();
        assert_eq!(a.vertices(), &[vec![1.0]]);
        let c3 = ConvexCone::orthant(3);
        let b = UpperSet::from_generators(
            vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0], vec![1.0, 1.0, 1.0]],
            vec![],
            &c3,
        )
        .unwrap();
        assert_eq!(b.vertices().len(), 3);
        assert_eq!(b.hrep().len(), 4);
        let s = lattice_sup(&[UpperSet::point(&[1.0, 0.0, 0.0], &c3).unwrap(), UpperSet::point(&[0.0, 0.0, 2.0], &c3).unwrap()])
            .unwrap();
        assert!(s.approx_eq(&UpperSet::point(&[1.0, 0.0, 2.0], &c3).unwrap(), TAU));
    }
}
