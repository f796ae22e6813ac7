use std::fmt;

use super::linalg::{self, dot, normalized, polar_generators, push_unique, Polar, TOL};
use crate::error::{Error, Result};

/// A finitely generated closed convex cone in `R^d`.
///
/// An empty generator list is the zero cone `{0}`.
#[derive(Debug, Clone)]
pub struct ConvexCone {
    dim: usize,
    generators: Vec<Vec<f64>>,
}

impl PartialEq for ConvexCone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.generators == other.generators
    }
}

impl ConvexCone {
    pub fn new(dim: usize, generators: Vec<Vec<f64>>) -> Result<ConvexCone> {
        let mut gens = Vec::new();
        for g in &generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: g.len() });
            }
            let n = normalized(g).ok_or(Error::ZeroVector)?;
            push_unique(&mut gens, n, 1e-12);
        }
        Ok(ConvexCone { dim, generators: gens })
    }

    /// The nonnegative orthant of `R^d`.
    pub fn orthant(dim: usize) -> ConvexCone {
        let gens = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        ConvexCone { dim, generators: gens }
    }

    /// The zero cone `{0}`.
    pub fn zero(dim: usize) -> ConvexCone {
        ConvexCone { dim, generators: Vec::new() }
    }

    /// The halfspace cone `{z | zstar·z <= 0}`.
    pub fn halfspace(zstar: &DualVector) -> ConvexCone {
        let d = zstar.dim();
        let mut gens = vec![linalg::scaled(zstar.coeffs(), -1.0)];
        for b in linalg::nullspace(&[zstar.coeffs().to_vec()], d) {
            gens.push(linalg::scaled(&b, -1.0));
            gens.push(b);
        }
        ConvexCone::new(d, gens).expect("halfspace generators are nonzero")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<f64>] {
        &self.generators
    }

    pub(crate) fn dual(&self) -> Polar {
        polar_generators(&self.generators, self.dim)
    }

    /// True when the cone is all of `R^d`, so that its negative dual is `{0}`.
    pub fn is_whole_space(&self) -> bool {
        self.dual().is_zero()
    }

    /// Whether `v` lies in the negative dual cone (within tolerance).
    pub fn dual_contains(&self, v: &[f64]) -> bool {
        let scale = linalg::norm(v).max(1e-300);
        self.generators.iter().all(|g| dot(g, v) / scale <= TOL)
    }

    /// Whether direction `v` lies in the cone.
    pub fn contains(&self, v: &[f64]) -> bool {
        let dual = self.dual();
        let n = linalg::norm(v).max(1e-300);
        dual.rays.iter().all(|y| dot(y, v) / n <= 1e-9)
            && dual.lineality.iter().all(|y| (dot(y, v) / n).abs() <= 1e-9)
    }

    /// Smallest cone containing both.
    pub fn join(&self, other: &ConvexCone) -> ConvexCone {
        if self == other {
            return self.clone();
        }
        let mut gens = self.generators.clone();
        for g in &other.generators {
            push_unique(&mut gens, g.clone(), 1e-12);
        }
        ConvexCone { dim: self.dim, generators: gens }
    }

    /// Intersection of two cones.
    pub fn meet(&self, other: &ConvexCone) -> ConvexCone {
        if self == other {
            return self.clone();
        }
        let mut dual_gens = self.dual().all_directions();
        dual_gens.extend(other.dual().all_directions());
        let back = polar_generators(&dual_gens, self.dim);
        ConvexCone::new(self.dim, back.all_directions()).expect("polar generators are unit vectors")
    }
}

/// A nonzero element `z*` of the negative dual cone, normalised to unit length.
#[derive(Debug, Clone)]
pub struct DualVector {
    coeffs: Vec<f64>,
}

impl PartialEq for DualVector {
    fn eq(&self, other: &Self) -> bool {
        linalg::close(&self.coeffs, &other.coeffs, 1e-12)
    }
}

impl DualVector {
    /// Validates membership in the negative dual of `cone` and normalises.
    pub fn new(coeffs: Vec<f64>, cone: &ConvexCone) -> Result<DualVector> {
        if coeffs.len() != cone.dim() {
            return Err(Error::DimensionMismatch { expected: cone.dim(), got: coeffs.len() });
        }
        let unit = normalized(&coeffs).ok_or(Error::ZeroVector)?;
        if !cone.dual_contains(&unit) {
            return Err(Error::NotInDualCone(coeffs));
        }
        Ok(DualVector { coeffs: unit })
    }

    pub(crate) fn unchecked(coeffs: &[f64]) -> DualVector {
        DualVector { coeffs: normalized(coeffs).expect("nonzero dual vector") }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `z*·z`
    pub fn apply(&self, z: &[f64]) -> f64 {
        dot(&self.coeffs, z)
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::report::fmt_point(&self.coeffs))
    }
}

/// Finite sample of the negative dual cone minus the origin: its extreme
/// directions followed by `refinement` rounds of normalised midpoints.
pub fn dual_cone_sample(cone: &ConvexCone, refinement: usize) -> Result<Vec<DualVector>> {
    let dual = cone.dual();
    if dual.is_zero() {
        return Err(Error::TrivialDual);
    }
    let mut out = dual.all_directions();
    sort_directions(&mut out);
    for _ in 0..refinement {
        let mut fresh = Vec::new();
        for m in midpoints(&out, cone.dim()) {
            if cone.dual_contains(&m) && !out.iter().any(|w| linalg::close(w, &m, 1e-9)) {
                push_unique(&mut fresh, m, 1e-9);
            }
        }
        sort_directions(&mut fresh);
        out.extend(fresh);
    }
    Ok(out.into_iter().map(|coeffs| DualVector { coeffs }).collect())
}

/// Candidate midpoints: angular neighbours in the plane, all pairs otherwise.
fn midpoints(dirs: &[Vec<f64>], d: usize) -> Vec<Vec<f64>> {
    let mut out = Vec::new();
    if d == 2 {
        let mut sorted = dirs.to_vec();
        sorted.sort_by(|a, b| angle(a).total_cmp(&angle(b)));
        let n = sorted.len();
        if n < 2 {
            return out;
        }
        for i in 0..n {
            let (a, b) = (&sorted[i], &sorted[(i + 1) % n]);
            let mut turn = angle(b) - angle(a);
            if turn <= 0.0 {
                turn += std::f64::consts::TAU;
            }
            let sum = linalg::add(a, b);
            let mid = if (turn - std::f64::consts::PI).abs() < 1e-12 {
                Some(vec![-a[1], a[0]])
            } else if turn < std::f64::consts::PI {
                normalized(&sum)
            } else {
                normalized(&sum).map(|v| linalg::scaled(&v, -1.0))
            };
            out.extend(mid);
        }
    } else {
        for i in 0..dirs.len() {
            for j in i + 1..dirs.len() {
                out.extend(normalized(&linalg::add(&dirs[i], &dirs[j])));
            }
        }
    }
    out
}

fn angle(v: &[f64]) -> f64 {
    v[1].atan2(v[0])
}

fn sort_directions(v: &mut [Vec<f64>]) {
    v.sort_by(|a, b| {
        for (x, y) in a.iter().zip(b) {
            match x.total_cmp(y) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coords(s: &[DualVector]) -> Vec<Vec<f64>> {
        s.iter().map(|d| d.coeffs().to_vec()).collect()
    }

    #[test]
    fn orthant_dual_sample() {
        let s = dual_cone_sample(&ConvexCone::orthant(2), 0).unwrap();
        assert_eq!(coords(&s), vec![vec![-1.0, 0.0], vec![0.0, -1.0]]);
        let s1 = dual_cone_sample(&ConvexCone::orthant(2), 1).unwrap();
        assert_eq!(s1.len(), 3);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(s1.iter().any(|d| linalg::close(d.coeffs(), &[-h, -h], 1e-12)));
    }

    #[test]
    fn halfplane_dual_sample() {
        let cone = ConvexCone::new(2, vec![vec![0.0, 1.0]]).unwrap();
        let s = dual_cone_sample(&cone, 0).unwrap();
        assert_eq!(s.len(), 3);
        for want in [[-1.0, 0.0], [1.0, 0.0], [0.0, -1.0]] {
            assert!(s.iter().any(|d| linalg::close(d.coeffs(), &want, 1e-12)), "{want:?}");
        }
        let s2 = dual_cone_sample(&cone, 2).unwrap();
        assert_eq!(s2.len(), 9);
        assert!(s2.iter().all(|d| d.coeffs()[1] <= 1e-12));
    }

    #[test]
    fn whole_space_has_trivial_dual() {
        let cone = ConvexCone::new(1, vec![vec![1.0], vec![-1.0]]).unwrap();
        assert_eq!(dual_cone_sample(&cone, 0), Err(Error::TrivialDual));
    }

    #[test]
    fn dual_vector_validation() {
        let c = ConvexCone::orthant(2);
        assert!(DualVector::new(vec![1.0, 0.0], &c).is_err());
        assert!(DualVector::new(vec![0.0, 0.0], &c).is_err());
        let z = DualVector::new(vec![-3.0, -4.0], &c).unwrap();
        assert!(linalg::close(z.coeffs(), &[-0.6, -0.8], 1e-15));
    }

    #[test]
    fn meet_and_join() {
        let a = ConvexCone::new(2, vec![vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap();
        let b = ConvexCone::new(2, vec![vec![0.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let m = a.meet(&b);
        assert!(m.contains(&[1.0, 1.0]));
        assert!(!m.contains(&[1.0, 0.0]));
        let j = a.join(&b);
        assert!(j.contains(&[1.0, 0.0]) && j.contains(&[0.0, 1.0]));
    }

    #[test]
    fn three_dimensional_orthant() {
        let s = dual_cone_sample(&ConvexCone::orthant(3), 1).unwrap();
        assert_eq!(s.len(), 6);
    }
}
