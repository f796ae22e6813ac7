//! Reference values checked against brute-force oracles written here.

mod common;

use common::corpus;
use setlat::funcmodel::{reconstruct, ScalarClosure, SampleGrid, ScalarEval, SetEval, SetFn};
use setlat::gencvx::{classify_segment, set_quasiconvex, SegmentShape};
use setlat::optimality::{check_infimizer, check_minimizer, check_solution, Assertions, CheckMode};
use setlat::polytope::{
    dual_cone_sample, inf_residual_set, lattice_sup, zstar_residual, ConvexCone, DualVector, UpperSet, TAU,
};
use setlat::xreals::XReal;

fn square_grid(lo: f64, hi: f64, step: f64) -> Vec<[f64; 2]> {
    let n = ((hi - lo) / step).round() as usize;
    let axis: Vec<f64> = (0..=n).map(|k| lo + k as f64 * step).collect();
    axis.iter().flat_map(|a| axis.iter().map(move |b| [*a, *b])).collect()
}

/// Points of the grid where membership in the two sets disagrees, ignoring a
/// thin band around either boundary.
fn disagreements(got: &UpperSet, oracle: impl Fn(&[f64]) -> bool, margin_ok: impl Fn(&[f64]) -> bool) -> Vec<[f64; 2]> {
    square_grid(-2.0, 4.0, 0.05)
        .into_iter()
        .filter(|z| margin_ok(z) && got.contains_point(z, TAU) != oracle(z))
        .collect()
}

fn shifted(p: [f64; 2]) -> UpperSet {
    UpperSet::point(&p, &ConvexCone::orthant(2)).unwrap()
}

#[test]
fn supremum_of_two_shifted_orthants() {
    let (a, b) = (shifted([1.0, 0.0]), shifted([0.0, 1.0]));
    let sup = lattice_sup(&[a.clone(), b.clone()]).unwrap();
    let bad = disagreements(&sup, |z| a.contains_point(z, TAU) && b.contains_point(z, TAU), |_| true);
    assert!(bad.is_empty(), "{bad:?}");
    assert!(sup.approx_eq(&shifted([1.0, 1.0]), TAU));
}

#[test]
fn residual_of_shifted_orthants() {
    let (a, b) = (shifted([1.0, 2.0]), shifted([0.0, 1.0]));
    let r = inf_residual_set(&a, &b).unwrap();
    // z + B ⊆ A reduces to the vertex of B landing in A.
    let bad = disagreements(&r, |z| a.contains_point(&[z[0], z[1] + 1.0], TAU), |_| true);
    assert!(bad.is_empty(), "{bad:?}");
    assert!(r.approx_eq(&shifted([1.0, 1.0]), TAU));
}

#[test]
fn zstar_residual_is_a_halfspace() {
    let c = ConvexCone::orthant(2);
    let (a, b) = (shifted([1.0, 2.0]), shifted([0.0, 1.0]));
    let z = DualVector::new(vec![0.0, -1.0], &c).unwrap();
    let r = zstar_residual(&a, &b, &z).unwrap();
    // A ⊕ H(z*) is {y2 >= 2}; z is in the residual iff z + (0, 1) is.
    let bad = disagreements(&r, |p| p[1] + 1.0 >= 2.0 - TAU, |p| (p[1] - 1.0).abs() > 1e-6);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn dual_sample_of_the_halfplane_cone() {
    let c = ConvexCone::new(2, vec![vec![0.0, 1.0]]).unwrap();
    let sample = dual_cone_sample(&c, 0).unwrap();
    // Angles whose direction is nonpositive on the generator.
    let n = 3600;
    let inside: Vec<f64> = (0..n)
        .map(|k| 2.0 * std::f64::consts::PI * k as f64 / n as f64)
        .filter(|a| a.sin() <= 1e-12)
        .collect();
    let (first, last) = (inside.first().unwrap(), inside.last().unwrap());
    assert!(first.abs() < 1e-12 && (last - 2.0 * std::f64::consts::PI).abs() < 2e-3);
    let got: Vec<Vec<f64>> = sample.iter().map(|z| z.coeffs().iter().map(|v| v + 0.0).collect()).collect();
    for want in [[-1.0, 0.0], [1.0, 0.0], [0.0, -1.0]] {
        assert!(got.iter().any(|g| (g[0] - want[0]).abs() < 1e-12 && (g[1] - want[1]).abs() < 1e-12), "{got:?}");
    }
    for z in &got {
        assert!(z[1] <= 1e-12);
    }
}

#[test]
fn reconstruction_matches_membership() {
    let p = corpus("example_strict_domination.json");
    let f = p.function().unwrap();
    let value = f.eval(&[0.5]).unwrap();
    let rebuilt = reconstruct(f, &[0.5], &p.duals(2).unwrap()).unwrap();
    let bad = disagreements(&rebuilt, |z| value.contains_point(z, TAU), |z| (z[0] - 0.75).abs() > 1e-6 && (z[0] + 0.75).abs() > 1e-6);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn countable_segments_fall_then_rise() {
    let grid = SampleGrid::unit_interval(129);
    for i in [1usize, 3, 7] {
        let k = i as f64;
        let phi = ScalarClosure::new(1, move |t: &[f64]| XReal::Finite(-(k + 1.0) * (1.0 - t[0]).min(k * t[0])));
        let prof = classify_segment(&phi, &grid).unwrap();
        let pts = grid.points();
        let vals: Vec<f64> = pts.iter().map(|t| phi.value(t).unwrap().to_f64()).collect();
        let lowest = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let at: Vec<f64> = pts.iter().zip(&vals).filter(|(_, v)| **v == lowest).map(|(t, _)| t[0]).collect();
        assert_eq!(prof.shape, SegmentShape::DecConstInc, "i={i}");
        assert_eq!((prof.s0, prof.t0), (at[0], *at.last().unwrap()));
        assert_eq!(prof.s0, 1.0 / (k + 1.0));
        assert_eq!(prof.inf_value, XReal::Finite(lowest));

        // Before the kink the segment only falls.
        let half = 0.5 / (k + 1.0);
        let head = ScalarClosure::new(1, move |t: &[f64]| phi.value(&[t[0] * half]).unwrap());
        assert_eq!(classify_segment(&head, &grid).unwrap().shape, SegmentShape::MonotoneDec);
    }
}

#[test]
fn separated_midpoint_breaks_set_quasiconvexity() {
    let c = ConvexCone::orthant(2);
    let f = SetFn::parse_points(1, c, &[("x1 == 0.5", &["1", "1"]), ("true", &["0", "0"])]).unwrap();
    let v = set_quasiconvex(&f, &SampleGrid::parse("0:1:1").unwrap(), &SampleGrid::unit_interval(3)).unwrap();
    assert!(!v.holds);
    let w = v.witness.unwrap();
    let meet = lattice_sup(&[f.eval(&w.a).unwrap(), f.eval(&w.b).unwrap()]).unwrap();
    let mid: Vec<f64> = w.a.iter().zip(&w.b).map(|(a, b)| a + w.ts[0] * (b - a)).collect();
    // A point of f(a) ∩ f(b) outside f(mid).
    assert!(meet.contains_point(&[0.0, 0.0], TAU) && !f.eval(&mid).unwrap().contains_point(&[0.0, 0.0], TAU));
}

#[test]
fn unbounded_problem_never_attains() {
    let p = corpus("example_unbounded.json");
    let f = p.function().unwrap();
    let grid = p.grid("x").unwrap();
    // The diagonal scalarization is bounded below; the second axis dual is not.
    let axis = DualVector::new(vec![0.0, -1.0], &p.cone).unwrap();
    let mut best = (XReal::PosInf, vec![]);
    for x in grid.points() {
        let v = f.scalar(&x, &axis).unwrap();
        if v < best.0 {
            best = (v, x);
        }
    }
    assert!(grid.on_boundary(&best.1), "{:?}", best.1);
    for m in [p.m.clone(), vec![vec![0.5, 0.5]], vec![vec![1.0, 0.0], vec![2.0, -0.5]]] {
        let r = check_infimizer(f, &m, grid, &p.duals(p.dual_refinement).unwrap(), &p.dini, &p.assertions).unwrap();
        assert!(!r.subcheck("ATTAINMENT").unwrap().verdict.is_pass(), "{m:?}");
    }
}

/// Feasible grid points strictly below `x0` in the componentwise order.
fn strictly_better(p: &setlat::problem::Problem, x0: &[f64]) -> Vec<Vec<f64>> {
    let f = p.function().unwrap();
    p.grid("x")
        .unwrap()
        .points()
        .into_iter()
        .filter(|x| !f.eval(x).unwrap().is_empty())
        .filter(|x| x[0] <= x0[0] && x[1] <= x0[1] && (x[0] < x0[0] || x[1] < x0[1]))
        .collect()
}

#[test]
fn triangle_minimizers_and_solution() {
    let p = corpus("example_triangle.json");
    let f = p.function().unwrap();
    let grid = p.grid("x").unwrap();
    let duals = p.duals(p.dual_refinement).unwrap();
    for x0 in &p.m {
        assert!(strictly_better(&p, x0).is_empty(), "{x0:?}");
        let r = check_minimizer(f, x0, &p.mstar, grid, &p.dini, CheckMode::Sufficient, &p.assertions).unwrap();
        assert!(r.verdict.is_pass(), "{x0:?}: {}", r.verdict);
    }
    let r = check_solution(f, &p.m, &p.mstar, grid, &duals, &p.dini, CheckMode::Sufficient, &Assertions::none()).unwrap();
    assert!(r.verdict.is_pass(), "{}", r.verdict);

    let inner = [0.8, 0.8];
    assert!(strictly_better(&p, &inner).contains(&vec![0.5, 0.5]));
    let (lo, hi) = (f.eval(&[0.5, 0.5]).unwrap(), f.eval(&inner).unwrap());
    assert!(setlat::polytope::is_subset(&hi, &lo) && !setlat::polytope::is_subset(&lo, &hi));
    let r = check_solution(f, &[inner.to_vec()], &p.mstar, grid, &duals, &p.dini, CheckMode::Sufficient, &Assertions::none()).unwrap();
    assert!(!r.verdict.is_pass());
}
