mod common;

use proptest::prelude::*;

use common::corpus;
use setlat::dini::{scalar_dini, zstar_dini, DiniConfig};
use setlat::funcmodel::{
    inf_translate, reconstruct, restrict_segment, scalarize, SampleGrid, ScalarEval, ScalarValue, SetEval, SetFn,
    SetPiece, SetValue,
};
use setlat::gencvx::{classify_radial, radial_lsc_check, Property};
use setlat::optimality::{check_minimizer, domination_set, Assertions, CheckMode};
use setlat::polytope::{
    dual_cone_sample, inf_residual_set, is_subset, is_subset_tol, lattice_inf, oplus, support_scalar, ConvexCone,
    DualVector, UpperSet, TAU, TAU_H,
};
use setlat::report::{parse_csv, parse_text_rows, render_csv, render_text};
use setlat::xreals::{inf_add, inf_residual, liminf_tail, XReal};

fn xreal() -> impl Strategy<Value = XReal> {
    prop_oneof![
        1 => Just(XReal::NegInf),
        1 => Just(XReal::PosInf),
        6 => (-1e6..1e6f64).prop_map(XReal::from_f64),
    ]
}

fn cones() -> Vec<ConvexCone> {
    vec![
        ConvexCone::orthant(2),
        ConvexCone::new(2, vec![vec![1.0, 0.0], vec![1.0, 1.0]]).unwrap(),
        ConvexCone::new(2, vec![vec![-1.0, 1.0], vec![1.0, 1.0]]).unwrap(),
        ConvexCone::new(2, vec![vec![0.0, 1.0]]).unwrap(),
    ]
}

fn point() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0..2.0f64, 2)
}

/// A cone index and a proper upper set with one to three vertices.
fn upper_set() -> impl Strategy<Value = (usize, Vec<Vec<f64>>)> {
    (0..4usize, prop::collection::vec(point(), 1..4))
}

fn build(c: usize, v: &[Vec<f64>]) -> UpperSet {
    UpperSet::from_generators(v.to_vec(), vec![], &cones()[c]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn finite_arithmetic_is_exact(r in -1e6..1e6f64, s in -1e6..1e6f64) {
        prop_assert_eq!(inf_add(XReal::from_f64(r), XReal::from_f64(s)), XReal::from_f64(r + s));
        prop_assert_eq!(inf_residual(XReal::from_f64(r), XReal::from_f64(s)), XReal::from_f64(r - s));
    }

    #[test]
    fn inf_add_commutes_associates_and_is_monotone(r in xreal(), s in xreal(), t in xreal()) {
        prop_assert_eq!(inf_add(r, s), inf_add(s, r));
        let (a, b) = (inf_add(inf_add(r, s), t), inf_add(r, inf_add(s, t)));
        match (a, b) {
            (XReal::Finite(x), XReal::Finite(y)) => prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0)),
            _ => prop_assert_eq!(a, b),
        }
        if r <= s {
            prop_assert!(inf_add(r, t) <= inf_add(s, t));
        }
    }

    #[test]
    fn constant_tail_is_the_liminf(head in prop::collection::vec(-5.0..5.0f64, 0..10), c in -5.0..5.0f64, w in 1usize..6) {
        let mut vals: Vec<XReal> = head.into_iter().map(XReal::from_f64).collect();
        vals.extend(std::iter::repeat(XReal::from_f64(c)).take(w + 2));
        let samples: Vec<(f64, XReal)> = vals.iter().enumerate().map(|(k, v)| (0.5f64.powi(k as i32), *v)).collect();
        prop_assert_eq!(liminf_tail(&samples, w).unwrap(), XReal::from_f64(c));
    }

    #[test]
    fn canonical_form_is_idempotent((c, v) in upper_set()) {
        let a = build(c, &v);
        let again = UpperSet::from_generators(a.vertices().to_vec(), a.rays().to_vec(), &cones()[c]).unwrap();
        prop_assert!(a.approx_eq(&again, TAU));
    }

    #[test]
    fn residuation_inequality((c, va) in upper_set(), vb in prop::collection::vec(point(), 1..4)) {
        let (a, b) = (build(c, &va), build(c, &vb));
        let r = inf_residual_set(&a, &b).unwrap();
        prop_assert!(is_subset_tol(&oplus(&b, &r).unwrap(), &a, 1e-7));
    }

    #[test]
    fn cone_order_embeds(c in 0..4usize, z1 in point(), z2 in point()) {
        let cone = &cones()[c];
        let diff: Vec<f64> = z2.iter().zip(&z1).map(|(a, b)| a - b).collect();
        let below = UpperSet::cone_set(cone).contains_point(&diff, TAU);
        let nested = is_subset(&UpperSet::point(&z2, cone).unwrap(), &UpperSet::point(&z1, cone).unwrap());
        prop_assert_eq!(below, nested);
    }

    #[test]
    fn support_of_infimum_is_minimum(c in 0..4usize, sets in prop::collection::vec(prop::collection::vec(point(), 1..3), 1..4)) {
        let built: Vec<UpperSet> = sets.iter().map(|v| build(c, v)).collect();
        let inf = lattice_inf(&built).unwrap();
        for z in dual_cone_sample(&cones()[c], 2).unwrap() {
            let direct = built.iter().map(|a| support_scalar(a, &z).unwrap()).min().unwrap();
            let got = support_scalar(&inf, &z).unwrap();
            prop_assert!((got.to_f64() - direct.to_f64()).abs() <= 1e-9, "{} vs {}", got, direct);
        }
    }

    #[test]
    fn hrep_round_trip((c, v) in upper_set()) {
        let a = build(c, &v);
        let hs: Vec<(Vec<f64>, f64)> = a.hrep().iter().map(|h| (h.normal.coeffs().to_vec(), h.offset)).collect();
        let back = UpperSet::from_halfspaces(&hs, &cones()[c]).unwrap();
        prop_assert!(a.approx_eq(&back, TAU_H), "{} vs {}", a, back);
    }

    #[test]
    fn domain_matches_scalarizations(x in -1.5..1.5f64) {
        let p = corpus("example_extreme_direction.json");
        let f = p.function().unwrap();
        let empty = f.eval(&[x]).unwrap().is_empty();
        for z in p.duals(2).unwrap() {
            prop_assert_eq!(empty, scalarize(f, &z).unwrap().value(&[x]).unwrap().is_pos_inf());
        }
    }

    #[test]
    fn reconstruction_contains_value(x1 in -1.0..1.5f64, x2 in -1.0..1.5f64, refine in 0usize..3) {
        let p = corpus("example_triangle.json");
        let f = p.function().unwrap();
        let value = f.eval(&[x1, x2]).unwrap();
        let rebuilt = reconstruct(f, &[x1, x2], &p.duals(refine).unwrap()).unwrap();
        prop_assert!(is_subset(&value, &rebuilt));
    }

    #[test]
    fn inf_translation_scalarizes_to_minimum(m in prop::collection::vec(-1.0..1.0f64, 1..4), x in -1.0..1.0f64) {
        let p = corpus("example_extreme_direction.json");
        let f = p.function().unwrap();
        let pts: Vec<Vec<f64>> = m.iter().map(|v| vec![*v]).collect();
        let t = inf_translate(f, &pts).unwrap();
        for z in p.duals(2).unwrap() {
            let lhs = support_scalar(&t.eval(&[x]).unwrap(), &z).unwrap();
            let rhs = pts.iter().map(|q| f.scalar(&[q[0] + x], &z).unwrap()).min().unwrap();
            prop_assert!(lhs == rhs || (lhs.to_f64() - rhs.to_f64()).abs() <= 1e-12);
        }
    }

    #[test]
    fn dini_is_positively_homogeneous(x in -1.0..1.0f64, u in prop_oneof![Just(-1.0), Just(1.0)], r in prop_oneof![Just(0.5), Just(2.0), Just(10.0)]) {
        let p = corpus("example_scalar_classes.json");
        let cfg = DiniConfig::default();
        for name in ["square", "twin_parabola", "concave_half", "bump"] {
            let phi = p.scalar_function(name).unwrap();
            let d1 = scalar_dini(phi, &[x], &[u], &cfg).unwrap();
            let dr = scalar_dini(phi, &[x], &[r * u], &cfg).unwrap();
            match (d1, dr) {
                (XReal::Finite(a), XReal::Finite(b)) => prop_assert!((b - r * a).abs() <= 1e-6 * (r * a).abs().max(1.0), "{name}: {b} vs {r}*{a}"),
                _ => prop_assert_eq!(dr, d1),
            }
        }
    }

    #[test]
    fn polynomial_dini_matches_calculus(a in -2.0..2.0f64, b in -2.0..2.0f64, c in -2.0..2.0f64, x in -1.0..1.0f64, u in -2.0..2.0f64) {
        prop_assume!(u.abs() > 1e-3);
        let src = format!("{a} * x1^3 + {b} * x1^2 + {c} * x1");
        let phi = setlat::funcmodel::ScalarFn::parse(1, &[("true", src.as_str())]).unwrap();
        let exact = (3.0 * a * x * x + 2.0 * b * x + c) * u;
        let got = scalar_dini(&phi, &[x], &[u], &DiniConfig::default()).unwrap().to_f64();
        prop_assert!((got - exact).abs() <= 1e-4, "{} vs {}", got, exact);
    }

    #[test]
    fn zstar_set_matches_scalar(x in -0.9..0.9f64, u in prop_oneof![Just(-1.0), Just(1.0)]) {
        let p = corpus("example_strict_domination.json");
        let f = p.function().unwrap();
        for z in p.duals(1).unwrap() {
            let h = zstar_dini(f, &z, &[x], &[u], &DiniConfig::default()).unwrap();
            if h.scalar_value.is_finite() {
                let back = support_scalar(&h.set_value, &z).unwrap();
                prop_assert!((back.to_f64() - h.scalar_value.to_f64()).abs() <= 1e-9);
            }
        }
    }

    #[test]
    fn report_renderings_agree(x in 0.0..1.5f64) {
        let p = corpus("example_extreme_direction.json");
        let f = p.function().unwrap();
        let grid = SampleGrid::parse("-1.5:1.5:0.5").unwrap();
        let r = setlat::optimality::check_infimizer(f, &[vec![x]], &grid, &p.duals(1).unwrap(), &p.dini, &p.assertions).unwrap();
        prop_assert_eq!(parse_csv(&render_csv(&r)).unwrap(), parse_text_rows(&render_text(&r)).unwrap());
    }
}

/// The extension `x -> [phi(x), +inf)` of a scalar function.
fn extension(phi: &setlat::funcmodel::ScalarFn) -> SetFn {
    let pieces = phi
        .pieces()
        .iter()
        .map(|p| SetPiece {
            guard: p.guard.clone(),
            value: match &p.value {
                ScalarValue::Expr(e) => SetValue::Generators { vertices: vec![vec![e.clone()]], rays: vec![] },
                ScalarValue::PosInf => SetValue::Empty,
                ScalarValue::NegInf => SetValue::Whole,
            },
        })
        .collect();
    SetFn::new(1, ConvexCone::orthant(1), pieces).unwrap()
}

#[test]
fn scalar_extension_reproduces_scalar_dini() {
    let p = corpus("example_scalar_classes.json");
    let cfg = DiniConfig::default();
    let down = DualVector::new(vec![-1.0], &ConvexCone::orthant(1)).unwrap();
    for (name, phi) in &p.scalar_functions {
        let f = extension(phi);
        for x in [-0.5, 0.0, 0.25, 1.0] {
            for u in [-1.0, 1.0] {
                if phi.value(&[x]).unwrap().is_pos_inf() {
                    continue;
                }
                let a = scalar_dini(phi, &[x], &[u], &cfg).unwrap();
                let b = zstar_dini(&f, &down, &[x], &[u], &cfg).unwrap().scalar_value;
                assert_eq!(a, b, "{name} at {x} along {u}");
            }
        }
    }
}

#[test]
fn corpus_classification_implications() {
    let p = corpus("example_scalar_classes.json");
    let t = SampleGrid::unit_interval(129);
    let cfg = DiniConfig::default();
    for (name, phi) in &p.scalar_functions {
        for (a, b) in [(-1.0, 1.0), (-1.0, 2.0), (-2.0, 2.0), (0.0, 1.0)] {
            let holds = |prop| classify_radial(phi, &[a], &[b], prop, &t, &cfg).unwrap().holds;
            let lsc = radial_lsc_check(phi, &[a], &[b], &t).unwrap().holds;
            let (quasi, semi, pseudo) = (holds(Property::Quasi), holds(Property::SemistrictQuasi), holds(Property::Pseudo));
            if semi && lsc {
                assert!(quasi, "{name} on [{a},{b}]: semistrict and lsc but not quasi");
            }
            let seg = restrict_segment(phi, &[a], &[b]).unwrap();
            let star = t.points().iter().all(|s| {
                let v = seg.value(s).unwrap();
                !v.is_pos_inf() || t.points().iter().filter(|r| r[0] > s[0]).all(|r| seg.value(r).unwrap().is_pos_inf())
            });
            if pseudo && lsc && star && !seg.value(&[0.0]).unwrap().is_pos_inf() {
                assert!(semi, "{name} on [{a},{b}]: pseudo, lsc, star-shaped but not semistrict");
            }
            if quasi {
                let vals: Vec<XReal> = t.points().iter().map(|s| seg.value(s).unwrap()).collect();
                for level in [-1.0, -0.25, 0.0, 0.5, 1.0] {
                    let inside: Vec<usize> = (0..vals.len()).filter(|k| vals[*k] <= XReal::from_f64(level)).collect();
                    if let (Some(first), Some(last)) = (inside.first(), inside.last()) {
                        assert_eq!(inside.len(), last - first + 1, "{name}: level {level} not an interval");
                    }
                }
            }
        }
    }
}

#[test]
fn convexity_witnesses_reproduce() {
    let p = corpus("example_scalar_classes.json");
    let t = SampleGrid::unit_interval(129);
    let cfg = DiniConfig::default();
    for (name, phi) in &p.scalar_functions {
        for prop in [Property::Quasi, Property::SemistrictQuasi, Property::Pseudo] {
            let v = classify_radial(phi, &[-1.0], &[1.0], prop, &t, &cfg).unwrap();
            if let Some(w) = v.witness {
                let seg = restrict_segment(phi, &w.a, &w.b).unwrap();
                for (s, val) in w.ts.iter().zip(&w.values) {
                    assert_eq!(seg.value(&[*s]).unwrap(), *val, "{name} {prop}");
                }
            }
        }
    }
}

#[test]
fn empty_domination_means_pass_and_infimum() {
    let p = corpus("example_triangle.json");
    let f = p.function().unwrap();
    let grid = p.grid("x").unwrap();
    let duals = p.duals(1).unwrap();
    let asserted = Assertions::new(&["radially_lsc", "radially_semistrict_quasiconvex"]).unwrap();
    let x0 = [0.5, 0.5];
    let only = SampleGrid::parse("0.5:0.5:1,0.5:0.5:1").unwrap();
    let dom = domination_set(f, &x0, &only, &duals).unwrap();
    assert!(dom.is_empty());
    let r = check_minimizer(f, &x0, &duals, &only, &p.dini, CheckMode::Sufficient, &asserted).unwrap();
    assert!(r.verdict.is_pass());
    let values: Vec<UpperSet> = grid.points().iter().map(|x| f.eval(x).unwrap()).collect();
    let inf = lattice_inf(&values).unwrap();
    let z = DualVector::new(vec![-1.0, -1.0], &p.cone).unwrap();
    assert!((support_scalar(&inf, &z).unwrap().to_f64() - f.scalar(&x0, &z).unwrap().to_f64()).abs() <= 1e-12);
}

#[test]
fn refinement_never_breaks_attainment() {
    let p = corpus("example_extreme_direction.json");
    let f = p.function().unwrap();
    // M = {1} passes over the axis duals and correctly fails once the diagonal dual appears.
    for m in [p.m.clone(), vec![vec![0.0], vec![1.0]]] {
        let mut passed = false;
        for (refine, step) in [(0, "0.5"), (1, "0.25"), (2, "0.125")] {
            let grid = SampleGrid::parse(&format!("-1.5:1.5:{step}")).unwrap();
            let r = setlat::optimality::check_infimizer(f, &m, &grid, &p.duals(refine).unwrap(), &p.dini, &p.assertions).unwrap();
            let ok = r.subcheck("ATTAINMENT").unwrap().verdict.is_pass();
            assert!(!passed || ok, "{m:?}: attainment flipped to FAIL at refinement {refine}");
            passed = ok;
        }
    }
}
