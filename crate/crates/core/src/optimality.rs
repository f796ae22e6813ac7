//! Grid checks for infimizers, minimizers and solutions of set-valued
//! problems, phrased through scalarizations and their Dini derivatives.
//!
//! "For all x" means every point of the configured grid and "for all z*"
//! means every vector of the configured dual sample. Hypotheses that cannot
//! be tested numerically are taken from the caller and echoed in the report;
//! a pass that leans on a missing hypothesis is downgraded to
//! `CONDITIONAL_PASS`.

use std::fmt;

use crate::dini::{scalar_dini, DiniConfig};
use crate::error::{Error, Result};
use crate::funcmodel::{hull_scalarization, inf_translate, scalarize, SampleGrid, ScalarEval, SetEval};
use crate::polytope::linalg::sub;
use crate::polytope::{is_subset, DualVector, TAU_STRICT};
use crate::report::{fmt_point, CheckReport, Row, Verdict};
use crate::xreals::XReal;

pub const UNIFORM_LSC: &str = "uniform_lsc";
pub const RADIALLY_LSC: &str = "radially_lsc";
pub const RADIALLY_SEMISTRICT: &str = "radially_semistrict_quasiconvex";
pub const POINTWISE_QUASICONVEX: &str = "pointwise_quasiconvex";
pub const RADIALLY_PSEUDOCONVEX: &str = "radially_pseudoconvex";

pub const KNOWN_HYPOTHESES: [&str; 5] =
    [UNIFORM_LSC, RADIALLY_LSC, RADIALLY_SEMISTRICT, POINTWISE_QUASICONVEX, RADIALLY_PSEUDOCONVEX];

/// Properties asserted about the problem by whoever supplies it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assertions(Vec<String>);

impl Assertions {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Assertions> {
        let mut out = Vec::new();
        for n in names {
            let n = n.as_ref();
            if !KNOWN_HYPOTHESES.contains(&n) {
                return Err(Error::InvalidArgument(format!(
                    "unknown asserted property {n:?}; expected one of {}",
                    KNOWN_HYPOTHESES.join(", ")
                )));
            }
            if !out.iter().any(|o: &String| o == n) {
                out.push(n.to_string());
            }
        }
        Ok(Assertions(out))
    }

    pub fn none() -> Assertions {
        Assertions(Vec::new())
    }

    /// Uniform lower semicontinuity implies the radial form.
    pub fn has(&self, name: &str) -> bool {
        self.0.iter().any(|n| n == name) || (name == RADIALLY_LSC && self.has(UNIFORM_LSC))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Sufficient,
    Necessary,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Sufficient => "SUFFICIENT",
            CheckMode::Necessary => "NECESSARY",
        })
    }
}

/// Records the hypotheses a theorem needs and downgrades a pass when some
/// are missing.
fn apply_hypotheses(report: &mut CheckReport, asserted: &Assertions, needed: &[&str]) {
    let mut missing = Vec::new();
    for h in needed {
        if asserted.has(h) {
            report.hypotheses.push(format!("{h}: asserted"));
        } else {
            report.hypotheses.push(format!("{h}: not asserted"));
            missing.push(*h);
        }
    }
    if !missing.is_empty() && report.verdict == Verdict::Pass {
        report.verdict = Verdict::ConditionalPass;
        report.notes.push(format!("pass relies on unverified hypotheses: {}", missing.join(", ")));
    }
}

fn in_domain(f: &dyn SetEval, x: &[f64]) -> Result<()> {
    if f.eval(x)?.is_empty() {
        return Err(Error::OutsideDomain(x.to_vec()));
    }
    Ok(())
}

fn neg(x: &[f64]) -> Vec<f64> {
    x.iter().map(|v| -v).collect()
}

fn is_zero(x: &[f64]) -> bool {
    x.iter().all(|v| v.abs() < 1e-15)
}

/// Grid points whose value is not contained in `f(x0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DominationSet {
    pub members: Vec<Vec<f64>>,
    /// Per member, a dual vector with strictly smaller scalarization at the
    /// member than at `x0`.
    pub certificates: Vec<Option<DualVector>>,
}

impl DominationSet {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn fully_certified(&self) -> bool {
        self.certificates.iter().all(Option::is_some)
    }
}

pub fn domination_set(f: &dyn SetEval, x0: &[f64], grid: &SampleGrid, duals: &[DualVector]) -> Result<DominationSet> {
    let base = f.eval(x0)?;
    if base.is_empty() {
        return Err(Error::OutsideDomain(x0.to_vec()));
    }
    let mut fallback: Vec<DualVector> = base.hrep().iter().map(|h| h.normal.clone()).collect();
    fallback.retain(|n| !duals.contains(n));
    let mut out = DominationSet { members: Vec::new(), certificates: Vec::new() };
    for x in grid.points() {
        let value = f.eval(&x)?;
        if is_subset(&value, &base) {
            continue;
        }
        let mut cert = None;
        for z in duals.iter().chain(&fallback) {
            let (px, p0) = (f.scalar(&x, z)?, f.scalar(x0, z)?);
            if px < p0 && (p0.is_pos_inf() || px < XReal::Finite(p0.to_f64() - TAU_STRICT)) {
                cert = Some(z.clone());
                break;
            }
        }
        out.members.push(x);
        out.certificates.push(cert);
    }
    Ok(out)
}

/// No grid point has a value strictly containing `f(x0)`; returns the first
/// such point otherwise.
pub fn grid_dominator(f: &dyn SetEval, x0: &[f64], grid: &SampleGrid) -> Result<Option<Vec<f64>>> {
    let base = f.eval(x0)?;
    for x in grid.points() {
        let v = f.eval(&x)?;
        if is_subset(&base, &v) && !is_subset(&v, &base) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

fn duals_meta(duals: &[DualVector]) -> Vec<Vec<f64>> {
    duals.iter().map(|z| z.coeffs().to_vec()).collect()
}

fn check_points(f: &dyn SetEval, m: &[Vec<f64>]) -> Result<()> {
    if m.is_empty() {
        return Err(Error::EmptyCollection);
    }
    for p in m {
        in_domain(f, p)?;
    }
    Ok(())
}

/// Strong variational inequality for the hull inf-translation: for all grid
/// `x != 0` and sampled `z*`, the derivative at `x` toward the origin is at
/// most `τ_strict`. Returns the verdict, detail, first violation and rows.
fn strong_vi(
    f: &dyn SetEval,
    m: &[Vec<f64>],
    grid: &SampleGrid,
    duals: &[DualVector],
    cfg: &DiniConfig,
) -> Result<(Verdict, String, Option<Vec<f64>>, Vec<Row>)> {
    let hulls = duals.iter().map(|z| hull_scalarization(f, m, z)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    let mut first: Option<Vec<f64>> = None;
    let mut checked = 0;
    for x in grid.points() {
        if is_zero(&x) {
            continue;
        }
        for (z, h) in duals.iter().zip(&hulls) {
            let phi = h.value(&x)?;
            let d = scalar_dini(h, &x, &neg(&x), cfg)?;
            let ok = d <= XReal::Finite(TAU_STRICT);
            checked += 1;
            if !ok && first.is_none() {
                first = Some(x.clone());
            }
            rows.push(Row {
                x: x.clone(),
                zstar: Some(z.coeffs().to_vec()),
                phi,
                dini: Some(d),
                status: if ok { "OK" } else { "VIOLATION" }.into(),
            });
        }
    }
    let detail = match &first {
        None => format!("derivative toward 0 is <= {TAU_STRICT:e} at all {checked} (x, z*) samples"),
        Some(x) => format!("positive derivative toward 0 at x={}", fmt_point(x)),
    };
    Ok((Verdict::from_bool(first.is_none()), detail, first, rows))
}

/// `inf` over `M` equals `inf` over `co M` at the origin for every dual.
fn hull_value(f: &dyn SetEval, m: &[Vec<f64>], duals: &[DualVector]) -> Result<(Verdict, String)> {
    let origin = vec![0.0; f.arg_dim()];
    let fhat = inf_translate(f, m)?;
    for z in duals {
        let on_m = fhat.scalar(&origin, z)?;
        let on_hull = hull_scalarization(f, m, z)?.value(&origin)?;
        if on_hull < on_m && !(on_m.is_finite() && on_hull >= XReal::Finite(on_m.to_f64() - TAU_STRICT)) {
            return Ok((Verdict::Fail, format!("hull of M improves z*={z}: {on_hull} < {on_m}")));
        }
    }
    Ok((Verdict::Pass, "hull of M adds no value at the origin".into()))
}

/// Checks whether `M` attains the infimum of `f` over the grid.
pub fn check_infimizer(
    f: &dyn SetEval,
    m: &[Vec<f64>],
    grid: &SampleGrid,
    duals: &[DualVector],
    cfg: &DiniConfig,
    asserted: &Assertions,
) -> Result<CheckReport> {
    check_points(f, m)?;
    if duals.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let mut report = CheckReport::new("check-infimizer", grid.describe(), duals_meta(duals));
    let origin = vec![0.0; f.arg_dim()];
    let fhat = inf_translate(f, m)?;

    let mut attained = true;
    let mut detail = "no grid point improves any scalarization of the inf-translation at 0".to_string();
    'duals: for z in duals {
        let at_zero = fhat.scalar(&origin, z)?;
        let mut best: Option<(Vec<f64>, XReal)> = None;
        for x in grid.points() {
            let v = fhat.scalar(&x, z)?;
            if best.as_ref().is_none_or(|b| v < b.1) {
                best = Some((x, v));
            }
        }
        let (x, v) = best.ok_or(Error::NoSamples)?;
        let below = match at_zero {
            XReal::PosInf => !v.is_pos_inf(),
            XReal::NegInf => false,
            XReal::Finite(r) => v < XReal::Finite(r - TAU_STRICT),
        };
        if below {
            attained = false;
            detail = format!("z*={z}: value {v} at x={} is below {at_zero} at 0", fmt_point(&x));
            if grid.on_boundary(&x) {
                report
                    .notes
                    .push("infimum not attained on grid; decreasing toward grid boundary (possibly unbounded below)".into());
            }
            report.witness = Some(x);
            break 'duals;
        }
    }
    report.push_subcheck("ATTAINMENT", Verdict::from_bool(attained), detail);

    let (vi, vi_detail, vi_witness, rows) = strong_vi(f, m, grid, duals, cfg)?;
    report.push_subcheck("STRONG_VI", vi, vi_detail);
    report.rows = rows;
    if report.witness.is_none() {
        report.witness = vi_witness;
    }
    let (hv, hv_detail) = hull_value(f, m, duals)?;
    report.push_subcheck("HULL_VALUE", hv, hv_detail);

    if asserted.has(POINTWISE_QUASICONVEX) {
        let (v, d) = if attained && vi == Verdict::Fail {
            (Verdict::InconsistentNumerics, "attainment holds but the variational inequality fails on co M")
        } else {
            (Verdict::Pass, "attainment and the variational inequality agree")
        };
        report.push_subcheck("REVERSE", v, d);
    }
    report.settle();
    apply_hypotheses(&mut report, asserted, &[UNIFORM_LSC]);
    Ok(report)
}

/// Checks the minimality of `f(x0)` through directional derivatives along
/// the rays from grid points to `x0`.
pub fn check_minimizer(
    f: &dyn SetEval,
    x0: &[f64],
    mstar: &[DualVector],
    grid: &SampleGrid,
    cfg: &DiniConfig,
    mode: CheckMode,
    asserted: &Assertions,
) -> Result<CheckReport> {
    if mstar.is_empty() {
        return Err(Error::EmptyCollection);
    }
    in_domain(f, x0)?;
    let name = format!("check-minimizer {mode}");
    let mut report = CheckReport::new(&name, grid.describe(), duals_meta(mstar));
    let scal = mstar.iter().map(|z| scalarize(f, z)).collect::<Result<Vec<_>>>()?;
    let dominator = grid_dominator(f, x0, grid)?;
    match mode {
        CheckMode::Sufficient => {
            let dom = domination_set(f, x0, grid, mstar)?;
            if dom.fully_certified() {
                report.push_subcheck("DOMINATION", Verdict::Pass, format!("{} grid points not below f(x0)", dom.members.len()));
            } else {
                let n = dom.certificates.iter().filter(|c| c.is_none()).count();
                report.push_subcheck("DOMINATION", Verdict::LowConfidence, format!("{n} members without a separating dual"));
            }
            let mut first = None;
            for x in &dom.members {
                let u = sub(x0, x);
                let mut best: Option<(usize, XReal, XReal)> = None;
                let mut qualified = false;
                for (i, phi) in scal.iter().enumerate() {
                    let v = phi.value(x)?;
                    let d = scalar_dini(phi, x, &u, cfg)?;
                    if best.is_none_or(|b| d < b.2) {
                        best = Some((i, v, d));
                    }
                    if !v.is_neg_inf() && d < XReal::Finite(-TAU_STRICT) {
                        best = Some((i, v, d));
                        qualified = true;
                        break;
                    }
                }
                let (i, v, d) = best.expect("nonempty dual set");
                if !qualified && first.is_none() {
                    first = Some(x.clone());
                }
                report.rows.push(Row {
                    x: x.clone(),
                    zstar: Some(mstar[i].coeffs().to_vec()),
                    phi: v,
                    dini: Some(d),
                    status: if qualified { "QUALIFIED" } else { "UNQUALIFIED" }.into(),
                });
            }
            let strict = first.is_none();
            let detail = match &first {
                None => "every dominated grid point strictly descends toward x0 for some z*".to_string(),
                Some(x) => format!("no z* in M* descends strictly from x={} toward x0", fmt_point(x)),
            };
            report.push_subcheck("STRICT_MINTY", Verdict::from_bool(strict), detail);
            report.witness = first;
            if strict {
                match &dominator {
                    None => report.push_subcheck("GRID_MINIMAL", Verdict::Pass, "no grid value strictly contains f(x0)"),
                    Some(x) => report.push_subcheck(
                        "GRID_MINIMAL",
                        Verdict::InconsistentNumerics,
                        format!("conditions hold but f({}) strictly contains f(x0)", fmt_point(x)),
                    ),
                }
            }
            report.settle();
            apply_hypotheses(&mut report, asserted, &[RADIALLY_LSC, RADIALLY_SEMISTRICT]);
        }
        CheckMode::Necessary => {
            match &dominator {
                None => report.push_subcheck("GRID_MINIMAL", Verdict::Pass, "no grid value strictly contains f(x0)"),
                Some(x) => {
                    report.push_subcheck("GRID_MINIMAL", Verdict::Fail, format!("f({}) strictly contains f(x0)", fmt_point(x)));
                    report.witness = Some(x.clone());
                }
            }
            let (weak, weak_x) = minty(&scal, mstar, x0, grid, cfg, false, &mut report.rows)?;
            report.push_subcheck("MINTY_WEAK", weak, minty_detail(&weak_x, "no z* has derivative <= tau toward x0"));
            if report.witness.is_none() {
                report.witness = weak_x;
            }
            if asserted.has(RADIALLY_PSEUDOCONVEX) && asserted.has(RADIALLY_LSC) {
                let dom = domination_set(f, x0, grid, mstar)?;
                let members = SampleList(dom.members);
                let (strict, strict_x) = minty(&scal, mstar, x0, &members, cfg, true, &mut Vec::new())?;
                report.push_subcheck("MINTY_STRICT", strict, minty_detail(&strict_x, "no z* descends strictly toward x0"));
                if report.witness.is_none() {
                    report.witness = strict_x;
                }
            }
            report.settle();
            apply_hypotheses(&mut report, asserted, &[POINTWISE_QUASICONVEX]);
        }
    }
    Ok(report)
}

fn minty_detail(x: &Option<Vec<f64>>, failure: &str) -> String {
    match x {
        None => "holds at every sampled point".into(),
        Some(x) => format!("{failure} at x={}", fmt_point(x)),
    }
}

/// Explicit point list usable where a grid is expected.
struct SampleList(Vec<Vec<f64>>);

trait Points {
    fn list(&self) -> Vec<Vec<f64>>;
}

impl Points for SampleGrid {
    fn list(&self) -> Vec<Vec<f64>> {
        self.points()
    }
}

impl Points for SampleList {
    fn list(&self) -> Vec<Vec<f64>> {
        self.0.clone()
    }
}

/// Minty-type condition at every point: some dual has derivative toward `x0`
/// at most `τ_strict` (weak) or below `-τ_strict` with finite value (strict).
fn minty(
    scal: &[crate::funcmodel::Scalarized<'_>],
    mstar: &[DualVector],
    x0: &[f64],
    points: &dyn Points,
    cfg: &DiniConfig,
    strict: bool,
    rows: &mut Vec<Row>,
) -> Result<(Verdict, Option<Vec<f64>>)> {
    let mut first = None;
    for x in points.list() {
        if x.as_slice() == x0 {
            continue;
        }
        let u = sub(x0, &x);
        let mut best: Option<(usize, XReal, XReal)> = None;
        let mut ok = false;
        for (i, phi) in scal.iter().enumerate() {
            let v = phi.value(&x)?;
            let d = scalar_dini(phi, &x, &u, cfg)?;
            let good = if strict { !v.is_neg_inf() && d < XReal::Finite(-TAU_STRICT) } else { d <= XReal::Finite(TAU_STRICT) };
            if best.is_none_or(|b| d < b.2) || good {
                best = Some((i, v, d));
            }
            if good {
                ok = true;
                break;
            }
        }
        let (i, v, d) = best.expect("nonempty dual set");
        if !ok && first.is_none() {
            first = Some(x.clone());
        }
        rows.push(Row {
            x,
            zstar: Some(mstar[i].coeffs().to_vec()),
            phi: v,
            dini: Some(d),
            status: if ok { "OK" } else { "VIOLATION" }.into(),
        });
    }
    Ok((Verdict::from_bool(first.is_none()), first))
}

/// Checks that `M` is an infimizer made of minimizers.
#[allow(clippy::too_many_arguments)]
pub fn check_solution(
    f: &dyn SetEval,
    m: &[Vec<f64>],
    mstar: &[DualVector],
    grid: &SampleGrid,
    duals: &[DualVector],
    cfg: &DiniConfig,
    mode: CheckMode,
    asserted: &Assertions,
) -> Result<CheckReport> {
    check_points(f, m)?;
    if duals.is_empty() || mstar.is_empty() {
        return Err(Error::EmptyCollection);
    }
    let name = format!("check-solution {mode}");
    let mut report = CheckReport::new(&name, grid.describe(), duals_meta(duals));
    let (vi, vi_detail, vi_witness, rows) = strong_vi(f, m, grid, duals, cfg)?;
    report.push_subcheck("STRONG_VI", vi, vi_detail);
    report.rows = rows;
    report.witness = vi_witness;
    let (hv, hv_detail) = hull_value(f, m, duals)?;
    report.push_subcheck("HULL_VALUE", hv, hv_detail);
    let inner = match mode {
        CheckMode::Sufficient => Assertions(vec![RADIALLY_LSC.into(), RADIALLY_SEMISTRICT.into()]),
        CheckMode::Necessary => asserted.clone(),
    };
    for u in m {
        let sub_report = check_minimizer(f, u, mstar, grid, cfg, mode, &inner)?;
        let label = fmt_point(u);
        match mode {
            CheckMode::Sufficient => {
                let detail = sub_report
                    .subchecks
                    .iter()
                    .map(|s| format!("{} {}", s.name, s.verdict))
                    .collect::<Vec<_>>()
                    .join(", ");
                report.push_subcheck(&format!("MINIMIZER[{label}]"), sub_report.verdict, detail);
            }
            CheckMode::Necessary => {
                for s in &sub_report.subchecks {
                    if s.name.starts_with("MINTY") {
                        report.push_subcheck(&format!("{}[{label}]", s.name), s.verdict, s.detail.clone());
                    }
                }
            }
        }
        if report.witness.is_none() && !sub_report.verdict.is_pass() {
            report.witness = sub_report.witness.clone();
        }
    }
    report.settle();
    let needed: &[&str] = match mode {
        CheckMode::Sufficient => &[UNIFORM_LSC, RADIALLY_SEMISTRICT],
        CheckMode::Necessary => &[POINTWISE_QUASICONVEX],
    };
    apply_hypotheses(&mut report, asserted, needed);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcmodel::SetFn;
    use crate::polytope::{dual_cone_sample, ConvexCone};

    fn triangle() -> SetFn {
        SetFn::parse_points(2, ConvexCone::orthant(2), &[("1 - x1 <= x2 and 0 <= x1 <= 1", &["x1", "x2"])]).unwrap()
    }

    fn mstar(c: &ConvexCone) -> Vec<DualVector> {
        [[-1.0, 0.0], [0.0, -1.0], [-1.0, -1.0]].iter().map(|z| DualVector::new(z.to_vec(), c).unwrap()).collect()
    }

    fn tri_grid() -> SampleGrid {
        SampleGrid::parse("-1:1.5:0.25,-1:1.5:0.25").unwrap()
    }

    #[test]
    fn assertions() {
        let a = Assertions::new(&["uniform_lsc"]).unwrap();
        assert!(a.has(RADIALLY_LSC) && !a.has(RADIALLY_SEMISTRICT));
        assert!(Assertions::new(&["convex"]).is_err());
    }

    #[test]
    fn domination_of_triangle() {
        let f = triangle();
        let d = domination_set(&f, &[0.5, 0.5], &tri_grid(), &mstar(f.cone())).unwrap();
        assert!(d.fully_certified());
        assert!(d.members.contains(&vec![0.25, 0.75]));
        assert!(!d.members.contains(&vec![0.75, 0.75]));
        assert!(!d.members.contains(&vec![0.0, 0.0]));
        assert!(matches!(domination_set(&f, &[0.0, 0.0], &tri_grid(), &mstar(f.cone())), Err(Error::OutsideDomain(_))));
        let flat = SetFn::parse_points(1, ConvexCone::orthant(1), &[("true", &["1"])]).unwrap();
        let g = SampleGrid::parse("-1:1:0.5").unwrap();
        let zs = dual_cone_sample(flat.cone(), 0).unwrap();
        assert!(domination_set(&flat, &[0.0], &g, &zs).unwrap().is_empty());
        let r = check_minimizer(&flat, &[0.0], &zs, &g, &DiniConfig::default(), CheckMode::Sufficient, &Assertions::none())
            .unwrap();
        assert_eq!(r.verdict, Verdict::ConditionalPass);
    }

    #[test]
    fn triangle_minimizers() {
        let f = triangle();
        let ms = mstar(f.cone());
        let all = Assertions::new(&[UNIFORM_LSC, RADIALLY_SEMISTRICT]).unwrap();
        let cfg = DiniConfig::default();
        let good = check_minimizer(&f, &[0.5, 0.5], &ms, &tri_grid(), &cfg, CheckMode::Sufficient, &all).unwrap();
        assert_eq!(good.verdict, Verdict::Pass, "{}", crate::report::render_text(&good));
        let bad = check_minimizer(&f, &[0.75, 0.75], &ms, &tri_grid(), &cfg, CheckMode::Sufficient, &all).unwrap();
        assert_eq!(bad.verdict, Verdict::Fail);
        let w = bad.witness.unwrap();
        assert!(!is_subset(&f.eval(&w).unwrap(), &f.eval(&[0.75, 0.75]).unwrap()));
        let nec = check_minimizer(&f, &[0.5, 0.5], &ms, &tri_grid(), &cfg, CheckMode::Necessary, &all).unwrap();
        assert!(nec.subcheck("MINTY_WEAK").unwrap().verdict.is_pass());
    }

    #[test]
    fn extreme_direction_infimizer() {
        let c = ConvexCone::orthant(2);
        let f = SetFn::new(
            1,
            c.clone(),
            vec![crate::funcmodel::SetPiece {
                guard: crate::expr::Guard::parse("x1 >= 0").unwrap(),
                value: crate::funcmodel::SetValue::Generators {
                    vertices: vec![
                        vec![crate::expr::Expr::constant(0.0), crate::expr::Expr::parse("x1").unwrap()],
                        vec![crate::expr::Expr::parse("x1").unwrap(), crate::expr::Expr::constant(0.0)],
                    ],
                    rays: vec![],
                },
            }],
        )
        .unwrap();
        let g = SampleGrid::parse("-1.5:1.5:0.25").unwrap();
        let cfg = DiniConfig::default();
        let full = dual_cone_sample(&c, 2).unwrap();
        let extreme = dual_cone_sample(&c, 0).unwrap();
        let none = Assertions::none();
        for (m, expect) in [(vec![vec![0.0]], true), (vec![vec![1.0]], false), (vec![vec![0.5]], false)] {
            let r = check_infimizer(&f, &m, &g, &full, &cfg, &none).unwrap();
            assert_eq!(r.subcheck("STRONG_VI").unwrap().verdict.is_pass(), expect, "{m:?}");
            let r = check_infimizer(&f, &m, &g, &extreme, &cfg, &none).unwrap();
            assert!(r.subcheck("STRONG_VI").unwrap().verdict.is_pass(), "{m:?}");
        }
    }

    #[test]
    fn triangle_solution() {
        let f = triangle();
        let ms = mstar(f.cone());
        let hyps = Assertions::new(&[UNIFORM_LSC, RADIALLY_SEMISTRICT, POINTWISE_QUASICONVEX]).unwrap();
        let duals = dual_cone_sample(f.cone(), 1).unwrap();
        let cfg = DiniConfig::default();
        let g = SampleGrid::parse("-1:1.5:0.5,-1:1.5:0.5").unwrap();
        let m: Vec<Vec<f64>> = (0..5).map(|i| vec![i as f64 / 4.0, 1.0 - i as f64 / 4.0]).collect();
        let r = check_solution(&f, &m, &ms, &g, &duals, &cfg, CheckMode::Sufficient, &hyps).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", crate::report::render_text(&r));
        let r = check_solution(&f, &[vec![0.8, 0.8]], &ms, &g, &duals, &cfg, CheckMode::Sufficient, &hyps).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.subcheck("MINIMIZER[(0.8,0.8)]").unwrap().verdict, Verdict::Fail);
        assert!(matches!(
            check_infimizer(&f, &[], &g, &duals, &cfg, &hyps),
            Err(Error::EmptyCollection)
        ));
        assert!(matches!(
            check_infimizer(&f, &[vec![0.0, 0.0]], &g, &duals, &cfg, &hyps),
            Err(Error::OutsideDomain(_))
        ));
    }
}
