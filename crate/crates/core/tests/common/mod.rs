#![allow(dead_code)]

use setlat::polytope::{support_scalar, ConvexCone, DualVector, UpperSet};
use setlat::problem::Problem;
use setlat::xreals::XReal;

pub fn corpus(name: &str) -> Problem {
    Problem::parse(setlat::corpus::bundled_problem(name).expect("bundled")).expect("valid problem")
}

/// Unit vectors at `n` equally spaced angles that lie in the negative dual of a 2-D cone.
pub fn dense_duals(cone: &ConvexCone, n: usize) -> Vec<DualVector> {
    (0..n)
        .filter_map(|k| {
            let a = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            DualVector::new(vec![a.cos(), a.sin()], cone).ok()
        })
        .collect()
}

/// Largest support-function difference over `duals`; the Hausdorff distance
/// of two upper sets with a common recession cone when the sample is dense.
pub fn support_gap(a: &UpperSet, b: &UpperSet, duals: &[DualVector]) -> f64 {
    let mut gap: f64 = 0.0;
    for z in duals {
        let (p, q) = (support_scalar(a, z).unwrap(), support_scalar(b, z).unwrap());
        let d = match (p, q) {
            (XReal::Finite(x), XReal::Finite(y)) => (x - y).abs(),
            _ if p == q => 0.0,
            _ => f64::INFINITY,
        };
        gap = gap.max(d);
    }
    gap
}

/// Forward difference quotients `(g(h) - g(0)) / h` for shrinking `h`.
pub fn forward_differences(g: impl Fn(f64) -> f64, hs: &[f64]) -> Vec<f64> {
    let g0 = g(0.0);
    hs.iter().map(|h| (g(*h) - g0) / h).collect()
}
