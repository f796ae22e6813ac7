//! Small dense helpers for low-dimensional cones.
//!
//! The central routine is [`polar_generators`], which turns a finite
//! generating set of a cone `K` into generators of its polar
//! `{y | g·y <= 0 for all g in K}`. Every V/H conversion in the crate is an
//! instance of it: halfspaces of a polyhedron are the polar generators of its
//! homogenized generator cone, and vice versa.

pub(crate) const TOL: f64 = 1e-9;
const RANK_TOL: f64 = 1e-10;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub(crate) fn normalized(a: &[f64]) -> Option<Vec<f64>> {
    let n = norm(a);
    if n <= 1e-12 || !n.is_finite() {
        None
    } else {
        Some(a.iter().map(|x| x / n).collect())
    }
}

pub(crate) fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn scaled(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

pub(crate) fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

/// Appends `v` unless an entry within `tol` (componentwise) already exists.
pub(crate) fn push_unique(list: &mut Vec<Vec<f64>>, v: Vec<f64>, tol: f64) -> bool {
    if list.iter().any(|w| close(w, &v, tol)) {
        false
    } else {
        list.push(v);
        true
    }
}

/// Orthonormal basis of `{y | r·y = 0 for every row r}` in `R^m`.
pub(crate) fn nullspace(rows: &[Vec<f64>], m: usize) -> Vec<Vec<f64>> {
    let mut a: Vec<Vec<f64>> = rows.iter().filter_map(|r| normalized(r)).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m {
        if row >= a.len() {
            break;
        }
        let (best, val) = (row..a.len())
            .map(|i| (i, a[i][col].abs()))
            .fold((row, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val <= RANK_TOL {
            continue;
        }
        a.swap(row, best);
        let p = a[row][col];
        for v in a[row].iter_mut() {
            *v /= p;
        }
        for i in 0..a.len() {
            if i != row {
                let f = a[i][col];
                if f != 0.0 {
                    for j in 0..m {
                        a[i][j] -= f * a[row][j];
                    }
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..m).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0.0; m];
        v[free] = 1.0;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[r][free];
        }
        basis.push(v);
    }
    gram_schmidt(basis)
}

fn gram_schmidt(vs: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for mut v in vs {
        for u in &out {
            let c = dot(&v, u);
            for (x, y) in v.iter_mut().zip(u) {
                *x -= c * y;
            }
        }
        if let Some(n) = normalized(&v) {
            out.push(n);
        }
    }
    out
}

/// Generators of a polar cone: extreme rays of its pointed part plus a
/// basis of its lineality space (to be used with both signs).
#[derive(Debug, Clone, Default)]
pub(crate) struct Polar {
    pub rays: Vec<Vec<f64>>,
    pub lineality: Vec<Vec<f64>>,
}

impl Polar {
    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// Rays together with both signs of every lineality direction.
    pub fn all_directions(&self) -> Vec<Vec<f64>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(scaled(l, -1.0));
        }
        out
    }
}

/// Generators of `{y in R^m | g·y <= 0 for all g in gens}`.
///
/// Extreme rays are found by enumerating sets of `m - k - 1` generators
/// (`k` = lineality dimension) whose common orthogonal complement inside the
/// complement of the lineality space is a line, and keeping the feasible
/// signs. Intended for `m <= 4`.
pub(crate) fn polar_generators(gens: &[Vec<f64>], m: usize) -> Polar {
    let mut g: Vec<Vec<f64>> = Vec::new();
    for v in gens {
        if let Some(n) = normalized(v) {
            push_unique(&mut g, n, 1e-12);
        }
    }
    let lineality = nullspace(&g, m);
    let k = lineality.len();
    if k == m {
        return Polar { rays: Vec::new(), lineality };
    }
    let feasible = |v: &[f64]| g.iter().all(|gi| dot(gi, v) <= TOL);
    let need = m - k - 1;
    let mut rays: Vec<Vec<f64>> = Vec::new();
    let mut consider = |subset: &[usize]| {
        let mut rows: Vec<Vec<f64>> = subset.iter().map(|&i| g[i].clone()).collect();
        rows.extend(lineality.iter().cloned());
        let ns = nullspace(&rows, m);
        if ns.len() != 1 {
            return;
        }
        for sign in [1.0, -1.0] {
            let v = scaled(&ns[0], sign);
            if feasible(&v) {
                push_unique(&mut rays, clean(v), 1e-9);
            }
        }
    };
    for_each_combination(g.len(), need, &mut consider);
    Polar { rays, lineality }
}

/// Rounds tiny components to zero so that output is stable across runs.
fn clean(mut v: Vec<f64>) -> Vec<f64> {
    for x in v.iter_mut() {
        if x.abs() < 1e-14 {
            *x = 0.0;
        }
    }
    v
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Rank of a set of vectors in `R^m`.
pub(crate) fn rank(rows: &[Vec<f64>], m: usize) -> usize {
    m - nullspace(rows, m).len()
}
