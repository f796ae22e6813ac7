//! JSON problem files.
//!
//! ```json
//! {
//!   "name": "triangle",
//!   "space": {"n": 2, "d": 2},
//!   "cone": {"generators": [[1, 0], [0, 1]]},
//!   "function": {"pieces": [
//!     {"guard": "1 - x1 <= x2 and 0 <= x1 <= 1", "vertices": [["x1", "x2"]]}
//!   ]},
//!   "grids": {"x": "-1:1.5:0.25,-1:1.5:0.25"},
//!   "M": [[0, 1], [1, 0]],
//!   "M_star": [[-1, 0], [0, -1]],
//!   "x0": [0.5, 0.5],
//!   "asserted_properties": ["uniform_lsc"]
//! }
//! ```
//!
//! A set-valued piece gives either `vertices` (plus optional `rays`),
//! `halfspaces` with constant normals and expression offsets, or
//! `"value": "whole" | "empty"`. Scalar functions live under
//! `scalar_functions` by name. Expression errors name the JSON field and the
//! file position of the offending string.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::dini::DiniConfig;
use crate::error::{Error, Result};
use crate::expr::{Expr, Guard};
use crate::funcmodel::{SampleGrid, ScalarFn, ScalarPiece, ScalarValue, SetFn, SetPiece, SetValue};
use crate::optimality::Assertions;
use crate::polytope::{dual_cone_sample, ConvexCone, DualVector};

pub const DEFAULT_REFINEMENT: usize = 2;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    #[serde(default)]
    name: String,
    #[serde(default)]
    description: String,
    space: RawSpace,
    cone: RawCone,
    #[serde(default)]
    function: Option<RawSetFn>,
    #[serde(default)]
    scalar_functions: BTreeMap<String, RawScalarFn>,
    #[serde(default)]
    grids: BTreeMap<String, String>,
    #[serde(default)]
    dual_refinement: Option<usize>,
    #[serde(default, rename = "M")]
    m: Vec<Vec<f64>>,
    #[serde(default, rename = "M_star")]
    mstar: Vec<Vec<f64>>,
    #[serde(default)]
    x0: Option<Vec<f64>>,
    #[serde(default)]
    asserted_properties: Vec<String>,
    #[serde(default)]
    dini: Option<RawDini>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    n: usize,
    d: usize,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCone {
    generators: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSetFn {
    pieces: Vec<RawSetPiece>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSetPiece {
    guard: String,
    #[serde(default)]
    vertices: Option<Vec<Vec<ExprSrc>>>,
    #[serde(default)]
    rays: Option<Vec<Vec<ExprSrc>>>,
    #[serde(default)]
    halfspaces: Option<Vec<RawHalfspace>>,
    #[serde(default)]
    value: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHalfspace {
    normal: Vec<f64>,
    offset: ExprSrc,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScalarFn {
    #[serde(default)]
    n: Option<usize>,
    pieces: Vec<RawScalarPiece>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScalarPiece {
    guard: String,
    value: ExprSrc,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDini {
    #[serde(default)]
    t0: Option<f64>,
    #[serde(default)]
    rho: Option<f64>,
    #[serde(default, rename = "K")]
    steps: Option<usize>,
    #[serde(default)]
    window: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ExprSrc {
    Number(f64),
    Text(String),
}

impl ExprSrc {
    fn text(&self) -> String {
        match self {
            ExprSrc::Number(v) => format!("{v:?}"),
            ExprSrc::Text(s) => s.clone(),
        }
    }
}

/// A validated problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub name: String,
    pub description: String,
    pub n: usize,
    pub d: usize,
    pub cone: ConvexCone,
    pub function: Option<SetFn>,
    pub scalar_functions: BTreeMap<String, ScalarFn>,
    pub grids: BTreeMap<String, SampleGrid>,
    pub dual_refinement: usize,
    pub m: Vec<Vec<f64>>,
    pub mstar: Vec<DualVector>,
    pub x0: Option<Vec<f64>>,
    pub assertions: Assertions,
    pub dini: DiniConfig,
}

impl Problem {
    pub fn load(path: &Path) -> Result<Problem> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Problem::parse(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Problem> {
        let raw: RawProblem = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("{}:{}: {}", e.line(), e.column(), strip_position(&e.to_string()))))?;
        Builder { text }.build(raw)
    }

    pub fn function(&self) -> Result<&SetFn> {
        self.function.as_ref().ok_or_else(|| Error::InvalidArgument("problem has no set-valued function".into()))
    }

    pub fn scalar_function(&self, name: &str) -> Result<&ScalarFn> {
        self.scalar_functions.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.scalar_functions.keys().map(String::as_str).collect();
            Error::InvalidArgument(format!("no scalar function {name:?}; known: {}", known.join(", ")))
        })
    }

    pub fn grid(&self, name: &str) -> Result<&SampleGrid> {
        self.grids.get(name).ok_or_else(|| Error::InvalidArgument(format!("problem defines no grid {name:?}")))
    }

    /// Dual sample at the given refinement.
    pub fn duals(&self, refinement: usize) -> Result<Vec<DualVector>> {
        dual_cone_sample(&self.cone, refinement)
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

struct Builder<'a> {
    text: &'a str,
}

impl Builder<'_> {
    /// File position of the first string literal equal to `src`.
    fn locate(&self, src: &str) -> String {
        let Ok(lit) = serde_json::to_string(src) else { return String::new() };
        match self.text.find(&lit) {
            Some(off) => {
                let before = &self.text[..off];
                let line = before.matches('\n').count() + 1;
                let col = off - before.rfind('\n').map_or(0, |i| i + 1) + 2;
                format!(" (file {line}:{col})")
            }
            None => String::new(),
        }
    }

    fn expr(&self, field: &str, src: &ExprSrc) -> Result<Expr> {
        let text = src.text();
        Expr::parse(&text).map_err(|e| self.wrap(field, &text, e))
    }

    fn guard(&self, field: &str, src: &str) -> Result<Guard> {
        Guard::parse(src).map_err(|e| self.wrap(field, src, e))
    }

    fn scalar(&self, field: &str, src: &ExprSrc) -> Result<ScalarValue> {
        let text = src.text();
        ScalarValue::parse(&text).map_err(|e| self.wrap(field, &text, e))
    }

    fn wrap(&self, field: &str, src: &str, e: Error) -> Error {
        match e {
            Error::Syntax { column, message, .. } => {
                Error::Parse(format!("{field}{}: expression {src:?} column {column}: {message}", self.locate(src)))
            }
            other => Error::Parse(format!("{field}: {other}")),
        }
    }

    fn tuples(&self, field: &str, list: &[Vec<ExprSrc>], d: usize) -> Result<Vec<Vec<Expr>>> {
        list.iter()
            .enumerate()
            .map(|(i, t)| {
                if t.len() != d {
                    return Err(Error::Parse(format!("{field}[{i}]: expected {d} coordinates, got {}", t.len())));
                }
                t.iter().enumerate().map(|(j, e)| self.expr(&format!("{field}[{i}][{j}]"), e)).collect()
            })
            .collect()
    }

    fn build(&self, raw: RawProblem) -> Result<Problem> {
        let (n, d) = (raw.space.n, raw.space.d);
        if n == 0 || d == 0 {
            return Err(Error::Parse("space: n and d must be positive".into()));
        }
        for (i, g) in raw.cone.generators.iter().enumerate() {
            if g.len() != d {
                return Err(Error::Parse(format!("cone.generators[{i}]: expected {d} coordinates, got {}", g.len())));
            }
        }
        let cone = ConvexCone::new(d, raw.cone.generators).map_err(|e| Error::Parse(format!("cone: {e}")))?;
        if cone.generators().is_empty() {
            return Err(Error::Parse("cone: must contain a nonzero generator".into()));
        }
        dual_cone_sample(&cone, 0).map_err(|e| Error::Parse(format!("cone: {e}")))?;

        let function = match raw.function {
            None => None,
            Some(f) => {
                let mut pieces = Vec::new();
                for (i, p) in f.pieces.iter().enumerate() {
                    let field = format!("function.pieces[{i}]");
                    let guard = self.guard(&format!("{field}.guard"), &p.guard)?;
                    let kinds = [p.vertices.is_some(), p.halfspaces.is_some(), p.value.is_some()];
                    if kinds.iter().filter(|k| **k).count() != 1 || (p.rays.is_some() && p.vertices.is_none()) {
                        return Err(Error::Parse(format!(
                            "{field}: give exactly one of vertices (with optional rays), halfspaces or value"
                        )));
                    }
                    let value = if let Some(v) = &p.vertices {
                        SetValue::Generators {
                            vertices: self.tuples(&format!("{field}.vertices"), v, d)?,
                            rays: self.tuples(&format!("{field}.rays"), p.rays.as_deref().unwrap_or(&[]), d)?,
                        }
                    } else if let Some(hs) = &p.halfspaces {
                        let mut out = Vec::new();
                        for (j, h) in hs.iter().enumerate() {
                            if h.normal.len() != d {
                                return Err(Error::Parse(format!("{field}.halfspaces[{j}].normal: expected {d} coordinates")));
                            }
                            out.push((h.normal.clone(), self.expr(&format!("{field}.halfspaces[{j}].offset"), &h.offset)?));
                        }
                        SetValue::Halfspaces(out)
                    } else {
                        match p.value.as_deref() {
                            Some("whole") => SetValue::Whole,
                            Some("empty") => SetValue::Empty,
                            Some(other) => {
                                return Err(Error::Parse(format!("{field}.value: expected \"whole\" or \"empty\", got {other:?}")))
                            }
                            None => unreachable!("checked above"),
                        }
                    };
                    pieces.push(SetPiece { guard, value });
                }
                Some(SetFn::new(n, cone.clone(), pieces).map_err(|e| Error::Parse(format!("function: {e}")))?)
            }
        };

        let mut scalar_functions = BTreeMap::new();
        for (name, f) in &raw.scalar_functions {
            let dim = f.n.unwrap_or(n);
            let mut pieces = Vec::new();
            for (i, p) in f.pieces.iter().enumerate() {
                let field = format!("scalar_functions.{name}.pieces[{i}]");
                pieces.push(ScalarPiece {
                    guard: self.guard(&format!("{field}.guard"), &p.guard)?,
                    value: self.scalar(&format!("{field}.value"), &p.value)?,
                });
            }
            let sf = ScalarFn::new(dim, pieces).map_err(|e| Error::Parse(format!("scalar_functions.{name}: {e}")))?;
            scalar_functions.insert(name.clone(), sf);
        }

        let mut grids = BTreeMap::new();
        for (name, spec) in &raw.grids {
            let g = SampleGrid::parse(spec).map_err(|e| Error::Parse(format!("grids.{name}: {e}")))?;
            grids.insert(name.clone(), g);
        }
        if let Some(g) = grids.get("x") {
            if g.dim() != n {
                return Err(Error::Parse(format!("grids.x: expected {n} axes, got {}", g.dim())));
            }
        }

        for (i, p) in raw.m.iter().enumerate() {
            if p.len() != n {
                return Err(Error::Parse(format!("M[{i}]: expected {n} coordinates, got {}", p.len())));
            }
        }
        let mstar = raw
            .mstar
            .iter()
            .enumerate()
            .map(|(i, z)| DualVector::new(z.clone(), &cone).map_err(|e| Error::Parse(format!("M_star[{i}]: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if let Some(x0) = &raw.x0 {
            if x0.len() != n {
                return Err(Error::Parse(format!("x0: expected {n} coordinates, got {}", x0.len())));
            }
        }
        let assertions =
            Assertions::new(&raw.asserted_properties).map_err(|e| Error::Parse(format!("asserted_properties: {e}")))?;
        let mut dini = DiniConfig::default();
        if let Some(r) = raw.dini {
            dini.t0 = r.t0.unwrap_or(dini.t0);
            dini.rho = r.rho.unwrap_or(dini.rho);
            dini.steps = r.steps.unwrap_or(dini.steps);
            dini.window = r.window.unwrap_or(dini.window);
        }
        dini.validate().map_err(|e| Error::Parse(format!("dini: {e}")))?;

        Ok(Problem {
            name: raw.name,
            description: raw.description,
            n,
            d,
            cone,
            function,
            scalar_functions,
            grids,
            dual_refinement: raw.dual_refinement.unwrap_or(DEFAULT_REFINEMENT),
            m: raw.m,
            mstar,
            x0: raw.x0,
            assertions,
            dini,
        })
    }
}
