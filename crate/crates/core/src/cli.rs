//! Command-line surface of the `setlat` binary.
//!
//! Parsing is done with clap; every verb runs against an already loaded
//! [`Problem`] and produces an [`Outcome`], which is what both the binary and
//! the corpus runner inspect.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::corpus;
use crate::dini::{interior_contains_zero, residual_dini, scalar_dini_result, zstar_dini, DiniConfig, DiniResult};
use crate::error::{Error, Result};
use crate::funcmodel::{restrict_segment, scalarize, SampleGrid, ScalarEval, SetEval};
use crate::gencvx::{
    classify_radial, classify_segment, diewert_witness, qconvex_at_point, radial_lsc_check, set_quasiconvex,
    ConvexityVerdict, Property,
};
use crate::optimality::{check_infimizer, check_minimizer, check_solution, CheckMode};
use crate::polytope::DualVector;
use crate::problem::Problem;
use crate::report::{fmt_point, render_csv, render_rows_csv, render_rows_text, render_text, CheckReport, Row, Verdict};
use crate::xreals::XReal;

#[derive(Debug, Parser)]
#[command(name = "setlat", version, about = "Lattice calculus and optimality checks for set-valued functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the set-valued (or a named scalar) function.
    Eval(EvalArgs),
    /// Tabulate scalarizations over the grid and dual sample.
    Scalarize(ScalarizeArgs),
    /// Lower Dini derivative: scalar, z*-halfspace or full residual.
    Dini(DiniArgs),
    /// Generalized convexity and semicontinuity classifiers.
    Classify(ClassifyArgs),
    /// Check that M is an infimizer.
    CheckInfimizer(InfimizerArgs),
    /// Check minimality of x0.
    CheckMinimizer(MinimizerArgs),
    /// Check that M is a solution.
    CheckSolution(SolutionArgs),
    /// Run the bundled example corpus against its stored expectations.
    Corpus(CorpusArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Sufficient,
    Necessary,
}

impl From<ModeArg> for CheckMode {
    fn from(m: ModeArg) -> CheckMode {
        match m {
            ModeArg::Sufficient => CheckMode::Sufficient,
            ModeArg::Necessary => CheckMode::Necessary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Quasi,
    Semistrict,
    Pseudo,
    Qconvex,
    SetQuasi,
    Lsc,
    Segment,
    Diewert,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Problem file (JSON).
    pub problem: PathBuf,
    /// Sample grid `lo:hi:step[,lo:hi:step...]`, replacing the problem's `x` grid.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    /// Midpoint refinement rounds for the dual sample.
    #[arg(long = "dual-refine")]
    pub dual_refine: Option<usize>,
    #[arg(long)]
    pub t0: Option<f64>,
    #[arg(long)]
    pub rho: Option<f64>,
    #[arg(long = "K")]
    pub k: Option<usize>,
    #[arg(long)]
    pub window: Option<usize>,
    /// Treat LOW_CONFIDENCE as a failure (exit code 3).
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Name of a scalar function from the problem file.
    #[arg(long)]
    pub function: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ScalarizeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub zstar: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct DiniArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub u: String,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "function")]
    pub zstar: Option<String>,
    #[arg(long)]
    pub function: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub property: PropertyArg,
    #[arg(long, conflicts_with = "zstar")]
    pub function: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub zstar: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Segment parameter grid inside [0,1], replacing the problem's `t` grid.
    #[arg(long, allow_hyphen_values = true)]
    pub tgrid: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct InfimizerArgs {
    #[command(flatten)]
    pub common: Common,
    /// Point list `a,b;c,d`.
    #[arg(long = "M", allow_hyphen_values = true)]
    pub m: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct MinimizerArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, allow_hyphen_values = true)]
    pub x0: Option<String>,
    /// Dual list `a,b;c,d`.
    #[arg(long = "Mstar", allow_hyphen_values = true)]
    pub mstar: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Sufficient)]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Args)]
pub struct SolutionArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "M", allow_hyphen_values = true)]
    pub m: Option<String>,
    #[arg(long = "Mstar", allow_hyphen_values = true)]
    pub mstar: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Sufficient)]
    pub mode: ModeArg,
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    /// Read problems and expectations from this directory instead of the bundled copies.
    #[arg(long)]
    pub dir: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl Command {
    pub fn common(&self) -> Option<&Common> {
        match self {
            Command::Eval(a) => Some(&a.common),
            Command::Scalarize(a) => Some(&a.common),
            Command::Dini(a) => Some(&a.common),
            Command::Classify(a) => Some(&a.common),
            Command::CheckInfimizer(a) => Some(&a.common),
            Command::CheckMinimizer(a) => Some(&a.common),
            Command::CheckSolution(a) => Some(&a.common),
            Command::Corpus(_) => None,
        }
    }
}

/// Result of one verb.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub verdict: Verdict,
    pub witness: Option<Vec<f64>>,
    /// Named scalar results in display order.
    pub values: Vec<(String, String)>,
    pub text: String,
    pub csv: String,
}

impl Outcome {
    pub fn value(&self, key: &str) -> Option<&str> {
        self.values.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> &str {
        match format {
            Format::Text => &self.text,
            Format::Csv => &self.csv,
        }
    }

    fn from_values(title: &str, verdict: Verdict, values: Vec<(String, String)>, rows: Vec<Row>) -> Outcome {
        let mut text = format!("{title}\nverdict: {verdict}\n");
        for (k, v) in &values {
            text.push_str(&format!("{k}: {v}\n"));
        }
        text.push_str(&render_rows_text(&rows));
        let csv = render_rows_csv(&format!("{title} {verdict}"), &rows);
        Outcome { verdict, witness: None, values, text, csv }
    }

    fn from_report(report: &CheckReport) -> Outcome {
        let values = report.subchecks.iter().map(|s| (s.name.clone(), s.verdict.to_string())).collect();
        Outcome {
            verdict: report.verdict,
            witness: report.witness.clone(),
            values,
            text: render_text(report),
            csv: render_csv(report),
        }
    }
}

/// Exit status for a verdict.
pub fn exit_code(verdict: Verdict, strict: bool) -> i32 {
    match verdict {
        Verdict::Pass | Verdict::ConditionalPass => 0,
        Verdict::LowConfidence => {
            if strict {
                3
            } else {
                0
            }
        }
        Verdict::Fail | Verdict::InconsistentNumerics => 1,
    }
}

/// Parses `a,b,c`.
pub fn parse_point(src: &str) -> Result<Vec<f64>> {
    src.split(',')
        .map(|c| {
            let c = c.trim();
            c.parse::<f64>().map_err(|_| Error::Parse(format!("bad number {c:?} in {src:?}")))
        })
        .collect()
}

/// Parses `a,b;c,d`.
pub fn parse_points(src: &str) -> Result<Vec<Vec<f64>>> {
    src.split(';').filter(|p| !p.trim().is_empty()).map(parse_point).collect()
}

fn parse_duals(src: &str, problem: &Problem) -> Result<Vec<DualVector>> {
    parse_points(src)?.into_iter().map(|c| DualVector::new(c, &problem.cone)).collect()
}

fn dini_config(problem: &Problem, c: &Common) -> Result<DiniConfig> {
    let mut cfg = problem.dini.clone();
    if let Some(v) = c.t0 {
        cfg.t0 = v;
    }
    if let Some(v) = c.rho {
        cfg.rho = v;
    }
    if let Some(v) = c.k {
        cfg.steps = v;
    }
    if let Some(v) = c.window {
        cfg.window = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn x_grid(problem: &Problem, c: &Common) -> Result<SampleGrid> {
    let grid = match &c.grid {
        Some(src) => SampleGrid::parse(src)?,
        None => problem.grid("x")?.clone(),
    };
    if grid.dim() != problem.n {
        return Err(Error::DimensionMismatch { expected: problem.n, got: grid.dim() });
    }
    Ok(grid)
}

fn t_grid(problem: &Problem, src: Option<&str>) -> Result<SampleGrid> {
    match src {
        Some(s) => SampleGrid::parse(s),
        None => Ok(problem.grids.get("t").cloned().unwrap_or_else(|| SampleGrid::unit_interval(129))),
    }
}

fn duals(problem: &Problem, c: &Common) -> Result<Vec<DualVector>> {
    problem.duals(c.dual_refine.unwrap_or(problem.dual_refinement))
}

fn point_arg(src: Option<&str>, fallback: Option<&Vec<f64>>, name: &str) -> Result<Vec<f64>> {
    match (src, fallback) {
        (Some(s), _) => parse_point(s),
        (None, Some(p)) => Ok(p.clone()),
        (None, None) => Err(Error::InvalidArgument(format!("--{name} is required"))),
    }
}

fn mstar_arg(problem: &Problem, c: &Common, src: Option<&str>) -> Result<Vec<DualVector>> {
    match src {
        Some(s) => parse_duals(s, problem),
        None if !problem.mstar.is_empty() => Ok(problem.mstar.clone()),
        None => duals(problem, c),
    }
}

fn m_arg(problem: &Problem, src: Option<&str>) -> Result<Vec<Vec<f64>>> {
    let m = match src {
        Some(s) => parse_points(s)?,
        None => problem.m.clone(),
    };
    if m.is_empty() {
        return Err(Error::InvalidArgument("--M is required (the problem lists no M)".into()));
    }
    Ok(m)
}

/// Runs a verb against a loaded problem. Not used for `corpus`.
pub fn execute(cmd: &Command, problem: &Problem) -> Result<Outcome> {
    match cmd {
        Command::Eval(a) => eval(a, problem),
        Command::Scalarize(a) => scalarize_cmd(a, problem),
        Command::Dini(a) => dini(a, problem),
        Command::Classify(a) => classify(a, problem),
        Command::CheckInfimizer(a) => {
            let f = problem.function()?;
            let report = check_infimizer(
                f,
                &m_arg(problem, a.m.as_deref())?,
                &x_grid(problem, &a.common)?,
                &duals(problem, &a.common)?,
                &dini_config(problem, &a.common)?,
                &problem.assertions,
            )?;
            Ok(Outcome::from_report(&report))
        }
        Command::CheckMinimizer(a) => {
            let f = problem.function()?;
            let x0 = point_arg(a.x0.as_deref(), problem.x0.as_ref(), "x0")?;
            let report = check_minimizer(
                f,
                &x0,
                &mstar_arg(problem, &a.common, a.mstar.as_deref())?,
                &x_grid(problem, &a.common)?,
                &dini_config(problem, &a.common)?,
                a.mode.into(),
                &problem.assertions,
            )?;
            Ok(Outcome::from_report(&report))
        }
        Command::CheckSolution(a) => {
            let f = problem.function()?;
            let report = check_solution(
                f,
                &m_arg(problem, a.m.as_deref())?,
                &mstar_arg(problem, &a.common, a.mstar.as_deref())?,
                &x_grid(problem, &a.common)?,
                &duals(problem, &a.common)?,
                &dini_config(problem, &a.common)?,
                a.mode.into(),
                &problem.assertions,
            )?;
            Ok(Outcome::from_report(&report))
        }
        Command::Corpus(_) => Err(Error::InvalidArgument("corpus runs without a problem".into())),
    }
}

fn eval(a: &EvalArgs, problem: &Problem) -> Result<Outcome> {
    let points = match &a.x {
        Some(x) => vec![parse_point(x)?],
        None => x_grid(problem, &a.common)?.points(),
    };
    if let Some(name) = &a.function {
        let phi = problem.scalar_function(name)?;
        let mut rows = Vec::new();
        for x in &points {
            rows.push(Row { x: x.clone(), zstar: None, phi: phi.value(x)?, dini: None, status: "OK".into() });
        }
        let mut values = vec![("function".to_string(), name.clone())];
        if let [row] = rows.as_slice() {
            values.push(("value".into(), row.phi.to_string()));
        }
        return Ok(Outcome::from_values("eval", Verdict::Pass, values, rows));
    }
    let f = problem.function()?;
    let mut text = format!("eval\nverdict: {}\n", Verdict::Pass);
    let mut csv = String::from("# eval PASS\nx,tag,vertices,rays\n");
    let mut values = Vec::new();
    for x in &points {
        let v = f.eval(x)?;
        text.push_str(&format!("x={} value={}\n", fmt_point(x), v));
        let join = |ps: &[Vec<f64>]| ps.iter().map(|p| fmt_point(p)).collect::<Vec<_>>().join(" ");
        let (verts, rays) = if v.is_empty() || v.is_whole() { (String::new(), String::new()) } else { (join(v.vertices()), join(v.rays())) };
        csv.push_str(&format!("\"{}\",{},\"{}\",\"{}\"\n", fmt_point(x), v.tag(), verts, rays));
        if points.len() == 1 {
            values.push(("value".to_string(), v.to_string()));
        }
    }
    Ok(Outcome { verdict: Verdict::Pass, witness: None, values, text, csv })
}

fn scalarize_cmd(a: &ScalarizeArgs, problem: &Problem) -> Result<Outcome> {
    let f = problem.function()?;
    let zs = match &a.zstar {
        Some(z) => parse_duals(z, problem)?,
        None => duals(problem, &a.common)?,
    };
    let points = match &a.x {
        Some(x) => vec![parse_point(x)?],
        None => x_grid(problem, &a.common)?.points(),
    };
    let mut report = CheckReport::new(
        "scalarize",
        a.x.as_ref().map_or_else(|| x_grid(problem, &a.common).map(|g| g.describe()).unwrap_or_default(), |_| "single point".into()),
        zs.iter().map(|z| z.coeffs().to_vec()).collect(),
    );
    for x in &points {
        for z in &zs {
            let phi = f.scalar(x, z)?;
            report.rows.push(Row { x: x.clone(), zstar: Some(z.coeffs().to_vec()), phi, dini: None, status: "OK".into() });
        }
    }
    let mut out = Outcome::from_report(&report);
    if let [row] = report.rows.as_slice() {
        out.values.push(("phi".into(), row.phi.to_string()));
    }
    Ok(out)
}

fn dini_values(r: &DiniResult) -> Vec<(String, String)> {
    vec![
        ("mode".into(), r.mode.to_string()),
        ("scalar".into(), r.scalar_value.to_string()),
        ("set".into(), r.set_value.to_string()),
        ("low_confidence".into(), r.low_confidence.to_string()),
    ]
}

fn confidence(low: bool) -> Verdict {
    if low {
        Verdict::LowConfidence
    } else {
        Verdict::Pass
    }
}

fn dini(a: &DiniArgs, problem: &Problem) -> Result<Outcome> {
    let cfg = dini_config(problem, &a.common)?;
    let x = parse_point(&a.x)?;
    let u = parse_point(&a.u)?;
    let row = |z: Option<&DualVector>, phi: XReal, r: &DiniResult| Row {
        x: x.clone(),
        zstar: z.map(|z| z.coeffs().to_vec()),
        phi,
        dini: Some(r.scalar_value),
        status: if r.low_confidence { "LOW_CONFIDENCE".into() } else { "OK".into() },
    };
    if let Some(name) = &a.function {
        let phi = problem.scalar_function(name)?;
        let r = scalar_dini_result(phi, &x, &u, &cfg)?;
        let rows = vec![row(None, phi.value(&x)?, &r)];
        return Ok(Outcome::from_values("dini", confidence(r.low_confidence), dini_values(&r), rows));
    }
    let f = problem.function()?;
    if let Some(zsrc) = &a.zstar {
        let z = DualVector::new(parse_point(zsrc)?, &problem.cone)?;
        let r = zstar_dini(f, &z, &x, &u, &cfg)?;
        let mut values = dini_values(&r);
        values.insert(1, ("zstar".into(), z.to_string()));
        values.push(("interior_contains_zero".into(), interior_contains_zero(&r)?.to_string()));
        let rows = vec![row(Some(&z), f.scalar(&x, &z)?, &r)];
        return Ok(Outcome::from_values("dini", confidence(r.low_confidence), values, rows));
    }
    let r = residual_dini(f, &x, &u, &cfg)?;
    let mut low = r.low_confidence;
    let mut rows = Vec::new();
    for z in duals(problem, &a.common)? {
        let rz = zstar_dini(f, &z, &x, &u, &cfg)?;
        low |= rz.low_confidence;
        rows.push(row(Some(&z), f.scalar(&x, &z)?, &rz));
    }
    let mut values = dini_values(&r);
    values.push(("tag".into(), r.set_value.tag().to_string()));
    Ok(Outcome::from_values("dini", confidence(low), values, rows))
}

fn verdict_outcome(v: &ConvexityVerdict) -> Outcome {
    let mut values = vec![("property".to_string(), v.property.to_string()), ("holds".to_string(), v.holds.to_string())];
    if let Some(w) = &v.witness {
        values.push(("witness".into(), w.to_string()));
    }
    values.push(("grid".into(), v.grid.clone()));
    let mut out = Outcome::from_values("classify", Verdict::from_bool(v.holds), values, Vec::new());
    out.witness = v.witness.as_ref().map(|w| w.ts.clone());
    out
}

fn classify(a: &ClassifyArgs, problem: &Problem) -> Result<Outcome> {
    let cfg = dini_config(problem, &a.common)?;
    let tgrid = t_grid(problem, a.tgrid.as_deref())?;
    if a.property == PropertyArg::SetQuasi {
        let v = set_quasiconvex(problem.function()?, &x_grid(problem, &a.common)?, &tgrid)?;
        return Ok(verdict_outcome(&v));
    }
    let scalarized;
    let phi: &dyn ScalarEval = match (&a.function, &a.zstar) {
        (Some(name), _) => problem.scalar_function(name)?,
        (None, Some(z)) => {
            let z = DualVector::new(parse_point(z)?, &problem.cone)?;
            scalarized = scalarize(problem.function()?, &z)?;
            &scalarized
        }
        (None, None) => return Err(Error::InvalidArgument("classify needs --function or --zstar".into())),
    };
    let a_pt = point_arg(a.a.as_deref(), None, "a")?;
    if a.property == PropertyArg::Qconvex {
        let grid = match &a.common.grid {
            Some(src) => SampleGrid::parse(src)?,
            None => problem.grid("x")?.clone(),
        };
        return Ok(verdict_outcome(&qconvex_at_point(phi, &a_pt, &grid, &tgrid)?));
    }
    let b_pt = point_arg(a.b.as_deref(), None, "b")?;
    let radial = |p: Property| classify_radial(phi, &a_pt, &b_pt, p, &tgrid, &cfg);
    match a.property {
        PropertyArg::Quasi => Ok(verdict_outcome(&radial(Property::Quasi)?)),
        PropertyArg::Semistrict => Ok(verdict_outcome(&radial(Property::SemistrictQuasi)?)),
        PropertyArg::Pseudo => Ok(verdict_outcome(&radial(Property::Pseudo)?)),
        PropertyArg::Lsc => {
            let v = radial_lsc_check(phi, &a_pt, &b_pt, &tgrid)?;
            let mut values = vec![("property".to_string(), "LSC".to_string()), ("holds".to_string(), v.holds.to_string())];
            if let Some(t) = v.witness {
                values.push(("witness".into(), format!("t={}", XReal::from_f64(t))));
            }
            let mut out = Outcome::from_values("classify", Verdict::from_bool(v.holds), values, Vec::new());
            out.witness = v.witness.map(|t| vec![t]);
            Ok(out)
        }
        PropertyArg::Segment => {
            let seg = restrict_segment(phi, &a_pt, &b_pt)?;
            let p = classify_segment(&seg, &tgrid)?;
            let values = vec![
                ("shape".to_string(), p.shape.to_string()),
                ("s0".to_string(), XReal::from_f64(p.s0).to_string()),
                ("t0".to_string(), XReal::from_f64(p.t0).to_string()),
                ("inf_value".to_string(), p.inf_value.to_string()),
            ];
            Ok(Outcome::from_values("classify", Verdict::Pass, values, Vec::new()))
        }
        PropertyArg::Diewert => match diewert_witness(phi, &a_pt, &b_pt, &tgrid, &cfg) {
            Ok(w) => {
                let values = vec![
                    ("t".to_string(), XReal::from_f64(w.t).to_string()),
                    ("lhs".to_string(), w.lhs.to_string()),
                    ("rhs".to_string(), w.rhs.to_string()),
                ];
                let mut out = Outcome::from_values("classify", Verdict::Pass, values, Vec::new());
                out.witness = Some(vec![w.t]);
                Ok(out)
            }
            Err(Error::NoWitness) => Ok(Outcome::from_values(
                "classify",
                Verdict::Fail,
                vec![("t".to_string(), "none".to_string())],
                Vec::new(),
            )),
            Err(e) => Err(e),
        },
        PropertyArg::Qconvex | PropertyArg::SetQuasi => unreachable!("handled above"),
    }
}

/// Parses `args` (including the program name), runs the verb and writes
/// the rendered report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    if let Command::Corpus(c) = &cli.command {
        return match corpus::run_corpus(c.dir.as_deref()) {
            Ok(summary) => {
                let _ = out.write_all(summary.render(c.format).as_bytes());
                exit_code(summary.verdict, false)
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                2
            }
        };
    }
    let common = cli.command.common().expect("non-corpus verb");
    let result = Problem::load(&common.problem).and_then(|p| execute(&cli.command, &p));
    match result {
        Ok(outcome) => {
            let _ = out.write_all(outcome.render(common.format).as_bytes());
            exit_code(outcome.verdict, common.strict)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(args.iter().copied(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn point_lists() {
        assert_eq!(parse_points("0,1; 0.5,-0.5").unwrap(), vec![vec![0.0, 1.0], vec![0.5, -0.5]]);
        assert!(parse_point("1,x").is_err());
    }

    #[test]
    fn unknown_verb_is_usage_error() {
        let (code, _, err) = run_str(&["setlat", "frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("Usage"));
    }

    #[test]
    fn missing_problem_file() {
        let (code, _, err) = run_str(&["setlat", "eval", "/nonexistent/missing.json"]);
        assert_eq!(code, 2);
        assert!(err.contains("missing.json"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(Verdict::ConditionalPass, true), 0);
        assert_eq!(exit_code(Verdict::LowConfidence, false), 0);
        assert_eq!(exit_code(Verdict::LowConfidence, true), 3);
        assert_eq!(exit_code(Verdict::InconsistentNumerics, true), 1);
    }
}
