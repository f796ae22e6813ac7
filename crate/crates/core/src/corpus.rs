//! The bundled example corpus and its expectation files.
//!
//! Each `*.expected.json` names a problem file and a list of runs. A run is a
//! verb with its flags (the problem path is implied) and the verdict, witness
//! and named values it must reproduce.

use std::collections::BTreeMap;
use std::path::Path;

use clap::Parser;
use serde::Deserialize;

use crate::cli::{execute, Cli, Format, Outcome};
use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::report::Verdict;

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name)))),*]
    };
}

/// Problem files shipped with the crate.
pub const PROBLEMS: &[(&str, &str)] = bundle!(
    "example_countable.json",
    "example_extreme_direction.json",
    "example_scalar_classes.json",
    "example_split_values.json",
    "example_staircase.json",
    "example_strict_domination.json",
    "example_triangle.json",
    "example_unbounded.json",
);

/// Expectation files shipped with the crate.
pub const EXPECTATIONS: &[(&str, &str)] = bundle!(
    "example_countable.expected.json",
    "example_extreme_direction.expected.json",
    "example_scalar_classes.expected.json",
    "example_split_values.expected.json",
    "example_staircase.expected.json",
    "example_strict_domination.expected.json",
    "example_triangle.expected.json",
    "example_unbounded.expected.json",
);

/// Text of a bundled problem file.
pub fn bundled_problem(name: &str) -> Option<&'static str> {
    PROBLEMS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectationFile {
    pub problem: String,
    pub runs: Vec<ExpectedRun>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedRun {
    pub args: Vec<String>,
    pub verdict: String,
    #[serde(default)]
    pub witness: Option<Vec<f64>>,
    #[serde(default)]
    pub values: BTreeMap<String, String>,
}

impl ExpectationFile {
    pub fn parse(text: &str) -> Result<ExpectationFile> {
        let file: ExpectationFile = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("{}:{}: {}", e.line(), e.column(), e)))?;
        if file.runs.is_empty() {
            return Err(Error::Parse("runs: at least one run is required".into()));
        }
        for (i, r) in file.runs.iter().enumerate() {
            if r.args.is_empty() {
                return Err(Error::Parse(format!("runs[{i}].args: verb missing")));
            }
        }
        Ok(file)
    }
}

/// Builds the command for a run against `problem`.
pub fn command_for(problem: &str, args: &[String]) -> Result<Cli> {
    let mut argv = vec!["setlat".to_string(), args[0].clone(), problem.to_string()];
    argv.extend(args[1..].iter().cloned());
    Cli::try_parse_from(&argv).map_err(|e| Error::Parse(e.to_string()))
}

/// Relative tolerance for numeric values, matching the Dini tolerance.
pub const VALUE_TOL: f64 = 1e-6;

fn same_value(got: &str, expected: &str) -> bool {
    if got == expected {
        return true;
    }
    match (got.parse::<f64>(), expected.parse::<f64>()) {
        (Ok(a), Ok(b)) if a.is_finite() && b.is_finite() => (a - b).abs() <= VALUE_TOL * b.abs().max(1.0),
        _ => false,
    }
}

/// Differences between an outcome and its expectation; empty on a match.
pub fn compare(expected: &ExpectedRun, got: &Outcome) -> Vec<String> {
    let mut diffs = Vec::new();
    if expected.verdict != got.verdict.to_string() {
        diffs.push(format!("verdict {} != {}", got.verdict, expected.verdict));
    }
    if let Some(w) = &expected.witness {
        let ok = got
            .witness
            .as_ref()
            .is_some_and(|g| g.len() == w.len() && g.iter().zip(w).all(|(a, b)| (a - b).abs() <= 1e-9));
        if !ok {
            diffs.push(format!("witness {:?} != {:?}", got.witness, w));
        }
    }
    for (k, v) in &expected.values {
        match got.value(k) {
            Some(g) if same_value(g, v) => {}
            g => diffs.push(format!("{k} {g:?} != {v:?}")),
        }
    }
    diffs
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub file: String,
    pub index: usize,
    pub args: String,
    pub expected: String,
    pub got: String,
    pub diffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSummary {
    pub source: String,
    pub records: Vec<RunRecord>,
    pub verdict: Verdict,
}

impl CorpusSummary {
    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.diffs.is_empty()).count()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = format!("corpus: {}\n", self.source);
                for r in &self.records {
                    let status = if r.diffs.is_empty() { "ok".to_string() } else { format!("MISMATCH {}", r.diffs.join("; ")) };
                    out.push_str(&format!("{} #{} {}: {} (expected {}) {}\n", r.file, r.index, r.args, r.got, r.expected, status));
                }
                out.push_str(&format!("summary: {} runs, {} mismatches\nverdict: {}\n", self.records.len(), self.mismatches(), self.verdict));
                out
            }
            Format::Csv => {
                let mut out = String::from("file,run,args,expected,got,match\n");
                for r in &self.records {
                    out.push_str(&format!("{},{},\"{}\",{},{},{}\n", r.file, r.index, r.args, r.expected, r.got, r.diffs.is_empty()));
                }
                out
            }
        }
    }
}

fn run_file(name: &str, text: &str, load: &dyn Fn(&str) -> Result<String>, records: &mut Vec<RunRecord>) -> Result<()> {
    let exp = ExpectationFile::parse(text).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
    let problem_text = load(&exp.problem)?;
    let problem = Problem::parse(&problem_text).map_err(|e| Error::Parse(format!("{}: {e}", exp.problem)))?;
    for (i, run) in exp.runs.iter().enumerate() {
        let cli = command_for(&exp.problem, &run.args).map_err(|e| Error::Parse(format!("{name} run {}: {e}", i + 1)))?;
        let (got, diffs) = match execute(&cli.command, &problem) {
            Ok(outcome) => (outcome.verdict.to_string(), compare(run, &outcome)),
            Err(e) => ("ERROR".to_string(), vec![e.to_string()]),
        };
        records.push(RunRecord {
            file: exp.problem.clone(),
            index: i + 1,
            args: run.args.join(" "),
            expected: run.verdict.clone(),
            got,
            diffs,
        });
    }
    Ok(())
}

/// Runs every expectation, bundled or from `dir`.
pub fn run_corpus(dir: Option<&Path>) -> Result<CorpusSummary> {
    let mut records = Vec::new();
    let source = match dir {
        None => {
            let load = |n: &str| bundled_problem(n).map(str::to_string).ok_or_else(|| Error::Io(format!("{n}: not bundled")));
            for (name, text) in EXPECTATIONS {
                run_file(name, text, &load, &mut records)?;
            }
            "bundled".to_string()
        }
        Some(d) => {
            let read = |p: &Path| std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())));
            let mut names: Vec<String> = std::fs::read_dir(d)
                .map_err(|e| Error::Io(format!("{}: {e}", d.display())))?
                .filter_map(|e| e.ok().and_then(|e| e.file_name().into_string().ok()))
                .filter(|n| n.ends_with(".expected.json"))
                .collect();
            names.sort();
            let load = |n: &str| read(&d.join(n));
            for name in &names {
                run_file(name, &read(&d.join(name))?, &load, &mut records)?;
            }
            d.display().to_string()
        }
    };
    let verdict = Verdict::from_bool(records.iter().all(|r| r.diffs.is_empty()));
    Ok(CorpusSummary { source, records, verdict })
}
