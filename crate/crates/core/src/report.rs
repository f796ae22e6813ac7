//! Check reports and their text/CSV renderings.
//!
//! Both renderings share one number formatter, so every value in the CSV
//! block reads back to exactly what the text block shows.

use std::fmt;

use crate::error::{Error, Result};
use crate::xreals::XReal;

/// Formats a float with shortest round-trip digits and no negative zero.
pub fn fmt_num(v: f64) -> String {
    XReal::from_f64(v).to_string()
}

/// `(a,b,...)`
pub fn fmt_point(p: &[f64]) -> String {
    let parts: Vec<String> = p.iter().map(|v| fmt_num(*v)).collect();
    format!("({})", parts.join(","))
}

fn fmt_coords(p: &[f64]) -> String {
    p.iter().map(|v| fmt_num(*v)).collect::<Vec<_>>().join(";")
}

fn parse_coords(s: &str) -> Result<Vec<f64>> {
    s.split(';')
        .map(|c| c.trim().parse::<f64>().map_err(|e| Error::Parse(format!("bad coordinate {c:?}: {e}"))))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    ConditionalPass,
    LowConfidence,
    Fail,
    InconsistentNumerics,
}

impl Verdict {
    /// The more severe of two verdicts.
    pub fn and(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::ConditionalPass)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::ConditionalPass => "CONDITIONAL_PASS",
            Verdict::LowConfidence => "LOW_CONFIDENCE",
            Verdict::Fail => "FAIL",
            Verdict::InconsistentNumerics => "INCONSISTENT_NUMERICS",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubCheck {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

/// One per-point certificate line.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub x: Vec<f64>,
    pub zstar: Option<Vec<f64>>,
    pub phi: XReal,
    pub dini: Option<XReal>,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub grid: String,
    pub duals: Vec<Vec<f64>>,
    pub subchecks: Vec<SubCheck>,
    pub rows: Vec<Row>,
    /// Point violating the checked property, when there is one.
    pub witness: Option<Vec<f64>>,
    pub hypotheses: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &str, grid: String, duals: Vec<Vec<f64>>) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            verdict: Verdict::Pass,
            grid,
            duals,
            subchecks: Vec::new(),
            rows: Vec::new(),
            witness: None,
            hypotheses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn subcheck(&self, name: &str) -> Option<&SubCheck> {
        self.subchecks.iter().find(|s| s.name == name)
    }

    pub fn push_subcheck(&mut self, name: &str, verdict: Verdict, detail: impl Into<String>) {
        self.subchecks.push(SubCheck { name: name.to_string(), verdict, detail: detail.into() });
    }

    /// Overall verdict as the most severe subcheck.
    pub fn settle(&mut self) {
        self.verdict = self.subchecks.iter().fold(Verdict::Pass, |v, s| v.and(s.verdict));
    }
}

fn fmt_row(r: &Row) -> [String; 5] {
    [
        fmt_coords(&r.x),
        r.zstar.as_deref().map(fmt_coords).unwrap_or_default(),
        r.phi.to_string(),
        r.dini.map(|d| d.to_string()).unwrap_or_default(),
        r.status.clone(),
    ]
}

pub fn render_text(r: &CheckReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("check: {}\nverdict: {}\ngrid: {}\n", r.check, r.verdict, r.grid));
    let duals: Vec<String> = r.duals.iter().map(|d| fmt_point(d)).collect();
    out.push_str(&format!("duals: {}\n", duals.join(" ")));
    if !r.hypotheses.is_empty() {
        out.push_str(&format!("hypotheses: {}\n", r.hypotheses.join("; ")));
    }
    for s in &r.subchecks {
        out.push_str(&format!("subcheck {} {}: {}\n", s.name, s.verdict, s.detail));
    }
    if let Some(w) = &r.witness {
        out.push_str(&format!("witness: {}\n", fmt_point(w)));
    }
    for n in &r.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out.push_str(&render_rows_text(&r.rows));
    out
}

/// The `rows:` block of the text rendering; empty when there are no rows.
pub fn render_rows_text(rows: &[Row]) -> String {
    let mut out = String::new();
    if !rows.is_empty() {
        out.push_str("rows:\n");
        for row in rows {
            let [x, z, phi, dini, status] = fmt_row(row);
            out.push_str(&format!("  x={x} zstar={z} phi={phi} dini={dini} status={status}\n"));
        }
    }
    out
}

/// CSV block for bare rows under a `# title` comment line.
pub fn render_rows_csv(title: &str, rows: &[Row]) -> String {
    let mut out = format!("# {title}\n{CSV_HEADER}\n");
    for row in rows {
        out.push_str(&fmt_row(row).join(","));
        out.push('\n');
    }
    out
}

pub const CSV_HEADER: &str = "x,zstar,phi,dini,status";

pub fn render_csv(r: &CheckReport) -> String {
    render_rows_csv(&format!("{} {}", r.check, r.verdict), &r.rows)
}

/// Reads the rows back from [`render_csv`] output.
pub fn parse_csv(text: &str) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for line in text.lines().filter(|l| !l.starts_with('#') && *l != CSV_HEADER && !l.is_empty()) {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 5 {
            return Err(Error::Parse(format!("expected 5 fields in {line:?}")));
        }
        rows.push(Row {
            x: parse_coords(f[0])?,
            zstar: if f[1].is_empty() { None } else { Some(parse_coords(f[1])?) },
            phi: f[2].parse()?,
            dini: if f[3].is_empty() { None } else { Some(f[3].parse()?) },
            status: f[4].to_string(),
        });
    }
    Ok(rows)
}

/// Reads the rows back from the text rendering.
pub fn parse_text_rows(text: &str) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for line in text.lines().filter(|l| l.starts_with("  x=")) {
        let mut fields = line.trim().split(' ');
        let mut next = |key: &str| -> Result<String> {
            fields
                .next()
                .and_then(|f| f.strip_prefix(key))
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("missing {key} in {line:?}")))
        };
        let (x, z, phi, dini, status) = (next("x=")?, next("zstar=")?, next("phi=")?, next("dini=")?, next("status=")?);
        rows.push(Row {
            x: parse_coords(&x)?,
            zstar: if z.is_empty() { None } else { Some(parse_coords(&z)?) },
            phi: phi.parse()?,
            dini: if dini.is_empty() { None } else { Some(dini.parse()?) },
            status,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CheckReport {
        let mut r = CheckReport::new("demo", "x1 in [0,1] step 0.5".into(), vec![vec![-1.0, 0.0]]);
        r.rows.push(Row {
            x: vec![0.1, -0.0],
            zstar: Some(vec![-0.6, -0.8]),
            phi: XReal::Finite(1.0 / 3.0),
            dini: Some(XReal::NegInf),
            status: "OK".into(),
        });
        r.rows.push(Row { x: vec![1e-7, 2.0], zstar: None, phi: XReal::PosInf, dini: None, status: "DOMINATED".into() });
        r.push_subcheck("A", Verdict::Pass, "fine");
        r.push_subcheck("B", Verdict::LowConfidence, "unsure");
        r.settle();
        r
    }

    #[test]
    fn verdict_severity() {
        assert_eq!(Verdict::Pass.and(Verdict::Fail), Verdict::Fail);
        assert_eq!(Verdict::ConditionalPass.and(Verdict::Pass), Verdict::ConditionalPass);
        assert_eq!(sample().verdict, Verdict::LowConfidence);
    }

    #[test]
    fn csv_and_text_agree() {
        let r = sample();
        let from_csv = parse_csv(&render_csv(&r)).unwrap();
        let from_text = parse_text_rows(&render_text(&r)).unwrap();
        assert_eq!(from_csv, from_text);
        assert_eq!(from_csv[0].phi, XReal::Finite(1.0 / 3.0));
        assert_eq!(from_csv[0].x, vec![0.1, 0.0]);
    }

    #[test]
    fn number_format() {
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_point(&[1.5, -2.0]), "(1.5,-2)");
    }
}
