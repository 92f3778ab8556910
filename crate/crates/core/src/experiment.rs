//! Named grids of instances solved row by row, reported as JSON or as an
//! aligned text table.

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::PureComplex;
use crate::error::{bad, Error, Result};
use crate::facet::{FacetSet, Label};
use crate::generators::{ConstructionSpec, Family};
use crate::solver::{
    bound_formulas, exact_transversal, greedy_transversal, verify_transversal, BoundReport, SolveBudget,
};

/// Exact solves on complexes of dimension at least 4 refuse `n` above this
/// without `force`.
pub const GUARD_MAX_N: Label = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentName {
    TuranF,
    PseudoH,
    SiblingD,
    FlipsGamma,
    Spheres345,
}

impl ExperimentName {
    pub const ALL: [ExperimentName; 5] = [
        ExperimentName::TuranF,
        ExperimentName::PseudoH,
        ExperimentName::SiblingD,
        ExperimentName::FlipsGamma,
        ExperimentName::Spheres345,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            ExperimentName::TuranF => "turan-F",
            ExperimentName::PseudoH => "pseudo-H",
            ExperimentName::SiblingD => "sibling-D",
            ExperimentName::FlipsGamma => "flips-gamma",
            ExperimentName::Spheres345 => "spheres-345",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.tag() == tag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMode {
    #[default]
    Exact,
    Greedy,
    Both,
}

impl SolveMode {
    pub fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "exact" => Some(SolveMode::Exact),
            "greedy" => Some(SolveMode::Greedy),
            "both" => Some(SolveMode::Both),
            _ => None,
        }
    }
}

/// Parameter overrides; `None` keeps the experiment's default range.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Grid {
    pub n: Option<Vec<Label>>,
    pub s: Option<Vec<u32>>,
    pub k: Option<Vec<u32>>,
    pub a: Option<Vec<u32>>,
    pub d: Option<usize>,
    pub dim: Option<usize>,
    pub variant: Option<String>,
}

/// Parses `7..14` (inclusive), `8,16,24`, or a single value.
pub fn parse_range_list(text: &str) -> Result<Vec<u32>> {
    let text = text.trim();
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad(format!("bad number {t:?} in {text:?}")));
    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
        if lo > hi {
            return Err(bad(format!("empty range {text:?}")));
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',').map(num).collect()
}

#[derive(Debug, Clone, Default)]
pub struct ExperimentOptions {
    pub grid: Grid,
    /// Budget for each row; its thread count is the number of rows solved at once.
    pub budget: SolveBudget,
    pub mode: SolveMode,
    pub force: bool,
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub family: String,
    pub params: String,
    pub n: Label,
    pub d: usize,
    pub m: usize,
    /// Exact transversal number, when proven.
    pub exact: Option<usize>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub optimal: bool,
    /// `T/n` in lowest terms.
    pub tau: Option<String>,
    pub tau_decimal: Option<String>,
    pub greedy: Option<usize>,
    /// `n + 1 - n m^{-1/d} / e` to six significant digits.
    pub greedy_bound: Option<String>,
    pub certificate: Option<FacetSet>,
    pub check: Option<String>,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

impl Row {
    fn failed(family: &str, params: String, n: Label, e: &Error) -> Row {
        Row {
            family: family.to_string(),
            params,
            n,
            d: 0,
            m: 0,
            exact: None,
            lower: None,
            upper: None,
            optimal: false,
            tau: None,
            tau_decimal: None,
            greedy: None,
            greedy_bound: None,
            certificate: None,
            check: None,
            error: Some(e.to_string()),
            runtime_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("row serializes");
        s.push('\n');
        s
    }

    pub fn budget_exhausted(&self) -> bool {
        self.exact.is_none() && self.lower.is_some()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn tau_rational(t: usize, n: usize) -> String {
    let g = gcd(t, n).max(1);
    format!("{}/{}", t / g, n / g)
}

/// Solves one complex and fills a report row. Every certificate is
/// re-verified; a failure lands in `error`.
pub fn solve_row(family: &str, params: &str, c: &PureComplex, budget: SolveBudget, mode: SolveMode, timing: bool) -> Row {
    let start = Instant::now();
    let mut row = Row::failed(family, params.to_string(), c.n(), &bad(""));
    row.error = None;
    row.d = c.d();
    row.m = c.num_facets();
    if let Ok(r) = bound_formulas(c.n() as u64, c.num_facets() as u64, c.d() as u64, None) {
        row.greedy_bound = Some(BoundReport::fmt_sig(r.pure));
    }
    if mode != SolveMode::Exact {
        match greedy_transversal(c) {
            Ok(g) => {
                if !verify_transversal(c, &g.vertices) {
                    row.error = Some("greedy certificate does not verify".into());
                }
                row.greedy = Some(g.size);
                row.certificate = Some(g.vertices);
            }
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    if mode != SolveMode::Greedy {
        match exact_transversal(c, budget) {
            Ok(t) => {
                if !verify_transversal(c, &t.vertices) {
                    row.error = Some("exact certificate does not verify".into());
                }
                row.lower = Some(t.lower_bound);
                row.upper = Some(t.upper_bound);
                row.optimal = t.optimal;
                if t.optimal {
                    row.exact = Some(t.size);
                    let n = c.n() as usize;
                    row.tau = Some(tau_rational(t.size, n));
                    row.tau_decimal = Some(format!("{:.4}", t.size as f64 / n as f64));
                }
                row.certificate = Some(t.vertices);
            }
            Err(e) => row.error = Some(e.to_string()),
        }
    }
    if timing {
        row.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    row
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub rows: Vec<Row>,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn any_budget_exhausted(&self) -> bool {
        self.rows.iter().any(Row::budget_exhausted)
    }

    pub fn to_table(&self) -> String {
        render_table(&self.rows)
    }
}

/// Aligned text table of rows.
pub fn render_table(rows: &[Row]) -> String {
    let timing = rows.iter().any(|r| r.runtime_ms.is_some());
    let mut head = vec!["family", "params", "n", "m", "T", "tau", "tau~", "opt", "greedy", "bound", "check"];
    if timing {
        head.push("ms");
    }
    let mut table: Vec<Vec<String>> = vec![head.iter().map(|s| s.to_string()).collect()];
    let dash = || "-".to_string();
    for r in rows {
        let t = match (r.exact, r.lower, r.upper) {
            (Some(t), _, _) => t.to_string(),
            (None, Some(lo), Some(hi)) => format!("{lo}..{hi}"),
            _ => dash(),
        };
        let check = match (&r.error, &r.check) {
            (Some(e), _) => format!("error: {e}"),
            (None, Some(c)) => c.clone(),
            (None, None) => dash(),
        };
        let mut line = vec![
            r.family.clone(),
            r.params.clone(),
            r.n.to_string(),
            r.m.to_string(),
            t,
            r.tau.clone().unwrap_or_else(dash),
            r.tau_decimal.clone().unwrap_or_else(dash),
            if r.optimal { "yes".into() } else { "no".into() },
            r.greedy.map_or_else(dash, |g| g.to_string()),
            r.greedy_bound.clone().unwrap_or_else(dash),
            check,
        ];
        if timing {
            line.push(r.runtime_ms.map_or_else(dash, |ms| ms.to_string()));
        }
        table.push(line);
    }
    let cols = table[0].len();
    let widths: Vec<usize> =
        (0..cols).map(|i| table.iter().map(|row| row[i].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in &table {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == cols {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<w$}  ", w = widths[i]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

type Check = fn(&PureComplex, &ConstructionSpec, Option<usize>) -> String;

struct Instance {
    spec: ConstructionSpec,
    key: (String, Label, Vec<i64>),
    check: Option<Check>,
}

fn instance(spec: ConstructionSpec, check: Option<Check>) -> Instance {
    let fam = spec.family.map_or("", |f| f.tag()).to_string();
    let key = (
        fam,
        spec.n.unwrap_or(0),
        [spec.d.map(|v| v as i64), spec.dim.map(|v| v as i64), spec.s.map(i64::from), spec.a.map(i64::from), spec.k.map(i64::from)]
            .into_iter()
            .map(|v| v.unwrap_or(-1))
            .collect(),
    );
    Instance { spec, key, check }
}

fn odd_labels(n: Label) -> FacetSet {
    FacetSet::new((1..=n).step_by(2))
}

/// `[n(1 - 1/(s+1)) - ks, n - ⌊n/(s+1)⌋]` for `d = 2k`.
pub fn f_bracket(n: Label, d: usize, s: u32) -> (f64, usize) {
    let k = (d / 2) as f64;
    let s1 = s as f64 + 1.0;
    let lo = n as f64 * (1.0 - 1.0 / s1) - k * s as f64;
    let hi = n as usize - n as usize / (s as usize + 1);
    (lo, hi)
}

/// The labels of `[n]` that are not multiples of `s + 1`.
pub fn non_multiples(n: Label, s: u32) -> FacetSet {
    FacetSet::new((1..=n).filter(|v| v % (s + 1) != 0))
}

/// `{1,2,6,7,11,12,...} ∩ [n]` together with `n`.
pub fn even_sibling_transversal(n: Label) -> FacetSet {
    FacetSet::new((1..=n).filter(|v| matches!(v % 5, 1 | 2)).chain([n]))
}

fn check_f(_: &PureComplex, spec: &ConstructionSpec, t: Option<usize>) -> String {
    let (n, d, s) = (spec.n.unwrap_or(0), spec.d.unwrap_or(0), spec.s.unwrap_or(0));
    let (lo, hi) = f_bracket(n, d, s);
    let inside = t.map(|t| t as f64 >= lo && t <= hi);
    let verdict = match inside {
        Some(true) => "inside",
        Some(false) => "OUTSIDE",
        None => "unsolved",
    };
    format!("{verdict} [{lo:.4}, {hi}]")
}

fn check_h(c: &PureComplex, spec: &ConstructionSpec, _: Option<usize>) -> String {
    let pm = c.is_pseudomanifold();
    let hit = verify_transversal(c, &non_multiples(c.n(), spec.s.unwrap_or(0)));
    format!("pseudomanifold={pm} non-multiples-hit={hit}")
}

fn check_d(c: &PureComplex, spec: &ConstructionSpec, t: Option<usize>) -> String {
    let dim = spec.dim.unwrap_or(0);
    let n = c.n();
    let stated = if dim % 2 == 1 { odd_labels(n) } else { even_sibling_transversal(n) };
    let gap = t.map_or_else(|| "-".into(), |t| format!("{:.1}", n as f64 / 2.0 - t as f64));
    format!("stated-hit={} n/2-T={gap}", verify_transversal(c, &stated))
}

fn check_gamma(c: &PureComplex, _: &ConstructionSpec, _: Option<usize>) -> String {
    format!("odd-hit={}", verify_transversal(c, &odd_labels(c.n())))
}

fn check_sphere(c: &PureComplex, _: &ConstructionSpec, _: Option<usize>) -> String {
    format!("closed-pseudomanifold={}", c.is_closed_pseudomanifold())
}

fn spec_with(family: Family, f: impl FnOnce(&mut ConstructionSpec)) -> ConstructionSpec {
    let mut s = ConstructionSpec::new(family);
    f(&mut s);
    s
}

fn instances(name: ExperimentName, g: &Grid) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    match name {
        ExperimentName::TuranF => {
            let d = g.d.unwrap_or(4);
            for &s in g.s.as_deref().unwrap_or(&[1, 2, 3]) {
                let ns: Vec<Label> = g.n.clone().unwrap_or_else(|| (12..=36).collect());
                for n in ns {
                    let spec = spec_with(Family::FFamily, |x| {
                        x.n = Some(n);
                        x.d = Some(d);
                        x.s = Some(s);
                    });
                    out.push(instance(spec, if d % 2 == 0 { Some(check_f) } else { None }));
                }
            }
        }
        ExperimentName::PseudoH => {
            let k = g.k.as_ref().and_then(|v| v.first().copied()).unwrap_or(2);
            let ns: Vec<Label> = g.n.clone().unwrap_or_else(|| (12..=24).step_by(4).collect());
            for n in ns {
                for &a in g.a.as_deref().unwrap_or(&[2, 3, 4]) {
                    for &s in g.s.as_deref().unwrap_or(&[1, 2, 3]) {
                        let spec = spec_with(Family::HFamily, |x| {
                            x.n = Some(n);
                            x.a = Some(a);
                            x.s = Some(s);
                            x.k = Some(k);
                        });
                        out.push(instance(spec, Some(check_h)));
                    }
                }
            }
        }
        ExperimentName::SiblingD => {
            let dim = g.dim.unwrap_or(3);
            let ns: Vec<Label> = g.n.clone().unwrap_or_else(|| (7..=14).collect());
            for n in ns {
                out.push(instance(
                    spec_with(Family::DSphere, |x| {
                        x.n = Some(n);
                        x.dim = Some(dim);
                    }),
                    Some(check_d),
                ));
            }
        }
        ExperimentName::FlipsGamma => {
            let ns: Vec<Label> = g.n.clone().unwrap_or_else(|| (8..=14).collect());
            for n in ns {
                for &k in g.k.as_deref().unwrap_or(&[0, 1, 2, 3]) {
                    if k + 6 > n {
                        continue;
                    }
                    out.push(instance(
                        spec_with(Family::GammaNk, |x| {
                            x.n = Some(n);
                            x.k = Some(k);
                        }),
                        Some(check_gamma),
                    ));
                }
            }
        }
        ExperimentName::Spheres345 => {
            let variants: Vec<&str> = match g.variant.as_deref() {
                None => vec!["lambda", "lambda7", "pi"],
                Some(v @ ("lambda" | "lambda7" | "pi")) => vec![v],
                Some(v) => return Err(bad(format!("unknown sphere variant {v:?}"))),
            };
            for v in variants {
                let (family, base_d, default_n): (Family, usize, Vec<Label>) = match v {
                    "lambda" => (Family::Lambda, 4, vec![8, 16, 24]),
                    "lambda7" => (Family::Lambda7, 4, vec![7, 14, 21]),
                    _ => (Family::Pi, 6, vec![11, 22, 33]),
                };
                for n in g.n.clone().unwrap_or(default_n) {
                    out.push(instance(spec_with(family, |x| x.n = Some(n)), Some(check_sphere)));
                    let base = spec_with(Family::Cyclic, |x| {
                        x.n = Some(n);
                        x.d = Some(base_d);
                    });
                    if !out.iter().any(|i| i.spec == base) {
                        out.push(instance(base, Some(check_sphere)));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Runs every row of a named grid. A row that fails to build or runs out of
/// budget is flagged in the report; only a guard violation aborts the run.
pub fn run_experiment(name: ExperimentName, opts: &ExperimentOptions) -> Result<ExperimentReport> {
    let mut list = instances(name, &opts.grid)?;
    list.sort_by(|a, b| a.key.cmp(&b.key));
    let row_budget = SolveBudget { threads: 1, ..opts.budget };
    let threads = opts.budget.threads.max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().map_err(|e| bad(e.to_string()))?;

    let built: Vec<Result<PureComplex>> = pool.install(|| list.par_iter().map(|i| i.spec.build()).collect());
    if !opts.force && opts.mode != SolveMode::Greedy {
        for c in built.iter().flatten() {
            if c.d() >= 5 && c.n() > GUARD_MAX_N {
                return Err(bad(format!(
                    "exact solve of a {}-dimensional complex with n = {} exceeds the guard n <= {GUARD_MAX_N}; pass --force",
                    c.d() - 1,
                    c.n()
                )));
            }
        }
    }
    let rows: Vec<Row> = pool.install(|| {
        list.par_iter()
            .zip(built.par_iter())
            .map(|(inst, c)| {
                let fam = inst.spec.family.map_or("?", |f| f.tag());
                let params = inst.spec.describe();
                match c {
                    Err(e) => Row::failed(fam, params, inst.spec.n.unwrap_or(0), e),
                    Ok(c) => {
                        let mut row = solve_row(fam, &params, c, row_budget, opts.mode, opts.timing);
                        if let Some(check) = inst.check {
                            row.check = Some(check(c, &inst.spec, row.exact));
                        }
                        row
                    }
                }
            })
            .collect()
    });
    Ok(ExperimentReport { experiment: name.tag().to_string(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range_list("7..10").unwrap(), vec![7, 8, 9, 10]);
        assert_eq!(parse_range_list("8,16, 24").unwrap(), vec![8, 16, 24]);
        assert_eq!(parse_range_list("5").unwrap(), vec![5]);
        assert!(parse_range_list("9..3").is_err());
        assert!(parse_range_list("x").is_err());
    }

    #[test]
    fn tau_in_lowest_terms() {
        assert_eq!(tau_rational(2, 9), "2/9");
        assert_eq!(tau_rational(4, 8), "1/2");
        assert_eq!(tau_rational(0, 5), "0/1");
    }

    #[test]
    fn sibling_rows_are_ordered_and_verified() {
        let opts = ExperimentOptions {
            grid: Grid { n: Some(vec![9, 7, 8]), ..Default::default() },
            ..Default::default()
        };
        let r = run_experiment(ExperimentName::SiblingD, &opts).unwrap();
        let ns: Vec<Label> = r.rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, vec![7, 8, 9]);
        assert!(r.rows.iter().all(|r| r.optimal && r.error.is_none()));
        assert!(r.rows.iter().all(|r| r.check.as_deref().unwrap().starts_with("stated-hit=true")));
        let table = r.to_table();
        assert!(table.lines().next().unwrap().starts_with("family"));
        assert_eq!(table.lines().count(), 4);
        assert!(r.to_json().contains("\"tau\": \"3/7\""));
    }

    #[test]
    fn guard_blocks_large_high_dimensional_solves() {
        let opts = ExperimentOptions {
            grid: Grid { n: Some(vec![55]), variant: Some("pi".into()), ..Default::default() },
            ..Default::default()
        };
        assert!(run_experiment(ExperimentName::Spheres345, &opts).is_err());
    }

    #[test]
    fn build_failures_become_flagged_rows() {
        let opts = ExperimentOptions {
            grid: Grid { n: Some(vec![10]), variant: Some("lambda".into()), ..Default::default() },
            ..Default::default()
        };
        let r = run_experiment(ExperimentName::Spheres345, &opts).unwrap();
        assert!(r.rows.iter().any(|r| r.family == "lambda" && r.error.is_some()));
        assert!(r.rows.iter().any(|r| r.family == "cyclic" && r.optimal));
    }

    #[test]
    fn budget_exhaustion_is_flagged() {
        let opts = ExperimentOptions {
            grid: Grid { n: Some(vec![30]), s: Some(vec![3]), ..Default::default() },
            budget: SolveBudget::default().with_node_limit(5),
            ..Default::default()
        };
        let r = run_experiment(ExperimentName::TuranF, &opts).unwrap();
        assert!(r.any_budget_exhausted());
        assert!(r.rows[0].lower.unwrap() <= r.rows[0].upper.unwrap());
    }

    #[test]
    fn stated_sets() {
        assert_eq!(even_sibling_transversal(12), FacetSet::new([1, 2, 6, 7, 11, 12]));
        assert_eq!(non_multiples(7, 2), FacetSet::new([1, 2, 4, 5, 7]));
        let (lo, hi) = f_bracket(36, 4, 3);
        assert_eq!((lo, hi), (21.0, 27));
    }
}
