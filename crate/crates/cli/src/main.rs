//! `transversal`: generate complexes, solve for transversal numbers, check
//! structural properties and run experiment grids.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use transversal_core::experiment::{
    parse_range_list, render_table, run_experiment, solve_row, ExperimentName, ExperimentOptions, Grid, Row,
    SolveMode,
};
use transversal_core::generators::{CompositionJ, ConstructionSpec, Family};
use transversal_core::pl::{
    bistellar_flip, neighborly_witness, replace_ball, stacked_witness, FlipSpec, ReplaceGuard,
};
use transversal_core::{
    bound_formulas, parse_complex, serialize_complex, BoundReport, ComplexFile, Error, FacetSet, PureComplex,
    SolveBudget, Validation,
};

#[derive(Parser)]
#[command(name = "transversal", version, about = "Transversal numbers of simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a complex from a named family.
    Gen(GenArgs),
    /// Compute the transversal number of a complex file.
    Solve(SolveArgs),
    /// Run structural checks on a complex file.
    Check(CheckArgs),
    /// Run a named experiment grid.
    Experiment(ExperimentArgs),
    /// Apply one bistellar flip.
    Flip(FlipArgs),
    /// Replace a ball inside a complex by another ball with the same boundary.
    Replace(ReplaceArgs),
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    s: Option<u32>,
    #[arg(long)]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Composition such as `2,2,3`.
    #[arg(long = "J")]
    j: Option<String>,
    #[arg(long)]
    variant: Option<String>,
}

#[derive(Args)]
struct GenArgs {
    /// Family tag: cyclic, B, F, H, gammaJ, D, K, L7, L8, L11, lambda, pi, lambda7, flip-target, gamma-nk.
    family: String,
    #[command(flatten)]
    params: Params,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Budget {
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Seconds.
    #[arg(long)]
    time_limit: Option<f64>,
    #[arg(long)]
    node_limit: Option<u64>,
}

impl Budget {
    fn to_budget(&self) -> anyhow::Result<SolveBudget> {
        let mut b = SolveBudget::default().with_threads(self.threads);
        if let Some(t) = self.time_limit {
            if !(t > 0.0 && t.is_finite()) {
                return Err(Error::BadParams("--time-limit must be positive".into()).into());
            }
            b = b.with_time_limit(Duration::from_secs_f64(t));
        }
        if let Some(n) = self.node_limit {
            if n == 0 {
                return Err(Error::BadParams("--node-limit must be positive".into()).into());
            }
            b = b.with_node_limit(n);
        }
        Ok(b)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Greedy,
    Both,
}

#[derive(Args)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    #[command(flatten)]
    budget: Budget,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    allow_gaps: bool,
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct CheckArgs {
    input: PathBuf,
    /// pure, pseudomanifold, eulerian, boundary-empty, neighborly:M, stacked:M, induced:W (W like 1,2,3).
    #[arg(long = "check", required = true)]
    checks: Vec<String>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    #[arg(long)]
    allow_gaps: bool,
}

#[derive(Args)]
struct ExperimentArgs {
    /// turan-F, pseudo-H, sibling-D, flips-gamma or spheres-345.
    name: String,
    /// Label counts as `12..36` or `8,16,24`.
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    a: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, value_enum, default_value = "exact")]
    mode: Mode,
    #[command(flatten)]
    budget: Budget,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
    /// Also write the structured report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Lift the size guard on exact solves in dimension 4 and above.
    #[arg(long)]
    force: bool,
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct FlipArgs {
    input: PathBuf,
    /// The face whose star is removed, like `1,2`.
    #[arg(long = "A")]
    a: String,
    /// The missing face that appears, like `3,4`.
    #[arg(long = "B")]
    b: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    allow_gaps: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum GuardArg {
    Induced,
    InteriorDisjoint,
}

#[derive(Args)]
struct ReplaceArgs {
    input: PathBuf,
    old: PathBuf,
    new: PathBuf,
    #[arg(long, value_enum, default_value = "induced")]
    guard: GuardArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    allow_gaps: bool,
}

/// Failures that map to exit codes other than 1.
#[derive(Debug)]
enum Outcome {
    ValidationFailed,
    BudgetExhausted,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::ValidationFailed => f.write_str("validation failed"),
            Outcome::BudgetExhausted => f.write_str("budget exhausted"),
        }
    }
}

impl std::error::Error for Outcome {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e.downcast_ref::<Outcome>(), Some(_)) {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(o) = e.downcast_ref::<Outcome>() {
        return match o {
            Outcome::ValidationFailed => 2,
            Outcome::BudgetExhausted => 3,
        };
    }
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExhausted { .. }) => 3,
        Some(_) => 2,
        None => 1,
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Solve(a) => solve(a),
        Command::Check(a) => check(a),
        Command::Experiment(a) => experiment(a),
        Command::Flip(a) => flip(a),
        Command::Replace(a) => replace(a),
    }
}

fn validation(allow_gaps: bool) -> Validation {
    if allow_gaps {
        Validation::AllowGaps
    } else {
        Validation::Strict
    }
}

fn read_complex(path: &Path, allow_gaps: bool) -> anyhow::Result<ComplexFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_complex(&text, validation(allow_gaps))?)
}

fn write_output(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_set(text: &str) -> anyhow::Result<FacetSet> {
    let labels = text
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::BadParams(format!("bad label {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FacetSet::new(labels))
}

fn gen(a: GenArgs) -> anyhow::Result<()> {
    let family = Family::from_tag(&a.family).ok_or_else(|| Error::BadParams(format!("unknown family {:?}", a.family)))?;
    let p = a.params;
    let spec = ConstructionSpec {
        family: Some(family),
        n: p.n,
        d: p.d,
        dim: p.dim,
        s: p.s,
        a: p.a,
        b: p.b,
        k: p.k,
        j: p.j.as_deref().map(CompositionJ::parse).transpose()?,
        variant: p.variant,
    };
    let c = spec.build()?;
    write_output(a.out.as_deref(), &serialize_complex(&c, family.tag()))?;
    let summary = format!("n={} d={} m={}", c.n(), c.d(), c.num_facets());
    if a.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    Ok(())
}

fn mode(m: Mode) -> SolveMode {
    match m {
        Mode::Exact => SolveMode::Exact,
        Mode::Greedy => SolveMode::Greedy,
        Mode::Both => SolveMode::Both,
    }
}

fn solve(a: SolveArgs) -> anyhow::Result<()> {
    let file = read_complex(&a.input, a.allow_gaps)?;
    let budget = a.budget.to_budget()?;
    let row = solve_row(&file.family, "", &file.complex, budget, mode(a.mode), a.timing);
    if let Some(e) = &row.error {
        return Err(Error::BadParams(e.clone()).into());
    }
    match a.format {
        Format::Structured => print!("{}", row.to_json()),
        Format::Table => print_solve_table(&row, &file.complex),
    }
    if row.budget_exhausted() {
        return Err(Outcome::BudgetExhausted.into());
    }
    Ok(())
}

fn print_solve_table(row: &Row, c: &PureComplex) {
    print!("{}", render_table(std::slice::from_ref(row)));
    if let Some(cert) = &row.certificate {
        println!("certificate: {cert}");
    }
    if let Ok(r) = bound_formulas(c.n() as u64, c.num_facets().max(1) as u64, c.d().max(1) as u64, Some(c.f_vector().get(1))) {
        let turan = r.turan.map_or_else(|| "-".into(), BoundReport::fmt_sig);
        println!("bounds: pure {} turan {}", BoundReport::fmt_sig(r.pure), turan);
    }
}

fn check(a: CheckArgs) -> anyhow::Result<()> {
    let file = read_complex(&a.input, a.allow_gaps)?;
    let c = &file.complex;
    let mut results: Vec<(String, bool, Option<String>)> = Vec::new();
    for name in &a.checks {
        for name in name.split_whitespace() {
            let (pass, witness) = run_check(c, name)?;
            results.push((name.to_string(), pass, witness));
        }
    }
    match a.format {
        Format::Table => {
            let w = results.iter().map(|r| r.0.len()).max().unwrap_or(0);
            for (name, pass, witness) in &results {
                let verdict = if *pass { "pass" } else { "fail" };
                match witness {
                    Some(wt) => println!("{name:<w$}  {verdict}  witness {wt}"),
                    None => println!("{name:<w$}  {verdict}"),
                }
            }
        }
        Format::Structured => {
            println!("[");
            for (i, (name, pass, witness)) in results.iter().enumerate() {
                let wt = witness.as_ref().map_or_else(|| "null".to_string(), |w| format!("\"{w}\""));
                let comma = if i + 1 < results.len() { "," } else { "" };
                println!("  {{\"check\": \"{name}\", \"pass\": {pass}, \"witness\": {wt}}}{comma}");
            }
            println!("]");
        }
    }
    if results.iter().any(|r| !r.1) {
        return Err(Outcome::ValidationFailed.into());
    }
    Ok(())
}

fn parse_count(name: &str, arg: &str) -> anyhow::Result<usize> {
    arg.parse().map_err(|_| Error::BadParams(format!("check {name} needs an integer, got {arg:?}")).into())
}

/// Result of one named check, with a witness on failure.
fn run_check(c: &PureComplex, name: &str) -> anyhow::Result<(bool, Option<String>)> {
    let (head, arg) = name.split_once(':').unwrap_or((name, ""));
    let show = |f: Option<FacetSet>| (f.is_none(), f.map(|f| f.to_string()));
    Ok(match head {
        "pure" => (true, None),
        "pseudomanifold" => show(c.pseudomanifold_witness()),
        "eulerian" => show(c.eulerian_witness()),
        "boundary-empty" => match c.boundary() {
            Ok(b) => show(b.facets().first().cloned()),
            Err(Error::NotAPseudomanifold(r)) => (false, Some(r.to_string())),
            Err(e) => return Err(e.into()),
        },
        "neighborly" => show(neighborly_witness(c, parse_count(head, arg)?)),
        "stacked" => match stacked_witness(c, parse_count(head, arg)?) {
            Ok(w) => show(w),
            Err(e) => (false, Some(e.to_string())),
        },
        "induced" => show(induced_witness(c, &parse_set(arg)?)),
        _ => return Err(Error::BadParams(format!("unknown check {name:?}")).into()),
    })
}

/// A face of `c` inside `w` that lies in no facet contained in `w`.
fn induced_witness(c: &PureComplex, w: &FacetSet) -> Option<FacetSet> {
    let inside: Vec<&FacetSet> = c.facets().iter().filter(|f| f.is_subset(w)).collect();
    c.restriction(w).into_iter().find(|g| !inside.iter().any(|f| g.is_subset(f)))
}

fn experiment(a: ExperimentArgs) -> anyhow::Result<()> {
    let name = ExperimentName::from_tag(&a.name)
        .ok_or_else(|| Error::BadParams(format!("unknown experiment {:?}", a.name)))?;
    let list = |s: &Option<String>| s.as_deref().map(parse_range_list).transpose();
    let grid = Grid {
        n: list(&a.n)?,
        s: list(&a.s)?,
        k: list(&a.k)?,
        a: list(&a.a)?,
        d: a.d,
        dim: a.dim,
        variant: a.variant.clone(),
    };
    let opts = ExperimentOptions {
        grid,
        budget: a.budget.to_budget()?,
        mode: mode(a.mode),
        force: a.force,
        timing: a.timing,
    };
    let report = run_experiment(name, &opts)?;
    if let Some(p) = &a.out {
        fs::write(p, report.to_json()).with_context(|| format!("writing {}", p.display()))?;
    }
    match a.format {
        Format::Table => print!("{}", report.to_table()),
        Format::Structured => print!("{}", report.to_json()),
    }
    if report.any_budget_exhausted() {
        return Err(Outcome::BudgetExhausted.into());
    }
    Ok(())
}

fn flip(a: FlipArgs) -> anyhow::Result<()> {
    let file = read_complex(&a.input, a.allow_gaps)?;
    let spec = FlipSpec::new(parse_set(&a.a)?, parse_set(&a.b)?);
    let out = bistellar_flip(&file.complex, &spec)?;
    write_output(a.out.as_deref(), &serialize_complex(&out, &file.family))
}

fn replace(a: ReplaceArgs) -> anyhow::Result<()> {
    let host = read_complex(&a.input, a.allow_gaps)?;
    let old = read_complex(&a.old, true)?;
    let new = read_complex(&a.new, true)?;
    let guard = match a.guard {
        GuardArg::Induced => ReplaceGuard::Induced,
        GuardArg::InteriorDisjoint => ReplaceGuard::InteriorDisjoint,
    };
    let out = replace_ball(&host.complex, &old.complex, &new.complex, guard)?;
    write_output(a.out.as_deref(), &serialize_complex(&out, &host.family))
}
