//! The `detinv` command line.
//!
//! Exit codes: 0 success, 1 failed checks, 2 invalid arguments.

use std::fs;
use std::io::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::cartan::{cartan_poincare, presentation_for};
use crate::error::{Error, Result};
use crate::geometry::{Case, Space};
use crate::invariants as inv;
use crate::render::{csv_err, finish_csv, render, Format, Value};
use crate::verify::{self, Suite};
use crate::weights::{closure_check, enumerate_class, WeightBox};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const MAX_DEGREE_VAR: &str = "DETINV_MAX_DEGREE";

const FORMATS: [&str; 4] = ["json", "csv", "latex", "text"];

#[derive(Debug, Parser)]
#[command(
    name = "detinv",
    version,
    about = "Invariants of determinantal varieties in general, skew-symmetric and symmetric matrix spaces",
    after_help = "Orbit index p: rank p for general and symmetric matrices; for skew-symmetric \
                  matrices p is HALF the rank (O_p = matrices of rank 2p)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one invariant for one orbit.
    Compute(ComputeArgs),
    /// Tabulate invariants over a range of sizes.
    Table(TableArgs),
    /// Run the identity checks.
    Verify(VerifyArgs),
    /// Enumerate dominant weights or run the box-removal closure check.
    Weights(WeightsArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long, value_parser = ["general", "skew", "symmetric"])]
    pub case: String,
    /// Rows (general case only).
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: u32,
    /// Orbit index (half-rank for skew-symmetric matrices).
    #[arg(long, alias = "s")]
    pub p: u32,
    #[arg(long, value_parser = Invariant::NAMES)]
    pub invariant: String,
    #[arg(long, default_value = "text", value_parser = FORMATS)]
    pub format: String,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Cases to include (repeatable); all three by default.
    #[arg(long, value_parser = ["general", "skew", "symmetric"])]
    pub case: Vec<String>,
    #[arg(long, default_value_t = 1)]
    pub n_min: u32,
    #[arg(long)]
    pub n_max: u32,
    #[arg(long, default_value_t = 1)]
    pub m_min: u32,
    /// Largest m for general matrices; defaults to --n-max.
    #[arg(long)]
    pub m_max: Option<u32>,
    /// Restrict to one orbit index; all orbits by default.
    #[arg(long, alias = "s")]
    pub p: Option<u32>,
    /// Invariants (repeatable or comma-separated).
    #[arg(long, required = true, value_delimiter = ',', value_parser = Invariant::NAMES)]
    pub invariant: Vec<String>,
    #[arg(long, default_value = "text", value_parser = FORMATS)]
    pub format: String,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    pub max_n: u32,
    /// Defaults to --max-n.
    #[arg(long)]
    pub max_m: Option<u32>,
    #[arg(long, default_value = "all", value_parser = Suite::NAMES)]
    pub suite: String,
    #[arg(long, default_value = "text", value_parser = ["json", "text"])]
    pub format: String,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    #[arg(long, value_parser = ["general", "skew", "symmetric"])]
    pub case: String,
    #[arg(long)]
    pub n: u32,
    /// Orbit index for `closure`, class index for `enumerate`.
    #[arg(long, alias = "s")]
    pub p: u32,
    /// Box [-radius, radius]; defaults to n + 3.
    #[arg(long)]
    pub radius: Option<i64>,
    #[arg(long, default_value = "closure", value_parser = ["closure", "enumerate"])]
    pub check: String,
    #[arg(long)]
    pub output: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Bm,
    OrbitCohomology,
    CdrIntro,
    CdrSection,
    LoccohSeries,
    DerhamSimple,
    Ih,
    WeightBm,
    WeightOrbit,
    WeightCdr3,
    Np,
    Btot,
    CartanCheck,
}

impl Invariant {
    pub const NAMES: [&'static str; 13] = [
        "bm",
        "orbit-cohomology",
        "cdr-intro",
        "cdr-section",
        "loccoh-series",
        "derham-simple",
        "ih",
        "weight-bm",
        "weight-orbit",
        "weight-cdr3",
        "np",
        "btot",
        "cartan-check",
    ];

    const ALL: [Invariant; 13] = [
        Invariant::Bm,
        Invariant::OrbitCohomology,
        Invariant::CdrIntro,
        Invariant::CdrSection,
        Invariant::LoccohSeries,
        Invariant::DerhamSimple,
        Invariant::Ih,
        Invariant::WeightBm,
        Invariant::WeightOrbit,
        Invariant::WeightCdr3,
        Invariant::Np,
        Invariant::Btot,
        Invariant::CartanCheck,
    ];

    pub fn name(self) -> &'static str {
        Self::NAMES[Self::ALL.iter().position(|&i| i == self).expect("listed")]
    }
}

impl FromStr for Invariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Invariant> {
        Self::NAMES
            .iter()
            .position(|&n| n == s)
            .map(|k| Self::ALL[k])
            .ok_or_else(|| Error::InvalidArgument(format!("unknown invariant {s:?}")))
    }
}

fn general_dims(space: &Space) -> Result<(u32, u32)> {
    match *space {
        Space::General { m, n } => Ok((m, n)),
        other => Err(Error::NotApplicable(format!(
            "weight generating functions are stated for general matrices only, not {other}"
        ))),
    }
}

/// Evaluates an invariant. For `cartan-check` the second component reports
/// whether the presentation agrees with the closed form.
pub fn evaluate(space: &Space, p: u32, invariant: Invariant) -> Result<(Value, bool)> {
    let poly = |r: Result<crate::poly::MPoly>| r.map(|p| (Value::Poly(p), true));
    match invariant {
        Invariant::Bm => poly(inv::bm_poincare(space, p)),
        Invariant::OrbitCohomology => poly(inv::orbit_cohomology(space, p)),
        Invariant::CdrIntro => poly(inv::cdr_intro_form(space, p)),
        Invariant::CdrSection => poly(inv::cdr_section_form(space, p)),
        Invariant::LoccohSeries => Ok((Value::Series(inv::loccoh_series(space, p)?), true)),
        Invariant::DerhamSimple => poly(inv::derham_simple(space, p)),
        Invariant::Ih => poly(inv::ih_poincare(space, p)),
        Invariant::WeightBm => {
            let (m, n) = general_dims(space)?;
            poly(inv::weight_bm_general(m, n, p).map(|t| t.poly))
        }
        Invariant::WeightOrbit => {
            let (m, n) = general_dims(space)?;
            poly(inv::weight_orbit_general(m, n, p).map(|t| t.poly))
        }
        Invariant::WeightCdr3 => {
            let (m, n) = general_dims(space)?;
            poly(inv::weight_cdr_trivariate(m, n, p).map(|t| t.poly))
        }
        Invariant::Np => Ok((Value::Int(inv::np_total(space, p)?), true)),
        Invariant::Btot => Ok((Value::Int(inv::total_betti(space, p)?), true)),
        Invariant::CartanCheck => {
            let lhs = cartan_poincare(&presentation_for(space, p)?)?;
            let agrees = lhs == inv::orbit_cohomology(space, p)?;
            Ok((Value::Poly(lhs), agrees))
        }
    }
}

/// Optional cap on total polynomial degree from the environment.
pub fn degree_cap() -> Result<Option<i64>> {
    match std::env::var(MAX_DEGREE_VAR) {
        Err(_) => Ok(None),
        Ok(s) => s.trim().parse::<i64>().map(Some).map_err(|_| {
            Error::InvalidArgument(format!("{MAX_DEGREE_VAR} must be an integer, got {s:?}"))
        }),
    }
}

fn enforce_cap(cap: Option<i64>, degree: i64, what: &str) -> Result<()> {
    match cap {
        Some(c) if degree > c => Err(Error::InvalidArgument(format!(
            "{what} degree {degree} exceeds {MAX_DEGREE_VAR}={c}"
        ))),
        _ => Ok(()),
    }
}

fn emit(output: &Option<String>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}"))),
        None => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "{text}");
            Ok(())
        }
    }
}

fn compute(args: &ComputeArgs) -> Result<i32> {
    let case: Case = args.case.parse()?;
    let space = Space::new(case, args.m, args.n)?;
    let invariant: Invariant = args.invariant.parse()?;
    let cap = degree_cap()?;
    enforce_cap(cap, 2 * space.dim(), "ambient")?;
    let (value, agrees) = evaluate(&space, args.p, invariant)?;
    enforce_cap(cap, value.max_total_degree(), "result")?;
    emit(&args.output, &render(&value, args.format.parse()?)?)?;
    Ok(if agrees { EXIT_OK } else { EXIT_FAIL })
}

struct Row {
    space: Space,
    p: u32,
    cells: Vec<Option<Value>>,
}

fn table_spaces(args: &TableArgs) -> Result<Vec<Space>> {
    let cases: Vec<Case> = if args.case.is_empty() {
        vec![Case::General, Case::Skew, Case::Symmetric]
    } else {
        args.case.iter().map(|c| c.parse()).collect::<Result<_>>()?
    };
    let m_max = args.m_max.unwrap_or(args.n_max);
    let mut out = vec![];
    for case in cases {
        for n in args.n_min.max(1)..=args.n_max {
            match case {
                Case::General => {
                    for m in args.m_min.max(n)..=m_max {
                        out.push(Space::general(m, n)?);
                    }
                }
                Case::Skew if n >= 2 => out.push(Space::skew(n)?),
                Case::Skew => {}
                Case::Symmetric => out.push(Space::symmetric(n)?),
            }
        }
    }
    Ok(out)
}

fn table(args: &TableArgs) -> Result<i32> {
    let invariants: Vec<Invariant> = args
        .invariant
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let format: Format = args.format.parse()?;
    let cap = degree_cap()?;
    let mut rows = vec![];
    let mut all_agree = true;
    for space in table_spaces(args)? {
        enforce_cap(cap, 2 * space.dim(), "ambient")?;
        let ps: Vec<u32> = match args.p {
            Some(p) if p <= space.p_max() => vec![p],
            Some(_) => vec![],
            None => (0..=space.p_max()).collect(),
        };
        for p in ps {
            let mut cells = vec![];
            for &i in &invariants {
                // not every invariant is defined at every orbit; leave those cells empty
                let cell = match evaluate(&space, p, i) {
                    Ok((v, agrees)) => {
                        all_agree &= agrees;
                        enforce_cap(cap, v.max_total_degree(), "result")?;
                        Some(v)
                    }
                    Err(_) => None,
                };
                cells.push(cell);
            }
            rows.push(Row { space, p, cells });
        }
    }
    emit(&args.output, &render_table(&rows, &invariants, format)?)?;
    Ok(if all_agree { EXIT_OK } else { EXIT_FAIL })
}

fn m_cell(space: &Space) -> String {
    match space {
        Space::General { m, .. } => m.to_string(),
        _ => String::new(),
    }
}

fn render_table(rows: &[Row], invariants: &[Invariant], format: Format) -> Result<String> {
    let names: Vec<&str> = invariants.iter().map(|i| i.name()).collect();
    Ok(match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let values: serde_json::Map<String, serde_json::Value> = names
                        .iter()
                        .zip(&r.cells)
                        .map(|(n, c)| {
                            (
                                n.to_string(),
                                c.as_ref().map_or(serde_json::Value::Null, Value::to_json),
                            )
                        })
                        .collect();
                    let m = match r.space {
                        Space::General { m, .. } => json!(m),
                        _ => serde_json::Value::Null,
                    };
                    json!({
                        "case": r.space.case().name(),
                        "m": m,
                        "n": r.space.n(),
                        "p": r.p,
                        "values": values,
                    })
                })
                .collect();
            serde_json::Value::Array(items).to_string()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            let mut header = vec!["case", "m", "n", "p"];
            header.extend(&names);
            w.write_record(&header).map_err(csv_err)?;
            for r in rows {
                let mut rec = vec![
                    r.space.case().name().to_string(),
                    m_cell(&r.space),
                    r.space.n().to_string(),
                    r.p.to_string(),
                ];
                rec.extend(
                    r.cells
                        .iter()
                        .map(|c| c.as_ref().map_or(String::new(), Value::cell)),
                );
                w.write_record(&rec).map_err(csv_err)?;
            }
            finish_csv(w)?.trim_end().to_string()
        }
        Format::Latex => {
            let mut out = format!("\\begin{{tabular}}{{llll{}}}\n", "l".repeat(names.len()));
            out.push_str(&format!(
                "case & $m$ & $n$ & $p$ & {} \\\\\n\\hline\n",
                names.join(" & ")
            ));
            for r in rows {
                let cells: Vec<String> = r
                    .cells
                    .iter()
                    .map(|c| {
                        c.as_ref()
                            .map_or("--".to_string(), |v| format!("${}$", v.latex()))
                    })
                    .collect();
                out.push_str(&format!(
                    "{} & {} & {} & {} & {} \\\\\n",
                    r.space.case().name(),
                    m_cell(&r.space),
                    r.space.n(),
                    r.p,
                    cells.join(" & ")
                ));
            }
            out.push_str("\\end{tabular}");
            out
        }
        Format::Text => {
            let mut lines = vec![format!("case\tm\tn\tp\t{}", names.join("\t"))];
            for r in rows {
                let cells: Vec<String> = r
                    .cells
                    .iter()
                    .map(|c| c.as_ref().map_or("-".to_string(), Value::text))
                    .collect();
                lines.push(format!(
                    "{}\t{}\t{}\t{}\t{}",
                    r.space.case().name(),
                    m_cell(&r.space),
                    r.space.n(),
                    r.p,
                    cells.join("\t")
                ));
            }
            lines.join("\n")
        }
    })
}

fn verify_cmd(args: &VerifyArgs) -> Result<i32> {
    let suite: Suite = args.suite.parse()?;
    let report = verify::run(suite, args.max_n, args.max_m.unwrap_or(args.max_n))?;
    let text = match args.format.as_str() {
        "json" => serde_json::to_string_pretty(&report).expect("report serializes"),
        _ => report.to_string(),
    };
    emit(&args.output, &text)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

fn weights_cmd(args: &WeightsArgs) -> Result<i32> {
    let case: Case = args.case.parse()?;
    let radius = args.radius.unwrap_or(verify::closure_radius(args.n));
    if radius < 0 {
        return Err(Error::InvalidArgument(format!(
            "radius must be >= 0, got {radius}"
        )));
    }
    let bx = WeightBox::radius(args.n as usize, radius)?;
    if args.check == "enumerate" {
        let weights = enumerate_class(case, args.p, &bx)?;
        let body = json!({
            "class": args.p,
            "count": weights.len(),
            "weights": weights,
        });
        emit(&args.output, &body.to_string())?;
        return Ok(EXIT_OK);
    }
    let report = closure_check(case, args.p, &bx)?;
    emit(
        &args.output,
        &serde_json::to_string(&report).expect("report serializes"),
    )?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

pub fn dispatch(cli: &Cli) -> Result<i32> {
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify_cmd(a),
        Command::Weights(a) => weights_cmd(a),
    }
}

/// Parses the process arguments and runs; returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("detinv: {e}");
            EXIT_USAGE
        }
    }
}
