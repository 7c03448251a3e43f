//! The `awnev` command line: argument grammar, dispatch and exit codes.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::awops::{aw_avg, aw_diff_pow, mixed, shift, AwContext};
use crate::awwronskian::{all_sign_vectors, linearly_independent, verify_properties, wronskian, wronskian_delta_form, wronskian_shift_form, FunctionTuple};
use crate::config::{Config, OutputFormat};
use crate::decomp::{self, greedy_decompose, polynomial_decompose, render_table, DegreeMultiset};
use crate::error::{Error, Result};
use crate::nevanlinna::fmt::fmt_check_with;
use crate::nevanlinna::{Hypersurface, ProjCurveRep, RGrid};
use crate::qcore::scalar::{fmt_q, parse_q};
use crate::qcore::{parse_hompoly, parse_xpoly, MPoly, RatFunc, XPoly, Q};
use crate::smt::harness::HarnessOptions;
use crate::smt::{params_from_core, run_general_smt, run_hypersurface_smt, run_truncated_smt, HyperplaneSet, MarginReport};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_TREND_FAIL: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "awnev", version, about = "Askey-Wilson difference calculus and Nevanlinna harnesses")]
pub struct Cli {
    /// Config file (key = value); defaults to $AWNEV_CONFIG.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Deformation parameter s = q^{1/2}, a rational in (0, 1).
    #[arg(long, global = true)]
    pub s: Option<String>,
    #[arg(long, global = true)]
    pub theta_points: Option<usize>,
    #[arg(long, global = true)]
    pub slack: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpKind {
    /// D_q^n f
    Dq,
    /// A_{q^n} f
    Avg,
    /// eta^k f
    Shift,
    /// A_{q^{n-t}} D_q^t f
    Mixed,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply an AW operator to a polynomial in x.
    Ops {
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum)]
        op: OpKind,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        t: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        k: i64,
    },
    /// AW Wronskian of polynomials separated by ';'.
    Wronskian {
        #[arg(long)]
        funcs: String,
        /// Also check the algebraic properties with multiplier g.
        #[arg(long)]
        multiplier: Option<String>,
    },
    /// First Main Theorem desk check over a geometric grid.
    Nevanlinna {
        /// Curve components separated by ';'.
        #[arg(long)]
        curve: String,
        /// Homogeneous polynomial in x0..xn.
        #[arg(long)]
        hypersurface: String,
        #[arg(long, default_value_t = 10.0)]
        lo: f64,
        #[arg(long, default_value_t = 1e4)]
        hi: f64,
        #[arg(long, default_value_t = 25)]
        steps: usize,
    },
    /// Greedy min-max decomposition with its stage table.
    Decompose {
        #[arg(long, value_delimiter = ',')]
        degrees: Option<Vec<usize>>,
        /// JSON file `{"n": .., "factors": [["x0 - x1", 1], ..]}`.
        #[arg(long)]
        factors: Option<PathBuf>,
        #[arg(long)]
        bins: usize,
    },
    /// Second main theorem margin harness from a JSON input file.
    Smt {
        #[arg(long)]
        input: PathBuf,
    },
    /// Hypersurface SMT parameters with certificates.
    Params {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dhat: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Reproduce the worked stage table and diff it against the golden copy.
    Table1,
}

/// What a command printed and the process exit code it asks for.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Nonzero exit code for each error class.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::HypothesisFailed { .. } => EXIT_HYPOTHESIS,
        Error::PositionFailed(_) | Error::DependentCurve(_) | Error::CurveInHypersurface => 4,
        Error::GuardViolation { .. } => 5,
        Error::QuadratureDegenerate { .. } => 6,
        Error::TooLarge(_) => 7,
        Error::ZeroFunction | Error::ZeroDenominator | Error::ZeroDivisor | Error::NotEnoughFactors { .. } | Error::TooFew { .. } => 8,
        Error::Io(_) => 74,
        _ => 65,
    }
}

fn split_list(text: &str) -> Vec<&str> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn parse_polys(text: &str) -> Result<Vec<XPoly>> {
    split_list(text).into_iter().map(parse_xpoly).collect()
}

fn resolve_config(cli: &Cli) -> Result<Config> {
    let mut c = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::from_env()?,
    };
    if let Some(s) = &cli.s {
        c.s = parse_q(s)?;
    }
    if let Some(t) = cli.theta_points {
        c.theta_points = t;
    }
    if let Some(sl) = cli.slack {
        c.slack = sl;
    }
    if cli.format.is_some() {
        c.format = cli.format;
    }
    c.validate()?;
    Ok(c)
}

fn render_rat(f: &RatFunc) -> String {
    match f.to_xpoly() {
        Ok(p) => p.to_string(),
        Err(_) => format!("{f}  (in z)"),
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = resolve_config(cli)?;
    let ctx = AwContext::new(cfg.s.clone())?;
    match &cli.command {
        Command::Ops { expr, op, n, t, k } => {
            let f = RatFunc::from_xpoly(&parse_xpoly(expr)?);
            let out = match op {
                OpKind::Dq => aw_diff_pow(&f, *n, &ctx),
                OpKind::Avg => aw_avg(&f, *n, &ctx),
                OpKind::Shift => shift(&f, *k, &ctx),
                OpKind::Mixed => {
                    if t > n {
                        return Err(Error::InvalidParameter(format!("t = {t} exceeds M = {n}")));
                    }
                    mixed(&f, *n, *t, &ctx)
                }
            };
            let text = render_rat(&out);
            Ok(Outcome::ok(match cfg.format {
                Some(OutputFormat::Json) => json(&serde_json::json!({ "result": text }))?,
                _ => text + "\n",
            }))
        }
        Command::Wronskian { funcs, multiplier } => {
            let ps = parse_polys(funcs)?;
            let tuple = FunctionTuple::from_xpolys(&ps, ctx.clone())?;
            let w = wronskian(&tuple);
            let shift_ok = wronskian_shift_form(&tuple) == w;
            let mut delta_ok = true;
            for signs in all_sign_vectors(tuple.n()) {
                delta_ok &= wronskian_delta_form(&tuple, &signs)? == w;
            }
            let props = match multiplier {
                Some(g) => {
                    let g = RatFunc::from_xpoly(&parse_xpoly(g)?);
                    let cs: Vec<Q> = (1..=ps.len() as i64).map(crate::qcore::q).collect();
                    Some(verify_properties(&tuple, &g, &cs)?)
                }
                None => None,
            };
            let report = serde_json::json!({
                "wronskian": render_rat(&w),
                "shift_form_agrees": shift_ok,
                "delta_forms_agree": delta_ok,
                "linearly_independent": linearly_independent(&ps),
                "properties": props,
            });
            Ok(Outcome::ok(match cfg.format {
                Some(OutputFormat::Json) => json(&report)?,
                _ => {
                    let mut s = format!("W = {}\n", render_rat(&w));
                    let _ = writeln!(s, "shift form agrees: {shift_ok}\ndelta forms agree: {delta_ok}");
                    let _ = writeln!(s, "linearly independent: {}", linearly_independent(&ps));
                    if let Some(p) = props {
                        let _ = writeln!(s, "properties: {p:?}");
                    }
                    s
                }
            }))
        }
        Command::Nevanlinna { curve, hypersurface, lo, hi, steps } => {
            let comps = parse_polys(curve)?;
            let n = comps.len().saturating_sub(1);
            let curve = ProjCurveRep::new(comps, ctx.clone())?;
            let h = Hypersurface::new(parse_hompoly(hypersurface, n)?)?;
            let grid = RGrid::geometric(*lo, *hi, *steps, cfg.theta_points)?;
            let rep = fmt_check_with(&curve, &h, &grid, cfg.cluster_tol)?;
            Ok(Outcome::ok(match cfg.format.unwrap_or(OutputFormat::Json) {
                OutputFormat::Json => json(&rep)?,
                OutputFormat::Csv => rep.to_csv()?,
                OutputFormat::Table => {
                    let mut s = format!("{:>12} {:>14} {:>14} {:>14} {:>14}\n", "r", "m", "N", "T", "deviation");
                    for r in &rep.rows {
                        let _ = writeln!(s, "{:>12.4} {:>14.8} {:>14.8} {:>14.8} {:>14.3e}", r.r, r.m, r.n, r.t, r.deviation);
                    }
                    let _ = writeln!(s, "spread {:.3e}", rep.spread);
                    s
                }
            }))
        }
        Command::Decompose { degrees, factors, bins } => decompose(degrees.as_deref(), factors.as_ref(), *bins, cfg.format),
        Command::Smt { input } => smt(input, &cfg),
        Command::Params { n, dhat, alpha, eps, d } => {
            let p = params_from_core(*n, *dhat, *d, &parse_q(alpha)?, &parse_q(eps)?)?;
            Ok(Outcome::ok(match cfg.format {
                Some(OutputFormat::Table) => {
                    let mut s = String::new();
                    let _ = writeln!(s, "N = {}\nM = {}\nOmega = {}\nM1 = {}", p.big_n, p.big_m, p.omega, p.m1);
                    let _ = writeln!(s, "NM/(dhat Omega) = {} <= {}: {}", fmt_q(&p.certificates.nm_ratio), fmt_q(&p.certificates.nm_limit), p.certificates.nm_ok);
                    let _ = writeln!(s, "certificates hold: {}", p.certificates.all());
                    s
                }
                _ => json(&p)?,
            }))
        }
        Command::Table1 => {
            let (ds, _, trace) = decomp::table1();
            let table = render_table(&ds, &trace);
            if table == decomp::TABLE1_GOLDEN {
                Ok(Outcome::ok(table + "golden: match\n"))
            } else {
                Ok(Outcome { stdout: format!("{table}golden: MISMATCH\n"), code: 1 })
            }
        }
    }
}

#[derive(Deserialize)]
struct FactorFile {
    n: usize,
    factors: Vec<(String, u32)>,
}

fn parse_factors(n: usize, fs: &[(String, u32)]) -> Result<Vec<(MPoly, u32)>> {
    fs.iter().map(|(t, m)| Ok((parse_hompoly(t, n)?, *m))).collect()
}

fn decompose(degrees: Option<&[usize]>, factors: Option<&PathBuf>, bins: usize, format: Option<OutputFormat>) -> Result<Outcome> {
    let (ds, groups) = match (degrees, factors) {
        (Some(d), None) => (DegreeMultiset::new(d.to_vec())?, None),
        (None, Some(path)) => {
            let file: FactorFile = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            let n = file.n;
            let h = Hypersurface::from_factors(parse_factors(n, &file.factors)?)?;
            let (groups, _) = polynomial_decompose(&h, bins)?;
            let names = MPoly::default_names(n + 1);
            let degs = h.factors.as_ref().unwrap().iter().map(|(f, m)| f.total_degree() * *m as usize).collect();
            (DegreeMultiset::new(degs)?, Some(groups.iter().map(|g| g.render(&names)).collect::<Vec<_>>()))
        }
        _ => return Err(Error::InvalidParameter("give exactly one of --degrees and --factors".into())),
    };
    let (dec, trace) = greedy_decompose(&ds, bins)?;
    let text = match format.unwrap_or(OutputFormat::Table) {
        OutputFormat::Json => json(&serde_json::json!({
            "degrees": ds.degrees(),
            "decomposition": dec,
            "trace": trace,
            "groups": groups,
        }))?,
        OutputFormat::Csv => {
            let mut s = String::from("k,d,s,i_max,i_min\n");
            for r in &trace.rows {
                let _ = writeln!(s, "{},{},{},{},{}", r.k, r.d, r.s, r.i_max, r.i_min);
            }
            s
        }
        OutputFormat::Table => {
            let mut s = render_table(&ds, &trace);
            let degs: Vec<String> = dec.bin_degrees.iter().map(|d| d.to_string()).collect();
            let _ = writeln!(s, "bin degrees: {}", degs.join(","));
            for (j, g) in groups.iter().flatten().enumerate() {
                let _ = writeln!(s, "R{} = {g}", j + 1);
            }
            s
        }
    };
    Ok(Outcome::ok(text))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SmtTheorem {
    General,
    Truncated,
    Hypersurface,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HypersurfaceSpec {
    pub factors: Vec<(String, u32)>,
}

/// JSON input of the `smt` subcommand.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmtInput {
    pub theorem: SmtTheorem,
    pub curve: Vec<String>,
    #[serde(default)]
    pub forms: Vec<Vec<String>>,
    #[serde(default)]
    pub hypersurfaces: Vec<HypersurfaceSpec>,
    pub grid: Option<GridSpec>,
    pub eps: Option<String>,
    pub s_prime: Option<usize>,
    pub l: Option<usize>,
}

/// Runs one harness described by `input`.
pub fn run_smt_input(input: &SmtInput, cfg: &Config) -> Result<MarginReport> {
    let ctx = AwContext::new(cfg.s.clone())?;
    let comps: Vec<XPoly> = input.curve.iter().map(|c| parse_xpoly(c)).collect::<Result<_>>()?;
    let n = comps.len().saturating_sub(1);
    let curve = ProjCurveRep::new(comps, ctx)?;
    let g = input.grid.clone().unwrap_or(GridSpec { lo: 100.0, hi: 1e4, steps: 25 });
    let grid = RGrid::geometric(g.lo, g.hi, g.steps, cfg.theta_points)?;
    let opts = HarnessOptions { slack: cfg.slack, cluster_tol: cfg.cluster_tol, relation_degree: cfg.relation_degree };
    let forms = || -> Result<HyperplaneSet> {
        HyperplaneSet::new(input.forms.iter().map(|f| f.iter().map(|c| parse_q(c)).collect::<Result<_>>()).collect::<Result<_>>()?)
    };
    match input.theorem {
        SmtTheorem::General => run_general_smt(&curve, &forms()?, &grid, &opts),
        SmtTheorem::Truncated => run_truncated_smt(&curve, &forms()?, &grid, &opts),
        SmtTheorem::Hypersurface => {
            let qs: Vec<Hypersurface> = input
                .hypersurfaces
                .iter()
                .map(|h| Hypersurface::from_factors(parse_factors(n, &h.factors)?))
                .collect::<Result<_>>()?;
            let eps = parse_q(input.eps.as_deref().unwrap_or("1"))?;
            run_hypersurface_smt(&curve, &qs, input.s_prime.unwrap_or(1), input.l.unwrap_or(n), &eps, &grid, &opts)
        }
    }
}

fn smt(path: &PathBuf, cfg: &Config) -> Result<Outcome> {
    let input: SmtInput = serde_json::from_str(&std::fs::read_to_string(path)?)?;
    let rep = run_smt_input(&input, cfg)?;
    let stdout = match cfg.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Csv => rep.to_csv()?,
        OutputFormat::Json => rep.to_json()? + "\n",
        OutputFormat::Table => {
            let mut s = format!("{:>12} {:>14} {:>14} {:>14} {:>10}\n", "r", "T", "lhs", "rhs", "margin/T");
            for r in &rep.rows {
                let _ = writeln!(s, "{:>12.4} {:>14.6} {:>14.6} {:>14.6} {:>10.4}", r.r, r.t, r.lhs, r.rhs, r.ratio);
            }
            let _ = writeln!(s, "trend {} (worst {:.4}, slack {})", if rep.verdict.pass { "pass" } else { "FAIL" }, rep.verdict.worst_ratio, rep.verdict.slack);
            s
        }
    };
    Ok(Outcome { stdout, code: if rep.verdict.pass { 0 } else { EXIT_TREND_FAIL } })
}
