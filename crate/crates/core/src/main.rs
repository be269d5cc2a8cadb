//! `weylres`: enumerate Weyl-group objects and run the verification suites.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use weylres::combinatorics::{Composition, SpComposition};
use weylres::exponent::ResidueContext;
use weylres::meromorphy::AnalyticAxioms;
use weylres::parabolic::{enumerate_tables, relevant_parabolics, StandardParabolic};
use weylres::report::{render_outcome, render_records, schema_text, Header};
use weylres::roots::GroupKind;
use weylres::suites::{run_suite, Suite, SuiteParams};
use weylres::weyl::{
    circ_reps, double_coset_reps, dpartitions, group_elements, right_reduced_reps, right_reduced_reps_gl, sort_canonical,
    w_from_d,
};

#[derive(Parser)]
#[command(name = "weylres", version, about = "Weyl-group, parabolic and exponent calculus for residual Eisenstein series on Sp_N")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dump one record per object, in a fixed order.
    Enumerate {
        what: What,
        #[command(flatten)]
        args: EnumerateArgs,
    },
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        suite: SuiteArg,
        #[command(flatten)]
        args: VerifyArgs,
    },
    /// Print the report layout.
    ReportSchema {
        #[arg(long, value_enum, default_value = "full")]
        format: SchemaFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Weyl,
    Cosets,
    Tables,
    Parabolics,
    Dpartitions,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Bijections,
    Expexp,
    ExpZeros,
    Regularity,
    Survivors,
    GkOrder,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemaFormat {
    Full,
    Compact,
}

#[derive(Clone, Copy, ValueEnum)]
enum CosetKind {
    Right,
    Double,
    Circ,
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Sp,
    Gl,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long = "N")]
    n: Option<usize>,
    /// Left Levi (or `dpartitions` target), e.g. "2;0".
    #[arg(long = "L")]
    l: Option<String>,
    /// Right Levi, e.g. "1,1;0" (for `dpartitions`, the blocks "1,2").
    #[arg(long = "M")]
    m: Option<String>,
    #[arg(long, value_enum, default_value = "right")]
    kind: CosetKind,
    #[arg(long, value_enum, default_value = "sp")]
    group: Group,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Composition of the standard parabolic, e.g. "1;1" (Sp) or "2,1" (GL).
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Fix `m`; otherwise `m ∈ [0,2]`.
    #[arg(long)]
    m: Option<usize>,
    /// Fix `n`; otherwise `n ∈ [1,2]`.
    #[arg(long)]
    n: Option<usize>,
    /// Largest rank for the matrix-level table checks.
    #[arg(long = "N", default_value_t = 3)]
    big_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Axiom table; defaults to $WEYL_AXIOMS, then the built-in table.
    #[arg(long)]
    axioms: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Usage> {
    v.ok_or_else(|| Usage(format!("missing --{flag}")))
}

fn kind(g: Group) -> GroupKind {
    match g {
        Group::Sp => GroupKind::Sp,
        Group::Gl => GroupKind::Gl,
    }
}

fn parabolic(g: Group, s: &str) -> Result<StandardParabolic, Usage> {
    Ok(match g {
        Group::Sp => StandardParabolic::Sp(s.parse::<SpComposition>()?),
        Group::Gl => StandardParabolic::Gl(s.parse::<Composition>()?),
    })
}

fn check_rank(expected: Option<usize>, found: usize) -> Result<(), Usage> {
    match expected {
        Some(n) if n != found => Err(Usage(format!("--N {n} does not match rank {found}"))),
        _ => Ok(()),
    }
}

fn enumerate(what: What, a: &EnumerateArgs) -> Result<(String, Value, Vec<Value>), Usage> {
    let mut params = json!({ "group": kind(a.group) });
    let records: Vec<Value> = match what {
        What::Weyl => {
            let n = need(a.n, "N")?;
            params["N"] = json!(n);
            let k = kind(a.group);
            let mut ws = group_elements(k, n);
            sort_canonical(&mut ws, k);
            ws.iter().map(|w| json!({ "w": w, "length": w.length(k) })).collect()
        }
        What::Cosets => {
            let m = need(a.m.as_deref(), "M")?;
            params["M"] = json!(m);
            let ws = match (a.kind, a.group) {
                (CosetKind::Right, Group::Gl) => {
                    let c: Composition = m.parse()?;
                    check_rank(a.n, c.total())?;
                    right_reduced_reps_gl(&c)
                }
                (CosetKind::Right, Group::Sp) => {
                    let c: SpComposition = m.parse()?;
                    check_rank(a.n, c.total())?;
                    right_reduced_reps(&c)
                }
                (_, Group::Gl) => return Err(Usage("double and circ cosets are implemented for sp".into())),
                (k, Group::Sp) => {
                    let mc: SpComposition = m.parse()?;
                    let l = need(a.l.as_deref(), "L")?;
                    params["L"] = json!(l);
                    let lc: SpComposition = l.parse()?;
                    check_rank(a.n, mc.total())?;
                    check_rank(a.n, lc.total())?;
                    match k {
                        CosetKind::Double => double_coset_reps(&lc, &mc)?,
                        _ => circ_reps(&lc, &mc)?,
                    }
                }
            };
            params["kind"] = json!(match a.kind {
                CosetKind::Right => "right",
                CosetKind::Double => "double",
                CosetKind::Circ => "circ",
            });
            ws.iter().map(|w| json!({ "w": w })).collect()
        }
        What::Tables => {
            let (ra, rb) = (need(a.a, "a")?, need(a.b, "b")?);
            let alpha = need(a.alpha.as_deref(), "alpha")?;
            let base = parabolic(a.group, alpha)?;
            check_rank(a.n, base.rank())?;
            params["a"] = json!(ra);
            params["b"] = json!(rb);
            params["alpha"] = json!(alpha);
            enumerate_tables(ra, rb, &base)?
                .iter()
                .map(|t| json!({ "row_a": t.row_a, "row_b": t.row_b, "sigma": t.sigma(), "h_intersection": t.h_intersection().to_string() }))
                .collect()
        }
        What::Parabolics => {
            let (ra, rb) = (need(a.a, "a")?, need(a.b, "b")?);
            check_rank(a.n, ra + rb)?;
            params["a"] = json!(ra);
            params["b"] = json!(rb);
            relevant_parabolics(ra, rb, kind(a.group))?
                .iter()
                .map(|(t, p)| json!({ "base": t.base, "row_a": t.row_a, "row_b": t.row_b, "conjugator": p.conjugator }))
                .collect()
        }
        What::Dpartitions => {
            let blocks: Composition = need(a.m.as_deref(), "M")?.parse()?;
            let target: SpComposition = need(a.l.as_deref(), "L")?.parse()?;
            if blocks.total() != target.total() {
                return Err(Usage(format!("blocks {blocks} and target {target} have different ranks")));
            }
            check_rank(a.n, blocks.total())?;
            params["M"] = json!(blocks);
            params["L"] = json!(target);
            dpartitions(&blocks, &target)
                .iter()
                .map(|d| Ok(json!({ "partition": d.to_string(), "w": w_from_d(d, &blocks, &target)? })))
                .collect::<Result<_, Usage>>()?
        }
    };
    let name = match what {
        What::Weyl => "weyl",
        What::Cosets => "cosets",
        What::Tables => "tables",
        What::Parabolics => "parabolics",
        What::Dpartitions => "dpartitions",
    };
    Ok((format!("enumerate {name}"), params, records))
}

fn suite(s: SuiteArg) -> Suite {
    match s {
        SuiteArg::Bijections => Suite::Bijections,
        SuiteArg::Expexp => Suite::Expexp,
        SuiteArg::ExpZeros => Suite::ExpZeros,
        SuiteArg::Regularity => Suite::Regularity,
        SuiteArg::Survivors => Suite::Survivors,
        SuiteArg::GkOrder => Suite::GkOrder,
        SuiteArg::All => Suite::All,
    }
}

fn load_axioms(path: Option<&PathBuf>) -> Result<AnalyticAxioms, Usage> {
    let env = std::env::var_os("WEYL_AXIOMS").map(PathBuf::from);
    match path.or(env.as_ref()) {
        Some(p) => Ok(AnalyticAxioms::load(p)?),
        None => Ok(AnalyticAxioms::default()),
    }
}

fn write(out: Option<&PathBuf>, text: &str) -> Result<(), Usage> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Usage> {
    match cli.command {
        Command::Enumerate { what, args } => {
            let (name, params, records) = enumerate(what, &args)?;
            write(args.out.as_ref(), &render_records(&Header::new(name, params, None), &records))?;
            Ok(true)
        }
        Command::Verify { suite: s, args } => {
            if args.n == Some(0) {
                return Err(Usage("--n must be positive".into()));
            }
            let ms: Vec<usize> = args.m.map_or((0..=2).collect(), |m| vec![m]);
            let ns: Vec<usize> = args.n.map_or((1..=2).collect(), |n| vec![n]);
            let instances = ms.iter().flat_map(|&m| ns.iter().map(move |&n| ResidueContext::new(m, n))).collect::<Result<Vec<_>, _>>()?;
            let params = SuiteParams {
                instances,
                sp_rank: args.big_n,
                gl_rank: args.big_n,
                seed: args.seed,
                axioms: load_axioms(args.axioms.as_ref())?,
            };
            let s = suite(s);
            let outcome = run_suite(s, &params)?;
            let header = Header::new(
                format!("verify {s}"),
                json!({ "m": ms, "n": ns, "N": args.big_n, "axioms": args.axioms.as_ref().map(|p| p.display().to_string()) }),
                Some(args.seed),
            );
            write(args.out.as_ref(), &render_outcome(&header, &outcome))?;
            Ok(outcome.passed())
        }
        Command::ReportSchema { format } => {
            print!("{}", schema_text(matches!(format, SchemaFormat::Compact)));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
