//! Command-line front end. Exit codes: 0 success, 2 bad input or domain,
//! 3 search budget exhausted (partial output is still printed).

use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use latin_transversals::blocks::{
    autotopism_phi, automorphism_tau, verify_block_maps, verify_hit_theorem, PHI_BLOCK_MAPS, TAU_BLOCK_MAPS,
};
use latin_transversals::bounds::{bound_sets, verify_bound, BoundCheck};
use latin_transversals::constructions::FamilySpec;
use latin_transversals::delta::forced_entry_certificate;
use latin_transversals::engine::{self, is_pinned, SearchConstraints};
use latin_transversals::format::{parse_any, to_json, to_text};
use latin_transversals::report::{table1, to_json_string};
use latin_transversals::{classify, ClassifyOptions, Error, Family, LatinSquare};

/// Per-search node budget unless `--budget` or `--long` says otherwise.
const DEFAULT_BUDGET: u64 = 200_000_000;
/// Largest order whose bound check also classifies every cell by default.
const DEFAULT_CLASSIFY_CAP: usize = 16;

#[derive(Parser)]
#[command(name = "latin-transversals", version, about = "Latin squares with pinned and transversal-free entries")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Worker threads for per-cell searches.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Node budget per search.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Lift the default budget and run the slow checks.
    #[arg(long, global = true)]
    long: bool,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Omit the timestamped `meta` field from JSON.
    #[arg(long, global = true)]
    no_meta: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Action {
    Find,
    Enumerate,
    Count,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Transversal,
    Suitable,
}

#[derive(Args)]
struct Target {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    order: Option<usize>,
    /// Block size for family L; the order is 3m.
    #[arg(long)]
    m: Option<usize>,
}

impl Target {
    fn spec(&self) -> Result<FamilySpec, Error> {
        match (self.family, self.order, self.m) {
            (Family::L, None, Some(m)) => FamilySpec::block(m),
            (_, Some(n), None) => FamilySpec::new(self.family, n),
            (Family::Ex6, None, None) => FamilySpec::new(Family::Ex6, 6),
            (Family::Ex8, None, None) => FamilySpec::new(Family::Ex8, 8),
            _ => Err(Error::Domain("give exactly one of --order or --m (--m only for family L)".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a square from one of the built-in families.
    Construct(Target),
    /// Classify every cell as free, covered or pinned.
    Classify { file: PathBuf },
    /// Find, list or count transversals (or suitable diagonals).
    Transversal {
        #[arg(value_enum)]
        action: Action,
        file: PathBuf,
        #[arg(long, value_enum, default_value = "transversal")]
        mode: Mode,
    },
    /// Forced-entry certificate, cross-checked by search.
    Pinned(Target),
    /// Transversal-free sets and the closed-form bound.
    Bounds(Target),
    /// Block-hit check and block symmetries of the order-3m block square.
    Blocks {
        #[arg(long)]
        m: usize,
    },
    /// Transversal-free counts for even orders from 10.
    Table1 {
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
}

struct Ctx {
    budget: Option<u64>,
    jobs: Option<usize>,
    long: bool,
    format: Format,
    meta: bool,
}

impl Ctx {
    fn classify_opts(&self) -> ClassifyOptions {
        ClassifyOptions { node_budget: self.budget, jobs: self.jobs, keep_witnesses: false }
    }

    fn emit<T: Serialize>(&self, payload: &T) -> Result<(), Error> {
        println!("{}", to_json_string(payload, self.meta)?);
        Ok(())
    }
}

/// What a command produced: success, or a partial result after the budget
/// ran out.
enum Outcome {
    Done,
    Partial,
}

fn read_square(path: &PathBuf) -> Result<LatinSquare, Error> {
    parse_any(&std::fs::read_to_string(path)?)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let c = &cli.common;
    let ctx = Ctx {
        budget: c.budget.or(if c.long { None } else { Some(DEFAULT_BUDGET) }),
        jobs: c.jobs,
        long: c.long,
        format: c.format.unwrap_or(Format::Json),
        meta: !c.no_meta,
    };
    match cli.command {
        Command::Construct(target) => {
            let square = target.spec()?.build()?;
            match c.format.unwrap_or(Format::Text) {
                Format::Text => print!("{}", to_text(&square)),
                Format::Json => println!("{}", to_json(&square)),
            }
            Ok(Outcome::Done)
        }
        Command::Classify { file } => {
            let report = classify(&read_square(&file)?, &ctx.classify_opts())?;
            ctx.emit(&report.to_json())?;
            Ok(if report.is_partial() { Outcome::Partial } else { Outcome::Done })
        }
        Command::Transversal { action, file, mode } => transversal(&ctx, &read_square(&file)?, action, mode),
        Command::Pinned(target) => pinned(&ctx, &target.spec()?),
        Command::Bounds(target) => bounds(&ctx, &target.spec()?),
        Command::Blocks { m } => blocks(&ctx, m),
        Command::Table1 { max_order } => {
            let (rows, err) = table1(max_order, &ctx.classify_opts());
            if ctx.format == Format::Text {
                println!("{:<6} {:>11} {:>10}", "square", "lower bound", "actual tau");
                for r in &rows {
                    println!("{:<6} {:>11} {:>10}", r.label, r.lower_bound, r.actual_tau);
                }
            } else {
                ctx.emit(&json!({ "rows": rows, "complete": err.is_none() }))?;
            }
            match err {
                None => Ok(Outcome::Done),
                Some(Error::PartialReport(_) | Error::BudgetExceeded(_)) => Ok(Outcome::Partial),
                Some(e) => Err(e),
            }
        }
    }
}

fn transversal(ctx: &Ctx, square: &LatinSquare, action: Action, mode: Mode) -> Result<Outcome, Error> {
    let base = match mode {
        Mode::Transversal => SearchConstraints::transversal(),
        Mode::Suitable => SearchConstraints::suitable_diagonal(),
    }
    .budget(ctx.budget);
    let result = match action {
        Action::Find => engine::find(square, &base).map(|d| json!({ "found": d.map(|d| d.cols().to_vec()) })),
        Action::Count => engine::count(square, &base).map(|n| json!({ "count": n })),
        Action::Enumerate => {
            let mut all = Vec::new();
            let res = engine::enumerate(square, &base, |cols| {
                all.push(cols.to_vec());
                ControlFlow::Continue(())
            });
            match res {
                Err(Error::BudgetExceeded(_)) => {
                    ctx.emit(&json!({ "count": all.len(), "diagonals": all, "complete": false }))?;
                    return Ok(Outcome::Partial);
                }
                other => other.map(|n| json!({ "count": n, "diagonals": all, "complete": true })),
            }
        }
    };
    match result {
        Ok(v) => {
            ctx.emit(&v)?;
            Ok(Outcome::Done)
        }
        Err(Error::BudgetExceeded(b)) => {
            ctx.emit(&json!({ "budgetExceeded": b }))?;
            Ok(Outcome::Partial)
        }
        Err(e) => Err(e),
    }
}

fn pinned(ctx: &Ctx, spec: &FamilySpec) -> Result<Outcome, Error> {
    let square = spec.build()?;
    let cert = forced_entry_certificate(&square)?;
    let mut verdicts = Vec::new();
    let mut partial = false;
    for &e in &cert.forced {
        match is_pinned(&square, e, ctx.budget) {
            Ok(p) => verdicts.push(json!({ "entry": e, "pinned": p })),
            Err(Error::BudgetExceeded(_)) => {
                partial = true;
                verdicts.push(json!({ "entry": e, "pinned": null }));
            }
            Err(e) => return Err(e),
        }
    }
    ctx.emit(&json!({
        "label": spec.label(),
        "certificate": cert,
        "expectedCount": spec.order() / 6,
        "verdicts": verdicts,
    }))?;
    Ok(if partial { Outcome::Partial } else { Outcome::Done })
}

fn bounds(ctx: &Ctx, spec: &FamilySpec) -> Result<Outcome, Error> {
    let sets = bound_sets(spec)?;
    if spec.order() > DEFAULT_CLASSIFY_CAP && !ctx.long {
        ctx.emit(&BoundCheck::sets_only(&sets))?;
        return Ok(Outcome::Done);
    }
    let report = classify(&spec.build()?, &ctx.classify_opts())?;
    match verify_bound(&sets, &report) {
        Ok(check) => {
            ctx.emit(&check)?;
            Ok(Outcome::Done)
        }
        Err(Error::PartialReport(_)) => {
            ctx.emit(&BoundCheck::sets_only(&sets))?;
            Ok(Outcome::Partial)
        }
        Err(e) => Err(e),
    }
}

fn blocks(ctx: &Ctx, m: usize) -> Result<Outcome, Error> {
    let spec = FamilySpec::block(m)?;
    let square = spec.build()?;
    let tau_ok = verify_block_maps(&square, &automorphism_tau(m)?, m, &TAU_BLOCK_MAPS)?;
    let phi_ok = verify_block_maps(&square, &autotopism_phi(m)?, m, &PHI_BLOCK_MAPS)?;
    let check = verify_hit_theorem(m, ctx.budget)?;
    let partial = check.budget_exhausted || check.avoids_centre_refuted.is_none() || check.avoids_corner_refuted.is_none();
    let mut value = serde_json::to_value(&check)?;
    if let serde_json::Value::Object(map) = &mut value {
        map.insert("tauBlockMapsOK".into(), tau_ok.into());
        map.insert("phiBlockMapsOK".into(), phi_ok.into());
    }
    ctx.emit(&value)?;
    Ok(if partial { Outcome::Partial } else { Outcome::Done })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Partial) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded(_) | Error::PartialReport(_) => 3,
                _ => 2,
            })
        }
    }
}
