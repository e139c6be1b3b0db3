//! `properpath`: shortest properly coloured paths in 2-edge-coloured hypercubes.
//!
//! Exit codes: 0 success, 1 verification mismatch or oracle disagreement,
//! 2 usage or parse error, 3 oracle budget exceeded.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use properpath::counting::{count_for_profile, DeficitLength};
use properpath::oracle::{
    build_colored_hypercube, oracle_count_shortest, OracleError, DEFAULT_BUDGET,
};
use properpath::report::{CountRecord, CountTable, DistanceRecord};
use properpath::verify::{
    run_verification, run_verification_with_workers, ColoringSet, VerifyConfig,
};
use properpath::{enumerate_shortest_proper_paths, pair_profile, Coloring, Vertex};

/// Worker thread count for `verify`.
const WORKERS_ENV: &str = "PROPERPATH_WORKERS";

#[derive(Parser, Debug)]
#[command(
    name = "properpath",
    version,
    about = "Shortest properly coloured paths in edge-coloured hypercubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class differences, parity and proper distance of a vertex pair.
    Distance {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
        format: RecordFormat,
    },
    /// Exact number of shortest proper paths, optionally checked by brute force.
    Count {
        #[command(flatten)]
        pair: PairArgs,
        /// Also count by exhaustive search and report agreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = RecordFormat::Text)]
        format: RecordFormat,
    },
    /// List shortest proper paths in deterministic order.
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        limit: Option<u64>,
        #[arg(long, value_enum, default_value_t = PathFormat::Flips)]
        format: PathFormat,
    },
    /// Sweep all vertex pairs and compare formulas against brute force.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        /// `all-j` or `random-jstar:K`.
        #[arg(long, default_value = "all-j")]
        colorings: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Seed for random colourings.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Deficit-side flip count used by the formula under test.
        #[arg(long, value_enum, default_value_t = DeficitArg::SurplusMinusGamma, hide = true)]
        deficit_length: DeficitArg,
    },
    /// Path counts for every (o, t) profile of a colouring.
    Table {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        coloring: ColoringArgs,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ColoringArgs {
    /// Colour dimensions 1..=J with colour 1.
    #[arg(long)]
    j: Option<usize>,
    /// Comma-separated class-1 dimensions, e.g. `1,3,4`.
    #[arg(long)]
    class1: Option<String>,
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    coloring: ColoringArgs,
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RecordFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PathFormat {
    Flips,
    Vertices,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DeficitArg {
    SurplusMinusGamma,
    HalfDistanceCeil,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl std::fmt::Display) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl ColoringArgs {
    fn resolve(&self, n: usize) -> Result<Coloring, Failure> {
        let c = match (&self.j, &self.class1) {
            (Some(j), _) => Coloring::prefix(n, *j),
            (None, Some(list)) => Coloring::parse(n, list),
            (None, None) => unreachable!("clap enforces one colouring flag"),
        };
        c.map_err(Failure::usage)
    }
}

impl PairArgs {
    fn resolve(&self) -> Result<(Coloring, Vertex, Vertex), Failure> {
        let c = self.coloring.resolve(self.n)?;
        let parse = |s: &str| -> Result<Vertex, Failure> {
            let v: Vertex = s.parse().map_err(Failure::usage)?;
            if v.dims() != self.n {
                return Err(Failure::usage(format!(
                    "vertex {s} has {} dimensions but --n is {}",
                    v.dims(),
                    self.n
                )));
            }
            Ok(v)
        };
        Ok((c, parse(&self.u)?, parse(&self.v)?))
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let io_err = |e: io::Error| Failure {
        code: 2,
        message: e.to_string(),
    };
    match cli.command {
        Command::Distance { pair, format } => {
            let (c, u, v) = pair.resolve()?;
            let rec = DistanceRecord::compute(&u, &v, &c).map_err(Failure::usage)?;
            match format {
                RecordFormat::Json => writeln!(out, "{}", to_json(&rec)),
                RecordFormat::Text => writeln!(
                    out,
                    "o={} t={} gamma={} pd={}",
                    rec.o, rec.t, rec.gamma, rec.pd
                ),
            }
            .map_err(io_err)?;
            Ok(0)
        }
        Command::Count {
            pair,
            oracle,
            budget,
            format,
        } => {
            let (c, u, v) = pair.resolve()?;
            let profile = pair_profile(&u, &v, &c).map_err(Failure::usage)?;
            let pp = count_for_profile(&profile);
            let mut rec = CountRecord {
                n: c.dims(),
                coloring: c.to_string(),
                u: u.to_string(),
                v: v.to_string(),
                pd: profile.pd,
                pp,
                oracle: None,
                agree: None,
            };
            if oracle {
                let g = build_colored_hypercube(c.dims(), &c).map_err(Failure::usage)?;
                let id = |x: &Vertex| x.index().expect("oracle range is packed") as usize;
                match oracle_count_shortest(&g, id(&u), id(&v), budget) {
                    Ok(found) => {
                        rec.agree = Some(found == rec.pp);
                        rec.oracle = Some(found);
                    }
                    Err(e @ OracleError::BudgetExceeded(_)) => {
                        return Err(Failure {
                            code: 3,
                            message: e.to_string(),
                        })
                    }
                    Err(e) => return Err(Failure::usage(e)),
                }
            }
            match format {
                RecordFormat::Json => writeln!(out, "{}", to_json(&rec)),
                RecordFormat::Text => {
                    let mut line = format!("pd={} pp={}", rec.pd, rec.pp);
                    if let (Some(o), Some(a)) = (&rec.oracle, rec.agree) {
                        line.push_str(&format!(" oracle={o} agree={a}"));
                    }
                    writeln!(out, "{line}")
                }
            }
            .map_err(io_err)?;
            Ok(if rec.agree == Some(false) { 1 } else { 0 })
        }
        Command::Enumerate {
            pair,
            limit,
            format,
        } => {
            let (c, u, v) = pair.resolve()?;
            let paths = enumerate_shortest_proper_paths(&u, &v, &c).map_err(Failure::usage)?;
            let mut total = 0u64;
            for p in paths.take(limit.map_or(usize::MAX, |k| k as usize)) {
                let line = match format {
                    PathFormat::Flips if p.is_empty() => "-".to_string(),
                    PathFormat::Flips => p
                        .flips()
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(","),
                    PathFormat::Vertices => p.vertices_text(),
                };
                writeln!(out, "{line}").map_err(io_err)?;
                total += 1;
            }
            writeln!(out, "total {total}").map_err(io_err)?;
            Ok(0)
        }
        Command::Verify {
            max_n,
            min_n,
            colorings,
            budget,
            seed,
            deficit_length,
        } => {
            let set = ColoringSet::parse(&colorings, seed).ok_or_else(|| {
                Failure::usage(format!(
                    "--colorings must be `all-j` or `random-jstar:K`, got {colorings:?}"
                ))
            })?;
            if max_n > properpath::oracle::MAX_ORACLE_DIMS {
                return Err(Failure::usage(format!(
                    "--max-n {max_n} exceeds the oracle limit of {}",
                    properpath::oracle::MAX_ORACLE_DIMS
                )));
            }
            let cfg = VerifyConfig {
                min_n,
                max_n,
                colorings: set,
                budget,
                deficit: match deficit_length {
                    DeficitArg::SurplusMinusGamma => DeficitLength::SurplusMinusGamma,
                    DeficitArg::HalfDistanceCeil => DeficitLength::HalfDistanceCeil,
                },
            };
            let workers = match std::env::var(WORKERS_ENV) {
                Ok(s) => Some(s.trim().parse::<usize>().map_err(|_| {
                    Failure::usage(format!(
                        "{WORKERS_ENV} must be a positive integer, got {s:?}"
                    ))
                })?),
                Err(_) => None,
            };
            let report = match workers {
                Some(w) if w > 0 => run_verification_with_workers(&cfg, w),
                _ => run_verification(&cfg),
            };
            writeln!(out, "{}", to_json(&report)).map_err(io_err)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Table {
            n,
            coloring,
            format,
        } => {
            let c = coloring.resolve(n)?;
            let table = CountTable::compute(&c);
            match format {
                TableFormat::Json => writeln!(out, "{}", to_json(&table)),
                TableFormat::Csv => write!(out, "{}", table.to_csv()),
            }
            .map_err(io_err)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
