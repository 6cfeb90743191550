//! Batch command-line interface to the plurigenus library.
//!
//! All numeric output uses the exact `p/q` serialization; identical
//! invocations produce identical bytes.  Exit status: 0 on success, 1 on
//! usage errors, 2 when `verify-paper` finds a discrepancy.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use reid3::search::{filtered_to_json, solutions_to_json};
use reid3::reid::{table_to_csv, table_to_json};
use reid3::{
    build_table, enumerate, enumerate_with_filters, plurigenus, reproduce_all, solve_k3,
    Basket, BoundQuery, GeometrySpec, ImageDim, Rational, SearchProblem, VectorFamily,
};

#[derive(Parser)]
#[command(
    name = "reid3",
    about = "Exact plurigenus arithmetic and basket searches for minimal 3-folds of general type",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Nabla,
    Lambda,
}

impl From<Family> for VectorFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Nabla => VectorFamily::Nabla,
            Family::Lambda => VectorFamily::Lambda,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Regenerate the invariant table of nabla'/lambda' vectors
    Table {
        /// Largest singularity index to include
        #[arg(long, default_value_t = 27)]
        rmax: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate plurigenera P_m for given K^3, chi and basket
    Plurigenus {
        /// K^3 as an exact fraction p/q
        #[arg(long)]
        k3: String,
        #[arg(long)]
        chi: i64,
        /// Basket spec: comma-separated mult*r/a items, e.g. 3*2/1,2*5/3
        #[arg(long, default_value = "")]
        basket: String,
        /// A single exponent m >= 2
        #[arg(long, conflicts_with = "m_range")]
        m: Option<u32>,
        /// An inclusive exponent range A..B
        #[arg(long = "m-range")]
        m_range: Option<String>,
    },
    /// Solve for the K^3 giving a prescribed plurigenus P_m
    SolveK3 {
        #[arg(long, default_value = "")]
        basket: String,
        #[arg(long)]
        chi: i64,
        #[arg(long)]
        m: u32,
        /// The prescribed value of P_m, as an exact fraction
        #[arg(long)]
        pm: String,
    },
    /// Enumerate all basket multisets summing to a target vector
    Search {
        #[arg(long, value_enum)]
        family: Family,
        /// Comma-separated integer target, e.g. 10,34,9,14
        #[arg(long)]
        target: String,
        /// Largest singularity index to draw candidates from
        /// (default: 27 for nabla, 25 for lambda)
        #[arg(long)]
        rmax: Option<u64>,
        /// Annotate solutions with l(2), K^3 and the Miyaoka-Reid verdict
        #[arg(long, value_enum, default_value_t = Switch::On)]
        filters: Switch,
        #[arg(long, value_enum, default_value_t = SearchFormat::Text)]
        format: SearchFormat,
    },
    /// Compute the certified birationality bound for pluricanonical maps
    Bound {
        /// P_m >= 1 holds for all m >= m0
        #[arg(long)]
        m0: u32,
        /// P_{m1} >= 2
        #[arg(long)]
        m1: u32,
        /// Image dimension: 1, 2, 3 or unknown
        #[arg(long)]
        d: String,
        /// Number of sections available (relevant when d = 1)
        #[arg(long, default_value_t = 2)]
        ngamma: u32,
    },
    /// Reproduce every published computation and report discrepancies
    VerifyPaper {
        /// Write the full JSON report to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A usage-level failure: message plus the flag it concerns.
struct CliError(String);

impl CliError {
    fn new(flag: &str, detail: impl std::fmt::Display) -> Self {
        CliError(format!("invalid value for {flag}: {detail}"))
    }
}

fn parse_rational(flag: &str, s: &str) -> Result<Rational, CliError> {
    s.parse().map_err(|e| CliError::new(flag, e))
}

fn parse_basket(s: &str) -> Result<Basket, CliError> {
    s.parse().map_err(|e| CliError::new("--basket", e))
}

fn parse_target(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::new("--target", format!("`{part}` is not an integer")))
        })
        .collect()
}

fn parse_m_range(s: &str) -> Result<(u32, u32), CliError> {
    let err = || CliError::new("--m-range", format!("`{s}` is not of the form A..B with 2 <= A <= B"));
    let (a, b) = s.split_once("..").ok_or_else(err)?;
    let a: u32 = a.trim().parse().map_err(|_| err())?;
    let b: u32 = b.trim().parse().map_err(|_| err())?;
    if a < 2 || a > b {
        return Err(err());
    }
    Ok((a, b))
}

fn parse_dim(s: &str) -> Result<ImageDim, CliError> {
    match s {
        "1" => Ok(ImageDim::D1),
        "2" => Ok(ImageDim::D2),
        "3" => Ok(ImageDim::D3),
        "unknown" => Ok(ImageDim::Unknown),
        other => Err(CliError::new("--d", format!("`{other}` is not one of 1, 2, 3, unknown"))),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Table { rmax, format, out } => {
            if rmax < 2 {
                return Err(CliError::new("--rmax", "the table starts at index 2"));
            }
            let rows = build_table(rmax);
            let content = match format {
                TableFormat::Csv => table_to_csv(&rows),
                TableFormat::Json => table_to_json(&rows),
            };
            emit(&out, &content)?;
        }
        Command::Plurigenus { k3, chi, basket, m, m_range } => {
            let spec = GeometrySpec {
                k3: parse_rational("--k3", &k3)?,
                chi,
                basket: parse_basket(&basket)?,
            };
            let (lo, hi) = match (m, m_range) {
                (Some(m), None) => (m, m),
                (None, Some(range)) => parse_m_range(&range)?,
                (None, None) => {
                    return Err(CliError("one of --m or --m-range is required".into()))
                }
                (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
            };
            let mut buf = String::new();
            for m in lo..=hi {
                let value = plurigenus(&spec, m).map_err(|e| CliError::new("--m", e))?;
                if lo == hi {
                    writeln!(buf, "{value}").unwrap();
                } else {
                    writeln!(buf, "P{m} = {value}").unwrap();
                }
            }
            print!("{buf}");
        }
        Command::SolveK3 { basket, chi, m, pm } => {
            let basket = parse_basket(&basket)?;
            let pm = parse_rational("--pm", &pm)?;
            let k3 = solve_k3(&basket, chi, m, &pm).map_err(|e| CliError::new("--m", e))?;
            println!("{k3}");
        }
        Command::Search { family, target, rmax, filters, format } => {
            let family: VectorFamily = family.into();
            let target = parse_target(&target)?;
            let rmax = rmax.unwrap_or_else(|| family.default_r_max());
            if rmax < 2 {
                return Err(CliError::new("--rmax", "candidate types start at index 2"));
            }
            let problem = SearchProblem::from_table(family, target, rmax)
                .map_err(|e| CliError::new("--target", e))?;
            match (filters, format) {
                (Switch::On, SearchFormat::Json) => {
                    print!("{}", filtered_to_json(&enumerate_with_filters(&problem, 1)));
                }
                (Switch::Off, SearchFormat::Json) => {
                    print!("{}", solutions_to_json(&enumerate(&problem)));
                }
                (Switch::On, SearchFormat::Text) => {
                    let report = enumerate_with_filters(&problem, 1);
                    for a in &report.solutions {
                        let verdict = if a.is_eliminated() { "eliminated" } else { "viable" };
                        println!(
                            "{}  l(2)={} K3={} miyaoka={} {}",
                            a.solution, a.l2, a.k3, a.miyaoka_sum, verdict
                        );
                    }
                    println!("{} solution(s)", report.solutions.len());
                }
                (Switch::Off, SearchFormat::Text) => {
                    let solutions = enumerate(&problem);
                    for s in &solutions {
                        println!("{s}");
                    }
                    println!("{} solution(s)", solutions.len());
                }
            }
        }
        Command::Bound { m0, m1, d, ngamma } => {
            let d = parse_dim(&d)?;
            let query = BoundQuery::new(m0, m1, d, ngamma)
                .map_err(|e| CliError(format!("invalid bound query: {e}")))?;
            println!("{}", reid3::birationality_bound(&query));
        }
        Command::VerifyPaper { out } => {
            let report = reproduce_all();
            match &out {
                Some(path) => {
                    emit(&Some(path.clone()), &report.to_json())?;
                    println!("{}", report.summary());
                }
                None => {
                    print!("{}", report.render_text());
                }
            }
            if !report.verdict.is_match() {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not usage errors
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
