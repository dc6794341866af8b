use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use satgb::engine::{Criteria, Strategy};
use satgb::AlgebraError;
use satgb_bench::corpus::cyclic;
use satgb_bench::parse::{parse_system, ProblemSpec};
use satgb_bench::report::ReportFormat;
use satgb_bench::runner::{compute, run_benchmark, strategy_by_name, Arithmetic, BenchConfig};
use serde_json::json;

const EXIT_FAILURE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_REFUSED: u8 = 3;
const EXIT_TIMEOUT: u8 = 4;

#[derive(Parser)]
#[command(name = "satgb", version, about = "Gröbner bases of inhomogeneous ideals and modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the reduced Gröbner basis of a problem file.
    Compute {
        file: PathBuf,
        /// sugar | homog | selfsat | weaksat:{never|ymultiply|saturate-final}
        #[arg(long, default_value = "selfsat")]
        strategy: String,
        #[arg(long)]
        no_coprime: bool,
        #[arg(long)]
        no_chain: bool,
        /// Print run counters after the basis.
        #[arg(long)]
        stats: bool,
        /// Write the event transcript to this file.
        #[arg(long)]
        transcript: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Time budget in seconds.
        #[arg(long)]
        budget: Option<f64>,
        /// Over Q, use rational arithmetic instead of lifting from primes.
        #[arg(long)]
        direct: bool,
    },
    /// Compare strategies on a problem file or on `cyclic:<k>`.
    Bench {
        problem: String,
        #[arg(long, default_value = "A,H,S", value_delimiter = ',')]
        strategies: Vec<String>,
        /// Time budget per strategy in seconds.
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Over Q, use rational arithmetic instead of lifting from primes.
        #[arg(long)]
        direct: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let code = match e {
            AlgebraError::Refused(_) => EXIT_REFUSED,
            AlgebraError::Timeout => EXIT_TIMEOUT,
            AlgebraError::Parse(_) => EXIT_PARSE,
            _ => EXIT_FAILURE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: EXIT_FAILURE, message }
}

fn load(path: &Path) -> Result<ProblemSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let spec = parse_system(&text).map_err(|e| Failure { code: EXIT_PARSE, message: format!("{}:{e}", path.display()) })?;
    let name = path.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    Ok(spec.with_name(name))
}

fn budget(secs: Option<f64>) -> Result<Option<Duration>, Failure> {
    secs.map(|s| Duration::try_from_secs_f64(s).map_err(|_| usage(format!("invalid budget `{s}`")))).transpose()
}

fn resolve(name: &str) -> Result<Strategy, Failure> {
    strategy_by_name(name).ok_or_else(|| usage(format!("unknown strategy `{name}`")))
}

#[allow(clippy::too_many_arguments)]
fn run_compute(
    file: &Path,
    strategy: &str,
    no_coprime: bool,
    no_chain: bool,
    stats: bool,
    transcript: Option<&Path>,
    json: bool,
    budget_secs: Option<f64>,
    arithmetic: Arithmetic,
) -> Result<(), Failure> {
    let spec = load(file)?;
    let mut s = resolve(strategy)?;
    if no_coprime || no_chain {
        let criteria = Criteria { coprime: !no_coprime, chain: !no_chain };
        s = Strategy::Custom {
            name: s.name().to_string(),
            config: s.config().with_criteria(criteria),
            homogenize: s.homogenizes(),
        };
    }
    let out = compute(&spec, &s, budget(budget_secs)?, transcript.is_some(), arithmetic)?;
    if let (Some(path), Some(text)) = (transcript, &out.transcript) {
        std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    if json {
        let doc = json!({
            "problem": spec.name,
            "field": spec.field.report_name(),
            "ordering": spec.ring.order_spec().to_string(),
            "strategy": strategy,
            "basis": out.basis,
            "stats": {
                "gbLen": out.stats.gb_len,
                "polyRed": out.stats.poly_red,
                "pairsIns": out.stats.pairs_ins,
                "wallTimeSec": out.stats.wall_time.as_secs_f64(),
            },
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
        return Ok(());
    }
    for v in &out.basis {
        println!("{v}");
    }
    if stats {
        println!("# gbLen {}", out.stats.gb_len);
        println!("# polyRed {}", out.stats.poly_red);
        println!("# pairsIns {}", out.stats.pairs_ins);
        println!("# wallTimeSec {:.3}", out.stats.wall_time.as_secs_f64());
    }
    Ok(())
}

fn run_bench(
    problem: &str,
    strategies: &[String],
    budget_secs: Option<f64>,
    json: bool,
    workers: usize,
    arithmetic: Arithmetic,
) -> Result<(), Failure> {
    let spec = match problem.strip_prefix("cyclic:") {
        Some(k) => {
            let k: usize = k.parse().map_err(|_| Failure { code: EXIT_PARSE, message: format!("invalid cyclic size `{k}`") })?;
            cyclic(k)?
        }
        None => load(Path::new(problem))?,
    };
    let strategies = strategies.iter().map(|s| resolve(s.trim())).collect::<Result<Vec<_>, _>>()?;
    let cfg = BenchConfig { strategies, budget: budget(budget_secs)?, workers, arithmetic };
    let out = run_benchmark(&spec, &cfg)?;
    let format = if json { ReportFormat::Json } else { ReportFormat::Text };
    println!("{}", out.report.emit(format).trim_end());
    if !out.consistent {
        eprintln!("warning: strategies disagree on the reduced basis");
        return Err(Failure { code: EXIT_FAILURE, message: "inconsistent results".into() });
    }
    Ok(())
}

fn arithmetic(direct: bool) -> Arithmetic {
    if direct {
        Arithmetic::Direct
    } else {
        Arithmetic::Modular
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Compute { file, strategy, no_coprime, no_chain, stats, transcript, json, budget, direct } => run_compute(
            file,
            strategy,
            *no_coprime,
            *no_chain,
            *stats,
            transcript.as_deref(),
            *json,
            *budget,
            arithmetic(*direct),
        ),
        Command::Bench { problem, strategies, budget, json, workers, direct } => {
            run_bench(problem, strategies, *budget, *json, *workers, arithmetic(*direct))
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("satgb: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
