//! Runs several strategies on one problem and collects a report.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use satgb::coeff::{Field, Rational};
use satgb::engine::{
    run_strategy, run_strategy_modular, InhomGb, RemainderMode, RunStats, Selection, Strategy, StrategyConfig,
    WeakSatPolicy,
};
use satgb::vector::ModuleVector;
use satgb::AlgebraError;

use crate::parse::{vector_text, FieldSpec, ProblemSpec};
use crate::report::{BenchReport, ReportRow, REPORT_VERSION};

/// Resolves `A`, `H`, `S`, `sugar`, `homog`, `selfsat` and
/// `weaksat:{never|ymultiply|saturate-final}`.
pub fn strategy_by_name(name: &str) -> Option<Strategy> {
    let s = match name {
        "A" | "sugar" => Strategy::A,
        "H" | "homog" => Strategy::H,
        "S" | "selfsat" => Strategy::S,
        _ => {
            let policy = match name.strip_prefix("weaksat:")? {
                "never" => WeakSatPolicy::Never,
                "ymultiply" => WeakSatPolicy::YMultiplyToReduce,
                "saturate-final" => WeakSatPolicy::SaturateFinal,
                _ => return None,
            };
            Strategy::Custom {
                name: name.to_string(),
                config: StrategyConfig::new(Selection::BySugar, RemainderMode::WeakSat(policy)),
                homogenize: true,
            }
        }
    };
    Some(s)
}

/// How problems over `Q` are computed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Arithmetic {
    /// Images modulo primes, lifted and checked over `Q`.
    #[default]
    Modular,
    /// Rational arithmetic throughout.
    Direct,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub strategies: Vec<Strategy>,
    pub budget: Option<Duration>,
    pub workers: usize,
    pub arithmetic: Arithmetic,
}

/// A report plus the cross-strategy check.
#[derive(Clone, Debug)]
pub struct BenchOutcome {
    pub report: BenchReport,
    /// Whether every completed run produced the same reduced basis.
    pub consistent: bool,
    /// The reduced basis of the first completed run, printed.
    pub basis: Option<Vec<String>>,
}

/// Runs every strategy of `cfg` on `spec`, up to `cfg.workers` at a time.
/// Timeouts become rows marked `timedOut`; other errors abort.
pub fn run_benchmark(spec: &ProblemSpec, cfg: &BenchConfig) -> Result<BenchOutcome, AlgebraError> {
    let n = cfg.strategies.len();
    if n == 0 {
        return Err(AlgebraError::Domain("no strategies to run".into()));
    }
    let results: Mutex<Vec<Option<Result<Computed, AlgebraError>>>> = Mutex::new((0..n).map(|_| None).collect());
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..cfg.workers.clamp(1, n) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= n {
                    break;
                }
                let out = compute(spec, &cfg.strategies[i], cfg.budget, false, cfg.arithmetic);
                results.lock().expect("no panics while holding the lock")[i] = Some(out);
            });
        }
    });
    let results = results.into_inner().expect("workers finished");

    let mut rows = Vec::with_capacity(n);
    let mut first: Option<Vec<String>> = None;
    let mut consistent = true;
    for (strategy, result) in cfg.strategies.iter().zip(results) {
        match result.expect("every strategy ran") {
            Ok(out) => {
                rows.push(ReportRow {
                    strategy: strategy.name().to_string(),
                    gb_len: Some(out.stats.gb_len),
                    poly_red: Some(out.stats.poly_red),
                    pairs_ins: Some(out.stats.pairs_ins),
                    wall_time_sec: out.stats.wall_time.as_secs_f64(),
                    timed_out: false,
                });
                match &first {
                    Some(f) => consistent &= *f == out.basis,
                    None => first = Some(out.basis),
                }
            }
            Err(AlgebraError::Timeout) => rows.push(ReportRow {
                strategy: strategy.name().to_string(),
                gb_len: None,
                poly_red: None,
                pairs_ins: None,
                wall_time_sec: cfg.budget.unwrap_or_default().as_secs_f64(),
                timed_out: true,
            }),
            Err(e) => return Err(e),
        }
    }
    let report = BenchReport {
        version: REPORT_VERSION,
        problem: spec.name.clone(),
        field: spec.field.report_name(),
        ordering: spec.ring.order_spec().to_string(),
        rows,
    };
    Ok(BenchOutcome { report, consistent, basis: first })
}

/// The reduced basis of `spec` under one strategy, over the declared field.
pub fn compute(
    spec: &ProblemSpec,
    strategy: &Strategy,
    budget: Option<Duration>,
    trace: bool,
    arithmetic: Arithmetic,
) -> Result<Computed, AlgebraError> {
    let show = |b: &[ModuleVector<_>]| b.iter().map(|v| vector_text(v, &spec.ring)).collect();
    match (spec.field, arithmetic) {
        (FieldSpec::Q, Arithmetic::Modular) => {
            let out = run_strategy_modular(strategy, &spec.gens, &spec.ring, budget, trace)?;
            Ok(Computed { basis: show(&out.reduced), stats: out.stats, transcript: out.transcript.map(|t| t.render()) })
        }
        (FieldSpec::Q, Arithmetic::Direct) => {
            Ok(Computed::from_run(spec, run_strategy::<Rational>(strategy, &spec.gens, &spec.ring, budget, trace)?))
        }
        (FieldSpec::Zp(p), _) => Ok(Computed::from_run(spec, run_strategy(strategy, &spec.gens_mod(p)?, &spec.ring, budget, trace)?)),
    }
}

/// Field-independent view of one run.
#[derive(Clone, Debug)]
pub struct Computed {
    pub basis: Vec<String>,
    pub stats: RunStats,
    pub transcript: Option<String>,
}

impl Computed {
    fn from_run<F: Field>(spec: &ProblemSpec, out: InhomGb<F>) -> Self {
        Computed {
            basis: out.reduced.iter().map(|v| vector_text(v, &spec.ring)).collect(),
            stats: out.stats,
            transcript: out.run.transcript.map(|t| t.render()),
        }
    }
}
