//! Gröbner bases of inhomogeneous input: homogenize, run a variant,
//! dehomogenize, interreduce.

use std::fmt;
use std::time::{Duration, Instant};

use super::check::interreduce_gb;
use super::{learned_buchberger, GbResult, Learn, RunStats, StrategyConfig, Transcript};
use crate::coeff::Field;
use crate::error::Result;
use crate::homog::{dehomogenize, homogenize_generators};
use crate::ring::Ring;
use crate::vector::ModuleVector;

/// The strategies compared in benchmark reports.
#[derive(Clone, Debug, PartialEq)]
pub enum Strategy {
    /// Sugar selection on the plain (inhomogeneous) input.
    A,
    /// Degree selection on the homogenized input.
    H,
    /// Self-saturating, sugar selection, on the homogenized input.
    S,
    /// Any configuration, on homogenized (`homogenize: true`) or plain input.
    Custom { name: String, config: StrategyConfig, homogenize: bool },
}

impl Strategy {
    pub fn name(&self) -> &str {
        match self {
            Strategy::A => "A",
            Strategy::H => "H",
            Strategy::S => "S",
            Strategy::Custom { name, .. } => name,
        }
    }

    pub fn config(&self) -> StrategyConfig {
        match self {
            Strategy::A => StrategyConfig::sugar(),
            Strategy::H => StrategyConfig::homogeneous(),
            Strategy::S => StrategyConfig::self_saturating(),
            Strategy::Custom { config, .. } => config.clone(),
        }
    }

    pub fn homogenizes(&self) -> bool {
        match self {
            Strategy::A => false,
            Strategy::H | Strategy::S => true,
            Strategy::Custom { homogenize, .. } => *homogenize,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of an inhomogeneous computation.
#[derive(Clone, Debug)]
pub struct InhomGb<C> {
    /// The reduced `σ`-Gröbner basis of the input in the plain ring.
    pub reduced: Vec<ModuleVector<C>>,
    /// The raw run (in the homogenized ring when the input was homogenized).
    pub run: GbResult<C>,
    /// `stats.gb_len` counts the reduced basis of the run itself, i.e. before
    /// dehomogenizing for homogenized runs.
    pub stats: RunStats,
}

impl<C: Field> InhomGb<C> {
    pub fn transcript(&self) -> Option<&Transcript> {
        self.run.transcript.as_ref()
    }
}

/// Homogenizes `vs`, runs [`buchberger`] in the homogenized ring,
/// dehomogenizes and interreduces. Zero generators are skipped.
pub fn compute_inhom_gb<C: Field>(vs: &[ModuleVector<C>], plain: &Ring, cfg: &StrategyConfig) -> Result<InhomGb<C>> {
    learned_inhom_gb(vs, plain, cfg, Learn::Off)
}

fn learned_inhom_gb<C: Field>(
    vs: &[ModuleVector<C>],
    plain: &Ring,
    cfg: &StrategyConfig,
    learn: Learn<'_>,
) -> Result<InhomGb<C>> {
    let start = Instant::now();
    let hom = plain.homogenized()?;
    let nonzero: Vec<ModuleVector<C>> = vs.iter().filter(|v| !v.is_zero()).cloned().collect();
    let gens = homogenize_generators(&nonzero, &hom)?;
    let cfg = remaining_budget(cfg, start);
    let run = learned_buchberger(&gens, &hom, &cfg, learn)?;
    let deh = run.basis.iter().map(|b| dehomogenize(&b.vector, &hom)).collect::<Result<Vec<_>>>()?;
    let reduced = interreduce_gb(&deh, plain)?;
    let mut stats = run.stats.clone();
    stats.wall_time = start.elapsed();
    Ok(InhomGb { reduced, run, stats })
}

fn remaining_budget(cfg: &StrategyConfig, start: Instant) -> StrategyConfig {
    let mut cfg = cfg.clone();
    cfg.budget = cfg.budget.map(|b| b.saturating_sub(start.elapsed()).max(Duration::from_nanos(1)));
    cfg
}

/// Runs one named strategy on the plain-ring input `vs`.
pub fn run_strategy<C: Field>(
    strategy: &Strategy,
    vs: &[ModuleVector<C>],
    plain: &Ring,
    budget: Option<Duration>,
    trace: bool,
) -> Result<InhomGb<C>> {
    learned_run(strategy, vs, plain, budget, trace, Learn::Off)
}

pub(crate) fn learned_run<C: Field>(
    strategy: &Strategy,
    vs: &[ModuleVector<C>],
    plain: &Ring,
    budget: Option<Duration>,
    trace: bool,
    learn: Learn<'_>,
) -> Result<InhomGb<C>> {
    let cfg = strategy.config().with_budget(budget).with_trace(trace);
    if strategy.homogenizes() {
        return learned_inhom_gb(vs, plain, &cfg, learn);
    }
    let run = learned_buchberger(vs, plain, &cfg, learn)?;
    Ok(InhomGb { reduced: run.reduced.clone(), stats: run.stats.clone(), run })
}
