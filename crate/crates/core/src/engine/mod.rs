//! Buchberger's algorithm with pluggable selection and remainder strategies.
//!
//! One body serves every variant: the plain algorithm, the weak
//! self-saturating one (remainders may be replaced by same-saturation vectors
//! during division) and the self-saturating one (remainders are saturated).

mod check;
mod inhom;
mod modular;
mod pairs;
mod reduce;
mod transcript;

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::grading::Degree;
use crate::homog::common_y_power;
use crate::ring::Ring;
use crate::sugar::{companion_exponent, init_sugar, Sweetener};
use crate::term::{DivMask, ModuleTerm};
use crate::vector::ModuleVector;

pub use check::{interreduce, is_groebner_basis, s_vector};
pub use inhom::{compute_inhom_gb, run_strategy, InhomGb, Strategy};
pub use modular::{run_strategy_modular, ModularGb};
pub use pairs::CriticalPair;
pub use reduce::{remainder, sat_remainder, weak_sat_remainder};
pub use transcript::{Event, Transcript};

use pairs::PairSet;
use reduce::{Reducer, Work};

/// Step (2a): which pending item is processed next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    ByDegree,
    BySugar,
    ByInsertion,
}

/// What a substitution hook may do to the current remainder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    Keep,
    Saturate,
    /// Multiply by the least `y`-power that makes the head reducible, if any.
    MultiplyToReduce,
}

/// The state a [`SubstitutionHook`] is shown before each head reduction step
/// (`is_final == false`) and once on the irreducible remainder.
#[derive(Clone, Copy, Debug)]
pub struct HookContext<'a> {
    /// Index of the remainder computation within the run.
    pub call: u64,
    pub step: usize,
    pub head: &'a ModuleTerm,
    pub is_final: bool,
}

/// User-supplied substitution policy for the weak self-saturating remainder.
pub trait SubstitutionHook: Send + Sync + fmt::Debug {
    fn choose(&self, ctx: &HookContext<'_>) -> Substitution;
}

#[derive(Clone, Debug)]
pub enum WeakSatPolicy {
    /// Plain division.
    Never,
    /// When the head is irreducible but its y-free part is divisible by the
    /// y-free part of some leading term, multiply by the least y-power.
    YMultiplyToReduce,
    /// Saturate the final irreducible remainder.
    SaturateFinal,
    Custom(Arc<dyn SubstitutionHook>),
}

impl PartialEq for WeakSatPolicy {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (WeakSatPolicy::Custom(a), WeakSatPolicy::Custom(b)) => Arc::ptr_eq(a, b),
            _ => std::mem::discriminant(self) == std::mem::discriminant(other),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RemainderMode {
    Plain,
    WeakSat(WeakSatPolicy),
    /// Saturate every final remainder.
    SelfSat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionDepth {
    HeadOnly,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Criteria {
    /// Skip pairs with coprime leading terms (rank-1 only).
    pub coprime: bool,
    /// Gebauer–Möller chain criteria.
    pub chain: bool,
}

impl Default for Criteria {
    fn default() -> Self {
        Criteria { coprime: true, chain: true }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StrategyConfig {
    pub selection: Selection,
    pub remainder: RemainderMode,
    pub criteria: Criteria,
    pub depth: ReductionDepth,
    pub budget: Option<Duration>,
    pub trace: bool,
}

impl StrategyConfig {
    pub fn new(selection: Selection, remainder: RemainderMode) -> Self {
        StrategyConfig {
            selection,
            remainder,
            criteria: Criteria::default(),
            depth: ReductionDepth::Full,
            budget: None,
            trace: false,
        }
    }

    /// Sugar selection with plain remainders (strategy A on the plain ring).
    pub fn sugar() -> Self {
        Self::new(Selection::BySugar, RemainderMode::Plain)
    }

    /// Degree selection, no substitutions (strategy H on homogenized data).
    pub fn homogeneous() -> Self {
        Self::new(Selection::ByDegree, RemainderMode::WeakSat(WeakSatPolicy::Never))
    }

    /// Sugar selection with saturated remainders (strategy S).
    pub fn self_saturating() -> Self {
        Self::new(Selection::BySugar, RemainderMode::SelfSat)
    }

    pub fn weak_sat(policy: WeakSatPolicy) -> Self {
        Self::new(Selection::BySugar, RemainderMode::WeakSat(policy))
    }

    pub fn with_trace(mut self, on: bool) -> Self {
        self.trace = on;
        self
    }

    pub fn with_budget(mut self, budget: Option<Duration>) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_criteria(mut self, criteria: Criteria) -> Self {
        self.criteria = criteria;
        self
    }

    pub fn with_depth(mut self, depth: ReductionDepth) -> Self {
        self.depth = depth;
        self
    }
}

/// A basis element: a homogeneous (or plain) vector with its sugar. The
/// vector is kept in the field's normal form (see [`ModuleVector::normalized`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement<C> {
    pub vector: ModuleVector<C>,
    /// `a` with `vector^sw = y^a vector^sat` (empty in the plain ring).
    pub sweetener: Sweetener,
    pub sugar: Degree,
    /// `deg_W̄(vector)`, or `TopDeg_W(vector)` in the plain ring.
    pub degree: Degree,
    pub birth: usize,
    /// `sugar - deg(x-part of LT)`: a reduction step by this element with
    /// multiplier `t` yields sugar `deg(t_x LT_x) + ecart`.
    pub(crate) ecart: Degree,
    pub(crate) mask: DivMask,
}

impl<C: Field> BasisElement<C> {
    pub fn leading_term(&self) -> &ModuleTerm {
        self.vector.leading_term().expect("basis elements are non-zero")
    }

    fn build(vector: ModuleVector<C>, sugar: Degree, birth: usize, ring: &Ring) -> Result<Self> {
        let degree = if ring.is_homogenized() {
            ring.degree(vector.leading_term().expect("non-zero"))?
        } else {
            ring.grading().top_deg(&vector, 0)?
        };
        let sweetener = if ring.is_homogenized() {
            let s = companion_exponent(&sugar, &degree)?;
            let r = common_y_power(&vector, ring.m());
            s.iter().zip(&r).map(|(a, b)| a + b).collect()
        } else {
            Sweetener::new()
        };
        let lt = vector.leading_term().expect("non-zero");
        let x_only = ModuleTerm::new(lt.pp.replace_y(&Sweetener::from_elem(0, ring.m())), lt.component);
        let ecart = sugar.checked_sub(&ring.degree(&x_only)?)?;
        let mask = lt.pp.div_mask();
        Ok(BasisElement { vector, sweetener, sugar, degree, birth, ecart, mask })
    }

    /// Wraps arbitrary non-zero vectors as basis elements with their initial sugar.
    pub fn from_vectors(vs: &[ModuleVector<C>], ring: &Ring) -> Result<Vec<Self>> {
        vs.iter()
            .filter(|v| !v.is_zero())
            .enumerate()
            .map(|(i, v)| {
                let (_, sugar) = init_sugar(v, ring)?;
                Self::build(v.normalized(), sugar, i, ring)
            })
            .collect()
    }
}

/// Counters of one run.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunStats {
    /// Cardinality of the reduced basis.
    pub gb_len: usize,
    /// Step (2b) invocations whose input was a pair.
    pub poly_red: usize,
    /// Pairs formed in step (2c), before the criteria.
    pub pairs_ins: usize,
    pub wall_time: Duration,
}

impl RunStats {
    /// Equality ignoring wall time.
    pub fn same_counts(&self, other: &RunStats) -> bool {
        (self.gb_len, self.poly_red, self.pairs_ins) == (other.gb_len, other.poly_red, other.pairs_ins)
    }
}

/// Output of [`buchberger`].
#[derive(Clone, Debug)]
pub struct GbResult<C> {
    pub ring: Ring,
    /// Every element ever added, in birth order.
    pub basis: Vec<BasisElement<C>>,
    /// The interreduced basis, sorted by descending leading term.
    pub reduced: Vec<ModuleVector<C>>,
    pub stats: RunStats,
    pub transcript: Option<Transcript>,
}

impl<C: Field> GbResult<C> {
    pub fn vectors(&self) -> Vec<ModuleVector<C>> {
        self.basis.iter().map(|b| b.vector.clone()).collect()
    }
}

struct PendingGen<C> {
    index: usize,
    vector: ModuleVector<C>,
    sugar: Degree,
    degree: Degree,
    birth: usize,
}

/// The body of Buchberger's algorithm on `gens` in `ring`.
///
/// In a homogenized ring all generators must be homogeneous and the grading
/// positive; in the plain ring the ordering must be a term ordering.
pub fn buchberger<C: Field>(gens: &[ModuleVector<C>], ring: &Ring, cfg: &StrategyConfig) -> Result<GbResult<C>> {
    learned_buchberger(gens, ring, cfg, Learn::Off)
}

/// Pairs of an earlier run on an image of the same input whose S-vectors
/// reduced to zero, identified by the indices of their elements.
pub(crate) type ZeroPairs = HashSet<(usize, usize)>;

pub(crate) enum Learn<'a> {
    Off,
    Record(&'a mut ZeroPairs),
    /// Skip these pairs without reducing them.
    Replay(&'a ZeroPairs),
}

pub(crate) fn learned_buchberger<C: Field>(
    gens: &[ModuleVector<C>],
    ring: &Ring,
    cfg: &StrategyConfig,
    mut learn: Learn<'_>,
) -> Result<GbResult<C>> {
    let start = Instant::now();
    ring.admits_buchberger()?;
    let deadline = cfg.budget.map(|b| start + b);
    let mut transcript = cfg.trace.then(|| Transcript::new(ring.names().to_vec()));

    let mut birth = 0usize;
    let mut pending: Vec<PendingGen<C>> = Vec::new();
    for (index, g) in gens.iter().enumerate() {
        for (_, t) in g.iter() {
            ring.check_term(t)?;
        }
        if g.is_zero() {
            continue;
        }
        if ring.is_homogenized() && !g.is_homogeneous(ring) {
            return Err(AlgebraError::Domain(format!("generator {} is not homogeneous", index + 1)));
        }
        let vector = g.normalized();
        if pending.iter().any(|p| p.vector == vector) {
            continue;
        }
        let (_, sugar) = init_sugar(&vector, ring)?;
        let degree = ring.degree(vector.leading_term().expect("non-zero"))?;
        pending.push(PendingGen { index, vector, sugar, degree, birth });
        birth += 1;
    }

    let mut basis: Vec<BasisElement<C>> = Vec::new();
    let mut pairs = PairSet::new(cfg.criteria, ring.rank());
    let mut stats = RunStats::default();
    let mut call = 0u64;

    while !pending.is_empty() || !pairs.is_empty() {
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(AlgebraError::Timeout);
        }
        let take_gen = match (select_gen(&pending, cfg.selection, ring), pairs.select(cfg.selection, ring)) {
            (Some(g), Some(p)) => compare_items(&pending[g].key(), &pairs.get(p).key(), cfg.selection, ring)
                != Ordering::Greater,
            (Some(_), None) => true,
            (None, _) => false,
        };
        let mut from_pair = None;
        let work = if take_gen {
            let g = select_gen(&pending, cfg.selection, ring).expect("non-empty");
            let g = pending.remove(g);
            if let Some(t) = transcript.as_mut() {
                t.events.push(Event::Gen { index: g.index });
            }
            Work::new(g.vector.into_terms(), g.sugar)
        } else {
            let p = pairs.select(cfg.selection, ring).expect("non-empty");
            let p = pairs.remove(p);
            if let Learn::Replay(zero) = &learn {
                if zero.contains(&(p.left, p.right)) {
                    continue;
                }
            }
            from_pair = Some((p.left, p.right));
            if let Some(t) = transcript.as_mut() {
                t.events.push(Event::Pair { left: p.left, right: p.right });
            }
            stats.poly_red += 1;
            let s = check::scaled_s_vector(&basis[p.left].vector, &basis[p.right].vector, ring)?;
            Work::new(s.into_terms(), p.sugar)
        };
        call += 1;
        let reducer = Reducer { ring, basis: &basis, deadline };
        let rem = reducer.reduce(work, &cfg.remainder, cfg.depth, call, transcript.as_mut())?;
        if rem.terms.is_empty() {
            if let (Learn::Record(zero), Some(p)) = (&mut learn, from_pair) {
                zero.insert(p);
            }
            if let Some(t) = transcript.as_mut() {
                t.events.push(Event::Zero);
            }
            continue;
        }
        let sugar = rem.sugar;
        let vector = ModuleVector::from_sorted(rem.terms).normalized();
        let index = basis.len();
        let element = BasisElement::build(vector, sugar, index, ring)?;
        debug_assert!(
            basis.iter().all(|b| !b.leading_term().divides(element.leading_term())),
            "new leading term is divisible by an existing one"
        );
        debug_assert!(!ring.is_homogenized() || element.sugar.dominates(&element.degree));
        if let Some(t) = transcript.as_mut() {
            t.events.push(Event::Add { index, sugar: element.sugar.clone() });
        }
        basis.push(element);
        stats.pairs_ins += pairs.update(&basis, index, ring, &mut birth)?;
    }

    let reduced = check::interreduce_gb(&basis.iter().map(|b| b.vector.clone()).collect::<Vec<_>>(), ring)?;
    stats.gb_len = reduced.len();
    stats.wall_time = start.elapsed();
    Ok(GbResult { ring: ring.clone(), basis, reduced, stats, transcript })
}

/// Sort key shared by pending generators and pairs.
pub(crate) struct ItemKey<'a> {
    pub sugar: &'a Degree,
    pub degree: &'a Degree,
    pub lcm: &'a ModuleTerm,
    pub birth: usize,
    pub is_gen: bool,
}

impl<C: Field> PendingGen<C> {
    fn key(&self) -> ItemKey<'_> {
        ItemKey {
            sugar: &self.sugar,
            degree: &self.degree,
            lcm: self.vector.leading_term().expect("non-zero"),
            birth: self.birth,
            is_gen: true,
        }
    }
}

pub(crate) fn compare_items(a: &ItemKey<'_>, b: &ItemKey<'_>, sel: Selection, ring: &Ring) -> Ordering {
    let primary = match sel {
        Selection::ByInsertion => return a.birth.cmp(&b.birth),
        Selection::BySugar => a.sugar.cmp(b.sugar),
        Selection::ByDegree => a.degree.cmp(b.degree),
    };
    primary
        .then_with(|| b.is_gen.cmp(&a.is_gen))
        .then_with(|| a.degree.cmp(b.degree))
        .then_with(|| ring.cmp(a.lcm, b.lcm))
        .then_with(|| a.birth.cmp(&b.birth))
}

fn select_gen<C: Field>(pending: &[PendingGen<C>], sel: Selection, ring: &Ring) -> Option<usize> {
    (0..pending.len()).min_by(|&i, &j| compare_items(&pending[i].key(), &pending[j].key(), sel, ring))
}

#[cfg(test)]
mod tests;
