//! Division with optional same-saturation substitutions.

use std::time::Instant;

use super::{BasisElement, Event, HookContext, ReductionDepth, RemainderMode, Substitution, Transcript, WeakSatPolicy};
use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::grading::Degree;
use crate::homog::{saturate, y_power};
use crate::ring::Ring;
use crate::sugar::{init_sugar, reduction_sugar, Sweetener};
use crate::term::{ModuleTerm, PowerProduct};
use crate::vector::{merge_into, ModuleVector};

/// A remainder under construction together with its sugar. Steps are
/// division-free, so `terms` is a scalar multiple of the true remainder;
/// `scale`, when tracked, is that scalar.
pub(crate) struct Work<C> {
    pub terms: Vec<(C, ModuleTerm)>,
    pub sugar: Degree,
    pub scale: Option<C>,
}

impl<C: Field> Work<C> {
    pub fn new(terms: Vec<(C, ModuleTerm)>, sugar: Degree) -> Self {
        Work { terms, sugar, scale: None }
    }

    fn rescale(&mut self, f: &C) {
        for (c, _) in self.terms.iter_mut() {
            *c = c.mul(f);
        }
        if let Some(s) = self.scale.as_mut() {
            *s = s.mul(f);
        }
    }

    /// Brings the coefficients into the field's normal form.
    pub fn normalize(&mut self) {
        if let Some(f) = C::normalizer(self.terms.iter().map(|(c, _)| c)) {
            self.rescale(&f);
        }
    }

    /// The exact vector, undoing the tracked scale.
    pub fn into_vector(self) -> ModuleVector<C> {
        let v = ModuleVector::from_sorted(self.terms);
        match self.scale {
            Some(s) if !s.is_one() => v.scale(&s.inv().expect("non-zero scale")),
            _ => v,
        }
    }
}

pub(crate) struct Reducer<'a, C> {
    pub ring: &'a Ring,
    pub basis: &'a [BasisElement<C>],
    pub deadline: Option<Instant>,
}

const DEADLINE_STRIDE: usize = 64;
const CONTENT_STRIDE: usize = 8;

impl<C: Field> Reducer<'_, C> {
    /// The active element whose leading term divides `t` and gives the step
    /// of lowest sugar, ties by birth.
    fn find(&self, t: &ModuleTerm) -> Option<usize> {
        let mask = t.pp.div_mask();
        let mut best: Option<usize> = None;
        for (i, b) in self.basis.iter().enumerate() {
            if !b.mask.may_divide(mask) || !b.leading_term().divides(t) {
                continue;
            }
            best = match best {
                Some(j) if (&self.basis[j].ecart, j) <= (&b.ecart, i) => Some(j),
                _ => Some(i),
            };
        }
        best
    }

    /// The element whose leading term becomes a divisor of `y^c t` for the
    /// least `c` (by total, then lexicographically), ties by the reducer rule.
    fn y_candidate(&self, t: &ModuleTerm) -> Option<(usize, Sweetener)> {
        let m = self.ring.m();
        let tx = t.pp.x_part(m);
        let ty = t.pp.y_part(m);
        let mut best: Option<(u64, Sweetener, usize)> = None;
        for (i, b) in self.basis.iter().enumerate() {
            let lt = b.leading_term();
            if lt.component != t.component || !lt.pp.x_part(m).iter().zip(tx).all(|(a, b)| a <= b) {
                continue;
            }
            let c: Sweetener = lt.pp.y_part(m).iter().zip(ty).map(|(a, b)| a.saturating_sub(*b)).collect();
            let total: u64 = c.iter().map(|&e| e as u64).sum();
            let better = match &best {
                None => true,
                Some((bt, bc, j)) => {
                    (total, &c, &self.basis[i].ecart, i) < (*bt, bc, &self.basis[*j].ecart, *j)
                }
            };
            if better {
                best = Some((total, c, i));
            }
        }
        best.map(|(_, c, i)| (i, c))
    }

    /// Cancels the summand at position `p` against `G_gi`.
    fn step(&self, work: &mut Work<C>, p: usize, gi: usize, trace: &mut Option<&mut Transcript>) -> Result<()> {
        let g = &self.basis[gi];
        let (c, t) = work.terms[p].clone();
        let mult = t
            .pp
            .checked_quotient(&g.leading_term().pp)
            .ok_or_else(|| AlgebraError::Domain("reducer does not divide the term".into()))?;
        let (a, b) = c.cancel_factors(g.vector.leading_coeff().expect("non-zero"));
        let neg = b.neg();
        let mut scaled = Vec::with_capacity(g.vector.len().saturating_sub(1));
        for (d, s) in &g.vector.terms()[1..] {
            scaled.push((d.mul(&neg), s.mul_pp(&mult)?));
        }
        let mut tail = work.terms.split_off(p + 1);
        work.terms.truncate(p);
        if !a.is_one() {
            for (c, _) in work.terms.iter_mut().chain(tail.iter_mut()) {
                *c = c.mul(&a);
            }
            if let Some(s) = work.scale.as_mut() {
                *s = s.mul(&a);
            }
        }
        merge_into(&mut work.terms, tail, scaled, self.ring);
        let m = self.ring.m();
        let tx = PowerProduct::from_slice(mult.x_part(m));
        work.sugar = reduction_sugar(&work.sugar, &tx, &g.sugar, self.ring.grading())?;
        if let Some(tr) = trace.as_deref_mut() {
            tr.events.push(Event::RedStep { reducer: gi, multiplier: mult });
        }
        Ok(())
    }

    fn y_multiply(&self, work: &mut Work<C>, c: &[u32], trace: &mut Option<&mut Transcript>) -> Result<()> {
        let y = y_power(c, self.ring);
        for (_, t) in work.terms.iter_mut() {
            *t = t.mul_pp(&y)?;
        }
        let deg = self.ring.degree(&work.terms[0].1)?;
        work.sugar = work.sugar.top(&deg);
        if let Some(tr) = trace.as_deref_mut() {
            tr.events.push(Event::YMul { power: y });
        }
        Ok(())
    }

    fn saturate(&self, work: &mut Work<C>, trace: &mut Option<&mut Transcript>) -> Result<()> {
        let v = ModuleVector::from_sorted(std::mem::take(&mut work.terms));
        let s = saturate(&v, self.ring)?;
        if s != v {
            if let Some(tr) = trace.as_deref_mut() {
                let lt = |w: &ModuleVector<C>| w.leading_term().expect("non-zero").pp.clone();
                let removed = lt(&v).checked_quotient(&lt(&s)).expect("saturation divides by a y-power");
                tr.events.push(Event::Sat { removed });
            }
        }
        work.terms = s.into_terms();
        Ok(())
    }

    fn check_deadline(&self, counter: usize) -> Result<()> {
        if counter.is_multiple_of(DEADLINE_STRIDE) && self.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(AlgebraError::Timeout);
        }
        Ok(())
    }

    /// Fully reduces every summand after the first.
    pub fn reduce_tail(&self, mut work: Work<C>) -> Result<Work<C>> {
        let mut p = 1;
        let mut steps = 0usize;
        while p < work.terms.len() {
            match self.find(&work.terms[p].1) {
                Some(g) => {
                    self.step(&mut work, p, g, &mut None)?;
                    steps += 1;
                    if steps.is_multiple_of(CONTENT_STRIDE) {
                        work.normalize();
                    }
                }
                None => p += 1,
            }
        }
        Ok(work)
    }

    /// Step (2b) in the given remainder mode.
    pub fn reduce(
        &self,
        mut work: Work<C>,
        mode: &RemainderMode,
        depth: ReductionDepth,
        call: u64,
        mut trace: Option<&mut Transcript>,
    ) -> Result<Work<C>> {
        let homog = self.ring.is_homogenized();
        let (ymul, sat_final, hook) = match mode {
            RemainderMode::Plain | RemainderMode::WeakSat(WeakSatPolicy::Never) => (false, false, None),
            RemainderMode::WeakSat(WeakSatPolicy::YMultiplyToReduce) => (true, false, None),
            RemainderMode::WeakSat(WeakSatPolicy::SaturateFinal) | RemainderMode::SelfSat => (false, true, None),
            RemainderMode::WeakSat(WeakSatPolicy::Custom(h)) => (false, false, Some(h)),
        };
        let (ymul, sat_final, hook) = if homog { (ymul, sat_final, hook) } else { (false, false, None) };

        let mut step = 0usize;
        while !work.terms.is_empty() {
            self.check_deadline(step + 1)?;
            let mut want_ymul = ymul;
            if let Some(h) = hook {
                let ctx = HookContext { call, step, head: &work.terms[0].1, is_final: false };
                match h.choose(&ctx) {
                    Substitution::Keep => {}
                    Substitution::Saturate => self.saturate(&mut work, &mut trace)?,
                    Substitution::MultiplyToReduce => want_ymul = true,
                }
            }
            if let Some(g) = self.find(&work.terms[0].1) {
                self.step(&mut work, 0, g, &mut trace)?;
                step += 1;
                if step.is_multiple_of(CONTENT_STRIDE) {
                    work.normalize();
                }
                continue;
            }
            if want_ymul {
                if let Some((g, c)) = self.y_candidate(&work.terms[0].1) {
                    self.y_multiply(&mut work, &c, &mut trace)?;
                    self.step(&mut work, 0, g, &mut trace)?;
                    step += 1;
                    continue;
                }
            }
            break;
        }

        if depth == ReductionDepth::Full {
            let mut p = 1;
            while p < work.terms.len() {
                step += 1;
                self.check_deadline(step)?;
                match self.find(&work.terms[p].1) {
                    Some(g) => {
                        self.step(&mut work, p, g, &mut trace)?;
                        if step.is_multiple_of(CONTENT_STRIDE) {
                            work.normalize();
                        }
                    }
                    None => p += 1,
                }
            }
        }

        if !work.terms.is_empty() {
            let sat = sat_final
                || hook.is_some_and(|h| {
                    let ctx = HookContext { call, step, head: &work.terms[0].1, is_final: true };
                    h.choose(&ctx) == Substitution::Saturate
                });
            if sat {
                self.saturate(&mut work, &mut trace)?;
            }
        }
        Ok(work)
    }
}

fn run<C: Field>(
    v: &ModuleVector<C>,
    g: &[ModuleVector<C>],
    ring: &Ring,
    mode: &RemainderMode,
    depth: ReductionDepth,
) -> Result<ModuleVector<C>> {
    if v.is_zero() {
        return Ok(ModuleVector::zero());
    }
    for w in g.iter().chain(std::iter::once(v)) {
        for (_, t) in w.iter().take(1) {
            ring.check_term(t)?;
        }
    }
    let basis = BasisElement::from_vectors(g, ring)?;
    let (_, sugar) = init_sugar(v, ring)?;
    let reducer = Reducer { ring, basis: &basis, deadline: None };
    let mut work = Work::new(v.terms().to_vec(), sugar);
    work.scale = Some(v.leading_coeff().expect("non-zero").one_like());
    Ok(reducer.reduce(work, mode, depth, 0, None)?.into_vector())
}

/// A remainder of `v` by `g`: division with reducer choice by lowest sugar,
/// then earliest position in `g`.
pub fn remainder<C: Field>(
    v: &ModuleVector<C>,
    g: &[ModuleVector<C>],
    ring: &Ring,
    depth: ReductionDepth,
) -> Result<ModuleVector<C>> {
    run(v, g, ring, &RemainderMode::Plain, depth)
}

fn require_homogeneous<C: Field>(v: &ModuleVector<C>, g: &[ModuleVector<C>], ring: &Ring) -> Result<()> {
    if !ring.is_homogenized() {
        return Err(AlgebraError::Structure("substitutions need the homogenized ring".into()));
    }
    if g.iter().chain(std::iter::once(v)).any(|w| !w.is_homogeneous(ring)) {
        return Err(AlgebraError::Domain("non-homogeneous vector".into()));
    }
    Ok(())
}

/// Division interleaved with same-saturation substitutions chosen by `policy`.
pub fn weak_sat_remainder<C: Field>(
    v: &ModuleVector<C>,
    g: &[ModuleVector<C>],
    ring: &Ring,
    policy: &WeakSatPolicy,
) -> Result<ModuleVector<C>> {
    require_homogeneous(v, g, ring)?;
    run(v, g, ring, &RemainderMode::WeakSat(policy.clone()), ReductionDepth::Full)
}

/// `(Rem(v, g))^sat`.
pub fn sat_remainder<C: Field>(v: &ModuleVector<C>, g: &[ModuleVector<C>], ring: &Ring) -> Result<ModuleVector<C>> {
    require_homogeneous(v, g, ring)?;
    run(v, g, ring, &RemainderMode::SelfSat, ReductionDepth::Full)
}
