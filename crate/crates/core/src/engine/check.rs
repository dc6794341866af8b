//! S-vectors, interreduction and the Buchberger-criterion oracle.

use super::reduce::{Reducer, Work};
use super::{BasisElement, ReductionDepth, RemainderMode};
use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::ring::Ring;
use crate::vector::ModuleVector;
use std::time::Instant;

/// `S(u, v) = lcm/(c_u t_u)·u - lcm/(c_v t_v)·v`.
pub fn s_vector<C: Field>(u: &ModuleVector<C>, v: &ModuleVector<C>, ring: &Ring) -> Result<ModuleVector<C>> {
    let ((cu, tu), (cv, tv)) = match (u.leading(), v.leading()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(AlgebraError::Domain("S-vector of a zero vector".into())),
    };
    if tu.component != tv.component {
        return Err(AlgebraError::Domain("leading terms on different components".into()));
    }
    let lcm = tu.pp.lcm(&tv.pp)?;
    let a = cu.inv().expect("non-zero");
    let b = cv.inv().expect("non-zero").neg();
    let qu = lcm.checked_quotient(&tu.pp).expect("lcm is a multiple");
    let qv = lcm.checked_quotient(&tv.pp).expect("lcm is a multiple");
    ModuleVector::combine(&a, &qu, u, &b, &qv, v, ring)
}

/// A non-zero scalar multiple of `S(u, v)` computed without division.
pub(crate) fn scaled_s_vector<C: Field>(u: &ModuleVector<C>, v: &ModuleVector<C>, ring: &Ring) -> Result<ModuleVector<C>> {
    let ((cu, tu), (cv, tv)) = match (u.leading(), v.leading()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(AlgebraError::Domain("S-vector of a zero vector".into())),
    };
    if tu.component != tv.component {
        return Err(AlgebraError::Domain("leading terms on different components".into()));
    }
    let lcm = tu.pp.lcm(&tv.pp)?;
    let (a, b) = cu.cancel_factors(cv);
    let qu = lcm.checked_quotient(&tu.pp).expect("lcm is a multiple");
    let qv = lcm.checked_quotient(&tv.pp).expect("lcm is a multiple");
    ModuleVector::combine(&a, &qu, u, &b.neg(), &qv, v, ring)
}

/// Monic, auto-reduced basis generating the same module, sorted by
/// descending leading term. For a Gröbner basis this is the reduced one.
pub fn interreduce<C: Field>(g: &[ModuleVector<C>], ring: &Ring) -> Result<Vec<ModuleVector<C>>> {
    let mut vs: Vec<ModuleVector<C>> = g.iter().filter(|v| !v.is_zero()).map(|v| v.monic()).collect();
    loop {
        sort_ascending(&mut vs, ring);
        let hit = (0..vs.len()).find(|&i| {
            let lt = vs[i].leading_term().expect("non-zero");
            (0..i).any(|j| vs[j].leading_term().expect("non-zero").divides(lt))
        });
        let Some(i) = hit else { break };
        let v = vs.remove(i);
        let r = super::reduce::remainder(&v, &vs, ring, ReductionDepth::Full)?;
        if !r.is_zero() {
            vs.push(r.monic());
        }
    }
    tail_reduce(vs, ring)
}

/// [`interreduce`] for input known to be a Gröbner basis of the module it
/// generates: elements with non-minimal leading terms are dropped unreduced.
pub(crate) fn interreduce_gb<C: Field>(g: &[ModuleVector<C>], ring: &Ring) -> Result<Vec<ModuleVector<C>>> {
    let mut vs: Vec<ModuleVector<C>> = g.iter().filter(|v| !v.is_zero()).map(|v| v.monic()).collect();
    sort_ascending(&mut vs, ring);
    let mut minimal: Vec<ModuleVector<C>> = Vec::with_capacity(vs.len());
    for v in vs {
        let lt = v.leading_term().expect("non-zero");
        if !minimal.iter().any(|w| w.leading_term().expect("non-zero").divides(lt)) {
            minimal.push(v);
        }
    }
    tail_reduce(minimal, ring)
}

fn sort_ascending<C: Field>(vs: &mut [ModuleVector<C>], ring: &Ring) {
    vs.sort_by(|a, b| ring.cmp(a.leading_term().expect("non-zero"), b.leading_term().expect("non-zero")));
}

/// Reduces the tails of elements with pairwise non-dividing leading terms.
fn tail_reduce<C: Field>(minimal: Vec<ModuleVector<C>>, ring: &Ring) -> Result<Vec<ModuleVector<C>>> {
    let basis = BasisElement::from_vectors(&minimal, ring)?;
    let reducer = Reducer { ring, basis: &basis, deadline: None };
    let mut out = Vec::with_capacity(minimal.len());
    for b in &basis {
        let work = Work::new(b.vector.terms().to_vec(), b.sugar.clone());
        let w = reducer.reduce_tail(work)?;
        out.push(ModuleVector::from_sorted(w.terms).monic());
    }
    out.reverse();
    Ok(out)
}

/// Whether every same-component S-vector of `g` reduces to zero by `g`.
pub fn is_groebner_basis<C: Field>(g: &[ModuleVector<C>], ring: &Ring) -> Result<bool> {
    let basis = BasisElement::from_vectors(g, ring)?;
    let reducer = Reducer { ring, basis: &basis, deadline: None };
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis[i].leading_term().component != basis[j].leading_term().component {
                continue;
            }
            let s = scaled_s_vector(&basis[i].vector, &basis[j].vector, ring)?;
            if s.is_zero() {
                continue;
            }
            let sugar = basis[i].sugar.top(&basis[j].sugar);
            let w = reducer.reduce(Work::new(s.into_terms(), sugar), &RemainderMode::Plain, ReductionDepth::HeadOnly, 0, None)?;
            if !w.terms.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`is_groebner_basis`] with Buchberger's criteria: pairs with coprime
/// leading terms are skipped in rank 1, and a pair whose lcm is strictly
/// divisible by the lcms of two pairs through a third element is implied.
/// Pairs are checked in order of increasing lcm degree.
pub(crate) fn verify_gb<C: Field>(g: &[ModuleVector<C>], ring: &Ring, deadline: Option<Instant>) -> Result<bool> {
    let basis = BasisElement::from_vectors(g, ring)?;
    let reducer = Reducer { ring, basis: &basis, deadline };
    let lt = |i: usize| basis[i].leading_term();
    let mut pairs = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            if lt(i).component != lt(j).component || (ring.rank() == 1 && lt(i).pp.is_coprime(&lt(j).pp)) {
                continue;
            }
            let lcm = lt(i).pp.lcm(&lt(j).pp)?;
            let chained = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && lt(k).component == lt(i).component
                    && lt(k).pp.divides(&lcm)
                    && lt(k).pp.lcm(&lt(i).pp).is_ok_and(|l| l != lcm)
                    && lt(k).pp.lcm(&lt(j).pp).is_ok_and(|l| l != lcm)
            });
            if !chained {
                pairs.push((lcm.total_degree(), i, j));
            }
        }
    }
    pairs.sort_unstable();
    for (_, i, j) in pairs {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(AlgebraError::Timeout);
        }
        let s = scaled_s_vector(&basis[i].vector, &basis[j].vector, ring)?;
        if s.is_zero() {
            continue;
        }
        let sugar = basis[i].sugar.top(&basis[j].sugar);
        let w = reducer.reduce(Work::new(s.into_terms(), sugar), &RemainderMode::Plain, ReductionDepth::HeadOnly, 0, None)?;
        if !w.terms.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}
