//! Critical pairs and the Gebauer–Möller update.

use std::cmp::Ordering;

use super::{compare_items, BasisElement, Criteria, ItemKey, Selection};
use crate::coeff::Field;
use crate::error::Result;
use crate::grading::Degree;
use crate::ring::Ring;
use crate::sugar::pair_sugar;
use crate::term::ModuleTerm;

/// A pending S-vector `S(G_left, G_right)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub left: usize,
    pub right: usize,
    pub lcm: ModuleTerm,
    pub sugar: Degree,
    pub degree: Degree,
    pub birth: usize,
}

impl CriticalPair {
    pub(crate) fn key(&self) -> ItemKey<'_> {
        ItemKey { sugar: &self.sugar, degree: &self.degree, lcm: &self.lcm, birth: self.birth, is_gen: false }
    }
}

pub(crate) struct PairSet {
    pairs: Vec<CriticalPair>,
    /// Basis elements still used for new pairs.
    active: Vec<usize>,
    criteria: Criteria,
    rank: usize,
}

impl PairSet {
    pub fn new(criteria: Criteria, rank: usize) -> Self {
        PairSet { pairs: Vec::new(), active: Vec::new(), criteria, rank }
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn get(&self, i: usize) -> &CriticalPair {
        &self.pairs[i]
    }

    pub fn remove(&mut self, i: usize) -> CriticalPair {
        self.pairs.swap_remove(i)
    }

    pub fn select(&self, sel: Selection, ring: &Ring) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in 0..self.pairs.len() {
            best = match best {
                Some(b) if compare_items(&self.pairs[b].key(), &self.pairs[i].key(), sel, ring) != Ordering::Greater => {
                    Some(b)
                }
                _ => Some(i),
            };
        }
        best
    }

    /// Adds the pairs of the new element `h` and applies the enabled
    /// criteria. Returns the number of pairs formed before pruning.
    pub fn update<C: Field>(
        &mut self,
        basis: &[BasisElement<C>],
        h: usize,
        ring: &Ring,
        birth: &mut usize,
    ) -> Result<usize> {
        let hl = basis[h].leading_term().clone();
        let coprime = self.criteria.coprime && self.rank == 1;

        let mut cands: Vec<(CriticalPair, bool)> = Vec::new();
        for &g in &self.active {
            let gl = basis[g].leading_term();
            if gl.component != hl.component {
                continue;
            }
            let lcm = ModuleTerm::new(gl.pp.lcm(&hl.pp)?, hl.component);
            let sugar = pair_sugar(
                gl,
                &basis[g].sugar,
                &basis[g].degree,
                &hl,
                &basis[h].sugar,
                &basis[h].degree,
                ring,
            )?;
            let degree = ring.degree(&lcm)?;
            let disjoint = coprime && gl.pp.is_coprime(&hl.pp);
            cands.push((CriticalPair { left: g, right: h, lcm, sugar, degree, birth: 0 }, disjoint));
        }
        let formed = cands.len();

        let mut keep = vec![true; cands.len()];
        if self.criteria.chain {
            for i in 0..cands.len() {
                if cands[i].1 {
                    continue;
                }
                let li = &cands[i].0.lcm.pp;
                if (0..cands.len()).any(|j| j != i && keep[j] && cands[j].0.lcm.pp.divides(li)) {
                    keep[i] = false;
                }
            }
            self.pairs.retain(|p| {
                if p.lcm.component != hl.component || !hl.pp.divides(&p.lcm.pp) {
                    return true;
                }
                let l = basis[p.left].leading_term().pp.lcm(&hl.pp).expect("same ring");
                let r = basis[p.right].leading_term().pp.lcm(&hl.pp).expect("same ring");
                l == p.lcm.pp || r == p.lcm.pp
            });
        }
        for ((mut p, disjoint), k) in cands.into_iter().zip(keep) {
            if k && !disjoint {
                p.birth = *birth;
                *birth += 1;
                self.pairs.push(p);
            }
        }

        if self.criteria.chain {
            self.active.retain(|&g| !hl.divides(basis[g].leading_term()));
        }
        self.active.push(h);
        Ok(formed)
    }
}
