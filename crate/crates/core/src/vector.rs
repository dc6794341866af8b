//! Sparse module vectors: finite sums `Σ c_j t_j e_{i_j}` sorted strictly
//! descending under the ring's active ordering.

use std::cmp::Ordering;
use std::fmt;

use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::grading::Degree;
use crate::ring::Ring;
use crate::term::{ModuleTerm, PowerProduct};

/// An element of `P^r` or `P̄^r`. Polynomials are the rank-1 case with every
/// term on component 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector<C> {
    terms: Vec<(C, ModuleTerm)>,
}

impl<C> Default for ModuleVector<C> {
    fn default() -> Self {
        ModuleVector { terms: Vec::new() }
    }
}

impl<C: Field> ModuleVector<C> {
    pub fn zero() -> Self {
        ModuleVector { terms: Vec::new() }
    }

    pub fn monomial(c: C, t: ModuleTerm) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ModuleVector { terms: vec![(c, t)] }
    }

    /// Builds a vector from arbitrary summands: sorts, merges equal terms and
    /// drops zero coefficients.
    pub fn from_terms(mut terms: Vec<(C, ModuleTerm)>, ring: &Ring) -> Result<Self> {
        for (_, t) in &terms {
            ring.check_term(t)?;
        }
        terms.sort_by(|a, b| ring.cmp(&b.1, &a.1));
        let mut out: Vec<(C, ModuleTerm)> = Vec::with_capacity(terms.len());
        for (c, t) in terms {
            match out.last_mut() {
                Some((lc, lt)) if *lt == t => *lc = lc.add(&c),
                _ => out.push((c, t)),
            }
            if out.last().is_some_and(|(c, _)| c.is_zero()) {
                out.pop();
            }
        }
        Ok(ModuleVector { terms: out })
    }

    /// Wraps summands that are already strictly descending with no zeros.
    pub(crate) fn from_sorted(terms: Vec<(C, ModuleTerm)>) -> Self {
        ModuleVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&C, &ModuleTerm)> {
        self.terms.iter().map(|(c, t)| (c, t))
    }

    pub fn terms(&self) -> &[(C, ModuleTerm)] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<(C, ModuleTerm)> {
        self.terms
    }

    /// The maximal summand.
    pub fn leading(&self) -> Option<(&C, &ModuleTerm)> {
        self.terms.first().map(|(c, t)| (c, t))
    }

    pub fn leading_term(&self) -> Option<&ModuleTerm> {
        self.terms.first().map(|(_, t)| t)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Coefficient of `t`, if present.
    pub fn coeff_of(&self, t: &ModuleTerm, ring: &Ring) -> Option<&C> {
        self.terms
            .binary_search_by(|(_, s)| ring.cmp(t, s))
            .ok()
            .map(|i| &self.terms[i].0)
    }

    pub fn is_sorted(&self, ring: &Ring) -> bool {
        self.terms.windows(2).all(|w| ring.cmp(&w[0].1, &w[1].1) == Ordering::Greater)
            && self.terms.iter().all(|(c, _)| !c.is_zero())
    }

    pub fn neg(&self) -> Self {
        ModuleVector { terms: self.terms.iter().map(|(c, t)| (c.neg(), t.clone())).collect() }
    }

    pub fn scale(&self, a: &C) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        if a.is_one() {
            return self.clone();
        }
        ModuleVector { terms: self.terms.iter().map(|(c, t)| (c.mul(a), t.clone())).collect() }
    }

    /// `c·t·self`; order is preserved because `σ` and `σ̄` are monoid orderings.
    pub fn mul_term(&self, c: &C, t: &PowerProduct) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (d, s) in &self.terms {
            out.push((d.mul(c), s.mul_pp(t)?));
        }
        Ok(ModuleVector { terms: out })
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("non-zero field element")),
        }
    }

    /// The field's normal form up to a scalar: monic over `Z/p`, integral and
    /// primitive with positive leading coefficient over `Q`.
    pub fn normalized(&self) -> Self {
        match C::normalizer(self.terms.iter().map(|(c, _)| c)) {
            Some(f) => self.scale(&f),
            None => self.clone(),
        }
    }

    /// `vectorCombine`: `a·t·u + b·s·v`, merged and sorted.
    pub fn combine(
        a: &C,
        t: &PowerProduct,
        u: &Self,
        b: &C,
        s: &PowerProduct,
        v: &Self,
        ring: &Ring,
    ) -> Result<Self> {
        if t.len() != ring.nvars() || s.len() != ring.nvars() {
            return Err(AlgebraError::Structure("multiplier outside the ring".into()));
        }
        for (_, x) in u.terms.iter().take(1).chain(v.terms.iter().take(1)) {
            ring.check_term(x)?;
        }
        let left = u.mul_term(a, t)?;
        let right = v.mul_term(b, s)?;
        Ok(ModuleVector { terms: merge(left.terms, right.terms, ring) })
    }

    pub fn add(&self, other: &Self, ring: &Ring) -> Self {
        ModuleVector { terms: merge(self.terms.clone(), other.terms.clone(), ring) }
    }

    pub fn sub(&self, other: &Self, ring: &Ring) -> Self {
        ModuleVector { terms: merge(self.terms.clone(), other.neg().terms, ring) }
    }

    /// Product with a polynomial `p` (rank-1 vector on component 0).
    pub fn mul_poly(&self, p: &Self, ring: &Ring) -> Result<Self> {
        let mut acc = Self::zero();
        for (c, t) in &p.terms {
            if t.component != 0 {
                return Err(AlgebraError::Domain("multiplier is not a polynomial".into()));
            }
            let part = self.mul_term(c, &t.pp)?;
            acc = ModuleVector { terms: merge(acc.terms, part.terms, ring) };
        }
        Ok(acc)
    }

    /// Reapplies the ordering of `ring` (after a change of ordering).
    pub fn resort(self, ring: &Ring) -> Result<Self> {
        Self::from_terms(self.terms, ring)
    }

    /// The common `deg_W̄` of all summands, or `None` if not homogeneous.
    /// The zero vector is reported as homogeneous with no degree.
    pub fn homogeneous_degree(&self, ring: &Ring) -> Result<Option<Option<Degree>>> {
        let mut deg: Option<Degree> = None;
        for (_, t) in &self.terms {
            let d = ring.degree(t)?;
            match &deg {
                None => deg = Some(d),
                Some(e) if *e != d => return Ok(None),
                _ => {}
            }
        }
        Ok(Some(deg))
    }

    pub fn is_homogeneous(&self, ring: &Ring) -> bool {
        matches!(self.homogeneous_degree(ring), Ok(Some(_)))
    }

    pub fn map_coeffs<D: Field>(&self, mut f: impl FnMut(&C) -> Option<D>) -> Result<ModuleVector<D>> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (c, t) in &self.terms {
            let d = f(c).ok_or_else(|| AlgebraError::Domain("coefficient has no image in the field".into()))?;
            if !d.is_zero() {
                out.push((d, t.clone()));
            }
        }
        Ok(ModuleVector { terms: out })
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> DisplayVector<'a, C> {
        DisplayVector { v: self, ring }
    }
}

/// Merges two strictly descending summand lists.
pub(crate) fn merge<C: Field>(a: Vec<(C, ModuleTerm)>, b: Vec<(C, ModuleTerm)>, ring: &Ring) -> Vec<(C, ModuleTerm)> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    merge_into(&mut out, a, b, ring);
    out
}

pub(crate) fn merge_into<C: Field>(
    out: &mut Vec<(C, ModuleTerm)>,
    a: Vec<(C, ModuleTerm)>,
    b: Vec<(C, ModuleTerm)>,
    ring: &Ring,
) {
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => ring.cmp(&x.1, &y.1),
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (None, None) => break,
        };
        match ord {
            Ordering::Greater => out.push(a.next().expect("peeked")),
            Ordering::Less => out.push(b.next().expect("peeked")),
            Ordering::Equal => {
                let (c, t) = a.next().expect("peeked");
                let (d, _) = b.next().expect("peeked");
                let s = c.add(&d);
                if !s.is_zero() {
                    out.push((s, t));
                }
            }
        }
    }
}

pub struct DisplayVector<'a, C> {
    v: &'a ModuleVector<C>,
    ring: &'a Ring,
}

impl<C: Field> fmt::Display for DisplayVector<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "0");
        }
        let module = self.ring.rank() > 1;
        for (i, (c, t)) in self.v.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let abs = if neg { c.neg() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = t.pp.is_one();
            let mut parts: Vec<String> = Vec::with_capacity(3);
            if !abs.is_one() || (unit && !module) {
                parts.push(abs.to_string());
            }
            if !unit {
                parts.push(t.pp.display(self.ring.names()).to_string());
            }
            if module {
                parts.push(format!("e{}", t.component + 1));
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
