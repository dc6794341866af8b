//! Power products and module terms.
//!
//! Exponents are dense. In a homogenized ring the first `m` slots hold the
//! exponents of the homogenizing indeterminates `y_1..y_m` and the last `n`
//! slots those of `x_1..x_n`, so dehomogenizing a term is a slot truncation.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// A power product `y^a x^b` with dense exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PowerProduct(Exponents);

fn mismatch(a: usize, b: usize) -> AlgebraError {
    AlgebraError::Structure(format!("power products of length {a} and {b}"))
}

impl PowerProduct {
    pub fn new(exponents: impl Into<Exponents>) -> Self {
        PowerProduct(exponents.into())
    }

    pub fn from_slice(exponents: &[u32]) -> Self {
        PowerProduct(Exponents::from_slice(exponents))
    }

    pub fn one(len: usize) -> Self {
        PowerProduct(smallvec::smallvec![0; len])
    }

    /// The indeterminate at `slot` raised to `exp`.
    pub fn var(len: usize, slot: usize, exp: u32) -> Self {
        let mut e = Self::one(len);
        e.0[slot] = exp;
        e
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sum of all exponents.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(mismatch(self.len(), other.len()));
        }
        Ok(PowerProduct(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect()))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(mismatch(self.len(), other.len()));
        }
        Ok(PowerProduct(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect()))
    }

    /// `self / other`, or `Ok(None)` when `other` does not divide `self`.
    pub fn quotient(&self, other: &Self) -> Result<Option<Self>> {
        if self.len() != other.len() {
            return Err(mismatch(self.len(), other.len()));
        }
        Ok(self.checked_quotient(other))
    }

    #[inline]
    pub(crate) fn checked_quotient(&self, other: &Self) -> Option<Self> {
        let mut out = Exponents::with_capacity(self.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(b)?);
        }
        Some(PowerProduct(out))
    }

    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(mismatch(self.len(), other.len()));
        }
        let mut out = Exponents::from_slice(&self.0);
        let mut overflow = false;
        for (a, &b) in out.iter_mut().zip(&other.0) {
            let (s, o) = a.overflowing_add(b);
            *a = s;
            overflow |= o;
        }
        if overflow {
            return Err(AlgebraError::Overflow("power product"));
        }
        Ok(PowerProduct(out))
    }

    /// The first `m` slots (homogenizing part).
    #[inline]
    pub fn y_part(&self, m: usize) -> &[u32] {
        &self.0[..m]
    }

    /// The trailing slots after the first `m` (ordinary part).
    #[inline]
    pub fn x_part(&self, m: usize) -> &[u32] {
        &self.0[m..]
    }

    /// Drops the first `m` slots.
    pub fn dehomogenize(&self, m: usize) -> Self {
        PowerProduct::from_slice(&self.0[m..])
    }

    /// Prepends the homogenizing exponents `y` to this ordinary power product.
    pub fn with_y(&self, y: &[u32]) -> Self {
        let mut out = Exponents::with_capacity(y.len() + self.len());
        out.extend_from_slice(y);
        out.extend_from_slice(&self.0);
        PowerProduct(out)
    }

    /// Replaces the first `y.len()` slots.
    pub fn replace_y(&self, y: &[u32]) -> Self {
        let mut out = self.0.clone();
        out[..y.len()].copy_from_slice(y);
        PowerProduct(out)
    }

    #[inline]
    pub fn div_mask(&self) -> DivMask {
        DivMask::of(&self.0)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> DisplayPP<'a> {
        DisplayPP { pp: self, names }
    }
}

pub struct DisplayPP<'a> {
    pp: &'a PowerProduct,
    names: &'a [String],
}

impl fmt::Display for DisplayPP<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.pp.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let fallback = format!("v{}", i + 1);
            let name = self.names.get(i).unwrap_or(&fallback);
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Support bitmask for fast non-divisibility rejection: bit `i mod 64` is set
/// when slot `i` has a positive exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct DivMask(u64);

impl DivMask {
    pub fn of(exps: &[u32]) -> Self {
        let mut bits = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                bits |= 1 << (i % 64);
            }
        }
        DivMask(bits)
    }

    /// `false` guarantees that the term with mask `self` does not divide the
    /// term with mask `other`.
    #[inline]
    pub fn may_divide(self, other: DivMask) -> bool {
        self.0 & !other.0 == 0
    }
}

/// A module term `t·e_i`. Components are 0-based internally and printed 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleTerm {
    pub pp: PowerProduct,
    pub component: usize,
}

impl ModuleTerm {
    pub fn new(pp: PowerProduct, component: usize) -> Self {
        ModuleTerm { pp, component }
    }

    pub fn scalar(pp: PowerProduct) -> Self {
        ModuleTerm { pp, component: 0 }
    }

    /// Whether `self` divides `other`: same component and power product divisibility.
    #[inline]
    pub fn divides(&self, other: &ModuleTerm) -> bool {
        self.component == other.component && self.pp.divides(&other.pp)
    }

    #[inline]
    pub fn mul_pp(&self, t: &PowerProduct) -> Result<ModuleTerm> {
        Ok(ModuleTerm { pp: self.pp.mul(t)?, component: self.component })
    }
}
