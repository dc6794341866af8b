//! Ambient ring data: indeterminates, module rank, grading and active ordering.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::grading::{Degree, Grading};
use crate::order::{extend_order, OrderSpec, TermOrder};
use crate::term::{ModuleTerm, PowerProduct};

/// `P^r` (when `m = 0`) or the homogenized `P̄^r` (when `m = rank W`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    n: usize,
    m: usize,
    names: Vec<String>,
    grading: Arc<Grading>,
    order: TermOrder,
}

impl Ring {
    /// The plain ring `K[x_1..x_n]^r`, `r` being the number of shifts in `grading`.
    pub fn new(names: Vec<String>, order: OrderSpec, grading: Grading) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::Structure("a ring needs at least one indeterminate".into()));
        }
        if grading.n() != n {
            return Err(AlgebraError::Structure(format!("grading has {} columns for {n} indeterminates", grading.n())));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::Structure(format!("indeterminate {a} declared twice")));
            }
        }
        order.check_arity(n)?;
        Ok(Ring { n, m: 0, names, grading: Arc::new(grading), order: TermOrder::Base(order) })
    }

    /// Plain ring with the standard grading and rank 1.
    pub fn standard(names: &[&str], order: OrderSpec) -> Result<Self> {
        if names.is_empty() {
            return Err(AlgebraError::Structure("a ring needs at least one indeterminate".into()));
        }
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let g = Grading::standard(names.len());
        Ring::new(names, order, g)
    }

    /// `K[y_1..y_m, x_1..x_n]^r` ordered by `σ̄^W`. Idempotent on homogenized rings.
    pub fn homogenized(&self) -> Result<Ring> {
        if self.m > 0 {
            return Ok(self.clone());
        }
        let m = self.grading.m();
        let taken = |s: &str| self.names.iter().any(|x| x == s);
        let ynames: Vec<String> = if m == 1 {
            let mut h = "h".to_string();
            while taken(&h) {
                h.push('_');
            }
            vec![h]
        } else {
            (1..=m)
                .map(|i| {
                    let mut y = format!("y{i}");
                    while taken(&y) {
                        y.push('_');
                    }
                    y
                })
                .collect()
        };
        let names = ynames.into_iter().chain(self.names.iter().cloned()).collect();
        let order = extend_order(self.order.spec().clone(), self.grading.clone())?;
        Ok(Ring { n: self.n, m, names, grading: self.grading.clone(), order: TermOrder::Extended(order) })
    }

    /// The plain ring underlying this one.
    pub fn dehomogenized(&self) -> Ring {
        if self.m == 0 {
            return self.clone();
        }
        Ring {
            n: self.n,
            m: 0,
            names: self.names[self.m..].to_vec(),
            grading: self.grading.clone(),
            order: TermOrder::Base(self.order.spec().clone()),
        }
    }

    /// Same ring with different module shifts (and hence rank).
    pub fn with_shifts(&self, shifts: Vec<Vec<i64>>) -> Result<Ring> {
        let g = Arc::new(self.grading.with_shifts(shifts)?);
        let order = match &self.order {
            TermOrder::Base(s) => TermOrder::Base(s.clone()),
            TermOrder::Extended(e) => TermOrder::Extended(extend_order(e.base().clone(), g.clone())?),
        };
        Ok(Ring { grading: g, order, ..self.clone() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of homogenizing indeterminates present (0 for the plain ring).
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn nvars(&self) -> usize {
        self.m + self.n
    }

    pub fn rank(&self) -> usize {
        self.grading.rank()
    }

    pub fn is_homogenized(&self) -> bool {
        self.m > 0
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn order_spec(&self) -> &OrderSpec {
        self.order.spec()
    }

    #[inline]
    pub fn cmp(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        self.order.compare(a, b)
    }

    /// `deg_W` (plain) or `deg_W̄` (homogenized) of a term, shift included.
    pub fn degree(&self, t: &ModuleTerm) -> Result<Degree> {
        self.grading.degree(t, self.m)
    }

    /// Degree of a power product of this ring, no shift.
    pub fn pp_degree(&self, t: &PowerProduct) -> Result<Degree> {
        self.grading.pp_degree(t, self.m)
    }

    pub fn one(&self) -> PowerProduct {
        PowerProduct::one(self.nvars())
    }

    /// Index of a named indeterminate in the exponent array.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn check_term(&self, t: &ModuleTerm) -> Result<()> {
        if t.pp.len() != self.nvars() {
            return Err(AlgebraError::Structure(format!(
                "term with {} exponents in a ring with {} indeterminates",
                t.pp.len(),
                self.nvars()
            )));
        }
        if t.component >= self.rank() {
            return Err(AlgebraError::Structure(format!("component e{} beyond rank {}", t.component + 1, self.rank())));
        }
        Ok(())
    }

    /// Whether `σ` (plain) is a well-ordering and the grading positive
    /// (homogenized), i.e. whether Buchberger's algorithm terminates here.
    pub fn admits_buchberger(&self) -> Result<()> {
        if self.m == 0 {
            if !self.order.spec().is_term_ordering(self.n) {
                return Err(AlgebraError::Refused("the ordering is not a term ordering".into()));
            }
        } else if !self.grading.is_positive() {
            return Err(AlgebraError::Refused("the grading is not positive".into()));
        }
        Ok(())
    }
}
