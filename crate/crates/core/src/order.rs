//! Module term orderings `σ` and their extensions `σ̄^W` to the homogenized ring.
//!
//! The extension compares `deg_W̄` tuples lexicographically first and breaks
//! ties with `σ` on the dehomogenized terms. This is the ordering given by the
//! stacked matrix `(I_m W; 0 V)` when `σ = Ord(V)`.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::grading::{express_in_rows, is_positive_lower_triangular, matrix_rank, Grading};
use crate::term::{ModuleTerm, PowerProduct};
use crate::vector::ModuleVector;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
    /// `Ord(V)` for a non-singular integer matrix `V`.
    Matrix(Vec<Vec<i64>>),
}

/// How term comparison combines with the module component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ModuleRule {
    /// Compare power products first; on ties `e_1 > e_2 > ... > e_r`.
    #[default]
    TermOverPosition,
}

/// A module ordering `σ` on `T^n<e_1..e_r>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    pub kind: OrderKind,
    pub module_rule: ModuleRule,
}

impl OrderSpec {
    pub fn lex() -> Self {
        OrderSpec { kind: OrderKind::Lex, module_rule: ModuleRule::TermOverPosition }
    }

    pub fn deglex() -> Self {
        OrderSpec { kind: OrderKind::DegLex, module_rule: ModuleRule::TermOverPosition }
    }

    pub fn degrevlex() -> Self {
        OrderSpec { kind: OrderKind::DegRevLex, module_rule: ModuleRule::TermOverPosition }
    }

    /// A matrix ordering; `matrix` must be square and non-singular.
    pub fn matrix(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Ordering("order matrix must be square and non-empty".into()));
        }
        if matrix_rank(&matrix) != n {
            return Err(AlgebraError::Ordering("order matrix must be non-singular".into()));
        }
        Ok(OrderSpec { kind: OrderKind::Matrix(matrix), module_rule: ModuleRule::TermOverPosition })
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Lex => "Lex",
            OrderKind::DegLex => "DegLex",
            OrderKind::DegRevLex => "DegRevLex",
            OrderKind::Matrix(_) => "matrix",
        }
    }

    /// The canonical matrix of this ordering on `n` indeterminates.
    pub fn to_matrix(&self, n: usize) -> Vec<Vec<i64>> {
        let unit = |i: usize, s: i64| {
            let mut r = vec![0; n];
            r[i] = s;
            r
        };
        match &self.kind {
            OrderKind::Lex => (0..n).map(|i| unit(i, 1)).collect(),
            OrderKind::DegLex => std::iter::once(vec![1; n]).chain((0..n - 1).map(|i| unit(i, 1))).collect(),
            OrderKind::DegRevLex => std::iter::once(vec![1; n])
                .chain((1..n).rev().map(|i| unit(i, -1)))
                .collect(),
            OrderKind::Matrix(m) => m.clone(),
        }
    }

    /// Whether the ordering is a well-ordering on `T^n` (first non-zero entry of
    /// each column of its matrix is positive).
    pub fn is_term_ordering(&self, n: usize) -> bool {
        match &self.kind {
            OrderKind::Matrix(m) => (0..n).all(|j| m.iter().map(|r| r[j]).find(|&v| v != 0).is_some_and(|v| v > 0)),
            _ => true,
        }
    }

    pub fn check_arity(&self, n: usize) -> Result<()> {
        if let OrderKind::Matrix(m) = &self.kind {
            if m.len() != n {
                return Err(AlgebraError::Ordering(format!("{}x{} order matrix for {n} indeterminates", m.len(), m.len())));
            }
        }
        Ok(())
    }

    /// Compares ordinary power products given as exponent slices.
    #[inline]
    pub fn compare_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match &self.kind {
            OrderKind::Lex => a.cmp(b),
            OrderKind::DegLex => {
                let (da, db) = (total(a), total(b));
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            OrderKind::DegRevLex => {
                // one pass: degrees and the last differing slot
                let (mut da, mut db) = (0u64, 0u64);
                let mut rev = Ordering::Equal;
                for (&x, &y) in a.iter().zip(b).rev() {
                    da += x as u64;
                    db += y as u64;
                    if rev == Ordering::Equal {
                        rev = y.cmp(&x);
                    }
                }
                da.cmp(&db).then(rev)
            }
            OrderKind::Matrix(m) => {
                for row in m {
                    let da: i128 = row.iter().zip(a).map(|(&w, &e)| w as i128 * e as i128).sum();
                    let db: i128 = row.iter().zip(b).map(|(&w, &e)| w as i128 * e as i128).sum();
                    match da.cmp(&db) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    #[inline]
    fn compare_components(a: usize, b: usize) -> Ordering {
        b.cmp(&a)
    }

    /// Compares ordinary module terms `t e_i`.
    #[inline]
    pub fn compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        self.compare_exponents(a.pp.exponents(), b.pp.exponents())
            .then_with(|| Self::compare_components(a.component, b.component))
    }
}

#[inline]
fn total(e: &[u32]) -> u64 {
    e.iter().map(|&x| x as u64).sum()
}

impl fmt::Display for OrderSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrderKind::Matrix(m) => {
                write!(f, "matrix ")?;
                write_rows(f, m)
            }
            _ => write!(f, "{}", self.name()),
        }
    }
}

/// Writes integer rows as `[a,b],[c,d]`.
pub fn write_rows(f: &mut impl fmt::Write, rows: &[Vec<i64>]) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "[")?;
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")?;
    }
    Ok(())
}

/// The extension `σ̄^W` of a module ordering to `T^{m+n}<e_1..e_r>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedOrder {
    base: OrderSpec,
    grading: Arc<Grading>,
}

impl ExtendedOrder {
    pub fn base(&self) -> &OrderSpec {
        &self.base
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn m(&self) -> usize {
        self.grading.m()
    }

    #[inline]
    pub fn compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        let m = self.grading.m();
        for k in 0..m {
            let da = self.grading.row_degree(k, &a.pp, m, a.component);
            let db = self.grading.row_degree(k, &b.pp, m, b.component);
            match da.cmp(&db) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        self.base
            .compare_exponents(a.pp.x_part(m), b.pp.x_part(m))
            .then_with(|| OrderSpec::compare_components(a.component, b.component))
            // equal degree and equal dehomogenization force equal y-parts
            .then_with(|| a.pp.y_part(m).cmp(b.pp.y_part(m)))
    }

    /// The stacked matrix `(I_m W; 0 V)` describing this ordering on power
    /// products (module shifts not included).
    pub fn stacked_matrix(&self) -> Vec<Vec<i64>> {
        let (m, n) = (self.grading.m(), self.grading.n());
        let mut rows = Vec::with_capacity(m + n);
        for (k, w) in self.grading.weights().iter().enumerate() {
            let mut r = vec![0; m];
            r[k] = 1;
            r.extend_from_slice(w);
            rows.push(r);
        }
        for v in self.base.to_matrix(n) {
            let mut r = vec![0; m];
            r.extend(v);
            rows.push(r);
        }
        rows
    }
}

/// `extendOrder`: builds `σ̄^W` after checking that the grading fits `σ`.
pub fn extend_order(base: OrderSpec, grading: Arc<Grading>) -> Result<ExtendedOrder> {
    base.check_arity(grading.n())?;
    Ok(ExtendedOrder { base, grading })
}

/// The ordering active in a ring: `σ` on ordinary terms or `σ̄^W` on
/// homogenized ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermOrder {
    Base(OrderSpec),
    Extended(ExtendedOrder),
}

impl TermOrder {
    #[inline]
    pub fn compare(&self, a: &ModuleTerm, b: &ModuleTerm) -> Ordering {
        match self {
            TermOrder::Base(s) => s.compare(a, b),
            TermOrder::Extended(e) => e.compare(a, b),
        }
    }

    /// Number of homogenizing slots in the terms this ordering compares.
    pub fn y_slots(&self) -> usize {
        match self {
            TermOrder::Base(_) => 0,
            TermOrder::Extended(e) => e.m(),
        }
    }

    pub fn spec(&self) -> &OrderSpec {
        match self {
            TermOrder::Base(s) => s,
            TermOrder::Extended(e) => e.base(),
        }
    }
}

/// `leadingParts`: the maximal summand of a non-zero vector.
pub fn leading_parts<C: Field>(v: &ModuleVector<C>) -> Result<(C, ModuleTerm)> {
    v.leading()
        .map(|(c, t)| (c.clone(), t.clone()))
        .ok_or_else(|| AlgebraError::Domain("leading term of the zero vector".into()))
}

/// How a `deg_W`-compatibility verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatEvidence {
    /// `W = A · (first m rows of σ's matrix)` with `A` lower triangular, positive diagonal.
    RowSpan,
    /// A sampled pair of terms violated compatibility.
    Counterexample,
    /// No violation among the sampled pairs; advisory only.
    Sampling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradingReport {
    pub positive: bool,
    pub deg_compatible: bool,
    pub evidence: CompatEvidence,
}

/// Number of random term pairs examined when the row-span criterion is inconclusive.
pub const COMPAT_SAMPLES: usize = 10_000;

/// `gradingChecks`: positivity of `W` and `deg_W`-compatibility of `σ`.
pub fn grading_checks(grading: &Grading, spec: &OrderSpec) -> GradingReport {
    let positive = grading.is_positive();
    let (m, n) = (grading.m(), grading.n());
    let matrix = spec.to_matrix(n);
    let top: Vec<Vec<i64>> = matrix.iter().take(m).cloned().collect();
    let row_span: Option<Vec<Vec<BigRational>>> = express_in_rows(&top, grading.weights());
    if row_span.as_deref().is_some_and(is_positive_lower_triangular) {
        return GradingReport { positive, deg_compatible: true, evidence: CompatEvidence::RowSpan };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..COMPAT_SAMPLES {
        let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..6)).collect();
        let b: Vec<u32> = (0..n).map(|_| rng.gen_range(0..6)).collect();
        let (pa, pb) = (PowerProduct::from_slice(&a), PowerProduct::from_slice(&b));
        let da = grading.pp_degree(&pa, 0).expect("sizes match");
        let db = grading.pp_degree(&pb, 0).expect("sizes match");
        if da > db && spec.compare_exponents(&a, &b) != Ordering::Greater {
            return GradingReport { positive, deg_compatible: false, evidence: CompatEvidence::Counterexample };
        }
    }
    GradingReport { positive, deg_compatible: true, evidence: CompatEvidence::Sampling }
}
