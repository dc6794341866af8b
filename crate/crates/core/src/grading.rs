//! Matrix gradings `W ∈ Mat_{m,n}(Z)`, degree tuples and top degrees.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use smallvec::SmallVec;

use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::term::{ModuleTerm, PowerProduct};
use crate::vector::ModuleVector;

/// A degree tuple in `Z^m`, compared lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Degree(pub SmallVec<[i64; 2]>);

impl Degree {
    pub fn new(entries: &[i64]) -> Self {
        Degree(SmallVec::from_slice(entries))
    }

    pub fn zero(m: usize) -> Self {
        Degree(smallvec::smallvec![0; m])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Componentwise maximum.
    pub fn top(&self, other: &Degree) -> Degree {
        debug_assert_eq!(self.len(), other.len());
        Degree(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn checked_add(&self, other: &Degree) -> Result<Degree> {
        if self.len() != other.len() {
            return Err(AlgebraError::Structure("degree tuples of different length".into()));
        }
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_add(*b).ok_or(AlgebraError::Overflow("degree"))?);
        }
        Ok(Degree(out))
    }

    pub fn checked_sub(&self, other: &Degree) -> Result<Degree> {
        if self.len() != other.len() {
            return Err(AlgebraError::Structure("degree tuples of different length".into()));
        }
        let mut out = SmallVec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b).ok_or(AlgebraError::Overflow("degree"))?);
        }
        Ok(Degree(out))
    }

    /// `self >= other` in every component.
    pub fn dominates(&self, other: &Degree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Top(v_1, ..., v_s)`: the componentwise maximum of equal-length tuples.
pub fn top_tuple<'a>(tuples: impl IntoIterator<Item = &'a Degree>) -> Result<Degree> {
    let mut it = tuples.into_iter();
    let first = it
        .next()
        .ok_or_else(|| AlgebraError::Structure("Top of an empty set of tuples".into()))?
        .clone();
    it.try_fold(first, |acc, d| {
        if d.len() != acc.len() {
            return Err(AlgebraError::Structure("Top of tuples of different length".into()));
        }
        Ok(acc.top(d))
    })
}

/// A grading of `K[x_1..x_n]` by the rows of `W`, plus degree shifts
/// `δ_1..δ_r` of the module basis vectors.
///
/// The homogenized ring `K[y_1..y_m, x_1..x_n]` is graded by `(I_m | W)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grading {
    weights: Vec<Vec<i64>>,
    shifts: Vec<Vec<i64>>,
    standard: bool,
}

impl Grading {
    /// Builds the grading, checking that `W` has full row rank `m >= 1`.
    pub fn new(weights: Vec<Vec<i64>>, shifts: Vec<Vec<i64>>) -> Result<Self> {
        let m = weights.len();
        if m == 0 {
            return Err(AlgebraError::Grading("W needs at least one row".into()));
        }
        let n = weights[0].len();
        if n == 0 || weights.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Grading("rows of W must be non-empty and of equal length".into()));
        }
        if shifts.is_empty() {
            return Err(AlgebraError::Grading("at least one module shift (rank >= 1) is required".into()));
        }
        if shifts.iter().any(|s| s.len() != m) {
            return Err(AlgebraError::Grading(format!("every shift must have {m} entries")));
        }
        if matrix_rank(&weights) != m {
            return Err(AlgebraError::Grading(format!("W must have rank {m}")));
        }
        let standard = m == 1 && weights[0].iter().all(|&w| w == 1) && shifts.iter().all(|s| s[0] == 0);
        Ok(Grading { weights, shifts, standard })
    }

    /// The single all-ones row on `n` indeterminates, rank-1 module.
    pub fn standard(n: usize) -> Self {
        Grading::new(vec![vec![1; n]], vec![vec![0]]).expect("standard grading is valid")
    }

    /// Same weights with new module shifts (one tuple per basis vector).
    pub fn with_shifts(&self, shifts: Vec<Vec<i64>>) -> Result<Self> {
        Grading::new(self.weights.clone(), shifts)
    }

    /// Number of grading rows, i.e. of homogenizing indeterminates.
    pub fn m(&self) -> usize {
        self.weights.len()
    }

    pub fn n(&self) -> usize {
        self.weights[0].len()
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn shifts(&self) -> &[Vec<i64>] {
        &self.shifts
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    /// Each column has a non-zero entry and its first non-zero entry is positive.
    pub fn is_positive(&self) -> bool {
        (0..self.n()).all(|j| {
            self.weights
                .iter()
                .map(|row| row[j])
                .find(|&w| w != 0)
                .is_some_and(|w| w > 0)
        })
    }

    /// Row `k` of the degree of `t·e_component`, where the first `y_slots`
    /// exponents of `pp` are homogenizing (`y_slots` is 0 or `m`).
    #[inline]
    pub(crate) fn row_degree(&self, k: usize, pp: &PowerProduct, y_slots: usize, component: usize) -> i128 {
        let e = pp.exponents();
        let x = &e[y_slots..];
        let mut d = if y_slots > 0 { e[k] as i128 } else { 0 };
        if self.standard {
            d += x.iter().map(|&a| a as i128).sum::<i128>();
        } else {
            d += self.weights[k].iter().zip(x).map(|(&w, &a)| w as i128 * a as i128).sum::<i128>();
        }
        d + self.shifts.get(component).map_or(0, |s| s[k] as i128)
    }

    /// `deg_W` of an ordinary term (`y_slots = 0`) or `deg_W̄` of a homogenized
    /// one (`y_slots = m`), including the shift of the term's component.
    pub fn degree(&self, term: &ModuleTerm, y_slots: usize) -> Result<Degree> {
        self.check_term(&term.pp, y_slots, term.component)?;
        self.degree_unchecked(&term.pp, y_slots, term.component)
    }

    pub(crate) fn degree_unchecked(&self, pp: &PowerProduct, y_slots: usize, component: usize) -> Result<Degree> {
        let mut out = SmallVec::with_capacity(self.m());
        for k in 0..self.m() {
            let d = self.row_degree(k, pp, y_slots, component);
            out.push(i64::try_from(d).map_err(|_| AlgebraError::Overflow("degree"))?);
        }
        Ok(Degree(out))
    }

    /// Degree of a power product with no module shift.
    pub fn pp_degree(&self, pp: &PowerProduct, y_slots: usize) -> Result<Degree> {
        if y_slots != 0 && y_slots != self.m() {
            return Err(AlgebraError::Structure(format!("{y_slots} homogenizing slots for an m={} grading", self.m())));
        }
        if pp.len() != y_slots + self.n() {
            return Err(AlgebraError::Structure(format!(
                "power product of length {} in a ring with {} indeterminates",
                pp.len(),
                y_slots + self.n()
            )));
        }
        let mut out = SmallVec::with_capacity(self.m());
        for k in 0..self.m() {
            let mut d = if y_slots > 0 { pp.exponents()[k] as i128 } else { 0 };
            d += self.weights[k]
                .iter()
                .zip(pp.x_part(y_slots))
                .map(|(&w, &a)| w as i128 * a as i128)
                .sum::<i128>();
            out.push(i64::try_from(d).map_err(|_| AlgebraError::Overflow("degree"))?);
        }
        Ok(Degree(out))
    }

    fn check_term(&self, pp: &PowerProduct, y_slots: usize, component: usize) -> Result<()> {
        if y_slots != 0 && y_slots != self.m() {
            return Err(AlgebraError::Structure(format!("{y_slots} homogenizing slots for an m={} grading", self.m())));
        }
        if pp.len() != y_slots + self.n() {
            return Err(AlgebraError::Structure(format!(
                "term of length {} in a ring with {} indeterminates",
                pp.len(),
                y_slots + self.n()
            )));
        }
        if component >= self.rank() {
            return Err(AlgebraError::Structure(format!("component e{} beyond rank {}", component + 1, self.rank())));
        }
        Ok(())
    }

    /// `TopDeg_W(v)`: the componentwise maximum of the degrees of all terms.
    pub fn top_deg<C: Field>(&self, v: &ModuleVector<C>, y_slots: usize) -> Result<Degree> {
        if v.is_zero() {
            return Err(AlgebraError::Domain("TopDeg of the zero vector".into()));
        }
        let mut top: Option<Degree> = None;
        for (_, t) in v.iter() {
            let d = self.degree(t, y_slots)?;
            top = Some(match top {
                None => d,
                Some(acc) => acc.top(&d),
            });
        }
        Ok(top.expect("non-empty"))
    }
}

/// Rank over `Q` by exact Gaussian elimination.
pub(crate) fn matrix_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let f = &a[i][c] / &pivot;
                for j in c..cols {
                    let v = &a[rank][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `X · basis = target` over `Q` for the coefficient rows `X`, or `None`
/// if some row of `target` is outside the row span of `basis`.
pub(crate) fn express_in_rows(basis: &[Vec<i64>], target: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let k = basis.len();
    let n = basis.first()?.len();
    // Solve basis^T x = row for each target row, via elimination on the
    // augmented n × (k+1) system.
    let mut out = Vec::with_capacity(target.len());
    for row in target {
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|j| {
                let mut r: Vec<BigRational> = (0..k).map(|i| BigRational::from_integer(basis[i][j].into())).collect();
                r.push(BigRational::from_integer(row[j].into()));
                r
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..k {
            let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let pivot = a[r][c].clone();
            for j in 0..=k {
                a[r][j] = &a[r][j] / &pivot;
            }
            for i in 0..n {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..=k {
                        let v = &a[r][j] * &f;
                        a[i][j] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        if (r..n).any(|i| !a[i][k].is_zero()) {
            return None;
        }
        let mut x = vec![BigRational::zero(); k];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = a[i][k].clone();
        }
        out.push(x);
    }
    Some(out)
}

/// Whether `coeffs` is lower triangular with positive diagonal.
pub(crate) fn is_positive_lower_triangular(coeffs: &[Vec<BigRational>]) -> bool {
    coeffs.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, c)| match j.cmp(&i) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => c.is_positive(),
            std::cmp::Ordering::Greater => c.is_zero(),
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_row() -> Grading {
        Grading::new(vec![vec![1, 1, 1], vec![1, 0, 1]], vec![vec![0, 0]]).unwrap()
    }

    #[test]
    fn degrees_of_terms() {
        let w = two_row();
        // x2^2 -> (2, 0)
        let t = ModuleTerm::scalar(PowerProduct::from_slice(&[0, 2, 0]));
        assert_eq!(w.degree(&t, 0).unwrap(), Degree::new(&[2, 0]));
        // y2 x2^2 in K[y1,y2,x1,x2,x3] -> (2, 1)
        let t = ModuleTerm::scalar(PowerProduct::from_slice(&[0, 1, 0, 2, 0]));
        assert_eq!(w.degree(&t, 2).unwrap(), Degree::new(&[2, 1]));
        let std4 = Grading::standard(4);
        let t = ModuleTerm::scalar(PowerProduct::from_slice(&[1, 3, 0, 0]));
        assert_eq!(std4.degree(&t, 0).unwrap(), Degree::new(&[4]));
        assert!(std4.degree(&t, 1).is_err());
    }

    #[test]
    fn shifts_add_to_degrees() {
        let g = Grading::new(vec![vec![1, 1]], vec![vec![0], vec![3]]).unwrap();
        let t = ModuleTerm::new(PowerProduct::from_slice(&[1, 0]), 1);
        assert_eq!(g.degree(&t, 0).unwrap(), Degree::new(&[4]));
        let bad = ModuleTerm::new(PowerProduct::from_slice(&[1, 0]), 2);
        assert!(g.degree(&bad, 0).is_err());
    }

    #[test]
    fn top_examples() {
        let a = Degree::new(&[4, 1]);
        assert_eq!(top_tuple([&a, &Degree::new(&[3, 1])]).unwrap(), Degree::new(&[4, 1]));
        assert_eq!(top_tuple([&a, &Degree::new(&[3, 2])]).unwrap(), Degree::new(&[4, 2]));
        assert_eq!(top_tuple([&a]).unwrap(), a);
        assert!(top_tuple(std::iter::empty::<&Degree>()).is_err());
    }

    #[test]
    fn positivity_rule() {
        assert!(two_row().is_positive());
        let g = Grading::new(vec![vec![0, 1], vec![-1, 0]], vec![vec![0, 0]]).unwrap();
        assert!(!g.is_positive());
        let g = Grading::new(vec![vec![1, 0]], vec![vec![0]]).unwrap();
        assert!(!g.is_positive(), "zero column");
    }

    #[test]
    fn rank_is_checked() {
        assert!(Grading::new(vec![vec![1, 1], vec![2, 2]], vec![vec![0, 0]]).is_err());
        assert!(Grading::new(vec![], vec![vec![]]).is_err());
        assert!(Grading::new(vec![vec![1, 1]], vec![vec![0, 0]]).is_err());
        assert_eq!(matrix_rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 0]]), 2);
    }

    #[test]
    fn row_span_solver() {
        let basis = vec![vec![1, 1, 1], vec![0, 0, 1]];
        let x = express_in_rows(&basis, &[vec![2, 2, 3]]).unwrap();
        assert_eq!(x[0], vec![BigRational::from_integer(2.into()), BigRational::from_integer(1.into())]);
        assert!(express_in_rows(&basis, &[vec![1, 0, 0]]).is_none());
    }
}
