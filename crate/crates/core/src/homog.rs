//! Homogenization, dehomogenization and saturation of module vectors.

use smallvec::SmallVec;

use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::ring::Ring;
use crate::term::{ModuleTerm, PowerProduct};
use crate::vector::ModuleVector;

fn require_homogenized(hom: &Ring) -> Result<()> {
    if !hom.is_homogenized() {
        return Err(AlgebraError::Structure("expected the homogenized ring".into()));
    }
    Ok(())
}

/// `v^hom`: each summand `t e_i` gets `y^(TopDeg(v) - deg_W(t) - δ_i)`.
/// `v` lives in `hom.dehomogenized()`; the result in `hom`.
pub fn homogenize<C: Field>(v: &ModuleVector<C>, hom: &Ring) -> Result<ModuleVector<C>> {
    require_homogenized(hom)?;
    if v.is_zero() {
        return Ok(ModuleVector::zero());
    }
    let g = hom.grading();
    let top = g.top_deg(v, 0)?;
    let mut out = Vec::with_capacity(v.len());
    for (c, t) in v.iter() {
        let d = g.degree(t, 0)?;
        let mut y: SmallVec<[u32; 4]> = SmallVec::with_capacity(top.len());
        for (a, b) in top.entries().iter().zip(d.entries()) {
            let e = a - b;
            if e < 0 {
                return Err(AlgebraError::Domain("negative homogenizing exponent".into()));
            }
            y.push(u32::try_from(e).map_err(|_| AlgebraError::Overflow("homogenizing exponent"))?);
        }
        out.push((c.clone(), ModuleTerm::new(t.pp.with_y(&y), t.component)));
    }
    ModuleVector::from_terms(out, hom)
}

/// `V^deh`: sets every homogenizing indeterminate to 1, merging collapsed terms.
/// The result is sorted under `σ`.
pub fn dehomogenize<C: Field>(v: &ModuleVector<C>, hom: &Ring) -> Result<ModuleVector<C>> {
    require_homogenized(hom)?;
    let m = hom.m();
    let terms: Vec<(C, ModuleTerm)> = v
        .iter()
        .map(|(c, t)| (c.clone(), ModuleTerm::new(t.pp.dehomogenize(m), t.component)))
        .collect();
    ModuleVector::from_terms(terms, &hom.dehomogenized())
}

/// The exponents `r` of the largest `y^r` dividing every summand.
pub fn common_y_power<C: Field>(v: &ModuleVector<C>, m: usize) -> SmallVec<[u32; 4]> {
    let mut it = v.iter();
    let Some((_, first)) = it.next() else {
        return SmallVec::from_elem(0, m);
    };
    let mut r: SmallVec<[u32; 4]> = SmallVec::from_slice(first.pp.y_part(m));
    for (_, t) in it {
        for (a, b) in r.iter_mut().zip(t.pp.y_part(m)) {
            *a = (*a).min(*b);
        }
    }
    r
}

/// Divides every summand by `y^r`; `r` must be a common divisor.
pub(crate) fn strip_y<C: Field>(v: &ModuleVector<C>, r: &[u32]) -> ModuleVector<C> {
    if r.iter().all(|&e| e == 0) {
        return v.clone();
    }
    let terms = v
        .iter()
        .map(|(c, t)| {
            let y: SmallVec<[u32; 4]> = t.pp.y_part(r.len()).iter().zip(r).map(|(a, b)| a - b).collect();
            (c.clone(), ModuleTerm::new(t.pp.replace_y(&y), t.component))
        })
        .collect();
    // dividing by a term preserves the order
    ModuleVector::from_sorted(terms)
}

/// `U^sat = (U^deh)^hom` of a homogeneous vector.
pub fn saturate<C: Field>(v: &ModuleVector<C>, hom: &Ring) -> Result<ModuleVector<C>> {
    require_homogenized(hom)?;
    if v.homogeneous_degree(hom)?.is_none() {
        return Err(AlgebraError::Domain("saturation of a non-homogeneous vector".into()));
    }
    if hom.m() == 1 {
        return Ok(strip_y(v, &common_y_power(v, 1)));
    }
    homogenize(&dehomogenize(v, hom)?, hom)
}

/// Elementwise [`homogenize`]; zero generators are rejected.
pub fn homogenize_generators<C: Field>(vs: &[ModuleVector<C>], hom: &Ring) -> Result<Vec<ModuleVector<C>>> {
    vs.iter()
        .enumerate()
        .map(|(i, v)| {
            if v.is_zero() {
                return Err(AlgebraError::Domain(format!("generator {} is zero", i + 1)));
            }
            homogenize(v, hom)
        })
        .collect()
}

/// `y^r` as a power product of `hom`.
pub(crate) fn y_power(r: &[u32], hom: &Ring) -> PowerProduct {
    PowerProduct::one(hom.n()).with_y(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Rational;
    use crate::grading::Grading;
    use crate::order::OrderSpec;

    fn poly(ring: &Ring, summands: &[(i64, &[u32])]) -> ModuleVector<Rational> {
        ModuleVector::from_terms(
            summands
                .iter()
                .map(|&(c, e)| (Rational::from_integer(c), ModuleTerm::scalar(PowerProduct::from_slice(e))))
                .collect(),
            ring,
        )
        .unwrap()
    }

    fn xyz(order: OrderSpec) -> (Ring, Ring) {
        let r = Ring::standard(&["x", "y", "z"], order).unwrap();
        let h = r.homogenized().unwrap();
        (r, h)
    }

    #[test]
    fn homogenize_examples() {
        let (r, h) = xyz(OrderSpec::lex());
        let f = poly(&r, &[(1, &[1, 0, 0]), (-1, &[0, 0, 3])]);
        let fh = homogenize(&f, &h).unwrap();
        assert_eq!(fh.display(&h).to_string(), "h^2*x - z^3");
        let g = poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 3, 0])]);
        assert_eq!(homogenize(&g, &h).unwrap().display(&h).to_string(), "h*x^2 - y^3");
        assert_eq!(dehomogenize(&fh, &h).unwrap(), f);
        assert!(homogenize(&ModuleVector::<Rational>::zero(), &h).unwrap().is_zero());
        assert!(homogenize(&f, &r).is_err());
    }

    #[test]
    fn two_row_homogenization() {
        let g = Grading::new(vec![vec![1, 1, 1], vec![1, 0, 1]], vec![vec![0, 0]]).unwrap();
        let sigma = OrderSpec::matrix(vec![vec![1, 1, 1], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
        let r = Ring::new(vec!["x1".into(), "x2".into(), "x3".into()], sigma, g).unwrap();
        let h = r.homogenized().unwrap();
        let v = poly(&r, &[(1, &[0, 2, 0]), (-1, &[1, 0, 0])]);
        let vh = homogenize(&v, &h).unwrap();
        assert_eq!(vh.display(&h).to_string(), "y2*x2^2 - y1*x1");
        // y1 y2 x3 saturates to x3
        let w = poly(&h, &[(1, &[1, 1, 0, 0, 1])]);
        assert_eq!(saturate(&w, &h).unwrap(), poly(&h, &[(1, &[0, 0, 0, 0, 1])]));
    }

    #[test]
    fn collapse_and_saturation() {
        let (_, h) = xyz(OrderSpec::degrevlex());
        // x h - x is not homogeneous; dehomogenization still merges
        let v = poly(&h, &[(1, &[1, 1, 0, 0]), (-1, &[0, 1, 0, 0])]);
        assert!(dehomogenize(&v, &h).unwrap().is_zero());
        assert!(saturate(&v, &h).is_err());
        let f3 = poly(&h, &[(1, &[1, 0, 2, 0]), (-1, &[1, 1, 0, 1])]);
        let s = saturate(&f3, &h).unwrap();
        assert_eq!(s.display(&h).to_string(), "y^2 - x*z");
        assert_eq!(homogenize(&dehomogenize(&f3, &h).unwrap(), &h).unwrap(), s);
        let f1 = poly(&h, &[(1, &[2, 1, 0, 0]), (-1, &[0, 0, 0, 3])]);
        assert_eq!(saturate(&f1, &h).unwrap(), f1);
    }

    #[test]
    fn zero_generators_are_rejected() {
        let (r, h) = xyz(OrderSpec::lex());
        let f = poly(&r, &[(5, &[0, 0, 0])]);
        assert_eq!(homogenize_generators(std::slice::from_ref(&f), &h).unwrap(), vec![poly(&h, &[(5, &[0, 0, 0, 0])])]);
        assert!(homogenize_generators(&[f, ModuleVector::zero()], &h).is_err());
    }
}
