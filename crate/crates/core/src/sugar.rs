//! Sugar bookkeeping: the degree of the sweetened companion vector `V^sw`.
//!
//! In a homogenized ring the companion of `V` is `y^s V` with
//! `s = sugar(V) - deg(V)`, since multiplying by `y_k` raises exactly the
//! `k`-th degree entry. In the plain ring the classical sugar (an upper bound
//! for the top degree of the vector) is kept instead.

use smallvec::SmallVec;

use crate::coeff::Field;
use crate::error::{AlgebraError, Result};
use crate::grading::{Degree, Grading};
use crate::homog::common_y_power;
use crate::ring::Ring;
use crate::term::{ModuleTerm, PowerProduct};
use crate::vector::ModuleVector;

pub type Sweetener = SmallVec<[u32; 2]>;

/// Sugar of an input vector: its degree (top degree in the plain ring), and
/// its sweetener relative to the saturation, `U = y^a U^sat`.
pub fn init_sugar<C: Field>(u: &ModuleVector<C>, ring: &Ring) -> Result<(Sweetener, Degree)> {
    if u.is_zero() {
        return Err(AlgebraError::Domain("sugar of the zero vector".into()));
    }
    if !ring.is_homogenized() {
        return Ok((Sweetener::new(), ring.grading().top_deg(u, 0)?));
    }
    let deg = u
        .homogeneous_degree(ring)?
        .ok_or_else(|| AlgebraError::Domain("sugar of a non-homogeneous vector".into()))?
        .expect("non-zero");
    Ok((common_y_power(u, ring.m()).into_iter().collect(), deg))
}

/// `Top(sugar(U), deg(t) + sugar(V))` for a reduction `U - c y^a t V`, `t`
/// being the y-free part of the multiplier (an element of `T^n`).
pub fn reduction_sugar(sugar_u: &Degree, t: &PowerProduct, sugar_v: &Degree, g: &Grading) -> Result<Degree> {
    let dt = g.pp_degree(t, 0)?;
    Ok(sugar_u.top(&dt.checked_add(sugar_v)?))
}

/// Exponents `s` with `V^sw = y^s V`.
pub fn companion_exponent(sugar: &Degree, degree: &Degree) -> Result<Sweetener> {
    sugar
        .entries()
        .iter()
        .zip(degree.entries())
        .map(|(s, d)| {
            u32::try_from(s - d).map_err(|_| AlgebraError::Domain("sugar below the degree".into()))
        })
        .collect()
}

/// `sugar(V_i, V_j)`: the degree of `S(V_i^sw, V_j^sw)`.
///
/// `lt_*` are the leading terms, `deg_*` the degrees of the homogeneous
/// vectors (ignored in the plain ring, where the classical rule
/// `Top(sugar_i + deg(lcm/t_i), sugar_j + deg(lcm/t_j))` is used).
pub fn pair_sugar(
    lt_i: &ModuleTerm,
    sugar_i: &Degree,
    deg_i: &Degree,
    lt_j: &ModuleTerm,
    sugar_j: &Degree,
    deg_j: &Degree,
    ring: &Ring,
) -> Result<Degree> {
    if lt_i.component != lt_j.component {
        return Err(AlgebraError::Domain("leading terms on different components".into()));
    }
    let lcm = lt_i.pp.lcm(&lt_j.pp)?;
    if !ring.is_homogenized() {
        let g = ring.grading();
        let qi = lcm.quotient(&lt_i.pp)?.expect("lcm is a multiple");
        let qj = lcm.quotient(&lt_j.pp)?.expect("lcm is a multiple");
        let a = sugar_i.checked_add(&g.pp_degree(&qi, 0)?)?;
        let b = sugar_j.checked_add(&g.pp_degree(&qj, 0)?)?;
        return Ok(a.top(&b));
    }
    let m = ring.m();
    let si = companion_exponent(sugar_i, deg_i)?;
    let sj = companion_exponent(sugar_j, deg_j)?;
    let ya: Sweetener = lt_i.pp.y_part(m).iter().zip(&si).map(|(a, b)| a + b).collect();
    let yb: Sweetener = lt_j.pp.y_part(m).iter().zip(&sj).map(|(a, b)| a + b).collect();
    let y: Sweetener = ya.iter().zip(&yb).map(|(a, b)| *a.max(b)).collect();
    ring.degree(&ModuleTerm::new(lcm.replace_y(&y), lt_i.component))
}

/// Rule for replacing `V` (with `V^sw = y^a V^sat`) by `V' = y^b V^sat`:
/// the new sweetener is `Top(a, b)`.
pub fn replacement_sweetener(a: &[u32], b: &[u32]) -> Sweetener {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Sugar after replacing a vector of sugar `sugar` by a same-saturation
/// vector of degree `new_degree`: `Top(sugar, new_degree)`.
pub fn replacement_sugar(sugar: &Degree, new_degree: &Degree) -> Degree {
    sugar.top(new_degree)
}
