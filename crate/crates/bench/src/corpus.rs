//! Benchmark systems.

use satgb::coeff::Rational;
use satgb::order::OrderSpec;
use satgb::ring::Ring;
use satgb::term::{ModuleTerm, PowerProduct};
use satgb::vector::ModuleVector;
use satgb::AlgebraError;

use crate::parse::{FieldSpec, ProblemSpec};

/// The cyclic-`k` system over `Q` with `DegRevLex`:
/// `g_d = sum_{i=1..k} prod_{j=0..d-1} x_{(i+j mod k)+1}` for `d = 1..k-1`,
/// and `x_1 ... x_k - 1`.
pub fn cyclic(k: usize) -> Result<ProblemSpec, AlgebraError> {
    if k < 2 {
        return Err(AlgebraError::Domain(format!("cyclic-{k}: need k >= 2")));
    }
    let names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let ring = Ring::standard(&refs, OrderSpec::degrevlex())?;
    let term = |start: usize, len: usize| {
        let mut e = vec![0u32; k];
        for j in 0..len {
            e[(start + j) % k] += 1;
        }
        ModuleTerm::scalar(PowerProduct::from_slice(&e))
    };
    let mut gens = Vec::with_capacity(k);
    for d in 1..k {
        let terms = (0..k).map(|i| (Rational::one(), term(i, d))).collect();
        gens.push(ModuleVector::from_terms(terms, &ring)?);
    }
    let last = vec![(Rational::one(), term(0, k)), (Rational::from_integer(-1), ModuleTerm::scalar(ring.one()))];
    gens.push(ModuleVector::from_terms(last, &ring)?);
    Ok(ProblemSpec { name: format!("cyclic-{k}"), field: FieldSpec::Q, ring, gens })
}
