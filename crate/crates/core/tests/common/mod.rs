#![allow(dead_code)]

pub mod fixtures;
pub mod oracles;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use satgb::prelude::*;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn shown(r: &Ring, vs: &[ModuleVector<Rational>]) -> Vec<String> {
    vs.iter().map(|v| v.display(r).to_string()).collect()
}

/// `K[x1,x2,x3]` with the two-row grading and the matrix ordering of the
/// `m = 2` example.
pub fn two_row_ring() -> Ring {
    let g = Grading::new(vec![vec![1, 1, 1], vec![1, 0, 1]], vec![vec![0, 0]]).unwrap();
    let sigma = OrderSpec::matrix(vec![vec![1, 1, 1], vec![0, 0, 1], vec![0, 1, 0]]).unwrap();
    Ring::new(vec!["x1".into(), "x2".into(), "x3".into()], sigma, g).unwrap()
}

/// Plain rings the property suites run over.
pub fn plain_rings() -> Vec<Ring> {
    let xyz = ["x", "y", "z"];
    vec![
        Ring::standard(&xyz, OrderSpec::lex()).unwrap(),
        Ring::standard(&xyz, OrderSpec::deglex()).unwrap(),
        Ring::standard(&xyz, OrderSpec::degrevlex()).unwrap(),
        Ring::standard(&xyz, OrderSpec::matrix(vec![vec![1, 1, 1], vec![1, 0, 0], vec![0, 1, 0]]).unwrap()).unwrap(),
        Ring::standard(&xyz, OrderSpec::degrevlex()).unwrap().with_shifts(vec![vec![0], vec![1]]).unwrap(),
        two_row_ring(),
    ]
}

pub fn random_pp(rng: &mut ChaCha8Rng, len: usize, max: u32) -> PowerProduct {
    let e: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=max)).collect();
    PowerProduct::from_slice(&e)
}

/// A random vector of the plain ring `r`: up to `terms` summands with
/// exponents at most `max` and coefficients in `-2..=2`.
pub fn random_vector(rng: &mut ChaCha8Rng, r: &Ring, terms: usize, max: u32) -> ModuleVector<Rational> {
    let k = rng.gen_range(1..=terms);
    let summands = (0..k)
        .map(|_| {
            let c = q(rng.gen_range(-2..=2));
            (c, ModuleTerm::new(random_pp(rng, r.nvars(), max), rng.gen_range(0..r.rank())))
        })
        .collect();
    ModuleVector::from_terms(summands, r).unwrap()
}

/// A random non-zero W̄-homogeneous vector of the homogenized ring `h`:
/// random x-parts topped up with the y-powers that bring each summand to a
/// common degree.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, h: &Ring, terms: usize, max: u32) -> ModuleVector<Rational> {
    let plain = h.dehomogenized();
    loop {
        let xs: Vec<ModuleTerm> = (0..rng.gen_range(1..=terms))
            .map(|_| ModuleTerm::new(random_pp(rng, plain.nvars(), max), rng.gen_range(0..h.rank())))
            .collect();
        let degs: Vec<Degree> = xs.iter().map(|t| plain.degree(t).unwrap()).collect();
        let mut top = degs[0].clone();
        for d in &degs[1..] {
            top = top.top(d);
        }
        let extra: Vec<i64> = (0..h.m()).map(|_| rng.gen_range(0..=1)).collect();
        let target = top.checked_add(&Degree::new(&extra)).unwrap();
        let summands = xs
            .iter()
            .zip(&degs)
            .map(|(t, d)| {
                let y: Vec<u32> = target.entries().iter().zip(d.entries()).map(|(a, b)| (a - b) as u32).collect();
                let mut e = y;
                e.extend_from_slice(t.pp.exponents());
                (q(rng.gen_range(-2..=2)), ModuleTerm::new(PowerProduct::from_slice(&e), t.component))
            })
            .collect();
        let v = ModuleVector::from_terms(summands, h).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

/// A random ideal in at most three indeterminates: at most three generators
/// of degree at most three, coefficients in `-2..=2`.
pub fn random_ideal(rng: &mut ChaCha8Rng) -> (Ring, Vec<ModuleVector<Rational>>) {
    let n = rng.gen_range(1..=3);
    let order = match rng.gen_range(0..3) {
        0 => OrderSpec::lex(),
        1 => OrderSpec::deglex(),
        _ => OrderSpec::degrevlex(),
    };
    random_ideal_in(rng, n, order, 3)
}

/// Like [`random_ideal`] with the ring and degree bound fixed.
pub fn random_ideal_in(rng: &mut ChaCha8Rng, n: usize, order: OrderSpec, max_deg: u32) -> (Ring, Vec<ModuleVector<Rational>>) {
    let names = ["x", "y", "z"];
    let r = Ring::standard(&names[..n], order).unwrap();
    let gens = loop {
        let k = rng.gen_range(1..=3);
        let gens: Vec<_> = (0..k)
            .map(|_| {
                let summands = (0..rng.gen_range(1..=3))
                    .map(|_| {
                        let d = rng.gen_range(0..=max_deg);
                        let mut e = vec![0u32; n];
                        for _ in 0..d {
                            e[rng.gen_range(0..n)] += 1;
                        }
                        (q(rng.gen_range(-2..=2)), ModuleTerm::scalar(PowerProduct::from_slice(&e)))
                    })
                    .collect();
                ModuleVector::from_terms(summands, &r).unwrap()
            })
            .filter(|v| !v.is_zero())
            .collect();
        if !gens.is_empty() {
            break gens;
        }
    };
    (r, gens)
}
