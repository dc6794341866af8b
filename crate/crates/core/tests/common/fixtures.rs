//! Small worked examples with known answers.

use satgb::prelude::*;
use satgb::sugar::reduction_sugar;

use super::{q, shown, two_row_ring};

/// Every fixture by name.
pub const CASES: &[(&str, fn())] = &[
    ("homogenization_of_the_running_example", homogenization_of_the_running_example),
    ("two_row_homogenization", two_row_homogenization),
    ("s_vector_and_weak_sat_trace", s_vector_and_weak_sat_trace),
    ("self_saturating_versus_plain_buchberger", self_saturating_versus_plain_buchberger),
    ("sugar_cases", sugar_cases),
    ("groebner_oracle_on_the_running_example", groebner_oracle_on_the_running_example),
    ("leading_terms_differ_for_two_rows", leading_terms_differ_for_two_rows),
    ("inhomogeneous_example", inhomogeneous_example),
];

fn xyz(order: OrderSpec) -> (Ring, Ring) {
    let r = Ring::standard(&["x", "y", "z"], order).unwrap();
    let h = r.homogenized().unwrap();
    (r, h)
}

fn p(r: &Ring, s: &str) -> ModuleVector<Rational> {
    poly(r, s).unwrap()
}

pub fn homogenization_of_the_running_example() {
    let (r, h) = xyz(OrderSpec::lex());
    let f1 = homogenize(&p(&r, "x - z^3"), &h).unwrap();
    let f2 = homogenize(&p(&r, "x^2 - y^3"), &h).unwrap();
    assert_eq!(f1, p(&h, "x*h^2 - z^3"));
    assert_eq!(f2, p(&h, "x^2*h - y^3"));
    assert_eq!(dehomogenize(&f1, &h).unwrap(), p(&r, "x - z^3"));

    let (_, h) = xyz(OrderSpec::degrevlex());
    let f3 = p(&h, "x*z*h - y^2*h");
    assert_eq!(saturate(&f3, &h).unwrap(), p(&h, "x*z - y^2"));
}

pub fn two_row_homogenization() {
    let r = two_row_ring();
    let h = r.homogenized().unwrap();
    let v = p(&r, "x2^2 - x1");
    let vh = homogenize(&v, &h).unwrap();
    assert_eq!(vh, p(&h, "y2*x2^2 - y1*x1"));
    assert_eq!(h.degree(vh.leading_term().unwrap()).unwrap(), Degree::new(&[2, 1]));
}

pub fn s_vector_and_weak_sat_trace() {
    let (_, h) = xyz(OrderSpec::lex());
    let f1 = p(&h, "x*h^2 - z^3");
    let f3 = p(&h, "y^3*h^3 - z^6");
    let w = s_vector(&f1, &f3, &h).unwrap();
    assert_eq!(w, p(&h, "x*z^6 - y^3*z^3*h"));

    // W h^2 - F1 z^6, then + F3 z^3
    let w1 = ModuleVector::combine(
        &q(1),
        &PowerProduct::from_slice(&[2, 0, 0, 0]),
        &w,
        &q(-1),
        &PowerProduct::from_slice(&[0, 0, 0, 6]),
        &f1,
        &h,
    )
    .unwrap();
    assert_eq!(w1, p(&h, "-y^3*z^3*h^3 + z^9"));
    let w2 = w1.add(&f3.mul_term(&q(1), &PowerProduct::from_slice(&[0, 0, 0, 3])).unwrap(), &h);
    assert!(w2.is_zero());

    let out = weak_sat_remainder(&w, &[f1, f3], &h, &WeakSatPolicy::YMultiplyToReduce).unwrap();
    assert!(out.is_zero());
}

pub fn self_saturating_versus_plain_buchberger() {
    let (_, h) = xyz(OrderSpec::degrevlex());
    let g = [p(&h, "x^2 - y*h"), p(&h, "x*y - z*h")];
    let sat = buchberger(&g, &h, &StrategyConfig::self_saturating()).unwrap();
    assert_eq!(shown(&h, &sat.reduced), ["x^2 - h*y", "x*y - h*z", "y^2 - x*z"]);
    let plain = buchberger(&g, &h, &StrategyConfig::homogeneous()).unwrap();
    assert_eq!(shown(&h, &plain.reduced), ["h*y^2 - h*x*z", "x^2 - h*y", "x*y - h*z"]);
}

pub fn sugar_cases() {
    let g = Grading::new(vec![vec![1, 1], vec![0, 1]], vec![vec![0, 0]]).unwrap();
    let x1 = PowerProduct::from_slice(&[1, 0]);
    let case1 = reduction_sugar(&Degree::new(&[4, 1]), &x1, &Degree::new(&[2, 1]), &g).unwrap();
    let case2 = reduction_sugar(&Degree::new(&[4, 1]), &x1, &Degree::new(&[2, 2]), &g).unwrap();
    assert_eq!(case1, Degree::new(&[4, 1]));
    assert_eq!(case2, Degree::new(&[4, 2]));
}

pub fn groebner_oracle_on_the_running_example() {
    let (r, h) = xyz(OrderSpec::deglex());
    let f = [p(&h, "x*h^2 - z^3"), p(&h, "y^3*h^3 - z^6")];
    assert!(!is_groebner_basis(&f, &h).unwrap());
    let deh: Vec<_> = f.iter().map(|v| dehomogenize(v, &h).unwrap()).collect();
    assert_eq!(deh, [p(&r, "x - z^3"), p(&r, "y^3 - z^6")]);
    let (r, _) = xyz(OrderSpec::lex());
    assert!(is_groebner_basis(&[p(&r, "x - z^3"), p(&r, "y^3 - z^6")], &r).unwrap());
}

pub fn leading_terms_differ_for_two_rows() {
    let r = two_row_ring();
    let h = r.homogenized().unwrap();
    let v = p(&r, "x2^2 - x1");
    let vh = homogenize(&v, &h).unwrap();
    let lt_bar = vh.leading_term().unwrap().clone();
    let lt = v.leading_term().unwrap().clone();
    assert_eq!(lt_bar, ModuleTerm::scalar(PowerProduct::from_slice(&[0, 1, 0, 2, 0])));
    assert_eq!(lt, ModuleTerm::scalar(PowerProduct::from_slice(&[0, 2, 0])));
    assert_ne!(lt_bar.pp.exponents(), [&[0, 0][..], lt.pp.exponents()].concat().as_slice());
}

pub fn inhomogeneous_example() {
    let (r, _) = xyz(OrderSpec::lex());
    let gens = [p(&r, "x - z^3"), p(&r, "x^2 - y^3")];
    for s in [Strategy::A, Strategy::H, Strategy::S] {
        let out = run_strategy(&s, &gens, &r, None, false).unwrap();
        assert_eq!(shown(&r, &out.reduced), ["x - z^3", "y^3 - z^6"], "{s}");
    }
}
