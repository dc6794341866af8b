use std::time::Duration;

use super::*;
use crate::coeff::Rational;
use crate::grading::Grading;
use crate::homog::saturate;
use crate::order::OrderSpec;
use crate::poly::poly;

fn hom(order: OrderSpec) -> Ring {
    Ring::standard(&["x", "y", "z"], order).unwrap().homogenized().unwrap()
}

fn p(r: &Ring, s: &str) -> ModuleVector<Rational> {
    poly(r, s).unwrap()
}

fn shown(r: &Ring, vs: &[ModuleVector<Rational>]) -> Vec<String> {
    vs.iter().map(|v| v.display(r).to_string()).collect()
}

#[test]
fn s_vectors() {
    let r = hom(OrderSpec::lex());
    let f1 = p(&r, "x*h^2 - z^3");
    let f3 = p(&r, "y^3*h^3 - z^6");
    assert_eq!(s_vector(&f1, &f3, &r).unwrap(), p(&r, "x*z^6 - y^3*z^3*h"));
    assert!(s_vector(&f1, &f1, &r).unwrap().is_zero());

    let r = hom(OrderSpec::degrevlex());
    let s = s_vector(&p(&r, "x^2 - y*h"), &p(&r, "x*y - z*h"), &r).unwrap();
    assert_eq!(s, p(&r, "x*z*h - y^2*h"));
    assert!(s_vector(&f1, &ModuleVector::zero(), &r).is_err());
}

#[test]
fn plain_remainders() {
    let r = hom(OrderSpec::degrevlex());
    let g = [p(&r, "x^2 - y*h"), p(&r, "x*y - z*h")];
    let v = p(&r, "x*z*h - y^2*h");
    assert_eq!(remainder(&v, &g, &r, ReductionDepth::Full).unwrap(), v);
    assert!(remainder(&g[0], &g[..1], &r, ReductionDepth::Full).unwrap().is_zero());
    assert!(remainder(&ModuleVector::zero(), &g, &r, ReductionDepth::Full).unwrap().is_zero());
    // head-only leaves reducible tails
    let w = p(&r, "y^3 + x^2*h");
    assert_eq!(remainder(&w, &g[..1], &r, ReductionDepth::HeadOnly).unwrap(), w);
    assert_eq!(remainder(&w, &g[..1], &r, ReductionDepth::Full).unwrap(), p(&r, "y^3 + y*h^2"));
}

#[test]
fn weak_sat_remainders() {
    let r = hom(OrderSpec::lex());
    let w = p(&r, "x*z^6 - y^3*z^3*h");
    let g = [p(&r, "x*h^2 - z^3"), p(&r, "y^3*h^3 - z^6")];
    let out = weak_sat_remainder(&w, &g, &r, &WeakSatPolicy::YMultiplyToReduce).unwrap();
    assert!(out.is_zero());
    // without the substitution the head x z^6 is irreducible
    let never = weak_sat_remainder(&w, &g, &r, &WeakSatPolicy::Never).unwrap();
    assert_eq!(never, remainder(&w, &g, &r, ReductionDepth::Full).unwrap());
    assert_eq!(never, w);

    let r = hom(OrderSpec::degrevlex());
    let g = [p(&r, "x^2 - y*h"), p(&r, "x*y - z*h")];
    let s = s_vector(&g[0], &g[1], &r).unwrap();
    let out = weak_sat_remainder(&s, &g, &r, &WeakSatPolicy::SaturateFinal).unwrap();
    assert_eq!(out.monic(), p(&r, "y^2 - x*z"));
    assert_eq!(sat_remainder(&s, &g, &r).unwrap().monic(), p(&r, "y^2 - x*z"));
    assert!(sat_remainder(&ModuleVector::zero(), &g, &r).unwrap().is_zero());
    let v = p(&r, "y^2*h - x*z*h");
    assert_eq!(sat_remainder(&v, &[], &r).unwrap(), saturate(&v, &r).unwrap());
    assert!(weak_sat_remainder(&p(&r, "x + 1"), &g, &r, &WeakSatPolicy::Never).is_err());
}

#[test]
fn example_bases() {
    let r = hom(OrderSpec::degrevlex());
    let g = [p(&r, "x^2 - y*h"), p(&r, "x*y - z*h")];
    let sat = buchberger(&g, &r, &StrategyConfig::self_saturating()).unwrap();
    assert_eq!(shown(&r, &sat.reduced), ["x^2 - h*y", "x*y - h*z", "y^2 - x*z"]);
    let plain = buchberger(&g, &r, &StrategyConfig::homogeneous()).unwrap();
    assert_eq!(shown(&r, &plain.reduced), ["h*y^2 - h*x*z", "x^2 - h*y", "x*y - h*z"]);
    assert!(is_groebner_basis(&plain.reduced, &r).unwrap());

    let one = buchberger(&[p(&r, "3*x^2 - 6*y*h")], &r, &StrategyConfig::sugar()).unwrap();
    assert_eq!(shown(&r, &one.reduced), ["x^2 - 2*h*y"]);
    assert_eq!(one.stats.poly_red, 0);
}

#[test]
fn groebner_oracle() {
    let r = hom(OrderSpec::degrevlex());
    let g = [p(&r, "x^2 - y*h"), p(&r, "x*y - z*h"), p(&r, "y^2*h - x*z*h")];
    assert!(is_groebner_basis(&g, &r).unwrap());
    assert!(is_groebner_basis(&g[..1], &r).unwrap());

    let r = hom(OrderSpec::lex());
    let f = [p(&r, "x*h^2 - z^3"), p(&r, "y^3*h^3 - z^6")];
    assert!(!is_groebner_basis(&f, &r).unwrap());
    let plain = r.dehomogenized();
    assert!(is_groebner_basis(&[p(&plain, "x - z^3"), p(&plain, "y^3 - z^6")], &plain).unwrap());
}

#[test]
fn interreduction() {
    let r = Ring::standard(&["x", "y"], OrderSpec::degrevlex()).unwrap();
    let out = interreduce(&[p(&r, "x"), p(&r, "x + y")], &r).unwrap();
    assert_eq!(shown(&r, &out), ["x", "y"]);
    assert_eq!(interreduce(&out, &r).unwrap(), out);
    let out = interreduce(&[p(&r, "2*x^2 + x"), p(&r, "x"), p(&r, "x")], &r).unwrap();
    assert_eq!(shown(&r, &out), ["x"]);
}

#[test]
fn inhomogeneous_pipeline() {
    let r = Ring::standard(&["x", "y", "z"], OrderSpec::lex()).unwrap();
    let gens = [p(&r, "x - z^3"), p(&r, "x^2 - y^3")];
    for cfg in [
        StrategyConfig::self_saturating(),
        StrategyConfig::homogeneous(),
        StrategyConfig::weak_sat(WeakSatPolicy::YMultiplyToReduce),
        StrategyConfig::weak_sat(WeakSatPolicy::SaturateFinal),
    ] {
        let out = compute_inhom_gb(&gens, &r, &cfg).unwrap();
        assert_eq!(shown(&r, &out.reduced), ["x - z^3", "y^3 - z^6"], "{cfg:?}");
    }
    let a = run_strategy(&Strategy::A, &gens, &r, None, false).unwrap();
    assert_eq!(shown(&r, &a.reduced), ["x - z^3", "y^3 - z^6"]);
}

#[test]
fn homogeneous_input_is_unchanged_by_saturation() {
    let r = Ring::standard(&["x", "y", "z"], OrderSpec::degrevlex()).unwrap();
    let gens = [p(&r, "x^2 - y*z"), p(&r, "x*y - z^2")];
    let direct = buchberger(&gens, &r, &StrategyConfig::sugar()).unwrap();
    let via = compute_inhom_gb(&gens, &r, &StrategyConfig::self_saturating()).unwrap();
    assert_eq!(direct.reduced, via.reduced);
}

#[test]
fn refusals_and_budget() {
    let g = Grading::new(vec![vec![0, 1], vec![-1, 0]], vec![vec![0, 0]]).unwrap();
    let r = Ring::new(vec!["a".into(), "b".into()], OrderSpec::lex(), g).unwrap();
    let gens = [p(&r, "a - b")];
    let out = compute_inhom_gb(&gens, &r, &StrategyConfig::self_saturating());
    assert!(matches!(out, Err(AlgebraError::Refused(_))));

    let r = Ring::standard(&["x", "y", "z", "w"], OrderSpec::degrevlex()).unwrap();
    let gens = [
        p(&r, "x + y + z + w"),
        p(&r, "x*y + y*z + z*w + w*x"),
        p(&r, "x*y*z + y*z*w + z*w*x + w*x*y"),
        p(&r, "x*y*z*w - 1"),
    ];
    let cfg = StrategyConfig::sugar().with_budget(Some(Duration::ZERO));
    assert!(matches!(buchberger(&gens, &r, &cfg), Err(AlgebraError::Timeout)));
}

#[test]
fn transcripts() {
    let r = hom(OrderSpec::degrevlex());
    let g = [p(&r, "x^2 - y*h"), p(&r, "x*y - z*h")];
    let run = buchberger(&g, &r, &StrategyConfig::self_saturating().with_trace(true)).unwrap();
    let text = run.transcript.unwrap().render();
    assert_eq!(
        text,
        "GEN 1\nADD 0 SUGAR 2\nGEN 0\nADD 1 SUGAR 2\nPAIR 0 1\nSAT\nADD 2 SUGAR 3\nPAIR 0 2\nREDSTEP 1 z\nZERO\n"
    );
}
