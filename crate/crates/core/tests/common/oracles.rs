//! Oracles shared by the randomized suites and the acceptance run. Each
//! driver returns its failures instead of panicking.

use std::cmp::Ordering;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use satgb::engine::{Event, HookContext, Substitution, SubstitutionHook, Transcript};
use satgb::prelude::*;

use super::{plain_rings, random_homogeneous, random_ideal, random_ideal_in, random_pp, random_vector};

pub const VECTORS: usize = 500;
pub const PAIRS: usize = 10_000;
pub const IDEALS: usize = 200;
pub const REPLAYS: usize = 50;
pub const FUZZED: usize = 5;

/// `t^sat` of a single term: its x-part, y-free.
fn term_sat(t: &ModuleTerm, m: usize) -> ModuleTerm {
    ModuleTerm::new(t.pp.dehomogenize(m), t.component)
}

/// Checks the identities on one plain vector and one homogeneous vector,
/// returning a description of the first failure.
pub fn check_vector(rng: &mut ChaCha8Rng, r: &Ring) -> Result<(), String> {
    let h = r.homogenized().unwrap();
    let m = h.m();
    let v = random_vector(rng, r, 4, 3);
    let back = dehomogenize(&homogenize(&v, &h).unwrap(), &h).unwrap();
    if back != v {
        return Err(format!("deh(hom(v)) != v for {}", v.display(r)));
    }

    let u = random_homogeneous(rng, &h, 4, 3);
    let shown = u.display(&h).to_string();
    let sat = saturate(&u, &h).unwrap();
    if saturate(&sat, &h).unwrap() != sat {
        return Err(format!("saturation not idempotent on {shown}"));
    }
    let deh = dehomogenize(&u, &h).unwrap();
    if dehomogenize(&sat, &h).unwrap() != deh {
        return Err(format!("(U^sat)^deh != U^deh on {shown}"));
    }

    let lt = u.leading_term().unwrap();
    let lt_deh = deh.leading_term().ok_or_else(|| format!("U^deh vanished for {shown}"))?;
    // LT(U) = y^s LT(U^deh)
    if lt.pp.x_part(m) != lt_deh.pp.exponents() || lt.component != lt_deh.component {
        return Err(format!("x-part of LT(U) differs from LT(U^deh) on {shown}"));
    }
    let s = lt.pp.y_part(m);
    // LT(U) = y^r LT(U^sat) with r <= s
    let lt_sat = sat.leading_term().unwrap();
    if lt_sat.pp.x_part(m) != lt.pp.x_part(m) || lt_sat.component != lt.component {
        return Err(format!("LT(U^sat) is not a y-quotient of LT(U) on {shown}"));
    }
    let r_ok = lt.pp.y_part(m).iter().zip(lt_sat.pp.y_part(m)).all(|(a, b)| a >= b);
    let r: Vec<u32> = lt.pp.y_part(m).iter().zip(lt_sat.pp.y_part(m)).map(|(a, b)| a.saturating_sub(*b)).collect();
    if !r_ok || r.iter().zip(s).any(|(a, b)| a > b) {
        return Err(format!("r = {r:?} exceeds s = {s:?} on {shown}"));
    }
    // LT(U)^sat = LT(U^deh)
    if term_sat(lt, m) != *lt_deh {
        return Err(format!("LT(U)^sat != LT(U^deh) on {shown}"));
    }
    Ok(())
}

fn random_term(rng: &mut ChaCha8Rng, r: &Ring) -> ModuleTerm {
    ModuleTerm::new(random_pp(rng, r.nvars(), 4), rng.gen_range(0..r.rank()))
}

/// A random term of `h` with the same degree as `t` but a different y-part,
/// if one exists among a few tries.
fn same_degree_term(rng: &mut ChaCha8Rng, h: &Ring, t: &ModuleTerm) -> Option<ModuleTerm> {
    let plain = h.dehomogenized();
    let m = h.m();
    let target = h.degree(t).unwrap();
    for _ in 0..8 {
        let x = ModuleTerm::new(random_pp(rng, plain.nvars(), 4), t.component);
        let d = plain.degree(&x).unwrap();
        let y: Option<Vec<u32>> =
            target.entries().iter().zip(d.entries()).map(|(a, b)| u32::try_from(a - b).ok()).collect();
        if let Some(y) = y {
            let u = ModuleTerm::new(x.pp.with_y(&y), t.component);
            if u.pp.y_part(m) != t.pp.y_part(m) {
                return Some(u);
            }
        }
    }
    None
}

/// Whether the ring's ordering is known to refine its W-degree (or
/// W̄-degree), compared lexicographically.
fn degree_compatible(r: &Ring) -> bool {
    r.is_homogenized() || grading_checks(r.grading(), r.order_spec()).deg_compatible
}

pub fn check_order(rng: &mut ChaCha8Rng, r: &Ring) -> Vec<String> {
    let mut failures = Vec::new();
    let compat = degree_compatible(r);
    // needs σ itself to be deg_W-compatible
    let y_degrev = r.is_homogenized() && r.m() == 1 && degree_compatible(&r.dehomogenized());
    let positive = r.grading().is_positive() || !r.is_homogenized();
    let one = |t: &ModuleTerm| ModuleTerm::new(PowerProduct::one(r.nvars()), t.component);
    for _ in 0..PAIRS {
        let (a, b, c) = (random_term(rng, r), random_term(rng, r), random_term(rng, r));
        let ab = r.cmp(&a, &b);
        if ab != r.cmp(&b, &a).reverse() || (ab == Ordering::Equal) != (a == b) {
            failures.push(format!("not a total order on {a:?}, {b:?}"));
        }
        if ab != Ordering::Less && r.cmp(&b, &c) != Ordering::Less && r.cmp(&a, &c) == Ordering::Less {
            failures.push(format!("not transitive on {a:?}, {b:?}, {c:?}"));
        }
        let t = random_pp(rng, r.nvars(), 2);
        if r.cmp(&a.mul_pp(&t).unwrap(), &b.mul_pp(&t).unwrap()) != ab {
            failures.push(format!("not monotone on {a:?}, {b:?} times {t:?}"));
        }
        if compat {
            // σ compares power products first and ignores module shifts
            let (da, db) = if r.is_homogenized() {
                (r.degree(&a).unwrap(), r.degree(&b).unwrap())
            } else {
                (r.pp_degree(&a.pp).unwrap(), r.pp_degree(&b.pp).unwrap())
            };
            if da != db && ab != da.cmp(&db) {
                failures.push(format!("degree {da:?} vs {db:?} not respected by {a:?}, {b:?}"));
            }
        }
        if positive && !a.pp.is_one() && r.cmp(&a, &one(&a)) != Ordering::Greater {
            failures.push(format!("{a:?} is not above 1"));
        }
        if y_degrev {
            if let Some(u) = same_degree_term(rng, r, &a) {
                // more h means smaller
                let expect = u.pp.y_part(1)[0].cmp(&a.pp.y_part(1)[0]).reverse();
                if r.cmp(&u, &a) != expect {
                    failures.push(format!("y-DegRev fails on {u:?}, {a:?}"));
                }
            }
        }
    }
    failures
}

/// Picks substitutions pseudo-randomly from the seed, the call and the step.
#[derive(Debug)]
pub struct Fuzz(u64);

impl SubstitutionHook for Fuzz {
    fn choose(&self, ctx: &HookContext<'_>) -> Substitution {
        let mut h = DefaultHasher::new();
        (self.0, ctx.call, ctx.step, ctx.is_final).hash(&mut h);
        match h.finish() % 4 {
            0 => Substitution::Saturate,
            1 => Substitution::MultiplyToReduce,
            _ => Substitution::Keep,
        }
    }
}

pub fn fuzzed(seed: u64) -> Strategy {
    let policy = WeakSatPolicy::Custom(Arc::new(Fuzz(seed)));
    Strategy::Custom { name: format!("fuzz{seed}"), config: StrategyConfig::weak_sat(policy), homogenize: true }
}

fn listed(r: &Ring, vs: &[ModuleVector<Rational>]) -> String {
    vs.iter().map(|v| v.display(r).to_string()).collect::<Vec<_>>().join(", ")
}

pub fn check_ideal(seed: u64, r: &Ring, gens: &[ModuleVector<Rational>]) -> Result<(), String> {
    let plain = StrategyConfig::new(Selection::ByInsertion, RemainderMode::Plain);
    let expected = buchberger(gens, r, &plain).map_err(|e| e.to_string())?.reduced;
    let mut strategies = vec![Strategy::A, Strategy::H, Strategy::S];
    strategies.extend((0..FUZZED as u64).map(|k| fuzzed(seed * 16 + k)));
    for s in &strategies {
        let out = run_strategy(s, gens, r, None, false).map_err(|e| format!("{s}: {e}"))?;
        if out.reduced != expected {
            return Err(format!(
                "{s} on [{}]: got [{}], expected [{}]",
                listed(r, gens),
                listed(r, &out.reduced),
                listed(r, &expected)
            ));
        }
        if *s == Strategy::S {
            let h = &out.run.ring;
            for v in out.run.vectors() {
                if saturate(&v, h).unwrap() != v {
                    return Err(format!("S basis element {} is not saturated", v.display(h)));
                }
            }
            if !is_groebner_basis(&out.run.vectors(), h).unwrap() {
                return Err(format!("S basis of [{}] fails the Gröbner oracle", listed(r, gens)));
            }
        }
    }
    Ok(())
}

/// Recomputes the sugar of every added element from the transcript alone,
/// using the rules for each event, and compares with the recorded values.
pub fn replay(run: &GbResult<Rational>, gens: &[ModuleVector<Rational>]) -> Result<[usize; 3], String> {
    let ring = &run.ring;
    let g = ring.grading();
    let m = ring.m();
    let transcript: &Transcript = run.transcript.as_ref().ok_or("no transcript")?;
    let deg = |pp: &PowerProduct, comp: usize| ring.degree(&ModuleTerm::new(pp.clone(), comp)).unwrap();
    let mut sugar = Degree::zero(g.m());
    let mut cur = Degree::zero(g.m());
    // added elements, y-multiplications, saturations
    let mut seen = [0; 3];
    for e in &transcript.events {
        match e {
            Event::Gen { index } => {
                let v = &gens[*index];
                sugar = if ring.is_homogenized() {
                    ring.degree(v.leading_term().unwrap()).unwrap()
                } else {
                    g.top_deg(v, 0).unwrap()
                };
                cur = sugar.clone();
            }
            Event::Pair { left, right } => {
                let (a, b) = (&run.basis[*left], &run.basis[*right]);
                let (la, lb) = (a.leading_term(), b.leading_term());
                let comp = la.component;
                let lcm = la.pp.lcm(&lb.pp).unwrap();
                if ring.is_homogenized() {
                    // degree of the S-vector of the two companions y^(sugar - deg) V
                    let ya: Vec<u32> = a.sugar.entries().iter().zip(a.degree.entries()).map(|(s, d)| (s - d) as u32).collect();
                    let yb: Vec<u32> = b.sugar.entries().iter().zip(b.degree.entries()).map(|(s, d)| (s - d) as u32).collect();
                    let ca = la.pp.mul(&PowerProduct::one(ring.n()).with_y(&ya)).unwrap();
                    let cb = lb.pp.mul(&PowerProduct::one(ring.n()).with_y(&yb)).unwrap();
                    sugar = deg(&ca.lcm(&cb).unwrap(), comp);
                    cur = deg(&lcm, comp);
                } else {
                    let qa = g.pp_degree(&lcm.quotient(&la.pp).unwrap().unwrap(), 0).unwrap();
                    let qb = g.pp_degree(&lcm.quotient(&lb.pp).unwrap().unwrap(), 0).unwrap();
                    sugar = a.sugar.checked_add(&qa).unwrap().top(&b.sugar.checked_add(&qb).unwrap());
                }
            }
            Event::RedStep { reducer, multiplier } => {
                let t = PowerProduct::from_slice(multiplier.x_part(m));
                let step = g.pp_degree(&t, 0).unwrap().checked_add(&run.basis[*reducer].sugar).unwrap();
                sugar = sugar.top(&step);
            }
            Event::YMul { power } => {
                cur = cur.checked_add(&g.pp_degree(power, m).unwrap()).unwrap();
                sugar = sugar.top(&cur);
                seen[1] += 1;
            }
            Event::Sat { removed } => {
                cur = cur.checked_sub(&g.pp_degree(removed, m).unwrap()).unwrap();
                seen[2] += 1;
            }
            Event::Add { index, sugar: recorded } => {
                if *recorded != sugar || run.basis[*index].sugar != sugar {
                    return Err(format!("element {index}: replayed {sugar:?}, recorded {recorded:?}"));
                }
                if ring.is_homogenized() && (!sugar.dominates(&cur) || run.basis[*index].degree != cur) {
                    return Err(format!("element {index}: degree {cur:?} against sugar {sugar:?}"));
                }
                seen[0] += 1;
            }
            Event::Zero => {}
        }
    }
    Ok(seen)
}


/// Round trips and saturation identities on [`VECTORS`] random vectors.
pub fn vector_failures() -> Vec<String> {
    let rings = plain_rings();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c0ffee);
    (0..VECTORS).filter_map(|i| check_vector(&mut rng, &rings[i % rings.len()]).err()).collect()
}

/// Ordering axioms on [`PAIRS`] random pairs for each plain ring and its
/// homogenization; also returns the number of orderings examined.
pub fn order_failures() -> (usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdeadbeef);
    let mut failures = Vec::new();
    let mut configured = 0;
    for r in plain_rings() {
        let h = r.homogenized().unwrap();
        for ring in [r, h] {
            configured += 1;
            failures.extend(check_order(&mut rng, &ring));
        }
    }
    (configured, failures)
}

/// Cross-strategy agreement on [`IDEALS`] random ideals.
pub fn ideal_failures() -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    (0..IDEALS)
        .filter_map(|i| {
            let (r, gens) = random_ideal(&mut rng);
            check_ideal(i as u64, &r, &gens).err()
        })
        .collect()
}

/// Sugar replay on [`REPLAYS`] traced runs; also returns how many
/// additions, y-multiplications and saturations were replayed.
pub fn replay_mismatches() -> (Vec<String>, [usize; 3]) {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let configs = [
        StrategyConfig::self_saturating(),
        StrategyConfig::homogeneous(),
        StrategyConfig::weak_sat(WeakSatPolicy::YMultiplyToReduce),
        StrategyConfig::weak_sat(WeakSatPolicy::Custom(Arc::new(Fuzz(7)))),
        StrategyConfig::sugar(),
    ];
    let mut mismatches = Vec::new();
    let mut seen = [0; 3];
    for i in 0..REPLAYS {
        // lex ideals of higher degree exercise the y-multiplications
        let (r, gens) = if (i / configs.len()).is_multiple_of(2) {
            random_ideal(&mut rng)
        } else {
            random_ideal_in(&mut rng, 3, OrderSpec::lex(), 4)
        };
        let cfg = configs[i % configs.len()].clone().with_trace(true);
        let (ring, input) = if i % configs.len() == configs.len() - 1 {
            (r.clone(), gens.clone())
        } else {
            let h = r.homogenized().unwrap();
            let hom = homogenize_generators(&gens, &h).unwrap();
            (h, hom)
        };
        let run = buchberger(&input, &ring, &cfg).unwrap();
        match replay(&run, &input) {
            Ok(n) => (0..3).for_each(|k| seen[k] += n[k]),
            Err(e) => mismatches.push(format!("run {i}: {e}")),
        }
    }
    (mismatches, seen)
}

/// Runs each strategy twice on `runs` random ideals and compares
/// transcripts, counters and bases.
pub fn determinism_failures(runs: usize) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut failures = Vec::new();
    for i in 0..runs {
        let (r, gens) = random_ideal(&mut rng);
        for s in [Strategy::A, Strategy::H, Strategy::S, fuzzed(i as u64)] {
            let a = run_strategy(&s, &gens, &r, None, true).unwrap();
            let b = run_strategy(&s, &gens, &r, None, true).unwrap();
            let same = a.transcript().map(|t| t.render()) == b.transcript().map(|t| t.render())
                && a.stats.same_counts(&b.stats)
                && a.reduced == b.reduced;
            if !same {
                failures.push(format!("{s} differs between runs on [{}]", listed(&r, &gens)));
            }
        }
    }
    failures
}
