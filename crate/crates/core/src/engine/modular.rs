//! Strategy runs over `Q` by way of prime fields: run the strategy modulo
//! several primes, lift the reduced bases by Chinese remaindering and
//! rational reconstruction, then check the lift over `Q`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::check::verify_gb;
use super::inhom::learned_run;
use super::{Learn, RunStats, Strategy, Transcript, ZeroPairs};
use crate::coeff::{Field, Prime, Rational, Zp};
use crate::error::{AlgebraError, Result};
use crate::poly::convert;
use crate::ring::Ring;
use crate::term::ModuleTerm;
use crate::vector::ModuleVector;

/// Result of [`run_strategy_modular`].
#[derive(Clone, Debug)]
pub struct ModularGb {
    /// The reduced `σ`-Gröbner basis over `Q`, monic, by descending leading term.
    pub reduced: Vec<ModuleVector<Rational>>,
    /// Counters of the first run in the accepted class; they match the
    /// counters of the same run over `Q`.
    pub stats: RunStats,
    pub transcript: Option<Transcript>,
    /// Primes whose images were combined.
    pub primes: Vec<Prime>,
}

/// The recorded run all later images are compared against.
struct Base {
    support: Vec<Vec<ModuleTerm>>,
    zero: ZeroPairs,
    stats: RunStats,
    transcript: Option<Transcript>,
    residues: Vec<Vec<BigInt>>,
    modulus: BigInt,
    primes: Vec<Prime>,
    /// Lift waiting for confirmation by the next prime.
    candidate: Option<Vec<Vec<Rational>>>,
    mismatches: usize,
}

/// Replays disagreeing with the recorded run before it is discarded as
/// coming from an unlucky prime.
const MAX_MISMATCHES: usize = 2;
const MAX_PRIMES: usize = 2000;

/// Largest primes below `2^31`, descending.
fn primes() -> impl Iterator<Item = Prime> {
    (0..(1u32 << 31)).rev().filter_map(|p| Prime::new(p).ok())
}

fn support(reduced: &[ModuleVector<Zp>]) -> Vec<Vec<ModuleTerm>> {
    reduced.iter().map(|v| v.iter().map(|(_, t)| t.clone()).collect()).collect()
}

/// Runs `strategy` on `vs` modulo primes until the lifted reduced basis is
/// confirmed by one further prime and passes [`verify_gb`] over `Q` together
/// with the reduction of every generator to zero.
///
/// The first prime runs the strategy in full and records which pairs reduce
/// to zero; later primes skip those pairs. Counters and transcript are those
/// of the full run, which coincide with a run over `Q` when the prime is
/// lucky.
pub fn run_strategy_modular(
    strategy: &Strategy,
    vs: &[ModuleVector<Rational>],
    plain: &Ring,
    budget: Option<Duration>,
    trace: bool,
) -> Result<ModularGb> {
    let start = Instant::now();
    let deadline = budget.map(|b| start + b);
    let remaining = || match deadline {
        Some(d) => d.checked_duration_since(Instant::now()).map(Some).ok_or(AlgebraError::Timeout),
        None => Ok(None),
    };
    let mut base: Option<Base> = None;
    for p in primes().take(MAX_PRIMES) {
        let Ok(gens) = vs.iter().map(|v| convert::<Zp>(v, &p)).collect::<Result<Vec<_>>>() else {
            continue; // p divides a denominator
        };
        if gens.iter().zip(vs).any(|(g, v)| g.len() != v.len()) {
            continue;
        }
        let Some(b) = base.as_mut() else {
            let mut zero = ZeroPairs::new();
            let out = learned_run(strategy, &gens, plain, remaining()?, trace, Learn::Record(&mut zero))?;
            let support = support(&out.reduced);
            let mut b = Base {
                residues: support.iter().map(|v| vec![BigInt::zero(); v.len()]).collect(),
                support,
                zero,
                stats: out.stats.clone(),
                transcript: out.run.transcript,
                modulus: BigInt::one(),
                primes: Vec::new(),
                candidate: None,
                mismatches: 0,
            };
            crt_step(&mut b, &images(&out.reduced), p);
            base = Some(b);
            continue;
        };
        let out = learned_run(strategy, &gens, plain, remaining()?, false, Learn::Replay(&b.zero))?;
        if support(&out.reduced) != b.support {
            b.mismatches += 1;
            if b.mismatches > MAX_MISMATCHES {
                base = None;
            }
            continue;
        }
        let images = images(&out.reduced);
        if let Some(cand) = b.candidate.take() {
            if agrees(&cand, &images, p) {
                let reduced = assemble(&b.support, cand, plain)?;
                if verify_gb(&reduced, plain, deadline)? && generates(vs, &reduced, plain, deadline)? {
                    let mut stats = b.stats.clone();
                    stats.wall_time = start.elapsed();
                    let mut primes = b.primes.clone();
                    primes.push(p);
                    return Ok(ModularGb { reduced, stats, transcript: b.transcript.clone(), primes });
                }
            }
        }
        crt_step(b, &images, p);
        b.candidate = reconstruct_all(&b.residues, &b.modulus);
    }
    Err(AlgebraError::Domain(format!("no verified lift after {MAX_PRIMES} primes")))
}

fn images(reduced: &[ModuleVector<Zp>]) -> Vec<Vec<u32>> {
    reduced.iter().map(|v| v.iter().map(|(c, _)| c.value()).collect()).collect()
}

fn crt_step(class: &mut Base, images: &[Vec<u32>], p: Prime) {
    let pb = BigInt::from(p.get());
    let m_mod_p = (&class.modulus % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
    let inv = Zp::new(m_mod_p as i64, p).inv().expect("distinct primes");
    for (res, img) in class.residues.iter_mut().zip(images) {
        for (r, &b) in res.iter_mut().zip(img) {
            let r_mod_p = (&*r % &pb).to_u64_digits().1.first().copied().unwrap_or(0);
            let diff = Zp::new(b as i64 - r_mod_p as i64, p).mul(&inv).value();
            *r += &class.modulus * diff;
        }
    }
    class.modulus *= pb;
    class.primes.push(p);
}

fn reconstruct_all(residues: &[Vec<BigInt>], modulus: &BigInt) -> Option<Vec<Vec<Rational>>> {
    let bound = (modulus >> 1u32).sqrt();
    residues
        .iter()
        .map(|res| res.iter().map(|r| reconstruct(r, modulus, &bound)).collect::<Option<Vec<_>>>())
        .collect()
}

/// The fraction `n/d` with `|n|, d <= bound` and `n ≡ a·d (mod m)`, if any.
fn reconstruct(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        (r0, r1) = (r1, r);
        let t = &t0 - &q * &t1;
        (t0, t1) = (t1, t);
    }
    if t1.is_zero() || &t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    let (n, d) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    Some(Rational::from_big(num_rational::BigRational::new(n, d)))
}

fn agrees(cand: &[Vec<Rational>], images: &[Vec<u32>], p: Prime) -> bool {
    cand.iter().zip(images).all(|(cs, img)| {
        cs.iter()
            .zip(img)
            .all(|(c, &b)| Zp::from_ratio(&c.numer(), &c.denom(), &p).is_some_and(|z| z.value() == b))
    })
}

fn assemble(support: &[Vec<ModuleTerm>], coeffs: Vec<Vec<Rational>>, ring: &Ring) -> Result<Vec<ModuleVector<Rational>>> {
    support
        .iter()
        .zip(coeffs)
        .map(|(ts, cs)| ModuleVector::from_terms(cs.into_iter().zip(ts.iter().cloned()).collect(), ring))
        .collect()
}

/// Whether every generator reduces to zero modulo the Gröbner basis `g`.
fn generates(
    vs: &[ModuleVector<Rational>],
    g: &[ModuleVector<Rational>],
    ring: &Ring,
    deadline: Option<Instant>,
) -> Result<bool> {
    for v in vs {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Err(AlgebraError::Timeout);
        }
        if !super::remainder(v, g, ring, super::ReductionDepth::HeadOnly)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
