//! Exact coefficient fields: arbitrary-precision rationals and prime fields.
//!
//! Rationals keep an `i64` fast path and only fall back to big integers when
//! a numerator or denominator leaves the machine range. Every value is stored
//! in lowest terms with a positive denominator, so structural equality is
//! numeric equality.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// A coefficient field `K`.
///
/// Fields whose elements need runtime data (the modulus of `Z/p`) carry it in
/// [`Field::Params`]; constructors take the params explicitly.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Params: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static;

    fn from_i64(value: i64, params: &Self::Params) -> Self;

    /// Maps `num/den` into the field, `None` when `den` vanishes in it.
    fn from_ratio(num: &BigInt, den: &BigInt, params: &Self::Params) -> Option<Self>;

    fn params(&self) -> Self::Params;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn zero_like(&self) -> Self {
        Self::from_i64(0, &self.params())
    }

    fn one_like(&self) -> Self {
        Self::from_i64(1, &self.params())
    }

    /// True when the printed form needs no sign handling beyond a leading `-`.
    fn is_negative_display(&self) -> bool {
        false
    }

    /// Short field name used in reports (`Q`, `Zp32003`).
    fn field_name(params: &Self::Params) -> String;

    /// Factors `(a, b)`, `a` non-zero, with `a·self = b·lead`: a summand with
    /// coefficient `self` cancels against a reducer with leading coefficient
    /// `lead` as `a·w - b·t·g`. The default is `(1, self/lead)`.
    fn cancel_factors(&self, lead: &Self) -> (Self, Self) {
        (self.one_like(), self.div(lead).expect("non-zero leading coefficient"))
    }

    /// The scalar bringing a non-empty coefficient list into normal form,
    /// `None` when it already is. The default normal form is monic.
    fn normalizer<'a>(mut coeffs: impl Iterator<Item = &'a Self>) -> Option<Self>
    where
        Self: 'a,
    {
        let lc = coeffs.next()?;
        (!lc.is_one()).then(|| lc.inv().expect("non-zero leading coefficient"))
    }
}

// ---------------------------------------------------------------------------
// Rationals

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// `den > 0`, `gcd(num, den) == 1`.
    Small { num: i64, den: i64 },
    /// An integer outside the `i64` range.
    Int(Box<BigInt>),
    /// A non-integer that does not fit `Small`.
    Big(Box<BigRational>),
}

/// An element of `Q`, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd_u128(a.unsigned_abs() as u128, b.unsigned_abs() as u128) as i64
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(Repr::Small { num: v, den: 1 })
    }

    /// Builds `num/den` in lowest terms. Panics on a zero denominator.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = if g > 1 { (num / g, den / g) } else { (num, den) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
            _ if d == 1 => Rational(Repr::Int(Box::new(BigInt::from(n)))),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))),
        }
    }

    fn from_bigint(n: BigInt) -> Self {
        match n.to_i64() {
            Some(num) => Rational(Repr::Small { num, den: 1 }),
            None => Rational(Repr::Int(Box::new(n))),
        }
    }

    /// The value as an integer, if it is one.
    fn as_int(&self) -> Option<Cow<'_, BigInt>> {
        match &self.0 {
            Repr::Small { num, den: 1 } => Some(Cow::Owned(BigInt::from(*num))),
            Repr::Int(n) => Some(Cow::Borrowed(n)),
            _ => None,
        }
    }

    pub fn from_big(value: BigRational) -> Self {
        // BigRational::new already reduces; re-reducing here keeps the invariant
        // for values built with new_raw elsewhere.
        let value = if value.denom().is_negative() || !value.numer().gcd(value.denom()).is_one() {
            BigRational::new(value.numer().clone(), value.denom().clone())
        } else {
            value
        };
        if value.denom().is_one() {
            return Self::from_bigint(value.numer().clone());
        }
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(Box::new(value))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Int(n) => BigRational::from_integer((**n).clone()),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Int(n) => (**n).clone(),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Int(_) => BigInt::one(),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Int(_) => true,
            Repr::Big(_) => false,
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Int(n) => {
                if n.is_negative() {
                    -1
                } else {
                    1
                }
            }
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else if b.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    /// True if this value is stored on the machine-word fast path.
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small { .. })
    }

    fn big_op(
        &self,
        other: &Self,
        int: impl Fn(&BigInt, &BigInt) -> BigInt,
        op: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        match (self.as_int(), other.as_int()) {
            (Some(a), Some(b)) => Self::from_bigint(int(&a, &b)),
            _ => Self::from_big(op(&self.to_big(), &other.to_big())),
        }
    }
}

impl Field for Rational {
    type Params = ();

    fn from_i64(value: i64, _: &()) -> Self {
        Rational::from_integer(value)
    }

    fn from_ratio(num: &BigInt, den: &BigInt, _: &()) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Rational::from_big(BigRational::new(num.clone(), den.clone())))
    }

    fn params(&self) {}

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    fn add(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => self.big_op(other, |x, y| x + y, |x, y| x + y),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if b == d {
                    Self::from_i128(*a as i128 - *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Self::from_i128(a * d - c * b, b * d)
                }
            }
            _ => self.big_op(other, |x, y| x - y, |x, y| x - y),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if *a == 0 || *c == 0 {
                    return Rational::zero();
                }
                // cross-cancel so the i128 products are already reduced
                let g1 = gcd_i64(*a, *d);
                let g2 = gcd_i64(*c, *b);
                let n = (*a / g1) as i128 * (*c / g2) as i128;
                let m = (*b / g2) as i128 * (*d / g1) as i128;
                match (i64::try_from(n), i64::try_from(m)) {
                    (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
                    _ => Self::from_i128(n, m),
                }
            }
            _ if self.is_zero() || other.is_zero() => Rational::zero(),
            _ => self.big_op(other, |x, y| x * y, |x, y| x * y),
        }
    }

    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(n) => Rational(Repr::Small { num: n, den: *den }),
                None => Self::from_i128(-(*num as i128), *den as i128),
            },
            Repr::Int(n) => Self::from_bigint(-(**n).clone()),
            Repr::Big(b) => Self::from_big(-(**b).clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small { num: 0, .. } => None,
            Repr::Small { num, den } => Some(Self::from_i128(*den as i128, *num as i128)),
            Repr::Int(n) => Some(Self::from_big(BigRational::new(BigInt::one(), (**n).clone()))),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    fn is_negative_display(&self) -> bool {
        self.signum() < 0
    }

    fn field_name(_: &()) -> String {
        "Q".to_string()
    }

    /// Division-free for integers: `(lead/g, self/g)` with `g = gcd`, `a > 0`.
    fn cancel_factors(&self, lead: &Self) -> (Self, Self) {
        match (&self.0, &lead.0) {
            (Repr::Small { num: c, den: 1 }, Repr::Small { num: l, den: 1 }) => {
                let g = gcd_i64(*c, *l) as i128;
                let (a, b) = (*l as i128 / g, *c as i128 / g);
                let (a, b) = if a < 0 { (-a, -b) } else { (a, b) };
                (Self::from_i128(a, 1), Self::from_i128(b, 1))
            }
            _ if self.is_integer() && lead.is_integer() => {
                let (c, l) = (self.numer(), lead.numer());
                let g = c.gcd(&l);
                let (a, b) = (&l / &g, &c / &g);
                let (a, b) = if a.is_negative() { (-a, -b) } else { (a, b) };
                (Self::from_big(BigRational::from_integer(a)), Self::from_big(BigRational::from_integer(b)))
            }
            _ => (Rational::one(), self.div(lead).expect("non-zero leading coefficient")),
        }
    }

    /// Normal form: integral, primitive, positive leading coefficient.
    fn normalizer<'a>(coeffs: impl Iterator<Item = &'a Self>) -> Option<Self> {
        let coeffs: Vec<&Rational> = coeffs.collect();
        let negative = coeffs.first()?.signum() < 0;
        let factor = if coeffs.iter().all(|c| c.is_integer()) {
            let g = integer_content(&coeffs);
            if g.is_one() {
                None
            } else {
                Some(Rational::from_big(BigRational::new(BigInt::one(), g)))
            }
        } else {
            let mut g = BigInt::zero();
            let mut l = BigInt::one();
            for c in &coeffs {
                g = g.gcd(&c.numer());
                l = l.lcm(&c.denom());
            }
            Some(Rational::from_big(BigRational::new(l, g)))
        };
        match (factor, negative) {
            (None, false) => None,
            (None, true) => Some(Rational::from_integer(-1)),
            (Some(f), false) => Some(f),
            (Some(f), true) => Some(f.neg()),
        }
    }
}

/// Gcd of non-zero integers, stopping as soon as it reaches one.
fn integer_content(coeffs: &[&Rational]) -> BigInt {
    let gcd = |a: u64, b: u64| gcd_u128(a as u128, b as u128) as u64;
    let mut small = 0u64;
    let mut big: Option<BigInt> = None;
    for c in coeffs {
        match (&c.0, &mut big) {
            (Repr::Small { num, .. }, None) => small = gcd(small, num.unsigned_abs()),
            (Repr::Small { num, .. }, Some(g)) => {
                let r = (&*g % num.unsigned_abs()).to_u64().expect("remainder below a u64");
                small = gcd(r, num.unsigned_abs());
                big = None;
            }
            (Repr::Int(n), None) if small != 0 => {
                let r = (n.magnitude() % small).to_u64().expect("remainder below a u64");
                small = gcd(small, r);
            }
            (Repr::Int(n), None) => big = Some(n.abs()),
            (Repr::Int(n), Some(g)) => {
                *g = g.gcd(n);
                if let Some(v) = g.to_u64() {
                    small = v;
                    big = None;
                }
            }
            (Repr::Big(_), _) => unreachable!("integers only"),
        }
        if big.is_none() && small == 1 {
            return BigInt::one();
        }
    }
    big.unwrap_or_else(|| BigInt::from(small))
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Int(n) => write!(f, "{n}"),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Parse(format!("invalid rational literal `{s}`"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Rational::from_ratio(&n, &d, &()).ok_or_else(bad)
    }
}

// ---------------------------------------------------------------------------
// Prime fields

/// The modulus of a prime field `Z/p`, `2 <= p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Prime(u32);

impl Prime {
    pub const DEFAULT: Prime = Prime(32003);

    pub fn new(p: u32) -> Result<Self, AlgebraError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn is_prime(p: u32) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `Z/p`, stored as its canonical representative in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zp {
    value: u32,
    p: Prime,
}

impl Zp {
    pub fn new(value: i64, p: Prime) -> Self {
        let m = p.0 as i64;
        Zp { value: value.rem_euclid(m) as u32, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.p
    }

    fn check(&self, other: &Self) {
        debug_assert_eq!(self.p, other.p, "mixing coefficients of different prime fields");
    }
}

impl Field for Zp {
    type Params = Prime;

    fn from_i64(value: i64, params: &Prime) -> Self {
        Zp::new(value, *params)
    }

    fn from_ratio(num: &BigInt, den: &BigInt, params: &Prime) -> Option<Self> {
        let m = BigInt::from(params.0);
        let n = num.mod_floor(&m).to_i64()?;
        let d = den.mod_floor(&m).to_i64()?;
        let d = Zp::new(d, *params);
        d.inv().map(|i| Zp::new(n, *params).mul(&i))
    }

    fn params(&self) -> Prime {
        self.p
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = self.value as u64 + other.value as u64;
        let m = self.p.0 as u64;
        Zp { value: if s >= m { (s - m) as u32 } else { s as u32 }, p: self.p }
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let value = if self.value >= other.value {
            self.value - other.value
        } else {
            self.value + self.p.0 - other.value
        };
        Zp { value, p: self.p }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let v = (self.value as u64 * other.value as u64) % self.p.0 as u64;
        Zp { value: v as u32, p: self.p }
    }

    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Zp { value: self.p.0 - self.value, p: self.p }
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.p.0 as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(Zp::new(t0, self.p))
    }

    fn field_name(params: &Prime) -> String {
        format!("Zp{}", params.0)
    }
}

impl fmt::Display for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for Zp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.p.0)
    }
}
