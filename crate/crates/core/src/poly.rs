//! Polynomial and vector expressions: `x^2 - 3/2*y*z + 1`, `(x+1)^3`,
//! `x y` (implicit product), `[x, y^2 - 1]` (a vector of rank 2).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeff::{Field, Rational};
use crate::error::{AlgebraError, Result};
use crate::ring::Ring;
use crate::term::{ModuleTerm, PowerProduct};
use crate::vector::ModuleVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyErrorKind {
    Syntax(String),
    UnknownIndeterminate(String),
    Arithmetic(String),
}

/// A parse failure at byte `offset` of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyError {
    pub offset: usize,
    pub kind: PolyErrorKind,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PolyErrorKind::Syntax(m) => write!(f, "syntax error at byte {}: {m}", self.offset),
            PolyErrorKind::UnknownIndeterminate(n) => {
                write!(f, "unknown indeterminate `{n}` at byte {}", self.offset)
            }
            PolyErrorKind::Arithmetic(m) => write!(f, "{m} at byte {}", self.offset),
        }
    }
}

impl std::error::Error for PolyError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    ring: &'a Ring,
}

type Poly = ModuleVector<Rational>;

impl<'a> Parser<'a> {
    fn err<T>(&self, kind: PolyErrorKind) -> std::result::Result<T, PolyError> {
        Err(PolyError { offset: self.pos, kind })
    }

    fn syntax<T>(&self, msg: &str) -> std::result::Result<T, PolyError> {
        self.err(PolyErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn lift<T>(&self, r: Result<T>) -> std::result::Result<T, PolyError> {
        r.map_err(|e| PolyError { offset: self.pos, kind: PolyErrorKind::Arithmetic(e.to_string()) })
    }

    fn constant(&self, c: Rational) -> Poly {
        ModuleVector::monomial(c, ModuleTerm::scalar(self.ring.one()))
    }

    fn expr(&mut self) -> std::result::Result<Poly, PolyError> {
        let mut acc = if self.eat('-') {
            self.product()?.neg()
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                let t = self.product()?;
                acc = acc.add(&t, self.ring);
            } else if self.eat('-') {
                let t = self.product()?;
                acc = acc.sub(&t, self.ring);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(')
    }

    fn product(&mut self) -> std::result::Result<Poly, PolyError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
            } else if self.eat('/') {
                let start = self.pos;
                let d = self.power()?;
                let c = match d.terms() {
                    [(c, t)] if t.pp.is_one() => c.clone(),
                    _ => {
                        self.pos = start;
                        return self.syntax("division by a non-constant");
                    }
                };
                let inv = match c.inv() {
                    Some(i) => i,
                    None => {
                        self.pos = start;
                        return self.err(PolyErrorKind::Arithmetic("division by zero".into()));
                    }
                };
                acc = acc.scale(&inv);
                continue;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.power()?;
            let r = acc.mul_poly(&f, self.ring);
            acc = self.lift(r)?;
        }
    }

    fn power(&mut self) -> std::result::Result<Poly, PolyError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[self.pos..].chars().take_while(|c| c.is_ascii_digit()).count();
        if digits == 0 {
            return self.syntax("expected a non-negative integer exponent");
        }
        self.pos += digits;
        let e: u32 = match self.src[start..self.pos].parse() {
            Ok(e) => e,
            Err(_) => {
                self.pos = start;
                return self.err(PolyErrorKind::Arithmetic("exponent too large".into()));
            }
        };
        let mut acc = self.constant(Rational::one());
        for _ in 0..e {
            let r = acc.mul_poly(&base, self.ring);
            acc = self.lift(r)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> std::result::Result<Poly, PolyError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.syntax("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let digits = self.src[start..].chars().take_while(|c| c.is_ascii_digit()).count();
                self.pos += digits;
                let n: BigInt = self.src[start..self.pos].parse().expect("digits");
                Ok(self.constant(Rational::from_big(BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                let len = self.src[start..]
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                    .count();
                let name = &self.src[start..start + len];
                let Some(i) = self.ring.var_index(name) else {
                    return self.err(PolyErrorKind::UnknownIndeterminate(name.to_string()));
                };
                self.pos += len;
                let t = ModuleTerm::scalar(PowerProduct::var(self.ring.nvars(), i, 1));
                Ok(ModuleVector::monomial(Rational::one(), t))
            }
            Some(c) => self.syntax(&format!("unexpected `{c}`")),
            None => self.syntax("unexpected end of expression"),
        }
    }

    /// `[p_1, ..., p_r]` or a bare polynomial (rank 1).
    fn vector(&mut self) -> std::result::Result<Poly, PolyError> {
        if !self.eat('[') {
            return self.expr();
        }
        let mut comps = Vec::new();
        loop {
            comps.push((self.pos, self.expr()?));
            if self.eat(']') {
                break;
            }
            if !self.eat(',') {
                return self.syntax("expected `,` or `]`");
            }
        }
        if comps.len() != self.ring.rank() {
            return self.err(PolyErrorKind::Arithmetic(format!(
                "vector with {} entries in a module of rank {}",
                comps.len(),
                self.ring.rank()
            )));
        }
        let mut terms = Vec::new();
        for (i, (_, p)) in comps.into_iter().enumerate() {
            terms.extend(p.terms().iter().map(|(c, t)| (c.clone(), ModuleTerm::new(t.pp.clone(), i))));
        }
        let r = ModuleVector::from_terms(terms, self.ring);
        self.lift(r)
    }
}

/// Parses one polynomial (or bracketed vector) spanning all of `src`.
pub fn parse_vector(ring: &Ring, src: &str) -> std::result::Result<ModuleVector<Rational>, PolyError> {
    let mut p = Parser { src, pos: 0, ring };
    let v = p.vector()?;
    if p.peek().is_some() {
        return p.syntax("trailing input");
    }
    Ok(v)
}

/// Parses a prefix of `src`, returning the vector and the number of bytes consumed.
pub fn parse_vector_prefix(ring: &Ring, src: &str) -> std::result::Result<(ModuleVector<Rational>, usize), PolyError> {
    let mut p = Parser { src, pos: 0, ring };
    let v = p.vector()?;
    Ok((v, p.pos))
}

/// Convenience wrapper around [`parse_vector`] with [`AlgebraError`] errors.
pub fn poly(ring: &Ring, src: &str) -> Result<ModuleVector<Rational>> {
    parse_vector(ring, src).map_err(|e| AlgebraError::Parse(e.to_string()))
}

/// Maps rational coefficients into another field.
pub fn convert<F: Field>(v: &ModuleVector<Rational>, params: &F::Params) -> Result<ModuleVector<F>> {
    v.map_coeffs(|c| F::from_ratio(&c.numer(), &c.denom(), params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{Prime, Zp};
    use crate::order::OrderSpec;

    fn ring() -> Ring {
        Ring::standard(&["x", "y", "z"], OrderSpec::degrevlex()).unwrap()
    }

    fn show(s: &str) -> String {
        let r = ring();
        poly(&r, s).unwrap().display(&r).to_string()
    }

    #[test]
    fn expressions() {
        assert_eq!(show("x - z^3"), "-z^3 + x");
        assert_eq!(show("(x+1)^2"), "x^2 + 2*x + 1");
        assert_eq!(show("2 x y - 3/4*z"), "2*x*y - 3/4*z");
        assert_eq!(show("-x + x"), "0");
        assert_eq!(show("x*y*z - 1"), "x*y*z - 1");
        assert_eq!(show("x^0"), "1");
        assert_eq!(show("6/4"), "3/2");
    }

    #[test]
    fn errors_carry_offsets() {
        let r = ring();
        let e = parse_vector(&r, "x + w").unwrap_err();
        assert_eq!(e, PolyError { offset: 4, kind: PolyErrorKind::UnknownIndeterminate("w".into()) });
        let e = parse_vector(&r, "x + ").unwrap_err();
        assert!(matches!(e.kind, PolyErrorKind::Syntax(_)));
        assert!(parse_vector(&r, "x^-1").is_err());
        assert!(parse_vector(&r, "x/y").is_err());
        assert!(parse_vector(&r, "x/0").is_err());
        assert!(parse_vector(&r, "(x").is_err());
        assert!(parse_vector(&r, "x y)").is_err());
    }

    #[test]
    fn vectors() {
        let r = ring().with_shifts(vec![vec![0], vec![0]]).unwrap();
        let v = parse_vector(&r, "[x, y^2 - 1]").unwrap();
        assert_eq!(v.display(&r).to_string(), "y^2*e2 + x*e1 - e2");
        assert!(parse_vector(&r, "[x]").is_err());
        let (p, used) = parse_vector_prefix(&ring(), "x + 1, y").unwrap();
        assert_eq!((p.len(), used), (2, 5));
    }

    #[test]
    fn conversion_to_prime_field() {
        let r = ring();
        let p = Prime::new(7).unwrap();
        let v: ModuleVector<Zp> = convert(&poly(&r, "x/2 + 7*y").unwrap(), &p).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v.leading_coeff().unwrap().value(), 4);
        assert!(convert::<Zp>(&poly(&r, "x/7").unwrap(), &p).is_err());
    }
}
