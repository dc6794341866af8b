//! Problem files.
//!
//! ```text
//! ring x,y,z over Q;
//! order Lex;
//! grading [1,1,1];
//! gens: x - z^3, x^2 - y^3;
//! ```
//!
//! Clauses are `;`-terminated and appear in this order. `ring` and `order`
//! may be omitted (defaults: the indeterminates of the generators in order
//! of appearance over `Q`, and `DegRevLex`); `grading` defaults to the
//! all-ones row. An optional `shifts [..],..;` clause after `grading` gives
//! a free module of rank equal to its number of rows, with generators
//! written `[p1, ..., pr]`. `#` starts a comment.

use std::fmt;

use satgb::coeff::{Field, Prime, Rational, Zp};
use satgb::grading::Grading;
use satgb::order::{write_rows, OrderSpec};
use satgb::poly::{convert, parse_vector_prefix, PolyErrorKind};
use satgb::ring::Ring;
use satgb::term::ModuleTerm;
use satgb::vector::ModuleVector;
use satgb::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Zp(Prime),
}

impl FieldSpec {
    /// Name used in reports: `Q` or `Zp32003`.
    pub fn report_name(&self) -> String {
        match self {
            FieldSpec::Q => Rational::field_name(&()),
            FieldSpec::Zp(p) => Zp::field_name(p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Zp(p) => write!(f, "Zp {}", p.get()),
        }
    }
}

/// A validated problem: ring, field and non-zero generators.
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemSpec {
    pub name: String,
    pub field: FieldSpec,
    pub ring: Ring,
    /// Generators with rational coefficients; for `Zp` they are non-zero
    /// after reduction modulo `p`.
    pub gens: Vec<ModuleVector<Rational>>,
}

impl ProblemSpec {
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The generators mapped into the prime field.
    pub fn gens_mod(&self, p: Prime) -> Result<Vec<ModuleVector<Zp>>, AlgebraError> {
        self.gens.iter().map(|g| convert::<Zp>(g, &p)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownIndeterminate(String),
    /// 1-based index of the generator.
    ZeroGenerator(usize),
    DimensionMismatch(String),
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnknownIndeterminate(n) => write!(f, "unknown indeterminate `{n}`"),
            ParseErrorKind::ZeroGenerator(i) => write!(f, "generator {i} is zero"),
            ParseErrorKind::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
            ParseErrorKind::Invalid(m) => write!(f, "invalid value: {m}"),
        }
    }
}

impl std::error::Error for ParseError {}

struct Clause<'a> {
    keyword: &'a str,
    /// Byte offset of the body in the (comment-stripped) source.
    start: usize,
    body: &'a str,
}

struct Parser<'a> {
    src: &'a str,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn error(&self, offset: usize, kind: ParseErrorKind) -> ParseError {
        let before = &self.src[..offset.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError { line, column, kind }
    }

    fn syntax(&self, offset: usize, msg: impl Into<String>) -> ParseError {
        self.error(offset, ParseErrorKind::Syntax(msg.into()))
    }

    fn clauses(&self) -> PResult<Vec<Clause<'a>>> {
        let mut out = Vec::new();
        let mut pos = 0;
        loop {
            let rest = &self.src[pos..];
            let skip = rest.len() - rest.trim_start().len();
            pos += skip;
            if pos == self.src.len() {
                return Ok(out);
            }
            let rest = &self.src[pos..];
            let Some(end) = rest.find(';') else {
                return Err(self.syntax(pos, "clause is not terminated by `;`"));
            };
            let word_len = rest.find(|c: char| !(c.is_ascii_alphabetic() || c == ':')).unwrap_or(rest.len());
            let keyword = &rest[..word_len.min(end)];
            if !matches!(keyword, "ring" | "order" | "grading" | "shifts" | "gens:") {
                return Err(self.syntax(pos, format!("expected `ring`, `order`, `grading`, `shifts` or `gens:`, found `{keyword}`")));
            }
            out.push(Clause { keyword, start: pos + keyword.len(), body: &rest[keyword.len()..end] });
            pos += end + 1;
        }
    }

    fn ring_clause(&self, c: &Clause<'a>) -> PResult<(Vec<String>, FieldSpec)> {
        let Some(over) = find_word(c.body, "over") else {
            return Err(self.syntax(c.start + c.body.len(), "expected `over`"));
        };
        let mut names: Vec<String> = Vec::new();
        let mut off = c.start;
        for piece in c.body[..over].split(',') {
            let name = piece.trim();
            let at = off + piece.len() - piece.trim_start().len();
            if !is_identifier(name) {
                return Err(self.syntax(at, format!("`{name}` is not a valid indeterminate name")));
            }
            if names.iter().any(|n| n == name) {
                return Err(self.error(at, ParseErrorKind::Invalid(format!("indeterminate `{name}` declared twice"))));
            }
            names.push(name.to_string());
            off += piece.len() + 1;
        }
        let field_at = c.start + over + 4;
        let field_src = &c.body[over + 4..];
        let at = field_at + field_src.len() - field_src.trim_start().len();
        let mut words = field_src.split_whitespace();
        let field = match (words.next(), words.next(), words.next()) {
            (Some("Q"), None, _) => FieldSpec::Q,
            (Some("Zp"), Some(p), None) => {
                let p: u32 = p.parse().map_err(|_| self.syntax(at, format!("`{p}` is not a modulus")))?;
                FieldSpec::Zp(Prime::new(p).map_err(|e| self.error(at, ParseErrorKind::Invalid(e.to_string())))?)
            }
            _ => return Err(self.syntax(at, "expected `Q` or `Zp <prime>`")),
        };
        Ok((names, field))
    }

    fn rows(&self, body: &str, start: usize) -> PResult<Vec<Vec<i64>>> {
        let mut rows = Vec::new();
        let mut pos = 0;
        let bytes = body.as_bytes();
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && (bytes[*pos] as char).is_whitespace() {
                *pos += 1;
            }
        };
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'[' {
                return Err(self.syntax(start + pos, "expected `[`"));
            }
            pos += 1;
            let close = body[pos..].find(']').ok_or_else(|| self.syntax(start + pos, "expected `]`"))?;
            let mut row = Vec::new();
            let mut off = pos;
            for entry in body[pos..pos + close].split(',') {
                let at = start + off + entry.len() - entry.trim_start().len();
                let v: i64 = entry.trim().parse().map_err(|_| self.syntax(at, format!("`{}` is not an integer", entry.trim())))?;
                row.push(v);
                off += entry.len() + 1;
            }
            rows.push(row);
            pos += close + 1;
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Ok(rows);
            }
            if bytes[pos] != b',' {
                return Err(self.syntax(start + pos, "expected `,` between rows"));
            }
            pos += 1;
        }
    }

    fn check_width(&self, rows: &[Vec<i64>], width: usize, what: &str, at: usize) -> PResult<()> {
        if let Some(r) = rows.iter().find(|r| r.len() != width) {
            return Err(self.error(
                at,
                ParseErrorKind::DimensionMismatch(format!("{what} row of length {} where {width} is expected", r.len())),
            ));
        }
        Ok(())
    }

    fn order_clause(&self, c: &Clause<'a>, n: usize) -> PResult<OrderSpec> {
        let body = c.body.trim();
        let at = c.start + c.body.len() - c.body.trim_start().len();
        match body {
            "Lex" => Ok(OrderSpec::lex()),
            "DegLex" => Ok(OrderSpec::deglex()),
            "DegRevLex" => Ok(OrderSpec::degrevlex()),
            _ if body.starts_with("matrix") => {
                let inner = c.body.trim_start();
                let rows = self.rows(&inner[6..], at + 6)?;
                if rows.len() != n {
                    return Err(self.error(
                        at,
                        ParseErrorKind::DimensionMismatch(format!("{} matrix rows for {n} indeterminates", rows.len())),
                    ));
                }
                self.check_width(&rows, n, "matrix", at)?;
                OrderSpec::matrix(rows).map_err(|e| self.error(at, ParseErrorKind::Invalid(e.to_string())))
            }
            _ => Err(self.syntax(at, "expected `Lex`, `DegLex`, `DegRevLex` or `matrix`")),
        }
    }

    fn gens_clause(&self, c: &Clause<'a>, ring: &Ring, field: FieldSpec) -> PResult<Vec<ModuleVector<Rational>>> {
        let mut gens = Vec::new();
        let mut pos = 0;
        loop {
            let at = c.start + pos;
            let (v, used) = parse_vector_prefix(ring, &c.body[pos..]).map_err(|e| {
                let kind = match e.kind {
                    PolyErrorKind::Syntax(m) => ParseErrorKind::Syntax(m),
                    PolyErrorKind::UnknownIndeterminate(n) => ParseErrorKind::UnknownIndeterminate(n),
                    PolyErrorKind::Arithmetic(m) if m.contains("rank") => ParseErrorKind::DimensionMismatch(m),
                    PolyErrorKind::Arithmetic(m) => ParseErrorKind::Invalid(m),
                };
                self.error(at + e.offset, kind)
            })?;
            let first = at + c.body[pos..].len() - c.body[pos..].trim_start().len();
            let zero = match field {
                FieldSpec::Q => v.is_zero(),
                FieldSpec::Zp(p) => convert::<Zp>(&v, &p)
                    .map_err(|e| self.error(first, ParseErrorKind::Invalid(e.to_string())))?
                    .is_zero(),
            };
            if zero {
                return Err(self.error(first, ParseErrorKind::ZeroGenerator(gens.len() + 1)));
            }
            gens.push(v);
            pos += used;
            let rest = &c.body[pos..];
            let trimmed = rest.trim_start();
            pos += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                return Ok(gens);
            }
            if !trimmed.starts_with(',') {
                return Err(self.syntax(c.start + pos, "expected `,` or `;` after a generator"));
            }
            pos += 1;
        }
    }

    fn parse(&self) -> PResult<ProblemSpec> {
        let clauses = self.clauses()?;
        let rank = |k: &str| ["ring", "order", "grading", "shifts", "gens:"].iter().position(|w| *w == k).unwrap();
        for w in clauses.windows(2) {
            if rank(w[0].keyword) >= rank(w[1].keyword) {
                return Err(self.syntax(w[1].start - w[1].keyword.len(), format!("unexpected `{}` clause", w[1].keyword)));
            }
        }
        let find = |k: &str| clauses.iter().find(|c| c.keyword == k);
        let Some(gens) = find("gens:") else {
            return Err(self.syntax(self.src.len(), "missing `gens:` clause"));
        };
        let (names, field) = match find("ring") {
            Some(c) => self.ring_clause(c)?,
            None => (identifiers(gens.body), FieldSpec::Q),
        };
        if names.is_empty() {
            return Err(self.syntax(gens.start, "no indeterminates"));
        }
        let n = names.len();
        let order = match find("order") {
            Some(c) => self.order_clause(c, n)?,
            None => OrderSpec::degrevlex(),
        };
        let weights = match find("grading") {
            Some(c) => {
                let rows = self.rows(c.body, c.start)?;
                self.check_width(&rows, n, "grading", c.start)?;
                rows
            }
            None => vec![vec![1; n]],
        };
        let shifts = match find("shifts") {
            Some(c) => {
                let rows = self.rows(c.body, c.start)?;
                self.check_width(&rows, weights.len(), "shifts", c.start)?;
                rows
            }
            None => vec![vec![0; weights.len()]],
        };
        let at = find("grading").map_or(0, |c| c.start);
        let grading = Grading::new(weights, shifts).map_err(|e| self.error(at, ParseErrorKind::Invalid(e.to_string())))?;
        let ring = Ring::new(names, order, grading).map_err(|e| self.error(at, ParseErrorKind::Invalid(e.to_string())))?;
        let gens = self.gens_clause(gens, &ring, field)?;
        Ok(ProblemSpec { name: String::new(), field, ring, gens })
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Position of `word` as a whole word in `s`.
fn find_word(s: &str, word: &str) -> Option<usize> {
    let mut from = 0;
    while let Some(i) = s[from..].find(word) {
        let i = from + i;
        let before = s[..i].chars().next_back();
        let after = s[i + word.len()..].chars().next();
        let boundary = |c: Option<char>| c.is_none_or(|c| !(c.is_ascii_alphanumeric() || c == '_'));
        if boundary(before) && boundary(after) {
            return Some(i);
        }
        from = i + word.len();
    }
    None
}

fn identifiers(s: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut rest = s;
    while let Some(i) = rest.find(|c: char| c.is_ascii_alphanumeric() || c == '_') {
        let tail = &rest[i..];
        let len = tail.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(tail.len());
        let word = &tail[..len];
        if is_identifier(word) && !out.iter().any(|n| n == word) {
            out.push(word.to_string());
        }
        rest = &tail[len..];
    }
    out
}

/// Blanks out `#` comments, keeping offsets intact.
fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find('#') {
            Some(i) => format!("{}{}", &l[..i], " ".repeat(l.len() - i)),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// Parses and validates a problem file.
pub fn parse_system(text: &str) -> Result<ProblemSpec, ParseError> {
    let src = strip_comments(text);
    Parser { src: &src }.parse()
}

/// Writes `spec` in the file grammar; [`parse_system`] reads it back unchanged.
pub fn emit(spec: &ProblemSpec) -> String {
    let ring = &spec.ring;
    let mut out = format!("ring {} over {};\norder {};\n", ring.names().join(","), spec.field, ring.order_spec());
    let g = ring.grading();
    let standard_shifts = g.shifts().iter().all(|s| s.iter().all(|&v| v == 0));
    if !g.is_standard() || !standard_shifts || g.rank() > 1 {
        out.push_str("grading ");
        write_rows(&mut out, g.weights()).expect("writing to a string");
        out.push_str(";\n");
    }
    if !standard_shifts || g.rank() > 1 {
        out.push_str("shifts ");
        write_rows(&mut out, g.shifts()).expect("writing to a string");
        out.push_str(";\n");
    }
    let gens: Vec<String> = spec.gens.iter().map(|v| vector_text(v, ring)).collect();
    out.push_str(&format!("gens: {};\n", gens.join(", ")));
    out
}

/// A vector as `[p1, ..., pr]`, or a bare polynomial in rank one.
pub fn vector_text<C: Field>(v: &ModuleVector<C>, ring: &Ring) -> String {
    if ring.rank() == 1 {
        return v.display(ring).to_string();
    }
    let scalar = ring.with_shifts(vec![vec![0; ring.grading().m()]]).expect("rank-one shifts");
    let parts: Vec<String> = (0..ring.rank())
        .map(|k| {
            let terms: Vec<(C, ModuleTerm)> = v
                .iter()
                .filter(|(_, t)| t.component == k)
                .map(|(c, t)| (c.clone(), ModuleTerm::scalar(t.pp.clone())))
                .collect();
            ModuleVector::from_terms(terms, &scalar).expect("terms of the same ring").display(&scalar).to_string()
        })
        .collect();
    format!("[{}]", parts.join(", "))
}
