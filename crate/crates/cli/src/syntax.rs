//! Definition files: one ring, its modules, pairs, check scopes and
//! expected values.
//!
//! ```text
//! field Q
//! ring R = poly[x,y] / (x^2)
//! module M over R = coker [[x, y], [0, x]] twists (0, 1)
//! module N over R = quotient (y)
//! module F over R = free (0, 1)
//! module k over R = residue
//! module W over R = canonical
//! pair P1 = (M, k)
//! checks P1: ischebeck_qpd, tensor_cm
//! expect qpd(k) = 1
//! expect P(k, k) >= 10
//! expect check ischebeck_qpd P1 = hypotheses-not-met
//! note free text
//! ```
//!
//! Coker matrices list one row per generator; column `j` is relation `j`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use homograde_core::{AlgebraError, ExtInt, FieldSpec, Polynomial, QuotientRing};
use homograde_harness::{CheckId, Expectation, Expected, Instance, InstanceError, Invariant, ModuleSource, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Syntax,
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ErrorKind,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ErrorKind::Syntax => "syntax",
            ErrorKind::Semantic => "semantic",
        };
        write!(f, "{}:{}: {} error: {}", self.line, self.col, kind, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    /// `>=`
    Ge,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "'{}'", s),
            Tok::Sym(c) => write!(f, "'{}'", c),
            Tok::Ge => write!(f, "'>='"),
        }
    }
}

/// Tokens of one line, each with its 1-based column and byte offset.
fn lex(line: &str, lineno: usize) -> Result<Vec<(Tok, usize, usize)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = line.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (off, c) = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().map(|x| x.1).collect()), col, off));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().map(|x| x.1).collect()), col, off));
        } else if c == '>' && chars.get(i + 1).map(|x| x.1) == Some('=') {
            out.push((Tok::Ge, col, off));
            i += 2;
        } else if "[](),=/*^+-:?".contains(c) {
            out.push((Tok::Sym(c), col, off));
            i += 1;
        } else {
            return Err(ParseError {
                line: lineno,
                col,
                kind: ErrorKind::Syntax,
                message: format!("unexpected character '{}'", c),
            });
        }
    }
    Ok(out)
}

struct Line<'a> {
    text: &'a str,
    no: usize,
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl<'a> Line<'a> {
    fn col(&self) -> usize {
        match self.toks.get(self.pos) {
            Some(t) => t.1,
            None => self.text.trim_end().chars().count() + 1,
        }
    }

    fn err(&self, kind: ErrorKind, col: usize, message: impl Into<String>) -> ParseError {
        ParseError { line: self.no, col, kind, message: message.into() }
    }

    fn syntax(&self, message: impl Into<String>) -> ParseError {
        self.err(ErrorKind::Syntax, self.col(), message)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(t) => t.to_string(),
            None => "end of line".into(),
        }
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{}', found {}", c, self.found())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.syntax(format!("expected {}, found {}", what, self.found()))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.syntax(format!("expected '{}', found {}", kw, self.found()))),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat_sym('-');
        let col = self.col();
        match self.next() {
            Some(Tok::Int(s)) => {
                let v: i64 = s.parse().map_err(|_| self.err(ErrorKind::Syntax, col, "integer out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => {
                self.pos -= 1;
                Err(self.syntax(format!("expected an integer, found {}", self.found())))
            }
        }
    }

    fn end(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            return Err(self.syntax(format!("unexpected {}", self.found())));
        }
        Ok(())
    }

    /// Raw text from the current token to the end of the line.
    fn rest(&self) -> &'a str {
        match self.toks.get(self.pos) {
            Some(t) => self.text[t.2..].trim(),
            None => "",
        }
    }

    /// `( a, b, ... )` with a parser for each item; the list may be empty.
    fn list<T>(
        &mut self,
        open: char,
        close: char,
        mut item: impl FnMut(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<T>, ParseError> {
        self.sym(open)?;
        let mut out = Vec::new();
        if self.eat_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat_sym(close) {
                return Ok(out);
            }
            self.sym(',')?;
        }
    }
}

/// Polynomials over a fixed set of variables.
struct PolyCtx<'r> {
    vars: &'r [String],
    field: FieldSpec,
}

impl PolyCtx<'_> {
    fn n(&self) -> usize {
        self.vars.len()
    }

    fn expr(&self, l: &mut Line<'_>) -> Result<Polynomial, ParseError> {
        let neg = l.eat_sym('-');
        let mut acc = self.term(l)?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if l.eat_sym('+') {
                let t = self.term(l)?;
                acc = acc.add(&t).expect("same ring");
            } else if l.eat_sym('-') {
                let t = self.term(l)?;
                acc = acc.sub(&t).expect("same ring");
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&self, l: &mut Line<'_>) -> Result<Polynomial, ParseError> {
        let mut acc = self.power(l)?;
        while l.eat_sym('*') {
            let f = self.power(l)?;
            acc = acc.mul(&f).expect("same ring");
        }
        Ok(acc)
    }

    fn power(&self, l: &mut Line<'_>) -> Result<Polynomial, ParseError> {
        let base = self.atom(l)?;
        if l.eat_sym('^') {
            let col = l.col();
            let e = l.int()?;
            let e = u32::try_from(e)
                .map_err(|_| l.err(ErrorKind::Syntax, col, "exponent must be a non-negative integer"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&self, l: &mut Line<'_>) -> Result<Polynomial, ParseError> {
        let col = l.col();
        match l.next() {
            Some(Tok::Int(num)) => {
                let num = BigInt::from_str(&num).expect("digits");
                let den = if l.eat_sym('/') {
                    match l.next() {
                        Some(Tok::Int(d)) => BigInt::from_str(&d).expect("digits"),
                        _ => {
                            l.pos -= 1;
                            return Err(l.syntax(format!("expected a denominator, found {}", l.found())));
                        }
                    }
                } else {
                    BigInt::from(1)
                };
                let c = self
                    .field
                    .fraction(&num, &den)
                    .map_err(|e| l.err(ErrorKind::Semantic, col, format!("bad coefficient: {}", e)))?;
                Ok(Polynomial::constant(c, self.n()))
            }
            Some(Tok::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::variable(i, self.n(), self.field)),
                None => Err(l.err(ErrorKind::Semantic, col, format!("unknown variable {}", name))),
            },
            Some(Tok::Sym('(')) => {
                let p = self.expr(l)?;
                l.sym(')')?;
                Ok(p)
            }
            _ => {
                l.pos -= 1;
                Err(l.syntax(format!("expected a polynomial, found {}", l.found())))
            }
        }
    }

    /// A homogeneous polynomial.
    fn homogeneous(&self, l: &mut Line<'_>) -> Result<Polynomial, ParseError> {
        let col = l.col();
        let p = self.expr(l)?;
        if !p.is_homogeneous() {
            return Err(l.err(ErrorKind::Semantic, col, format!("inhomogeneous generator {}", p.format(self.vars))));
        }
        Ok(p)
    }
}

fn ext_int(l: &mut Line<'_>) -> Result<ExtInt, ParseError> {
    match l.peek() {
        Some(Tok::Ident(s)) if s == "inf" => {
            l.pos += 1;
            Ok(ExtInt::PosInf)
        }
        Some(Tok::Sym('-')) if matches!(l.toks.get(l.pos + 1), Some((Tok::Ident(s), _, _)) if s == "inf") => {
            l.pos += 2;
            Ok(ExtInt::NegInf)
        }
        _ => Ok(ExtInt::Finite(l.int()?)),
    }
}

struct Builder {
    id: String,
    field: Option<FieldSpec>,
    instance: Option<Instance>,
}

fn instance_error(l: &Line<'_>, col: usize, e: InstanceError) -> ParseError {
    l.err(ErrorKind::Semantic, col, e.to_string())
}

impl Builder {
    fn statement(&mut self, l: &mut Line<'_>) -> Result<(), ParseError> {
        let col = l.col();
        let kw = l.ident("a statement keyword")?;
        match kw.as_str() {
            "field" => self.field_decl(l, col),
            "ring" => self.ring_decl(l, col),
            "module" => self.module_decl(l),
            "pair" => {
                let inst = self.ring(l, col)?;
                let name = l.ident("a pair name")?;
                l.sym('=')?;
                l.sym('(')?;
                let mcol = l.col();
                let m = l.ident("a module name")?;
                l.sym(',')?;
                let n = l.ident("a module name")?;
                l.sym(')')?;
                l.end()?;
                inst.add_pair(name, &m, &n).map_err(|e| instance_error(l, mcol, e))
            }
            "checks" => {
                let inst = self.ring(l, col)?;
                let scol = l.col();
                let subject = l.ident("a module or pair name")?;
                l.sym(':')?;
                let mut ids = Vec::new();
                loop {
                    let c = l.col();
                    let name = l.ident("a check id")?;
                    let id = CheckId::from_name(&name)
                        .ok_or_else(|| l.err(ErrorKind::Semantic, c, format!("unknown check id {}", name)))?;
                    ids.push(id);
                    if !l.eat_sym(',') {
                        break;
                    }
                }
                l.end()?;
                inst.set_scope(&subject, ids).map_err(|e| instance_error(l, scol, e))
            }
            "expect" => self.expect_decl(l, col),
            "note" => {
                let text = l.rest().to_string();
                self.ring(l, col)?.notes.push(text);
                Ok(())
            }
            other => Err(l.err(ErrorKind::Syntax, col, format!("unknown statement '{}'", other))),
        }
    }

    fn ring(&mut self, l: &Line<'_>, col: usize) -> Result<&mut Instance, ParseError> {
        self.instance.as_mut().ok_or_else(|| l.err(ErrorKind::Semantic, col, "no ring has been declared yet"))
    }

    fn field_decl(&mut self, l: &mut Line<'_>, col: usize) -> Result<(), ParseError> {
        if self.instance.is_some() {
            return Err(l.err(ErrorKind::Semantic, col, "the field must be declared before the ring"));
        }
        if self.field.is_some() {
            return Err(l.err(ErrorKind::Semantic, col, "field declared twice"));
        }
        let fcol = l.col();
        let f = match l.ident("Q or Fp")?.as_str() {
            "Q" => FieldSpec::Rationals,
            "Fp" => {
                let pcol = l.col();
                let p = l.int()?;
                let p = u64::try_from(p)
                    .map_err(|_| l.err(ErrorKind::Semantic, pcol, "characteristic must be positive"))?;
                FieldSpec::prime(p).map_err(|e| l.err(ErrorKind::Semantic, pcol, e.to_string()))?
            }
            other => return Err(l.err(ErrorKind::Syntax, fcol, format!("expected Q or Fp, found '{}'", other))),
        };
        l.end()?;
        self.field = Some(f);
        Ok(())
    }

    fn ring_decl(&mut self, l: &mut Line<'_>, col: usize) -> Result<(), ParseError> {
        if self.instance.is_some() {
            return Err(l.err(ErrorKind::Semantic, col, "only one ring per definition file"));
        }
        let name = l.ident("a ring name")?;
        l.sym('=')?;
        l.keyword("poly")?;
        let vcol = l.col();
        let vars = l.list('[', ']', |l| l.ident("a variable name"))?;
        if vars.is_empty() {
            return Err(l.err(ErrorKind::Semantic, vcol, "a ring needs at least one variable"));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) || v == "inf" {
                return Err(l.err(ErrorKind::Semantic, vcol, format!("bad or repeated variable {}", v)));
            }
        }
        let field = self.field.unwrap_or(FieldSpec::Rationals);
        let gens = if l.eat_sym('/') {
            let ctx = PolyCtx { vars: &vars, field };
            l.list('(', ')', |l| ctx.homogeneous(l))?
        } else {
            Vec::new()
        };
        l.end()?;
        let ring = QuotientRing::new(field, vars, gens).map_err(|e| l.err(ErrorKind::Semantic, col, e.to_string()))?;
        self.instance = Some(Instance::new(self.id.clone(), name, ring));
        Ok(())
    }

    fn module_decl(&mut self, l: &mut Line<'_>) -> Result<(), ParseError> {
        let name = l.ident("a module name")?;
        l.keyword("over")?;
        let rcol = l.col();
        let rname = l.ident("a ring name")?;
        let inst = match &mut self.instance {
            Some(i) if i.ring_name == rname => i,
            Some(i) => {
                return Err(l.err(
                    ErrorKind::Semantic,
                    rcol,
                    format!("module {} is over {}, but this file declares ring {}", name, rname, i.ring_name),
                ))
            }
            None => return Err(l.err(ErrorKind::Semantic, rcol, format!("ring {} is not declared", rname))),
        };
        l.sym('=')?;
        let ring: Arc<QuotientRing> = inst.ring.clone();
        let ctx = PolyCtx { vars: ring.variables(), field: ring.field() };
        let bcol = l.col();
        let source = match l.ident("a module constructor")?.as_str() {
            "coker" => {
                let rows = l.list('[', ']', |l| l.list('[', ']', |l| ctx.homogeneous(l)))?;
                let twists = if matches!(l.peek(), Some(Tok::Ident(s)) if s == "twists") {
                    l.pos += 1;
                    twist_list(l)?
                } else {
                    vec![0; rows.len()]
                };
                ModuleSource::Coker { rows, twists }
            }
            "quotient" => ModuleSource::Quotient(l.list('(', ')', |l| ctx.homogeneous(l))?),
            "free" => ModuleSource::Free(twist_list(l)?),
            "residue" => ModuleSource::Residue,
            "canonical" => ModuleSource::Canonical,
            other => {
                return Err(l.err(
                    ErrorKind::Syntax,
                    bcol,
                    format!("expected coker, quotient, free, residue or canonical, found '{}'", other),
                ))
            }
        };
        l.end()?;
        inst.add_module(name, source).map_err(|e| match e {
            InstanceError::Algebra(what, AlgebraError::Inhomogeneous(_)) => {
                l.err(ErrorKind::Semantic, bcol, format!("{}: inhomogeneous presentation for the given twists", what))
            }
            e => instance_error(l, bcol, e),
        })
    }

    fn expect_decl(&mut self, l: &mut Line<'_>, col: usize) -> Result<(), ParseError> {
        let inst = self.ring(l, col)?;
        let icol = l.col();
        let head = l.ident("an invariant or 'check'")?;
        let e = if head == "check" {
            let ccol = l.col();
            let cname = l.ident("a check id")?;
            let check = CheckId::from_name(&cname)
                .ok_or_else(|| l.err(ErrorKind::Semantic, ccol, format!("unknown check id {}", cname)))?;
            let subject = l.ident("a module or pair name")?;
            l.sym('=')?;
            let vcol = l.col();
            let word = l.rest();
            let verdict = Verdict::from_name(word)
                .ok_or_else(|| l.err(ErrorKind::Semantic, vcol, format!("unknown verdict '{}'", word)))?;
            l.pos = l.toks.len();
            Expectation::Verdict { check, subject, verdict }
        } else {
            let invariant = Invariant::from_name(&head)
                .ok_or_else(|| l.err(ErrorKind::Semantic, icol, format!("unknown invariant {}", head)))?;
            let args = l.list('(', ')', |l| l.ident("a module name"))?;
            let expected = if l.eat_sym('=') {
                if l.eat_sym('?') {
                    Expected::Unknown
                } else {
                    Expected::Exact(ext_int(l)?)
                }
            } else if l.peek() == Some(&Tok::Ge) {
                l.pos += 1;
                Expected::AtLeast(ext_int(l)?)
            } else {
                return Err(l.syntax(format!("expected '=' or '>=', found {}", l.found())));
            };
            l.end()?;
            Expectation::Value { invariant, args, expected }
        };
        inst.add_expectation(e).map_err(|e| instance_error(l, icol, e))
    }
}

fn twist_list(l: &mut Line<'_>) -> Result<Vec<i32>, ParseError> {
    l.list('(', ')', |l| {
        let col = l.col();
        let v = l.int()?;
        i32::try_from(v).map_err(|_| l.err(ErrorKind::Syntax, col, "twist out of range"))
    })
}

/// Parses a definition file into an instance named `id`.
pub fn parse_definition(text: &str, id: &str) -> Result<Instance, ParseError> {
    let mut b = Builder { id: id.to_string(), field: None, instance: None };
    let mut last = 0;
    for (k, raw) in text.lines().enumerate() {
        let no = k + 1;
        last = no;
        let code = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if code.trim().is_empty() {
            continue;
        }
        // notes keep everything after the keyword, including '#'
        let is_note = code.trim_start().starts_with("note ") || code.trim() == "note";
        let text = if is_note { raw } else { code };
        let toks = if is_note {
            let head = text.len() - text.trim_start().len();
            let mut t = vec![(Tok::Ident("note".into()), head + 1, head)];
            let rest_off = head + 4;
            let rest = &text[rest_off..];
            if !rest.trim().is_empty() {
                let lead = rest.len() - rest.trim_start().len();
                t.push((Tok::Ident(String::new()), rest_off + lead + 1, rest_off + lead));
            }
            t
        } else {
            lex(text, no)?
        };
        let mut line = Line { text, no, toks, pos: 0 };
        b.statement(&mut line)?;
    }
    b.instance.ok_or(ParseError {
        line: last.max(1),
        col: 1,
        kind: ErrorKind::Semantic,
        message: "no ring declared".into(),
    })
}
