//! Text formats: ring declarations, ideals, and polynomial expressions.
//!
//! Grammar (informal):
//!
//! ```text
//! document := ring-decl ideal-def+
//! ring-decl := "ring" "Q" "[" name ("," name)* "]" "order" ("degrevlex" | "deglex") ";"
//! ideal-def := "ideal" name "=" poly ("," poly)* ";"
//! poly      := ["-"] term (("+" | "-") term)*
//! term      := factor (["*"] factor)*
//! factor    := primary ["^" nat]
//! primary   := nat ["/" nat] | variables | "(" poly ")"
//! ```
//!
//! `*` is optional between factors. A run of letters like `XY` is split
//! into declared variables by maximal munch (longest declared name first),
//! so `XY^2` means X·Y², matching conventional mathematical typography.
//! All failures carry a line/column position.

use crate::groebner::IdealQ;
use crate::mpoly::{MPolyQ, Monomial, MonomialOrder, RingDescriptor};
use crate::unipoly::UniPolyQ;
use crate::{Integer, Rational};
use num_traits::{One, Zero};
use thiserror::Error;

/// A positioned parse failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

const RESERVED: &[&str] = &["ring", "ideal", "order", "degrevlex", "deglex"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokKind {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Eq,
    Eof,
}

impl TokKind {
    fn describe(&self) -> String {
        match self {
            TokKind::Ident(s) => format!("identifier '{s}'"),
            TokKind::Int(s) => format!("integer '{s}'"),
            TokKind::Plus => "'+'".into(),
            TokKind::Minus => "'-'".into(),
            TokKind::Star => "'*'".into(),
            TokKind::Caret => "'^'".into(),
            TokKind::Slash => "'/'".into(),
            TokKind::LParen => "'('".into(),
            TokKind::RParen => "')'".into(),
            TokKind::LBracket => "'['".into(),
            TokKind::RBracket => "']'".into(),
            TokKind::Comma => "','".into(),
            TokKind::Semi => "';'".into(),
            TokKind::Eq => "'='".into(),
            TokKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Tok {
    kind: TokKind,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        let mut advance = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            advance(&mut chars);
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    s.push(advance(&mut chars));
                } else {
                    break;
                }
            }
            toks.push(Tok {
                kind: TokKind::Ident(s),
                line: tl,
                column: tc,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&c) = chars.peek() {
                if c.is_ascii_digit() {
                    s.push(advance(&mut chars));
                } else {
                    break;
                }
            }
            toks.push(Tok {
                kind: TokKind::Int(s),
                line: tl,
                column: tc,
            });
            continue;
        }
        let kind = match c {
            '+' => TokKind::Plus,
            '-' => TokKind::Minus,
            '*' => TokKind::Star,
            '^' => TokKind::Caret,
            '/' => TokKind::Slash,
            '(' => TokKind::LParen,
            ')' => TokKind::RParen,
            '[' => TokKind::LBracket,
            ']' => TokKind::RBracket,
            ',' => TokKind::Comma,
            ';' => TokKind::Semi,
            '=' => TokKind::Eq,
            other => {
                return Err(ParseError::new(
                    tl,
                    tc,
                    format!("unexpected character {other:?}"),
                ))
            }
        };
        advance(&mut chars);
        toks.push(Tok {
            kind,
            line: tl,
            column: tc,
        });
    }
    toks.push(Tok {
        kind: TokKind::Eof,
        line,
        column,
    });
    Ok(toks)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn new(toks: Vec<Tok>) -> Self {
        Parser { toks, pos: 0 }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos.min(self.toks.len() - 1)]
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos.min(self.toks.len() - 1)].clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, tok: &Tok, message: impl Into<String>) -> ParseError {
        ParseError::new(tok.line, tok.column, message)
    }

    fn expect(&mut self, kind: &TokKind) -> Result<Tok, ParseError> {
        let t = self.peek().clone();
        if &t.kind == kind {
            Ok(self.next())
        } else {
            Err(self.error_at(
                &t,
                format!("expected {}, found {}", kind.describe(), t.kind.describe()),
            ))
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<(), ParseError> {
        let t = self.peek().clone();
        match &t.kind {
            TokKind::Ident(s) if s == word => {
                self.next();
                Ok(())
            }
            other => Err(self.error_at(
                &t,
                format!("expected keyword '{word}', found {}", other.describe()),
            )),
        }
    }

    fn expect_name(&mut self, what: &str) -> Result<(String, Tok), ParseError> {
        let t = self.peek().clone();
        match &t.kind {
            TokKind::Ident(s) if !RESERVED.contains(&s.as_str()) => {
                let s = s.clone();
                self.next();
                Ok((s, t))
            }
            TokKind::Ident(s) => Err(self.error_at(
                &t,
                format!("reserved word '{s}' cannot be used as {what}"),
            )),
            other => Err(self.error_at(
                &t,
                format!("expected {what}, found {}", other.describe()),
            )),
        }
    }

    fn integer(&self, tok: &Tok, digits: &str) -> Result<Integer, ParseError> {
        digits
            .parse::<Integer>()
            .map_err(|_| self.error_at(tok, "invalid integer literal"))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let t = self.peek().clone();
        match &t.kind {
            TokKind::Int(s) => {
                let n: u32 = s
                    .parse()
                    .map_err(|_| self.error_at(&t, "exponent too large"))?;
                self.next();
                Ok(n)
            }
            other => Err(self.error_at(
                &t,
                format!("expected integer exponent, found {}", other.describe()),
            )),
        }
    }

    /// Splits a letter run into declared variable indices by maximal munch.
    fn split_variables(
        &self,
        tok: &Tok,
        run: &str,
        ring: &RingDescriptor,
    ) -> Result<Vec<usize>, ParseError> {
        let mut rest = run;
        let mut out = Vec::new();
        while !rest.is_empty() {
            let mut best: Option<(usize, usize)> = None;
            for (i, v) in ring.vars().iter().enumerate() {
                if rest.starts_with(v.as_str())
                    && best.map_or(true, |(len, _)| v.len() > len)
                {
                    best = Some((v.len(), i));
                }
            }
            match best {
                Some((len, i)) => {
                    out.push(i);
                    rest = &rest[len..];
                }
                None => {
                    return Err(self.error_at(
                        tok,
                        format!("unknown variable in '{run}' (stuck at '{rest}')"),
                    ))
                }
            }
        }
        Ok(out)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek().kind,
            TokKind::Ident(_) | TokKind::Int(_) | TokKind::LParen
        )
    }

    fn factor(&mut self, ring: &RingDescriptor) -> Result<MPolyQ, ParseError> {
        let t = self.peek().clone();
        let base = match &t.kind {
            TokKind::Int(digits) => {
                self.next();
                let numer = self.integer(&t, digits)?;
                let value = if self.peek().kind == TokKind::Slash {
                    self.next();
                    let dt = self.peek().clone();
                    match &dt.kind {
                        TokKind::Int(d) => {
                            self.next();
                            let denom = self.integer(&dt, d)?;
                            if denom.is_zero() {
                                return Err(self.error_at(&dt, "zero denominator"));
                            }
                            Rational::new(numer, denom)
                        }
                        other => {
                            return Err(self.error_at(
                                &dt,
                                format!(
                                    "expected integer denominator, found {}",
                                    other.describe()
                                ),
                            ))
                        }
                    }
                } else {
                    Rational::from_integer(numer)
                };
                MPolyQ::constant(ring, value)
            }
            TokKind::Ident(run) => {
                self.next();
                let vars = self.split_variables(&t, run, ring)?;
                let mut exps = vec![0u32; ring.nvars()];
                let (last, head) = vars.split_last().expect("split yields at least one var");
                for &v in head {
                    exps[v] += 1;
                }
                let last_exp = if self.peek().kind == TokKind::Caret {
                    self.next();
                    self.exponent()?
                } else {
                    1
                };
                exps[*last] += last_exp;
                return Ok(MPolyQ::term(Monomial::new(exps), Rational::one()));
            }
            TokKind::LParen => {
                self.next();
                let inner = self.expr(ring)?;
                self.expect(&TokKind::RParen)?;
                inner
            }
            other => {
                return Err(self.error_at(
                    &t,
                    format!("expected a polynomial factor, found {}", other.describe()),
                ))
            }
        };
        if self.peek().kind == TokKind::Caret {
            self.next();
            let n = self.exponent()?;
            Ok(base.pow(n, ring))
        } else {
            Ok(base)
        }
    }

    fn term(&mut self, ring: &RingDescriptor) -> Result<MPolyQ, ParseError> {
        let mut acc = self.factor(ring)?;
        loop {
            if self.peek().kind == TokKind::Star {
                self.next();
                let rhs = self.factor(ring)?;
                acc = acc.mul(&rhs, ring);
            } else if self.starts_factor() {
                let rhs = self.factor(ring)?;
                acc = acc.mul(&rhs, ring);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn expr(&mut self, ring: &RingDescriptor) -> Result<MPolyQ, ParseError> {
        let negate = if self.peek().kind == TokKind::Minus {
            self.next();
            true
        } else {
            if self.peek().kind == TokKind::Plus {
                self.next();
            }
            false
        };
        let first = self.term(ring)?;
        let mut acc = if negate { first.neg() } else { first };
        loop {
            match self.peek().kind {
                TokKind::Plus => {
                    self.next();
                    let rhs = self.term(ring)?;
                    acc = acc.add(&rhs, ring);
                }
                TokKind::Minus => {
                    self.next();
                    let rhs = self.term(ring)?;
                    acc = acc.sub(&rhs, ring);
                }
                _ => break,
            }
        }
        Ok(acc)
    }
}

/// A parsed document: one ring, one or more named ideals over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceDocument {
    pub ring: RingDescriptor,
    pub ideals: Vec<(String, IdealQ)>,
}

impl SourceDocument {
    pub fn ideal_named(&self, name: &str) -> Option<&IdealQ> {
        self.ideals
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| i)
    }

    /// The first ideal in the document (documents have at least one).
    pub fn first_ideal(&self) -> (&str, &IdealQ) {
        let (n, i) = &self.ideals[0];
        (n.as_str(), i)
    }
}

/// Parses a full document: ring declaration followed by ideal definitions.
pub fn parse_document(text: &str) -> Result<SourceDocument, ParseError> {
    let mut p = Parser::new(lex(text)?);
    p.expect_keyword("ring")?;
    let field = p.peek().clone();
    match &field.kind {
        TokKind::Ident(s) if s == "Q" => {
            p.next();
        }
        other => {
            return Err(p.error_at(
                &field,
                format!(
                    "only rational coefficients are supported: expected 'Q', found {}",
                    other.describe()
                ),
            ))
        }
    }
    p.expect(&TokKind::LBracket)?;
    let mut names = Vec::new();
    let decl_tok = p.peek().clone();
    loop {
        let (name, tok) = p.expect_name("a variable name")?;
        if name == "Q" {
            return Err(p.error_at(&tok, "'Q' denotes the coefficient field"));
        }
        names.push(name);
        if p.peek().kind == TokKind::Comma {
            p.next();
        } else {
            break;
        }
    }
    p.expect(&TokKind::RBracket)?;
    p.expect_keyword("order")?;
    let ot = p.peek().clone();
    let order = match &ot.kind {
        TokKind::Ident(s) if s == "degrevlex" => MonomialOrder::DegRevLex,
        TokKind::Ident(s) if s == "deglex" => MonomialOrder::DegLex,
        other => {
            return Err(p.error_at(
                &ot,
                format!(
                    "expected 'degrevlex' or 'deglex', found {}",
                    other.describe()
                ),
            ))
        }
    };
    p.next();
    p.expect(&TokKind::Semi)?;
    let ring = RingDescriptor::new(names, order)
        .map_err(|e| p.error_at(&decl_tok, e.to_string()))?;

    let mut ideals: Vec<(String, IdealQ)> = Vec::new();
    while p.peek().kind != TokKind::Eof {
        p.expect_keyword("ideal")?;
        let (name, name_tok) = p.expect_name("an ideal name")?;
        if ideals.iter().any(|(n, _)| *n == name) {
            return Err(p.error_at(&name_tok, format!("duplicate ideal name '{name}'")));
        }
        p.expect(&TokKind::Eq)?;
        let mut gens = Vec::new();
        loop {
            let start = p.peek().clone();
            let g = p.expr(&ring)?;
            if g.is_zero() {
                return Err(p.error_at(
                    &start,
                    format!("zero generator in ideal '{name}'"),
                ));
            }
            gens.push(g);
            if p.peek().kind == TokKind::Comma {
                p.next();
            } else {
                break;
            }
        }
        p.expect(&TokKind::Semi)?;
        ideals.push((name, IdealQ::new(ring.clone(), gens)));
    }
    if ideals.is_empty() {
        let t = p.peek().clone();
        return Err(p.error_at(&t, "expected at least one ideal definition"));
    }
    Ok(SourceDocument { ring, ideals })
}

/// Parses a single polynomial expression over an existing ring.
pub fn parse_polynomial(text: &str, ring: &RingDescriptor) -> Result<MPolyQ, ParseError> {
    let mut p = Parser::new(lex(text)?);
    let poly = p.expr(ring)?;
    let t = p.peek().clone();
    if t.kind != TokKind::Eof {
        return Err(p.error_at(
            &t,
            format!("unexpected {} after polynomial", t.kind.describe()),
        ));
    }
    Ok(poly)
}

/// Parses a univariate polynomial; the variable is whatever single
/// identifier the text uses (a constant defaults to variable `X`).
pub fn parse_unipoly(text: &str) -> Result<UniPolyQ, ParseError> {
    let toks = lex(text)?;
    let mut var: Option<String> = None;
    for t in &toks {
        if let TokKind::Ident(s) = &t.kind {
            match &var {
                None => var = Some(s.clone()),
                Some(v) if v == s => {}
                Some(v) => {
                    return Err(ParseError::new(
                        t.line,
                        t.column,
                        format!("univariate input uses two variables: '{v}' and '{s}'"),
                    ))
                }
            }
        }
    }
    let name = var.unwrap_or_else(|| "X".to_string());
    let ring = RingDescriptor::new(vec![name], MonomialOrder::DegRevLex)
        .expect("single variable is valid");
    let mut p = Parser::new(toks);
    let poly = p.expr(&ring)?;
    let t = p.peek().clone();
    if t.kind != TokKind::Eof {
        return Err(p.error_at(
            &t,
            format!("unexpected {} after polynomial", t.kind.describe()),
        ));
    }
    let deg = poly
        .terms()
        .iter()
        .map(|(m, _)| m.exp(0) as usize)
        .max()
        .unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in poly.terms() {
        coeffs[m.exp(0) as usize] = c.clone();
    }
    Ok(UniPolyQ::new(coeffs))
}
