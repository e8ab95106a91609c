//! Text grammar for polynomials: integer or rational coefficients,
//! identifiers, `+ - * ^` and parentheses. Implicit multiplication is not
//! allowed. The printer emits the canonical form used everywhere: the
//! polynomial is collected by its highest indeterminate, coefficients are
//! printed recursively, terms in descending graded-lex order.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
    tokens: Vec<(Tok, usize, usize)>,
}

impl<'a> Lexer<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.to_string(),
        }
    }

    fn run(mut self) -> Result<Vec<(Tok, usize, usize)>> {
        while self.pos < self.src.len() {
            let c = self.src[self.pos] as char;
            let (line, col) = (self.line, self.col);
            match c {
                ' ' | '\t' | '\r' => {
                    self.bump(1);
                }
                '\n' => {
                    self.pos += 1;
                    self.line += 1;
                    self.col = 1;
                }
                '+' => self.push(Tok::Plus, line, col, 1),
                '-' => self.push(Tok::Minus, line, col, 1),
                '*' => self.push(Tok::Star, line, col, 1),
                '^' => self.push(Tok::Caret, line, col, 1),
                '(' => self.push(Tok::LParen, line, col, 1),
                ')' => self.push(Tok::RParen, line, col, 1),
                '0'..='9' => {
                    let num = self.read_uint()?;
                    let rat = if self.peek() == Some('/') {
                        self.bump(1);
                        let den = self.read_uint()?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        BigRational::new(num, den)
                    } else {
                        BigRational::from_integer(num)
                    };
                    self.tokens.push((Tok::Num(rat), line, col));
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = self.pos;
                    while self.pos < self.src.len() {
                        let ch = self.src[self.pos] as char;
                        if ch.is_ascii_alphanumeric() || ch == '_' {
                            self.bump(1);
                        } else {
                            break;
                        }
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos])
                        .unwrap()
                        .to_string();
                    self.tokens.push((Tok::Ident(name), line, col));
                }
                _ => return Err(self.err(&format!("unexpected character `{c}`"))),
            }
        }
        Ok(self.tokens)
    }

    fn push(&mut self, t: Tok, line: usize, col: usize, width: usize) {
        self.tokens.push((t, line, col));
        self.bump(width);
    }

    fn bump(&mut self, n: usize) {
        self.pos += n;
        self.col += n;
    }

    fn peek(&self) -> Option<char> {
        self.src.get(self.pos).map(|&b| b as char)
    }

    fn read_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.bump(1);
        }
        if start == self.pos {
            return Err(self.err("expected a digit"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }
}

struct Parser<'a> {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    ctx: &'a Arc<Context>,
    line_offset: usize,
}

impl<'a> Parser<'a> {
    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|(_, l, c)| (*l, *c))
            .or_else(|| self.toks.last().map(|(_, l, c)| (*l, *c + 1)))
            .unwrap_or((1, 1))
    }

    fn err(&self, msg: &str) -> Error {
        let (line, col) = self.here();
        Error::Parse {
            line: line + self.line_offset,
            col,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _, _)| t)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg_ref()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add_ref(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.pos += 1;
            acc = acc.mul_ref(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(r)) if r.is_integer() && !r.is_negative() => {
                    let e: u32 = r
                        .to_integer()
                        .try_into()
                        .map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a non-negative integer exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Tok::Num(r)) => Ok(Polynomial::constant(self.ctx, r)),
            Some(Tok::Ident(name)) => match self.ctx.lookup(&name) {
                Some(idx) => Ok(Polynomial::indet(self.ctx, idx)),
                None => {
                    self.pos -= 1;
                    Err(self.err(&format!("undeclared identifier `{name}`")))
                }
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(Tok::Minus) => Ok(self.factor()?.neg_ref()),
            _ => Err(self.err("expected a number, identifier or `(`")),
        }
    }
}

/// Parses one polynomial against a context.
pub fn parse_poly(src: &str, ctx: &Arc<Context>) -> Result<Polynomial> {
    parse_poly_at(src, ctx, 0)
}

/// Parses with a line offset so errors report positions within a larger file.
pub fn parse_poly_at(src: &str, ctx: &Arc<Context>, line_offset: usize) -> Result<Polynomial> {
    let lexer = Lexer {
        src: src.as_bytes(),
        pos: 0,
        line: 1,
        col: 1,
        tokens: Vec::new(),
    };
    let toks = lexer.run().map_err(|e| match e {
        Error::Parse { line, col, msg } => Error::Parse {
            line: line + line_offset,
            col,
            msg,
        },
        other => other,
    })?;
    if toks.is_empty() {
        return Err(Error::Parse {
            line: 1 + line_offset,
            col: 1,
            msg: "empty polynomial".into(),
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        ctx,
        line_offset,
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(p)
}

fn format_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// A single term `coef * prod(indets)` without a sign; the sign is returned
/// separately so callers can join terms with ` + ` / ` - `.
fn format_monomial_term(
    ctx: &Context,
    mono: &crate::poly::Monomial,
    coef: &BigRational,
) -> (bool, String) {
    let neg = coef.is_negative();
    let abs = coef.abs();
    let mut parts: Vec<String> = Vec::new();
    if !abs.is_one() || mono.is_one() {
        parts.push(format_rational(&abs));
    }
    for i in 0..ctx.num_indets() {
        let e = mono.exponent(i);
        if e == 1 {
            parts.push(ctx.indet_name(i).to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", ctx.indet_name(i), e));
        }
    }
    (neg, parts.join("*"))
}

fn join_signed(pieces: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, s)) in pieces.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
            out.push_str(&s);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&s);
        }
    }
    out
}

fn signed_pieces(p: &Polynomial) -> Vec<(bool, String)> {
    let ctx = p.context().clone();
    if p.is_zero() {
        return vec![(false, "0".to_string())];
    }
    if let Some(c) = p.as_rational() {
        return vec![(c.is_negative(), format_rational(&c.abs()))];
    }
    if p.cls() == 0 {
        // Parameter-only: flat descending graded-lex term list.
        return p
            .terms()
            .iter()
            .rev()
            .map(|(m, c)| format_monomial_term(&ctx, m, c))
            .collect();
    }
    let x = p.max_indet().unwrap();
    let name = ctx.indet_name(x).to_string();
    let coeffs = p.univar_coeffs(x);
    let mut pieces = Vec::new();
    for e in (1..coeffs.len()).rev() {
        let c = &coeffs[e];
        if c.is_zero() {
            continue;
        }
        let xs = if e == 1 {
            name.clone()
        } else {
            format!("{name}^{e}")
        };
        if let Some(r) = c.as_rational() {
            if r.abs().is_one() {
                pieces.push((r.is_negative(), xs));
            } else {
                pieces.push((r.is_negative(), format!("{}*{}", format_rational(&r.abs()), xs)));
            }
        } else if c.num_terms() == 1 {
            let (m, r) = c.terms().iter().next().unwrap();
            let (neg, body) = format_monomial_term(&ctx, m, r);
            pieces.push((neg, format!("{body}*{xs}")));
        } else {
            pieces.push((false, format!("({})*{}", format_poly(c), xs)));
        }
    }
    if !coeffs[0].is_zero() {
        pieces.extend(signed_pieces(&coeffs[0]));
    }
    pieces
}

/// Canonical text form; `parse_poly` round-trips it.
pub fn format_poly(p: &Polynomial) -> String {
    join_signed(signed_pieces(p))
}
