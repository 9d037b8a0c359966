//! Text to polynomial / rational function.
//!
//! Grammar, loosest to tightest:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" exponent)?
//! atom   := number | "x" | "(" expr ")"
//! ```
//!
//! Exponents are non-negative integer literals (optionally parenthesized) and
//! `^` associates to the right. Juxtaposition such as `2x` or `3(x + 1)` is
//! read as multiplication. Decimal literals convert exactly.

use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::rational::Rational;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{message} at byte {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Number(Rational),
    Variable,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(n) => write!(f, "{n}"),
            Expr::Variable => f.write_str("x"),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, n) => write!(f, "({a}^{n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number { value: Rational, integer: bool },
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Number { value, .. } => format!("number {value}"),
            Tok::X => "`x`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut toks: Vec<(Tok, usize)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'x' => Tok::X,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                let text = &input[start..i];
                let value = text
                    .parse::<Rational>()
                    .map_err(|_| ParseError::new(start, format!("malformed number `{text}`")))?;
                let integer = !text.contains('.');
                if matches!(toks.last(), Some((Tok::RParen, _))) {
                    toks.push((Tok::Star, start));
                }
                toks.push((Tok::Number { value, integer }, start));
                continue;
            }
            _ => {
                let ch = input[i..].chars().next().expect("in bounds");
                let message = if ch.is_alphabetic() {
                    format!("unknown symbol `{ch}`; the only variable is `x`")
                } else {
                    format!("unexpected character `{ch}`")
                };
                return Err(ParseError::new(start, message));
            }
        };
        i += 1;
        if matches!(tok, Tok::X | Tok::LParen) {
            push_implicit_mul(&mut toks, start);
        }
        toks.push((tok, start));
    }
    toks.push((Tok::End, input.len()));
    Ok(toks)
}

/// `2x`, `x(x+1)`, `(x)(x)`: a value directly followed by `x` or `(`.
fn push_implicit_mul(toks: &mut Vec<(Tok, usize)>, at: usize) {
    if let Some((prev, _)) = toks.last() {
        if matches!(prev, Tok::Number { .. } | Tok::X | Tok::RParen) {
            toks.push((Tok::Star, at));
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let exp = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    /// `n`, `(n)`, or `n ^ exponent` folded right to left.
    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.offset();
        let value = if *self.peek() == Tok::LParen {
            self.bump();
            let v = self.exponent_literal()?;
            self.expect_rparen(at)?;
            v
        } else {
            self.exponent_literal()?
        };
        if *self.peek() == Tok::Caret {
            self.bump();
            let rhs_at = self.offset();
            let rhs = self.exponent()?;
            return value
                .checked_pow(rhs)
                .filter(|&v| v <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::new(rhs_at, format!("exponent exceeds {MAX_EXPONENT}")));
        }
        Ok(value)
    }

    fn exponent_literal(&mut self) -> Result<u32, ParseError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Number { value, integer: true } => value
                .numer()
                .try_into()
                .ok()
                .filter(|&v: &u32| v <= MAX_EXPONENT)
                .ok_or_else(|| ParseError::new(at, format!("exponent exceeds {MAX_EXPONENT}"))),
            Tok::Number { .. } => Err(ParseError::new(at, "exponent must be an integer")),
            Tok::Minus => Err(ParseError::new(at, "negative exponents are not allowed")),
            Tok::X => Err(ParseError::new(at, "exponent must be an integer literal, not `x`")),
            other => Err(ParseError::new(
                at,
                format!("expected a non-negative integer exponent, found {}", other.describe()),
            )),
        }
    }

    fn expect_rparen(&mut self, open_at: usize) -> Result<(), ParseError> {
        match self.peek() {
            Tok::RParen => {
                self.bump();
                Ok(())
            }
            Tok::End => Err(ParseError::new(
                self.offset(),
                format!("unbalanced parenthesis: `(` at byte {open_at} is never closed"),
            )),
            other => Err(ParseError::new(
                self.offset(),
                format!("expected `)`, found {}", other.describe()),
            )),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Number { value, .. } => Ok(Expr::Number(value)),
            Tok::X => Ok(Expr::Variable),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect_rparen(at)?;
                Ok(inner)
            }
            Tok::End => Err(ParseError::new(at, "unexpected end of input")),
            Tok::RParen => Err(ParseError::new(at, "unbalanced parenthesis: unexpected `)`")),
            other => Err(ParseError::new(
                at,
                format!("expected a number, `x` or `(`, found {}", other.describe()),
            )),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser {
        toks: lex(input)?,
        pos: 0,
    };
    let expr = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(expr),
        Tok::RParen => Err(ParseError::new(
            parser.offset(),
            "unbalanced parenthesis: unexpected `)`",
        )),
        other => Err(ParseError::new(
            parser.offset(),
            format!("unexpected {}", other.describe()),
        )),
    }
}

/// Lowers to a polynomial. Division is allowed only by nonzero constants,
/// so `1/2*x` folds to a coefficient while `1/x` is rejected.
pub fn lower_poly(e: &Expr) -> Result<Polynomial> {
    Ok(match e {
        Expr::Number(n) => Polynomial::constant(n.clone()),
        Expr::Variable => Polynomial::x(),
        Expr::Neg(a) => -lower_poly(a)?,
        Expr::Add(a, b) => lower_poly(a)? + lower_poly(b)?,
        Expr::Sub(a, b) => lower_poly(a)? - lower_poly(b)?,
        Expr::Mul(a, b) => lower_poly(a)? * lower_poly(b)?,
        Expr::Div(a, b) => {
            let den = lower_poly(b).map_err(|err| match err {
                Error::Lowering(_) => Error::Lowering("x appears in a denominator".into()),
                other => other,
            })?;
            match den.degree() {
                None => return Err(Error::Lowering("division by zero".into())),
                Some(0) => lower_poly(a)?.scale(&den.coeffs()[0].recip()?),
                Some(_) => return Err(Error::Lowering("x appears in a denominator".into())),
            }
        }
        Expr::Pow(a, n) => lower_poly(a)?.pow(*n),
    })
}

/// Lowers to a canonical rational function.
pub fn lower_ratfun(e: &Expr) -> Result<RationalFunction> {
    Ok(match e {
        Expr::Number(n) => Polynomial::constant(n.clone()).into(),
        Expr::Variable => Polynomial::x().into(),
        Expr::Neg(a) => lower_ratfun(a)?.neg(),
        Expr::Add(a, b) => lower_ratfun(a)?.add(&lower_ratfun(b)?),
        Expr::Sub(a, b) => lower_ratfun(a)?.sub(&lower_ratfun(b)?),
        Expr::Mul(a, b) => lower_ratfun(a)?.mul(&lower_ratfun(b)?),
        Expr::Div(a, b) => {
            let den = lower_ratfun(b)?;
            if den.is_zero() {
                return Err(Error::Lowering("denominator is the zero polynomial".into()));
            }
            lower_ratfun(a)?.checked_div(&den)?
        }
        Expr::Pow(a, n) => lower_ratfun(a)?.pow(*n),
    })
}

pub fn parse_poly(input: &str) -> Result<Polynomial> {
    lower_poly(&parse(input)?)
}

pub fn parse_ratfun(input: &str) -> Result<RationalFunction> {
    lower_ratfun(&parse(input)?)
}

/// Canonical text for `f`; `parse_poly(&render(f)) == f`.
pub fn render(f: &Polynomial) -> String {
    f.to_string()
}
