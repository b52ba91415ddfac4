//! Parser for the small linear-expression language used in parameter files.
//!
//! Accepted inputs include `-3/4`, `1/2 + 1/2*u`, `(1+3u)/5`, `1/(6*(1-u))`,
//! `1/12*sqrt(8)`, `sqrt8` and `1/2 + (1/3*sqrt(5))i`. The same syntax tree is
//! evaluated into whichever scalar type the caller needs via [`Evaluator`].

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{is_perfect_square, QuadComplex, QuadReal, Rational};
use crate::error::{Error, Result};

fn parse_err<T>(column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { column, message: message.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().expect("ascii digits")), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return parse_err(col, format!("unexpected character '{other}'")),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

/// Parsed expression tree. Columns are 1-based positions in the source text.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Symbol(String, usize),
    Sqrt(BigInt, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64, usize),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Expr::Neg(Box::new(self.term()?))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    let col = self.col();
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), col);
                }
                // juxtaposition: `3u`, `(1+u)i`, `2sqrt(5)`
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            let col = self.col();
            self.bump();
            let negative = if let Some(Tok::Minus) = self.peek() {
                self.bump();
                true
            } else {
                false
            };
            let ecol = self.col();
            let Some(Tok::Num(n)) = self.bump() else {
                return parse_err(ecol, "expected integer exponent");
            };
            let Ok(mut k) = i64::try_from(n) else {
                return parse_err(ecol, "exponent too large");
            };
            if negative {
                k = -k;
            }
            return Ok(Expr::Pow(Box::new(base), k, col));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Expr::Num(Rational::from_integer(n))),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                let rcol = self.col();
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => parse_err(rcol, "expected ')'"),
                }
            }
            Some(Tok::Ident(name)) => {
                if name == "sqrt" {
                    let lcol = self.col();
                    if self.bump() != Some(Tok::LParen) {
                        return parse_err(lcol, "expected '(' after sqrt");
                    }
                    let ncol = self.col();
                    let Some(Tok::Num(n)) = self.bump() else {
                        return parse_err(ncol, "expected integer radicand");
                    };
                    let rcol = self.col();
                    if self.bump() != Some(Tok::RParen) {
                        return parse_err(rcol, "expected ')'");
                    }
                    Ok(Expr::Sqrt(n, col))
                } else if let Some(digits) = name.strip_prefix("sqrt") {
                    match digits.parse::<BigInt>() {
                        Ok(n) => Ok(Expr::Sqrt(n, col)),
                        Err(_) => parse_err(col, format!("unknown symbol '{name}'")),
                    }
                } else {
                    Ok(Expr::Symbol(name, col))
                }
            }
            Some(_) => parse_err(col, "unexpected token"),
            None => parse_err(col, "unexpected end of input"),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    let end_col = s.chars().count() + 1;
    if toks.is_empty() {
        return parse_err(1, "empty expression");
    }
    let mut p = Parser { toks, pos: 0, end_col };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return parse_err(p.col(), "trailing input");
    }
    Ok(e)
}

/// Interprets an [`Expr`] in a concrete scalar type.
pub trait Evaluator {
    type Value: Clone;
    fn number(&self, q: Rational) -> Result<Self::Value>;
    fn symbol(&self, name: &str, column: usize) -> Result<Self::Value>;
    fn sqrt(&self, n: &BigInt, column: usize) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
}

impl Expr {
    pub fn eval<E: Evaluator>(&self, ev: &E) -> Result<E::Value> {
        match self {
            Expr::Num(q) => ev.number(q.clone()),
            Expr::Symbol(name, col) => ev.symbol(name, *col),
            Expr::Sqrt(n, col) => ev.sqrt(n, *col),
            Expr::Neg(a) => {
                let zero = ev.number(Rational::zero())?;
                ev.sub(&zero, &a.eval(ev)?)
            }
            Expr::Add(a, b) => ev.add(&a.eval(ev)?, &b.eval(ev)?),
            Expr::Sub(a, b) => ev.sub(&a.eval(ev)?, &b.eval(ev)?),
            Expr::Mul(a, b) => ev.mul(&a.eval(ev)?, &b.eval(ev)?),
            Expr::Div(a, b, col) => ev.div(&a.eval(ev)?, &b.eval(ev)?).or_else(|e| match e {
                Error::DivisionByZero => parse_err(*col, "division by zero"),
                other => Err(other),
            }),
            Expr::Pow(a, k, col) => {
                let base = a.eval(ev)?;
                let mut acc = ev.number(Rational::one())?;
                for _ in 0..k.unsigned_abs() {
                    acc = ev.mul(&acc, &base)?;
                }
                if *k < 0 {
                    let one = ev.number(Rational::one())?;
                    acc = ev.div(&one, &acc).or_else(|_| parse_err(*col, "division by zero"))?;
                }
                Ok(acc)
            }
        }
    }
}

/// Expresses `sqrt(n)` inside Q(sqrt(delta)) as `(rat, irr)`.
pub fn sqrt_in_field(n: &BigInt, delta: i64, column: usize) -> Result<(Rational, Rational)> {
    if is_perfect_square(n) {
        return Ok((Rational::from_integer(n.sqrt()), Rational::zero()));
    }
    let prod = n * BigInt::from(delta);
    if is_perfect_square(&prod) {
        let k = prod.sqrt();
        return Ok((Rational::zero(), Rational::new(k, BigInt::from(delta))));
    }
    parse_err(column, format!("sqrt({n}) does not lie in Q(sqrt({delta}))"))
}

fn unknown<T>(name: &str, column: usize) -> Result<T> {
    parse_err(column, format!("unknown symbol '{name}'"))
}

pub struct RationalEval;

impl Evaluator for RationalEval {
    type Value = Rational;
    fn number(&self, q: Rational) -> Result<Rational> {
        Ok(q)
    }
    fn symbol(&self, name: &str, column: usize) -> Result<Rational> {
        unknown(name, column)
    }
    fn sqrt(&self, n: &BigInt, column: usize) -> Result<Rational> {
        if is_perfect_square(n) {
            Ok(Rational::from_integer(n.sqrt()))
        } else {
            parse_err(column, format!("sqrt({n}) is irrational"))
        }
    }
    fn add(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(a + b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(a - b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        Ok(a * b)
    }
    fn div(&self, a: &Rational, b: &Rational) -> Result<Rational> {
        if b.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a / b)
        }
    }
}

pub struct QuadRealEval {
    pub delta: i64,
}

impl Evaluator for QuadRealEval {
    type Value = QuadReal;
    fn number(&self, q: Rational) -> Result<QuadReal> {
        QuadReal::from_rational(q, self.delta)
    }
    fn symbol(&self, name: &str, column: usize) -> Result<QuadReal> {
        unknown(name, column)
    }
    fn sqrt(&self, n: &BigInt, column: usize) -> Result<QuadReal> {
        let (p, q) = sqrt_in_field(n, self.delta, column)?;
        QuadReal::new(p, q, self.delta)
    }
    fn add(&self, a: &QuadReal, b: &QuadReal) -> Result<QuadReal> {
        a.try_add(b)
    }
    fn sub(&self, a: &QuadReal, b: &QuadReal) -> Result<QuadReal> {
        a.try_sub(b)
    }
    fn mul(&self, a: &QuadReal, b: &QuadReal) -> Result<QuadReal> {
        a.try_mul(b)
    }
    fn div(&self, a: &QuadReal, b: &QuadReal) -> Result<QuadReal> {
        a.try_div(b)
    }
}

pub struct QuadComplexEval {
    pub delta: i64,
}

impl Evaluator for QuadComplexEval {
    type Value = QuadComplex;
    fn number(&self, q: Rational) -> Result<QuadComplex> {
        Ok(QuadComplex::from_real(QuadReal::from_rational(q, self.delta)?))
    }
    fn symbol(&self, name: &str, column: usize) -> Result<QuadComplex> {
        if name == "i" {
            QuadComplex::new(QuadReal::zero(self.delta)?, QuadReal::from_rational(Rational::one(), self.delta)?)
        } else {
            unknown(name, column)
        }
    }
    fn sqrt(&self, n: &BigInt, column: usize) -> Result<QuadComplex> {
        let (p, q) = sqrt_in_field(n, self.delta, column)?;
        Ok(QuadComplex::from_real(QuadReal::new(p, q, self.delta)?))
    }
    fn add(&self, a: &QuadComplex, b: &QuadComplex) -> Result<QuadComplex> {
        a.try_add(b)
    }
    fn sub(&self, a: &QuadComplex, b: &QuadComplex) -> Result<QuadComplex> {
        a.try_sub(b)
    }
    fn mul(&self, a: &QuadComplex, b: &QuadComplex) -> Result<QuadComplex> {
        a.try_mul(b)
    }
    fn div(&self, a: &QuadComplex, b: &QuadComplex) -> Result<QuadComplex> {
        a.try_div(b)
    }
}

/// Parses `p/q` style rationals (any rational expression is accepted).
pub fn parse_rational(s: &str) -> Result<Rational> {
    parse_expr(s)?.eval(&RationalEval)
}

pub fn parse_quad_real(s: &str, delta: i64) -> Result<QuadReal> {
    parse_expr(s)?.eval(&QuadRealEval { delta })
}

pub fn parse_quad_complex(s: &str, delta: i64) -> Result<QuadComplex> {
    parse_expr(s)?.eval(&QuadComplexEval { delta })
}
