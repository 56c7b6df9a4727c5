//! A small arithmetic expression language shared by cyclotomic literals
//! (`1/2*zeta(8)^3 + 2`) and algebra elements (`z*(e0 + e1) + e2`).
//!
//! Parsing produces an [`Expr`] tree; each consumer evaluates identifiers in
//! its own context.

use crate::field::{Cyclotomic, CyclotomicField, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at offset {offset}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Number(Rational),
    /// `zeta(N)`
    Zeta(u64),
    Ident {
        name: String,
        offset: usize,
    },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => {
                i += 1;
            }
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let end = chars.get(j).map_or(src.len(), |&(p, _)| p);
                let value = src[pos..end]
                    .parse::<u64>()
                    .map_err(|_| ParseError::new(pos, "integer literal too large"))?;
                out.push((pos, Token::Int(value)));
                i = j;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_alphanumeric() || chars[j].1 == '_') {
                    j += 1;
                }
                let end = chars.get(j).map_or(src.len(), |&(p, _)| p);
                out.push((pos, Token::Ident(src[pos..end].to_string())));
                i = j;
            }
            '+' => {
                out.push((pos, Token::Plus));
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push((pos, Token::Minus));
                i += 1;
            }
            '*' | '\u{00b7}' => {
                out.push((pos, Token::Star));
                i += 1;
            }
            '/' => {
                out.push((pos, Token::Slash));
                i += 1;
            }
            '^' => {
                out.push((pos, Token::Caret));
                i += 1;
            }
            '(' => {
                out.push((pos, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((pos, Token::RParen));
                i += 1;
            }
            other => {
                return Err(ParseError::new(
                    pos,
                    format!("unexpected character {other:?}"),
                ))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<(), ParseError> {
        let off = self.offset();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => Err(ParseError::new(off, format!("expected {what}"))),
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                // juxtaposition such as `2zeta(4)` or `(1+b)(1+c)`
                Some(Token::LParen) | Some(Token::Ident(_)) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let mut sign = 1i64;
            let mut wrapped = false;
            if self.peek() == Some(&Token::LParen) {
                self.pos += 1;
                wrapped = true;
            }
            if self.peek() == Some(&Token::Minus) {
                self.pos += 1;
                sign = -1;
            }
            let off = self.offset();
            let exp = match self.next() {
                Some(Token::Int(k)) => {
                    i64::try_from(k).map_err(|_| ParseError::new(off, "exponent too large"))?
                }
                _ => return Err(ParseError::new(off, "expected integer exponent")),
            };
            if wrapped {
                self.expect(Token::RParen, "')'")?;
            }
            return Ok(Expr::Pow(Box::new(base), sign * exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let off = self.offset();
        match self.next() {
            Some(Token::Int(k)) => Ok(Expr::Number(Rational::from_integer(k.into()))),
            Some(Token::Ident(name)) if name == "zeta" => {
                self.expect(Token::LParen, "'(' after zeta")?;
                let inner = self.offset();
                let order = match self.next() {
                    Some(Token::Int(k)) if k >= 1 => k,
                    _ => return Err(ParseError::new(inner, "expected positive order in zeta(N)")),
                };
                self.expect(Token::RParen, "')'")?;
                Ok(Expr::Zeta(order))
            }
            Some(Token::Ident(name)) => Ok(Expr::Ident { name, offset: off }),
            Some(Token::LParen) => {
                let e = self.sum()?;
                self.expect(Token::RParen, "')'")?;
                Ok(e)
            }
            Some(_) => Err(ParseError::new(off, "unexpected token")),
            None => Err(ParseError::new(off, "unexpected end of input")),
        }
    }
}

/// Parse an expression string into a tree.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: src.len(),
    };
    let e = p.sum()?;
    if p.pos < p.tokens.len() {
        return Err(ParseError::new(p.offset(), "trailing input"));
    }
    Ok(e)
}

/// Arithmetic needed to evaluate an [`Expr`].
pub trait EvalTarget: Sized + Clone {
    fn scalar(&self, value: Cyclotomic) -> Self;
    fn ident(&self, name: &str, offset: usize) -> Result<Self, ParseError>;
    fn add(&self, a: &Self, b: &Self) -> Self;
    fn sub(&self, a: &Self, b: &Self) -> Self;
    fn mul(&self, a: &Self, b: &Self) -> Self;
    fn neg(&self, a: &Self) -> Self;
    /// The value as a scalar, if it is one (needed for division).
    fn as_scalar(&self, a: &Self) -> Option<Cyclotomic>;
    fn one(&self) -> Self;
    fn inverse(&self, a: &Self) -> Option<Self>;
}

pub fn evaluate<T: EvalTarget>(ctx: &T, e: &Expr) -> Result<T, ParseError> {
    Ok(match e {
        Expr::Number(r) => ctx.scalar(Cyclotomic::from_rational(
            &CyclotomicField::get(1),
            r.clone(),
        )),
        Expr::Zeta(n) => ctx.scalar(Cyclotomic::root_of_unity(*n, 1)),
        Expr::Ident { name, offset } => ctx.ident(name, *offset)?,
        Expr::Add(a, b) => ctx.add(&evaluate(ctx, a)?, &evaluate(ctx, b)?),
        Expr::Sub(a, b) => ctx.sub(&evaluate(ctx, a)?, &evaluate(ctx, b)?),
        Expr::Mul(a, b) => ctx.mul(&evaluate(ctx, a)?, &evaluate(ctx, b)?),
        Expr::Div(a, b) => {
            let denom = evaluate(ctx, b)?;
            let s = ctx
                .as_scalar(&denom)
                .ok_or_else(|| ParseError::new(0, "division by a non-scalar"))?;
            let inv = s
                .inv()
                .map_err(|_| ParseError::new(0, "division by zero"))?;
            ctx.mul(&evaluate(ctx, a)?, &ctx.scalar(inv))
        }
        Expr::Neg(a) => ctx.neg(&evaluate(ctx, a)?),
        Expr::Pow(a, k) => {
            let base = evaluate(ctx, a)?;
            let base = if *k < 0 {
                ctx.inverse(&base)
                    .ok_or_else(|| ParseError::new(0, "negative power of a non-invertible value"))?
            } else {
                base
            };
            let mut acc = ctx.one();
            for _ in 0..k.unsigned_abs() {
                acc = ctx.mul(&acc, &base);
            }
            acc
        }
    })
}

impl EvalTarget for Cyclotomic {
    fn scalar(&self, value: Cyclotomic) -> Self {
        value
    }
    fn ident(&self, name: &str, offset: usize) -> Result<Self, ParseError> {
        Err(ParseError::new(
            offset,
            format!("unknown identifier {name:?} in scalar literal"),
        ))
    }
    fn add(&self, a: &Self, b: &Self) -> Self {
        a + b
    }
    fn sub(&self, a: &Self, b: &Self) -> Self {
        a - b
    }
    fn mul(&self, a: &Self, b: &Self) -> Self {
        a * b
    }
    fn neg(&self, a: &Self) -> Self {
        -a
    }
    fn as_scalar(&self, a: &Self) -> Option<Cyclotomic> {
        Some(a.clone())
    }
    fn one(&self) -> Self {
        Cyclotomic::one(&CyclotomicField::get(1))
    }
    fn inverse(&self, a: &Self) -> Option<Self> {
        a.inv().ok()
    }
}

/// Parse a cyclotomic literal such as `-1/2*zeta(8)^3 + 2`.
pub fn parse_cyclotomic(src: &str) -> Result<Cyclotomic, ParseError> {
    let e = parse_expr(src)?;
    let ctx = Cyclotomic::zero(&CyclotomicField::get(1));
    let v = evaluate(&ctx, &e)?;
    Ok(v.reduced())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_literals() {
        let v = parse_cyclotomic("-1").unwrap();
        assert_eq!(v.to_string(), "-1");
        assert_eq!(v.order(), 1);
        let v = parse_cyclotomic("zeta(4)^2").unwrap();
        assert_eq!(v.to_rational(), Some(Rational::from_integer((-1).into())));
        let v = parse_cyclotomic("1/2*zeta(8)^3 + 2").unwrap();
        assert_eq!(v.order(), 8);
        assert_eq!(v, parse_cyclotomic("2 + zeta(8)^3/2").unwrap());
        let v = parse_cyclotomic("zeta(4)^-1").unwrap();
        assert_eq!(v, -Cyclotomic::root_of_unity(4, 1));
        // ζ_6 lives in Q(ζ_3)
        let v = parse_cyclotomic("zeta(6)").unwrap();
        assert_eq!(v.order(), 3);
        assert_eq!(v, Cyclotomic::root_of_unity(6, 1));
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = parse_cyclotomic("1 + * 2").unwrap_err();
        assert_eq!(err.offset, 4);
        let err = parse_cyclotomic("1 + x").unwrap_err();
        assert_eq!(err.offset, 4);
        assert!(parse_cyclotomic("zeta(0)").is_err());
        assert!(parse_cyclotomic("(1 + 2").is_err());
        assert!(parse_cyclotomic("1/0").is_err());
    }
}
