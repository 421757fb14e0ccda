//! Text form of polynomials and rational functions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Polynomials print in descending graded-lex order, e.g.
//! `3*lambda^2*n - 1/2*d + 7`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::{Exponents, MultiPoly};
use super::ratfunc::RatFunc;
use super::rational::Rational;
use super::var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("exponent out of range")]
    BadExponent,
    #[error("division by zero")]
    DivisionByZero,
}

fn write_monomial(out: &mut String, e: &Exponents) -> bool {
    let mut first = true;
    for v in Var::ALL {
        let k = e[v.index()];
        if k == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(v.name());
        if k > 1 {
            let _ = write!(out, "^{k}");
        }
    }
    !first
}

pub fn poly_to_string(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.sorted_terms().into_iter().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        let is_const = e.iter().all(|&k| k == 0);
        if is_const || !abs.is_one() {
            out.push_str(&abs.numer().to_string());
            if !abs.denom().is_one() {
                let _ = write!(out, "/{}", abs.denom());
            }
            if !is_const {
                out.push('*');
            }
        }
        write_monomial(&mut out, e);
    }
    out
}

pub fn ratfunc_to_string(f: &RatFunc) -> String {
    if let Some(p) = f.as_poly() {
        return poly_to_string(&p);
    }
    format!("({})/({})", poly_to_string(f.num()), poly_to_string(f.den()))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        // Polynomial terms go into one accumulator in place; the rest are summed as fractions.
        let mut poly = MultiPoly::zero();
        let mut frac: Option<RatFunc> = None;
        let mut add = |t: RatFunc, sign: i64| match t.den().as_constant() {
            Some(c) => {
                let k = Rational::from_integer(sign.into()) / c;
                for (e, v) in t.num().terms() {
                    poly.add_term(*e, v * &k);
                }
            }
            None => {
                let t = if sign < 0 { -&t } else { t };
                frac = Some(match frac.take() {
                    Some(f) => &f + &t,
                    None => t,
                });
            }
        };
        add(self.term()?, 1);
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    add(self.term()?, 1);
                }
                b'-' => {
                    self.pos += 1;
                    add(self.term()?, -1);
                }
                _ => break,
            }
        }
        let poly = RatFunc::from_poly(poly);
        Ok(match frac {
            Some(f) => &f + &poly,
            None => poly,
        })
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                b'/' => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.checked_div(&rhs).map_err(|_| ParseError::DivisionByZero)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let k: u32 = self
            .integer()?
            .try_into()
            .map_err(|_| ParseError::BadExponent)?;
        let powered = match base.as_poly().filter(|p| p.len() == 1) {
            Some(p) => {
                let (e, c) = p.terms().next().expect("one term");
                let mut out = *e;
                for x in out.iter_mut() {
                    *x = x
                        .checked_mul(u16::try_from(k).map_err(|_| ParseError::BadExponent)?)
                        .ok_or(ParseError::BadExponent)?;
                }
                RatFunc::from_poly(MultiPoly::monomial(num_traits::Pow::pow(c, k), out))
            }
            None => base.pow(k),
        };
        if negative {
            powered.recip().map_err(|_| ParseError::DivisionByZero)
        } else {
            Ok(powered)
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.src.get(self.pos) {
                Some(&c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
                None => Err(ParseError::UnexpectedEnd),
            };
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit string"))
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
                    None => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                Ok(RatFunc::constant(Rational::from_integer(self.integer()?)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Var::from_name(name)
                    .map(RatFunc::var)
                    .ok_or_else(|| ParseError::UnknownVariable(name.to_string()))
            }
            Some(c) => Err(ParseError::UnexpectedChar(c as char, self.pos)),
        }
    }
}

pub fn parse_ratfunc(src: &str) -> Result<RatFunc, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    match p.peek() {
        None => Ok(value),
        Some(c) => Err(ParseError::UnexpectedChar(c as char, p.pos)),
    }
}

/// Parses an expression that must reduce to a polynomial.
pub fn parse_poly(src: &str) -> Result<MultiPoly, ParseError> {
    let f = parse_ratfunc(src)?;
    match f.as_poly() {
        Some(p) => Ok(p),
        None => {
            // Division may have left a polynomial quotient.
            f.num()
                .div_exact(f.den())
                .ok_or(ParseError::UnexpectedChar('/', 0))
        }
    }
}

/// Rewrites a polynomial in `s` as one in `t` via `s = t^2`.
pub fn s_to_t_squared(p: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(p.terms().map(|(e, c)| {
        let mut ne = *e;
        ne[Var::T.index()] += 2 * ne[Var::S.index()];
        ne[Var::S.index()] = 0;
        (ne, c.clone())
    }))
}

/// Inverse of [`s_to_t_squared`]; `None` if an odd power of `t` occurs.
pub fn t_squared_to_s(p: &MultiPoly) -> Option<MultiPoly> {
    let mut out = MultiPoly::zero();
    for (e, c) in p.terms() {
        let k = e[Var::T.index()];
        if k % 2 == 1 {
            return None;
        }
        let mut ne: Exponents = *e;
        ne[Var::T.index()] = 0;
        ne[Var::S.index()] += k / 2;
        out.add_term(ne, c.clone());
    }
    Some(out)
}
