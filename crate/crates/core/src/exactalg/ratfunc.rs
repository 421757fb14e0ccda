use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{Signed, Zero};

use super::poly::MultiPoly;
use super::rational::Rational;
use super::var::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatFuncError {
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,
    #[error("denominator vanishes at the evaluation point")]
    PoleAtEvaluationPoint,
}

/// Quotient `num / den` of two polynomials.
///
/// Only the joint integer content is removed and the denominator's leading
/// coefficient made positive; common polynomial factors are kept. Equality
/// is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::DivisionByZeroFunction);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self { num, den: MultiPoly::one() };
        }
        if let Some(c) = den.as_constant() {
            return Self {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(),
            };
        }
        let mut scale = MultiPoly::joint_primitive_scale(&[&num, &den]);
        if den.leading_coefficient().is_negative() {
            scale = -scale;
        }
        Self {
            num: num.scale(&scale),
            den: den.scale(&scale),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self { num: p, den: MultiPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn int(c: i64) -> Self {
        Self::from_poly(MultiPoly::int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn into_parts(self) -> (MultiPoly, MultiPoly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Polynomial value if the denominator is a constant.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        self.den.as_constant().map(|c| self.num.scale(&c.recip()))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.num.uses(v) || self.den.uses(v)
    }

    pub fn recip(&self) -> Result<Self, RatFuncError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, RatFuncError> {
        if rhs.is_zero() {
            return Err(RatFuncError::DivisionByZeroFunction);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, k: u32) -> Self {
        Self::normalized(self.num.pow(k), self.den.pow(k))
    }

    pub fn derivative(&self, v: Var) -> Self {
        let dn = self.num.derivative(v);
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return Self::normalized(dn, self.den.clone());
        }
        Self::normalized(&(&dn * &self.den) - &(&self.num * &dd), self.den.pow(2))
    }

    pub fn substitute_all(&self, subs: &[(Var, MultiPoly)]) -> Result<Self, RatFuncError> {
        Self::new(self.num.substitute_all(subs), self.den.substitute_all(subs))
    }

    /// Substitutes rational functions for variables, clearing denominators.
    pub fn compose(&self, subs: &[(Var, RatFunc)]) -> Result<Self, RatFuncError> {
        let num = compose_poly(&self.num, subs);
        let den = compose_poly(&self.den, subs);
        num.checked_div(&den)
    }

    pub fn shift(&self, v: Var, k: &Rational) -> Self {
        Self::normalized(self.num.shift(v, k), self.den.shift(v, k))
    }

    /// Partial evaluation at rational values.
    pub fn evaluate(&self, point: &[(Var, Rational)]) -> Result<Self, RatFuncError> {
        let den = self.den.evaluate(point);
        if den.is_zero() {
            return Err(RatFuncError::PoleAtEvaluationPoint);
        }
        Ok(Self::normalized(self.num.evaluate(point), den))
    }

    pub fn eval_rational(&self, point: &[(Var, Rational)]) -> Result<Rational, RatFuncError> {
        let den = self
            .den
            .eval_rational(point)
            .expect("eval_rational: every variable must be assigned");
        if den.is_zero() {
            return Err(RatFuncError::PoleAtEvaluationPoint);
        }
        let num = self
            .num
            .eval_rational(point)
            .expect("eval_rational: every variable must be assigned");
        Ok(num / den)
    }

    pub fn eval_complex(&self, point: &[(Var, Complex64)]) -> Result<Complex64, RatFuncError> {
        let den = self.den.eval_complex(point);
        if den == Complex64::new(0.0, 0.0) {
            return Err(RatFuncError::PoleAtEvaluationPoint);
        }
        Ok(self.num.eval_complex(point) / den)
    }

    /// Cross-multiplication equality, after a structural comparison.
    pub fn equals(&self, other: &RatFunc) -> bool {
        (self.num == other.num && self.den == other.den) || (&self.num * &other.den) == (&other.num * &self.den)
    }

    /// Tries to cancel the given polynomial from numerator and denominator
    /// as often as it divides both.
    pub fn cancel_factor(&self, f: &MultiPoly) -> Self {
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        if f.is_constant() || num.is_zero() {
            return self.clone();
        }
        loop {
            match (num.div_exact(f), den.div_exact(f)) {
                (Some(a), Some(b)) => {
                    num = a;
                    den = b;
                }
                _ => break,
            }
        }
        Self::normalized(num, den)
    }

    pub fn cancel_factors(&self, fs: &[MultiPoly]) -> Self {
        fs.iter().fold(self.clone(), |acc, f| acc.cancel_factor(f))
    }
}

fn compose_poly(p: &MultiPoly, subs: &[(Var, RatFunc)]) -> RatFunc {
    // With v = a/b of maximal degree K in p, v^k = a^k b^(K-k) / b^K.
    let degrees: Vec<u32> = subs.iter().map(|(v, _)| p.degree_in(*v)).collect();
    let mut num = MultiPoly::zero();
    for (e, c) in p.terms() {
        let mut rest = *e;
        let mut term = MultiPoly::one();
        for ((v, value), &top) in subs.iter().zip(&degrees) {
            let k = e[v.index()] as u32;
            rest[v.index()] = 0;
            term = &term * &(&value.num.pow(k) * &value.den.pow(top - k));
        }
        num += &(&term * &MultiPoly::monomial(c.clone(), rest));
    }
    let den = subs
        .iter()
        .zip(&degrees)
        .fold(MultiPoly::one(), |acc, ((_, value), &top)| &acc * &value.den.pow(top));
    RatFunc::normalized(num, den)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Var> for RatFunc {
    fn from(v: Var) -> Self {
        RatFunc::var(v)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::int(c)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on a zero divisor; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::expr::ratfunc_to_string(self))
    }
}
