//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors over the fixed
//! [`Var`] universe, so two polynomials are equal exactly when their maps
//! are equal. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rational::{int, to_f64, Rational};
use super::var::{Var, NVARS};

pub type Exponents = [u16; NVARS];

pub const ZERO_EXP: Exponents = [0; NVARS];

pub fn total_degree(e: &Exponents) -> u32 {
    e.iter().map(|&k| k as u32).sum()
}

/// Graded lexicographic order: total degree first, then exponents compared
/// in variable order with `lambda` most significant.
pub fn grlex_cmp(a: &Exponents, b: &Exponents) -> Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b))
}

fn add_exp(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = *a;
    for (o, k) in out.iter_mut().zip(b.iter()) {
        *o += *k;
    }
    out
}

fn divides(small: &Exponents, big: &Exponents) -> bool {
    small.iter().zip(big.iter()).all(|(s, b)| s <= b)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ZERO_EXP, c);
        }
        Self { terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(int(c))
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, k: u16) -> Self {
        let mut e = ZERO_EXP;
        e[v.index()] = k;
        Self::monomial(Rational::one(), e)
    }

    pub fn monomial(c: Rational, e: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `sum c_i v^i` from a dense coefficient list.
    pub fn univariate(v: Var, coeffs: &[Rational]) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = ZERO_EXP;
                e[v.index()] = k as u16;
                terms.insert(e, c.clone());
            }
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Rational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&ZERO_EXP).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ZERO_EXP)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == ZERO_EXP)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()] as u32).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(total_degree).max().unwrap_or(0)
    }

    pub fn uses(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.index()] > 0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.uses(*v)).collect()
    }

    /// Terms sorted by descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }

    /// Leading term under graded-lex order.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().max_by(|a, b| grlex_cmp(a.0, b.0))
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn derivative(&self, v: Var) -> Self {
        let i = v.index();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut ne = *e;
                ne[i] -= 1;
                out.insert(ne, c * int(e[i] as i64));
            }
        }
        Self { terms: out }
    }

    /// Coefficients of `self` viewed as a polynomial in `v`; entry `k`
    /// multiplies `v^k` and is free of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let i = v.index();
        let deg = self.degree_in(v) as usize;
        let mut out = vec![MultiPoly::zero(); if self.is_zero() { 0 } else { deg + 1 }];
        for (e, c) in &self.terms {
            let mut ne = *e;
            let k = ne[i] as usize;
            ne[i] = 0;
            out[k].terms.insert(ne, c.clone());
        }
        out
    }

    /// Simultaneous substitution of each listed variable by a polynomial.
    pub fn substitute_all(&self, subs: &[(Var, MultiPoly)]) -> Self {
        if subs.is_empty() {
            return self.clone();
        }
        let mut power_cache: Vec<Vec<MultiPoly>> = subs.iter().map(|_| vec![MultiPoly::one()]).collect();
        let mut out = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let mut term = MultiPoly::one();
            for (j, (v, value)) in subs.iter().enumerate() {
                let k = e[v.index()] as usize;
                rest[v.index()] = 0;
                if k == 0 {
                    continue;
                }
                let cache = &mut power_cache[j];
                while cache.len() <= k {
                    let next = cache.last().expect("nonempty") * value;
                    cache.push(next);
                }
                term = &term * &cache[k];
            }
            let mono = MultiPoly::monomial(c.clone(), rest);
            out += &(&term * &mono);
        }
        out
    }

    pub fn substitute(&self, v: Var, value: &MultiPoly) -> Self {
        self.substitute_all(&[(v, value.clone())])
    }

    /// The variable shift `v -> v + k`, by a Taylor shift of each coefficient
    /// vector in `v`.
    pub fn shift(&self, v: Var, k: &Rational) -> Self {
        if k.is_zero() || !self.uses(v) {
            return self.clone();
        }
        let i = v.index();
        let mut groups: BTreeMap<Exponents, Vec<Rational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            rest[i] = 0;
            let vec = groups.entry(rest).or_default();
            let deg = e[i] as usize;
            if vec.len() <= deg {
                vec.resize(deg + 1, Rational::zero());
            }
            vec[deg] = c.clone();
        }
        let mut terms = BTreeMap::new();
        for (rest, mut cs) in groups {
            let n = cs.len();
            for lo in 0..n {
                for j in (lo..n - 1).rev() {
                    let add = &cs[j + 1] * k;
                    cs[j] += add;
                }
            }
            for (deg, c) in cs.into_iter().enumerate() {
                if !c.is_zero() {
                    let mut e = rest;
                    e[i] = deg as u16;
                    terms.insert(e, c);
                }
            }
        }
        MultiPoly { terms }
    }

    /// Successive shifts `v -> v + k` for each listed pair.
    pub fn shift_all(&self, shifts: &[(Var, Rational)]) -> Self {
        shifts.iter().fold(self.clone(), |p, (v, k)| p.shift(*v, k))
    }

    /// Substitutes rational values for the listed variables, leaving the rest symbolic.
    pub fn evaluate(&self, point: &[(Var, Rational)]) -> Self {
        let mut out = MultiPoly::zero();
        let mut cache: Vec<Vec<Rational>> = point.iter().map(|_| vec![Rational::one()]).collect();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let mut coef = c.clone();
            for (j, (v, value)) in point.iter().enumerate() {
                let k = e[v.index()] as usize;
                rest[v.index()] = 0;
                let powers = &mut cache[j];
                while powers.len() <= k {
                    let next = powers.last().expect("nonempty") * value;
                    powers.push(next);
                }
                coef *= &powers[k];
            }
            out.add_term(rest, coef);
        }
        out
    }

    /// Full rational evaluation; `None` if some variable is left unassigned.
    pub fn eval_rational(&self, point: &[(Var, Rational)]) -> Option<Rational> {
        self.evaluate(point).as_constant()
    }

    /// Floating complex evaluation; unassigned variables evaluate to zero.
    pub fn eval_complex(&self, point: &[(Var, Complex64)]) -> Complex64 {
        let mut values = [Complex64::new(0.0, 0.0); NVARS];
        for (v, z) in point {
            values[v.index()] = *z;
        }
        let mut total = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let mut term = Complex64::new(to_f64(c), 0.0);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term *= values[i].powu(k as u32);
                }
            }
            total += term;
        }
        total
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        // Lex-leading terms: if divisor | r then LT(r) = LT(divisor) * LT(quotient).
        let (lead_e, lead_c) = divisor.terms.iter().next_back().map(|(e, c)| (*e, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((re, rc)) = rem.terms.iter().next_back().map(|(e, c)| (*e, c.clone())) {
            if !divides(&lead_e, &re) {
                return None;
            }
            let mut qe = re;
            for (q, l) in qe.iter_mut().zip(lead_e.iter()) {
                *q -= *l;
            }
            let qc = rc / &lead_c;
            for (de, dc) in &divisor.terms {
                rem.add_term(add_exp(de, &qe), -(dc * &qc));
            }
            quot.terms.insert(qe, qc);
        }
        Some(quot)
    }

    /// Positive rational `c` such that `self * c` has coprime integer coefficients.
    pub fn primitive_scale(&self) -> Rational {
        Self::joint_primitive_scale(&[self])
    }

    /// Common positive scale making all given polynomials integral with
    /// jointly coprime coefficients.
    pub fn joint_primitive_scale(polys: &[&MultiPoly]) -> Rational {
        use num_integer::Integer;
        let coeffs = || polys.iter().flat_map(|p| p.terms.values());
        let lcm = coeffs().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd = coeffs().fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c.numer() * (&lcm / c.denom())))
        });
        if gcd.is_zero() {
            return Rational::one();
        }
        Rational::new(lcm, gcd)
    }

    /// Lowest power of `v` occurring in any term.
    pub fn order_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()] as u32).min().unwrap_or(0)
    }

    /// Exact square root, if `self` is the square of a polynomial.
    pub fn sqrt_exact(&self) -> Option<MultiPoly> {
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        let (le, lc) = self.leading_term().map(|(e, c)| (*e, c.clone()))?;
        if le.iter().any(|k| k % 2 == 1) {
            return None;
        }
        let mut re = le;
        for k in re.iter_mut() {
            *k /= 2;
        }
        let root_lead = MultiPoly::monomial(rational_sqrt(&lc)?, re);
        let twice_lead = root_lead.scale(&int(2));
        let mut root = root_lead.clone();
        for _ in 0..(self.len() * self.len() + 16) {
            let rem = self - &(&root * &root);
            let Some((e, c)) = rem.leading_term() else {
                return Some(root);
            };
            let (te, tc) = twice_lead.leading_term().expect("nonzero");
            if !divides(te, e) {
                return None;
            }
            let mut qe = *e;
            for (q, t) in qe.iter_mut().zip(te.iter()) {
                *q -= *t;
            }
            if grlex_cmp(&qe, &re) != Ordering::Less {
                return None;
            }
            root += &MultiPoly::monomial(c / tc, qe);
        }
        None
    }

    pub fn all_coefficients_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// `|P(i t)|^2` as a polynomial in `s = t^2`, for `P` real in `lambda`.
    ///
    /// With `P = sum_k p_k lambda^k`, `P(i t) = R(s) + i t S(s)` where `R`
    /// collects the even powers with sign `(-1)^(k/2)` and `S` the odd ones
    /// with sign `(-1)^((k-1)/2)`, so `|P(i t)|^2 = R^2 + s S^2`.
    pub fn abs2_on_imaginary_axis(&self) -> MultiPoly {
        assert!(
            !self.uses(Var::S) && !self.uses(Var::T),
            "abs2_on_imaginary_axis: input must be free of s and t"
        );
        let mut even = MultiPoly::zero();
        let mut odd = MultiPoly::zero();
        for (k, coef) in self.coefficients_in(Var::Lambda).into_iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let half = (k / 2) as u16;
            let signed = if half % 2 == 0 { coef } else { -coef };
            let term = &signed * &MultiPoly::var_pow(Var::S, half);
            if k % 2 == 0 {
                even += &term;
            } else {
                odd += &term;
            }
        }
        &(&even * &even) + &(&MultiPoly::var(Var::S) * &(&odd * &odd))
    }

    fn mul_impl(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        if a.is_zero() || b.is_zero() {
            return MultiPoly::zero();
        }
        if a.len() == 1 || b.len() == 1 {
            let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
            let (se, sc) = single.terms.iter().next().expect("one term");
            return MultiPoly {
                terms: other.terms.iter().map(|(e, c)| (add_exp(e, se), c * sc)).collect(),
            };
        }
        if a.is_integral() && b.is_integral() {
            let mut acc: HashMap<Exponents, BigInt> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
            let bi: Vec<(&Exponents, &BigInt)> = b.terms.iter().map(|(e, c)| (e, c.numer())).collect();
            for (ea, ca) in &a.terms {
                let ca = ca.numer();
                for (eb, cb) in &bi {
                    let e = add_exp(ea, eb);
                    let prod = ca * *cb;
                    match acc.get_mut(&e) {
                        Some(v) => *v += prod,
                        None => {
                            acc.insert(e, prod);
                        }
                    }
                }
            }
            return MultiPoly {
                terms: acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e, Rational::from_integer(c)))
                    .collect(),
            };
        }
        let mut acc: HashMap<Exponents, Rational> = HashMap::with_capacity(a.len() * b.len() / 2 + 1);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = add_exp(ea, eb);
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        MultiPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::int(c)
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        big += small;
        big
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul_impl(self, rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| Rational::new(n, d))
}

/// Shorthand for building polynomials in tests and tables.
pub fn var(v: Var) -> MultiPoly {
    MultiPoly::var(v)
}

pub fn cst(c: i64) -> MultiPoly {
    MultiPoly::int(c)
}

pub fn rcst(numer: i64, denom: i64) -> MultiPoly {
    MultiPoly::constant(super::rational::rat(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn x() -> MultiPoly {
        var(Var::X)
    }

    #[test]
    fn difference_of_squares() {
        let p = (x() + cst(1)) * (x() - cst(1));
        assert_eq!(p, x().pow(2) - cst(1));
    }

    #[test]
    fn shift_expands_binomially() {
        let n = var(Var::N);
        let shifted = n.pow(2).shift(Var::N, &int(1));
        assert_eq!(shifted, n.pow(2) + cst(2) * n.clone() + cst(1));
    }

    #[test]
    fn power_rule_derivative() {
        let rho = var(Var::Rho);
        let p = rho.pow(3) * (cst(1) - rho.pow(2));
        assert_eq!(p.derivative(Var::Rho), cst(3) * rho.pow(2) - cst(5) * rho.pow(4));
    }

    #[test]
    fn abs2_examples() {
        let lam = var(Var::Lambda);
        let s = var(Var::S);
        assert_eq!((lam.clone() + cst(1)).abs2_on_imaginary_axis(), cst(1) + s.clone());
        assert_eq!(
            (lam.pow(2) + cst(1)).abs2_on_imaginary_axis(),
            (cst(1) - s.clone()).pow(2)
        );
        // (2 - t^2)^2 + 9 t^2 expanded by hand.
        assert_eq!(
            (lam.pow(2) + cst(3) * lam.clone() + cst(2)).abs2_on_imaginary_axis(),
            s.pow(2) + cst(5) * s.clone() + cst(4)
        );
    }

    #[test]
    fn exact_division_detects_non_divisors() {
        let n = var(Var::N);
        let d = var(Var::D);
        let f = cst(2) * n.clone() + d.clone() + cst(2);
        let g = n.clone() * d.clone() - rcst(1, 3);
        let prod = &f * &g;
        assert_eq!(prod.div_exact(&f), Some(g.clone()));
        assert_eq!((&prod + &cst(1)).div_exact(&f), None);
    }

    #[test]
    fn primitive_scale_clears_denominators() {
        let p = rcst(1, 6) * var(Var::N) + rcst(2, 9);
        let c = p.primitive_scale();
        assert_eq!(c, rat(18, 1));
        assert_eq!(p.scale(&c), cst(3) * var(Var::N) + cst(4));
    }

    #[test]
    fn square_roots() {
        let p = cst(2) * var(Var::L) + var(Var::D) - cst(2);
        assert_eq!(p.pow(2).sqrt_exact().map(|r| r.pow(2)), Some(p.pow(2)));
        assert_eq!((p.pow(2) + cst(1)).sqrt_exact(), None);
        assert_eq!(rcst(9, 4).sqrt_exact(), Some(rcst(3, 2)));
    }

    #[test]
    fn coefficients_in_reassemble() {
        let lam = var(Var::Lambda);
        let n = var(Var::N);
        let p = lam.pow(2) * n.clone() + lam.clone() * cst(3) + n.pow(2);
        let cs = p.coefficients_in(Var::Lambda);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], n.pow(2));
        assert_eq!(cs[1], cst(3));
        assert_eq!(cs[2], n);
    }
}
