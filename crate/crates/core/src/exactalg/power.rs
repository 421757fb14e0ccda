use std::ops::Mul;

use super::poly::MultiPoly;
use super::ratfunc::RatFunc;
use super::var::Var;

/// Formal product `prod b_i^(e_i)`.
///
/// Exponents are polynomials in the parameters (for gauges such as
/// `(1 - rho^2)^((3 - d)/4)`); they must not involve the variable being
/// differentiated.
#[derive(Clone, Debug, Default)]
pub struct PowerProduct {
    factors: Vec<(RatFunc, MultiPoly)>,
}

impl PowerProduct {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_ratfunc(f: RatFunc) -> Self {
        Self::power(f, MultiPoly::one())
    }

    pub fn power(base: RatFunc, exponent: MultiPoly) -> Self {
        assert!(!base.is_zero(), "PowerProduct base must be nonzero");
        Self {
            factors: vec![(base, exponent)],
        }
    }

    pub fn with(mut self, base: RatFunc, exponent: MultiPoly) -> Self {
        assert!(!base.is_zero(), "PowerProduct base must be nonzero");
        self.factors.push((base, exponent));
        self
    }

    pub fn factors(&self) -> &[(RatFunc, MultiPoly)] {
        &self.factors
    }

    pub fn recip(&self) -> Self {
        Self {
            factors: self.factors.iter().map(|(b, e)| (b.clone(), -e)).collect(),
        }
    }

    /// `g'/g = sum e_i b_i'/b_i` with respect to `v`.
    pub fn log_derivative(&self, v: Var) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (base, exponent) in &self.factors {
            assert!(
                !exponent.uses(v),
                "exponent must not depend on the differentiation variable"
            );
            if exponent.is_zero() {
                continue;
            }
            let (num, den) = (base.num(), base.den());
            // b'/b = n'/n - d'/d
            let mut term = RatFunc::new(num.derivative(v), num.clone()).expect("nonzero base");
            if !den.is_constant() {
                term = &term - &RatFunc::new(den.derivative(v), den.clone()).expect("nonzero den");
            }
            acc = &acc + &(&term * &RatFunc::from_poly(exponent.clone()));
        }
        acc
    }

    /// `g''/g = (g'/g)' + (g'/g)^2`.
    pub fn second_log_derivative(&self, v: Var) -> RatFunc {
        let l = self.log_derivative(v);
        &l.derivative(v) + &(&l * &l)
    }
}

impl Mul for &PowerProduct {
    type Output = PowerProduct;
    fn mul(self, rhs: &PowerProduct) -> PowerProduct {
        let mut factors = self.factors.clone();
        factors.extend(rhs.factors.iter().cloned());
        PowerProduct { factors }
    }
}

impl Mul for PowerProduct {
    type Output = PowerProduct;
    fn mul(self, rhs: PowerProduct) -> PowerProduct {
        &self * &rhs
    }
}

impl From<RatFunc> for PowerProduct {
    fn from(f: RatFunc) -> Self {
        PowerProduct::from_ratfunc(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::{cst, rcst, var};

    #[test]
    fn sqrt_log_derivative() {
        let g = PowerProduct::power(RatFunc::var(Var::Rho), rcst(1, 2));
        let expected = RatFunc::new(cst(1), cst(2) * var(Var::Rho)).unwrap();
        assert_eq!(g.log_derivative(Var::Rho), expected);
    }

    #[test]
    fn second_log_derivative_of_monomial() {
        // (rho^3)''/rho^3 = 6/rho^2
        let g = PowerProduct::power(RatFunc::var(Var::Rho), cst(3));
        let expected = RatFunc::new(cst(6), var(Var::Rho).pow(2)).unwrap();
        assert_eq!(g.second_log_derivative(Var::Rho), expected);
    }

    #[test]
    fn symbolic_exponent() {
        // (rho^((d-1)/2))'/... = (d-1)/(2 rho)
        let e = (var(Var::D) - cst(1)).scale(&crate::exactalg::rational::rat(1, 2));
        let g = PowerProduct::power(RatFunc::var(Var::Rho), e);
        let expected = RatFunc::new(var(Var::D) - cst(1), cst(2) * var(Var::Rho)).unwrap();
        assert_eq!(g.log_derivative(Var::Rho), expected);
    }
}
