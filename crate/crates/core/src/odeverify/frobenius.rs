use crate::exactalg::{MultiPoly, RatFunc, Rational, Var};

use super::{OdeError, OdeSecondOrder};

/// `s(s - 1) + p_{-1} s + q_{-2} = 0` at a regular singular point.
#[derive(Clone, Debug)]
pub struct IndicialEquation {
    pub p_minus1: RatFunc,
    pub q_minus2: RatFunc,
}

impl IndicialEquation {
    /// Whether `{a, b}` are the two roots (with multiplicity).
    pub fn has_roots(&self, a: &RatFunc, b: &RatFunc) -> bool {
        let sum = &RatFunc::one() - &self.p_minus1;
        (a + b).equals(&sum) && (a * b).equals(&self.q_minus2)
    }

    /// Roots when the discriminant is a perfect square, symbolic or not.
    pub fn roots(&self) -> Option<(RatFunc, RatFunc)> {
        let b = &self.p_minus1 - &RatFunc::one();
        let disc = &(&b * &b) - &(&RatFunc::int(4) * &self.q_minus2);
        // sqrt(N/D) = sqrt(N D)/D
        let root = (disc.num() * disc.den()).sqrt_exact()?;
        let sq = RatFunc::new(root, disc.den().clone()).ok()?;
        let half = RatFunc::constant(Rational::new(1.into(), 2.into()));
        let r1 = &half * &(&sq - &b);
        let r2 = &half * &(&(-&sq) - &b);
        Some((r1, r2))
    }
}

/// Coefficient of `var^(-pole)` in the Laurent expansion of `f` at `var = 0`;
/// a pole of higher order is an error.
fn laurent_coefficient(f: &RatFunc, var: Var, pole: u32) -> Result<RatFunc, OdeError> {
    if f.is_zero() {
        return Ok(RatFunc::zero());
    }
    let on = f.num().order_in(var) as i64;
    let od = f.den().order_in(var) as i64;
    let order = on - od;
    if order < -(pole as i64) {
        return Err(OdeError::IrregularSingularPoint);
    }
    if order > -(pole as i64) {
        return Ok(RatFunc::zero());
    }
    let lead = |p: &MultiPoly, k: i64| p.coefficients_in(var)[k as usize].clone();
    Ok(RatFunc::new(lead(f.num(), on), lead(f.den(), od))?)
}

pub fn indicial_equation(ode: &OdeSecondOrder, point: &Rational) -> Result<IndicialEquation, OdeError> {
    let v = ode.var;
    let (p, q) = if num_traits::Zero::is_zero(point) {
        (ode.p.clone(), ode.q.clone())
    } else {
        (ode.p.shift(v, point), ode.q.shift(v, point))
    };
    Ok(IndicialEquation {
        p_minus1: laurent_coefficient(&p, v, 1)?,
        q_minus2: laurent_coefficient(&q, v, 2)?,
    })
}

pub fn indicial_roots(ode: &OdeSecondOrder, point: &Rational) -> Result<(RatFunc, RatFunc), OdeError> {
    indicial_equation(ode, point)?
        .roots()
        .ok_or_else(|| OdeError::IdentityFailed("indicial discriminant is not a perfect square".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::MKind;
    use crate::exactalg::{int, parse_ratfunc, PowerProduct};
    use crate::odeverify::{mode_ode, PotentialKind};

    fn rf(s: &str) -> RatFunc {
        parse_ratfunc(s).unwrap()
    }

    #[test]
    fn mode_equation_at_origin() {
        let ode = mode_ode(None, MKind::Minus, PotentialKind::Original).unwrap();
        let eq = indicial_equation(&ode, &int(0)).unwrap();
        assert!(eq.has_roots(&rf("l"), &rf("-(l + d - 2)")));
        let (a, b) = eq.roots().unwrap();
        assert!(eq.has_roots(&a, &b));
    }

    #[test]
    fn removed_zero_equation_at_origin() {
        let ode = mode_ode(Some(0), MKind::One, PotentialKind::Tilde).unwrap();
        let eq = indicial_equation(&ode, &int(0)).unwrap();
        assert!(eq.has_roots(&rf("2"), &rf("-d")));
    }

    #[test]
    fn double_zero_root() {
        let ode = OdeSecondOrder::new(Var::Rho, rf("1/rho"), RatFunc::zero());
        let (a, b) = indicial_roots(&ode, &int(0)).unwrap();
        assert!(a.is_zero() && b.is_zero());
    }

    #[test]
    fn irregular_point() {
        let ode = OdeSecondOrder::new(Var::Rho, rf("1/rho^2"), RatFunc::zero());
        assert!(matches!(indicial_equation(&ode, &int(0)), Err(OdeError::IrregularSingularPoint)));
    }

    #[test]
    fn trivial_gauge_keeps_indices() {
        let ode = mode_ode(Some(2), MKind::One, PotentialKind::Original).unwrap();
        let w = PowerProduct::power(RatFunc::var(Var::Rho), MultiPoly::zero());
        let a = indicial_equation(&ode, &int(0)).unwrap();
        let b = indicial_equation(&ode.gauge_transform(&w), &int(0)).unwrap();
        assert!(a.p_minus1.equals(&b.p_minus1) && a.q_minus2.equals(&b.q_minus2));
    }
}
