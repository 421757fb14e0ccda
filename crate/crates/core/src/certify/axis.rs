use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactalg::{Exponents, MultiPoly, RatFunc, Rational, Var};

use super::positivity::{negative_witness, strictly_positive_poly, Shifts};
use super::{CertifyError, Verdict};

/// Exact discriminant check on the truncation `a0 + a1 s + a2 s^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallbackRecord {
    pub a0: BigInt,
    pub a1: BigInt,
    pub a2: BigInt,
    pub discriminant: BigInt,
    pub pass: bool,
}

/// `u^2 |Q(it)|^2 - v^2 |P(it)|^2` in `s = t^2`, shifted, with a positive
/// primitive integer scale.
#[derive(Clone, Debug)]
pub struct AxisCertificate {
    pub poly: MultiPoly,
    pub shifts: Shifts,
    pub verdict: Verdict,
    pub witness: Option<(Exponents, Rational)>,
    pub fallback: Option<FallbackRecord>,
}

fn as_integer(c: &Rational) -> BigInt {
    assert!(c.is_integer(), "primitive polynomial has integer coefficients");
    c.to_integer()
}

/// Pass iff `a0, a2 > 0` and `a1^2 - 4 a0 a2 <= 0`, applicable when the only
/// negative coefficient of a polynomial in `s` alone is that of `s`.
pub fn quadratic_fallback(cert: &MultiPoly) -> Result<FallbackRecord, CertifyError> {
    if cert.variables().iter().any(|&v| v != Var::S) {
        return Err(CertifyError::FallbackNotApplicable("certificate depends on parameters".into()));
    }
    let cs: Vec<Rational> = cert
        .coefficients_in(Var::S)
        .into_iter()
        .map(|c| c.constant_term())
        .collect();
    let get = |k: usize| cs.get(k).cloned().unwrap_or_else(Rational::zero);
    if !get(1).is_negative() {
        return Err(CertifyError::FallbackNotApplicable("the s coefficient is not negative".into()));
    }
    if cs.iter().enumerate().any(|(k, c)| k != 1 && c.is_negative()) {
        return Err(CertifyError::FallbackNotApplicable(
            "a coefficient other than that of s is negative".into(),
        ));
    }
    let scale = cert.primitive_scale();
    let (a0, a1, a2) = (
        as_integer(&(get(0) * &scale)),
        as_integer(&(get(1) * &scale)),
        as_integer(&(get(2) * &scale)),
    );
    let discriminant = &a1 * &a1 - BigInt::from(4) * &a0 * &a2;
    let pass = a0.is_positive() && a2.is_positive() && !discriminant.is_positive();
    Ok(FallbackRecord {
        a0,
        a1,
        a2,
        discriminant,
        pass,
    })
}

/// Certificate for `|F(it)| <= bound` on the shifted parameter range.
///
/// `bound = u/v` must be positive there; a failing coefficient check engages
/// the quadratic fallback when it applies.
pub fn imag_axis_bound_certificate(
    f: &RatFunc,
    bound: &RatFunc,
    shifts: Shifts,
) -> Result<AxisCertificate, CertifyError> {
    for v in [Var::S, Var::T] {
        if f.uses(v) || bound.uses(v) {
            return Err(CertifyError::NonRealCoefficients);
        }
    }
    if bound.uses(Var::Lambda) {
        return Err(CertifyError::NonRealCoefficients);
    }
    let (u, v) = (bound.num(), bound.den());
    if !(strictly_positive_poly(&shifts.apply(u)) && strictly_positive_poly(&shifts.apply(v))) {
        return Err(CertifyError::BoundNotPositive(crate::exactalg::ratfunc_to_string(bound)));
    }
    let raw = &(&(u * u) * &f.den().abs2_on_imaginary_axis()) - &(&(v * v) * &f.num().abs2_on_imaginary_axis());
    let shifted = shifts.apply(&raw);
    let poly = shifted.scale(&shifted.primitive_scale());
    let witness = negative_witness(&poly);
    let (verdict, fallback) = match witness {
        None => (Verdict::Pass, None),
        Some(_) => match quadratic_fallback(&poly) {
            Ok(rec) if rec.pass => (Verdict::PassWithFallback, Some(rec)),
            Ok(rec) => (Verdict::Fail, Some(rec)),
            Err(_) => (Verdict::Fail, None),
        },
    };
    Ok(AxisCertificate {
        poly,
        shifts,
        verdict,
        witness,
        fallback,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_poly, parse_ratfunc};

    #[test]
    fn lambda_against_one() {
        let c = imag_axis_bound_certificate(
            &parse_ratfunc("lambda").unwrap(),
            &RatFunc::one(),
            Shifts::NONE,
        )
        .unwrap();
        assert_eq!(c.poly, parse_poly("1 - s").unwrap());
        assert_eq!(c.verdict, Verdict::Fail);
    }

    #[test]
    fn fallback_examples() {
        let rec = quadratic_fallback(&parse_poly("1843200 - 380160*s + 606252*s^2").unwrap()).unwrap();
        assert!(rec.pass && rec.discriminant.is_negative());
        let rec = quadratic_fallback(&parse_poly("1 - 2*s + s^2").unwrap()).unwrap();
        assert!(rec.pass && rec.discriminant.is_zero());
        let rec = quadratic_fallback(&parse_poly("1 - 3*s + s^2").unwrap()).unwrap();
        assert!(!rec.pass && rec.discriminant == BigInt::from(5));
        assert!(quadratic_fallback(&parse_poly("1 + s - s^3").unwrap()).is_err());
    }

    #[test]
    fn damped_ratio_passes() {
        // |1/(lambda + 2)| <= 1/2 on the imaginary axis: 4 + s - 4 >= 0.
        let c = imag_axis_bound_certificate(
            &parse_ratfunc("1/(lambda + 2)").unwrap(),
            &parse_ratfunc("1/2").unwrap(),
            Shifts::NONE,
        )
        .unwrap();
        assert_eq!(c.poly, parse_poly("s").unwrap());
        assert_eq!(c.verdict, Verdict::Pass);
    }
}
