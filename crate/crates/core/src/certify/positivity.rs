use std::fmt;

use crate::case::CaseSpec;
use crate::exactalg::{var, Exponents, MultiPoly, RatFunc, Rational, Var};

/// Offsets turning the parameter ranges `n >= n0`, `d >= d0`, `l >= l0`
/// into the nonnegative orthant.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Shifts {
    pub n: i64,
    pub d: i64,
    pub l: i64,
}

impl Shifts {
    pub const NONE: Shifts = Shifts { n: 0, d: 0, l: 0 };

    /// Shifts for a family: open `d`, `l` ranges from their start, `n` from `n0`.
    pub fn for_case(case: &CaseSpec, n0: i64) -> Shifts {
        Shifts {
            n: n0,
            d: case.d_shift(),
            l: case.l_shift(),
        }
    }

    pub fn substitutions(&self) -> Vec<(Var, MultiPoly)> {
        self.offsets()
            .into_iter()
            .map(|(v, k)| (v, var(v) + MultiPoly::constant(k)))
            .collect()
    }

    fn offsets(&self) -> Vec<(Var, Rational)> {
        [(Var::N, self.n), (Var::D, self.d), (Var::L, self.l)]
            .into_iter()
            .filter(|&(_, k)| k != 0)
            .map(|(v, k)| (v, Rational::from_integer(k.into())))
            .collect()
    }

    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        p.shift_all(&self.offsets())
    }
}

impl fmt::Display for Shifts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n+{}, d+{}, l+{}", self.n, self.d, self.l)
    }
}

/// First negative coefficient in grlex-descending order.
pub fn negative_witness(p: &MultiPoly) -> Option<(Exponents, Rational)> {
    p.sorted_terms()
        .into_iter()
        .find(|(_, c)| c < &&Rational::from_integer(0.into()))
        .map(|(e, c)| (*e, c.clone()))
}

/// Positive on the orthant: nonnegative coefficients and a positive constant term.
pub fn strictly_positive_poly(p: &MultiPoly) -> bool {
    p.all_coefficients_nonnegative() && p.constant_term() > Rational::from_integer(0.into())
}

/// Shifted numerator and denominator of `f`, negated together when the
/// numerator's constant term is negative.
pub fn shifted_parts(f: &RatFunc, shifts: &Shifts) -> (MultiPoly, MultiPoly) {
    let num = shifts.apply(f.num());
    let den = shifts.apply(f.den());
    if num.constant_term() < Rational::from_integer(0.into()) {
        (-num, -den)
    } else {
        (num, den)
    }
}

/// Positivity of a rational function on the shifted range, by checking the
/// numerator and denominator (up to a common sign) coefficient-wise.
pub fn positive_on_range(f: &RatFunc, shifts: &Shifts) -> bool {
    let (num, den) = shifted_parts(f, shifts);
    strictly_positive_poly(&num) && strictly_positive_poly(&den)
}
