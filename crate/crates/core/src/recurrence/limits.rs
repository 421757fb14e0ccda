use crate::case::CaseSpec;
use crate::exactalg::{rat, MultiPoly, RatFunc, Var};

use super::{coeffs, RecurrenceError};

/// Limits of `A_n`, `B_n` as `n -> oo` and the roots of
/// `alpha^2 - lim A alpha - lim B = 0`.
#[derive(Clone, Debug)]
pub struct Limits {
    pub a: RatFunc,
    pub b: RatFunc,
    pub roots: (RatFunc, RatFunc),
}

impl Limits {
    /// `((d - 3)/(d - 2), 1/(d - 2), {1, -1/(d - 2)})` with `d` symbolic.
    pub fn closed_form() -> Limits {
        let d2 = RatFunc::from_poly(MultiPoly::var(Var::D) - MultiPoly::int(2));
        let inv = d2.recip().expect("nonzero");
        Limits {
            a: &RatFunc::from_poly(MultiPoly::var(Var::D) - MultiPoly::int(3)) * &inv,
            b: inv.clone(),
            roots: (RatFunc::one(), -&inv),
        }
    }

    pub fn has_roots(&self, x: &RatFunc, y: &RatFunc) -> bool {
        let (r, s) = &self.roots;
        (r.equals(x) && s.equals(y)) || (r.equals(y) && s.equals(x))
    }
}

/// Leading-coefficient ratio in `n`; zero when the numerator has lower degree.
fn limit_in_n(f: &RatFunc) -> Result<RatFunc, RecurrenceError> {
    let (dn, dd) = (f.num().degree_in(Var::N), f.den().degree_in(Var::N));
    if dn > dd {
        return Err(RecurrenceError::InvalidCase("coefficient grows without bound in n".into()));
    }
    if dn < dd {
        return Ok(RatFunc::zero());
    }
    let top = |p: &MultiPoly, k: u32| p.coefficients_in(Var::N)[k as usize].clone();
    Ok(RatFunc::new(top(f.num(), dn), top(f.den(), dd))?)
}

pub fn limits(case: &CaseSpec) -> Result<Limits, RecurrenceError> {
    let rec = coeffs(case)?;
    let a = limit_in_n(&rec.a)?;
    let b = limit_in_n(&rec.b)?;
    if a.uses(Var::Lambda) || b.uses(Var::Lambda) {
        return Err(RecurrenceError::InvalidCase("limit depends on lambda".into()));
    }
    // alpha = (a +- sqrt(a^2 + 4b))/2 with the square root taken exactly.
    let disc = &(&a * &a) + &(&RatFunc::int(4) * &b);
    let root = (disc.num() * disc.den())
        .sqrt_exact()
        .ok_or_else(|| RecurrenceError::InvalidCase("characteristic discriminant is not a square".into()))?;
    let sq = RatFunc::new(root, disc.den().clone())?;
    let half = RatFunc::constant(rat(1, 2));
    let roots = (&half * &(&a + &sq), &half * &(&a - &sq));
    Ok(Limits { a, b, roots })
}
