use std::collections::BTreeMap;

use crate::exactalg::{cst, var, MultiPoly, RatFunc, Var};
use crate::odeverify::OdeSecondOrder;

use super::RecurrenceError;

/// Recurrence read off from an equation in `x` by inserting `sum a_k x^k`,
/// normalized to `a_{n+2} = A_n a_{n+1} + B_n a_n`.
#[derive(Clone, Debug)]
pub struct DerivedRecurrence {
    pub a: RatFunc,
    pub b: RatFunc,
    /// Number of index offsets with a nonzero coefficient (2 or 3).
    pub bands: usize,
}

/// Multiplier making both `M p` and `M q` polynomial.
fn clearing_multiplier(p: &RatFunc, q: &RatFunc) -> Option<MultiPoly> {
    let candidates = [p.den().clone(), q.den().clone(), p.den() * q.den()];
    candidates
        .into_iter()
        .find(|m| (m * p.num()).div_exact(p.den()).is_some() && (m * q.num()).div_exact(q.den()).is_some())
}

pub fn derive_recurrence_from_ode(ode: &OdeSecondOrder) -> Result<DerivedRecurrence, RecurrenceError> {
    let x = Var::X;
    let m = clearing_multiplier(&ode.p, &ode.q).ok_or(RecurrenceError::NotPolynomialForm)?;
    let p1 = (&m * ode.p.num()).div_exact(ode.p.den()).expect("checked");
    let p0 = (&m * ode.q.num()).div_exact(ode.q.den()).expect("checked");
    if [&m, &p1, &p0].iter().any(|p| p.uses(Var::N)) {
        return Err(RecurrenceError::NotPolynomialForm);
    }

    // M h'' + P1 h' + P0 h: the x^j coefficient collects a_{j+s} with
    // s = 2 - i from M, 1 - i from P1 and -i from P0 (i the power of x).
    let j = var(Var::N);
    let mut bands: BTreeMap<i64, MultiPoly> = BTreeMap::new();
    let mut add = |s: i64, c: MultiPoly| {
        if !c.is_zero() {
            let e = bands.entry(s).or_insert_with(MultiPoly::zero);
            *e += &c;
        }
    };
    for (i, alpha) in m.coefficients_in(x).into_iter().enumerate() {
        let s = 2 - i as i64;
        let k = &j + &cst(s);
        add(s, &alpha * &(&k * &(&k - &cst(1))));
    }
    for (i, beta) in p1.coefficients_in(x).into_iter().enumerate() {
        let s = 1 - i as i64;
        add(s, &beta * &(&j + &cst(s)));
    }
    for (i, gamma) in p0.coefficients_in(x).into_iter().enumerate() {
        add(-(i as i64), gamma);
    }
    bands.retain(|_, c| !c.is_zero());
    let (&lo, &hi) = match (bands.keys().next(), bands.keys().next_back()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(RecurrenceError::NotThreeTerm(0)),
    };
    let width = (hi - lo + 1) as usize;
    if width > 3 || width < 2 {
        return Err(RecurrenceError::NotThreeTerm(width));
    }

    // Put the top index at n + 2: j = n + 2 - hi.
    let at_n = |s: i64| -> MultiPoly {
        bands
            .get(&s)
            .map(|c| c.substitute(Var::N, &(var(Var::N) + cst(2 - hi))))
            .unwrap_or_else(MultiPoly::zero)
    };
    let top = at_n(hi);
    let a = RatFunc::new(-at_n(hi - 1), top.clone())?;
    let b = RatFunc::new(-at_n(hi - 2), top)?;
    Ok(DerivedRecurrence { a, b, bands: width })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::{MKind, Row};
    use crate::exactalg::parse_ratfunc;
    use crate::odeverify::heun_table;
    use crate::recurrence::row_tables;

    fn derive(l: Option<i64>, m: MKind) -> DerivedRecurrence {
        let (p, q) = heun_table(l, m);
        derive_recurrence_from_ode(&OdeSecondOrder::new(Var::X, p, q)).unwrap()
    }

    #[test]
    fn zero_row_is_hypergeometric() {
        let r = derive(Some(0), MKind::One);
        assert_eq!(r.bands, 2);
        assert!(r.b.is_zero());
        // t_{n+2}/t_{n+1} with a = (lambda+2)/2, b = (lambda+3)/2, c = (d+4)/2.
        let expected = parse_ratfunc(
            "((lambda + 2)/2 + n + 1)*((lambda + 3)/2 + n + 1)/(((d + 4)/2 + n + 1)*(n + 2))",
        )
        .unwrap();
        assert_eq!(r.a, expected);
    }

    #[test]
    fn special_rows_match_tables() {
        for (l, m, row) in [
            (1, MKind::Plus, Row::OnePlus),
            (1, MKind::One, Row::OneOne),
            (2, MKind::Plus, Row::TwoPlus),
        ] {
            let r = derive(Some(l), m);
            let (a, b) = row_tables(row, m);
            let bind = [(Var::L, cst(l))];
            assert_eq!(r.a, a.substitute_all(&bind).unwrap(), "A, row {row:?}");
            assert_eq!(r.b, b.substitute_all(&bind).unwrap(), "B, row {row:?}");
        }
    }

    #[test]
    fn general_row_matches_table_symbolically() {
        for m in MKind::ALL {
            let r = derive(None, m);
            assert_eq!(r.bands, 3);
            let (a, b) = row_tables(Row::General, m);
            assert_eq!(r.a, a);
            assert_eq!(r.b, b);
        }
    }

    #[test]
    fn four_bands_rejected() {
        // x^2 h'' + (1 + x^3) h = 0 couples a_j with a_{j-3}.
        let ode = OdeSecondOrder::new(
            Var::X,
            RatFunc::zero(),
            parse_ratfunc("1/x^2 + x").unwrap(),
        );
        assert!(matches!(
            derive_recurrence_from_ode(&ode),
            Err(RecurrenceError::NotThreeTerm(4))
        ));
    }
}
