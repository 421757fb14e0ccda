use crate::case::CaseSpec;
use crate::exactalg::RatFunc;

use super::{coeffs, RecurrenceCoeffs, RecurrenceError};

/// `r_0 = A_{-1}`, `r_{k+1} = A_k + B_k / r_k` for `k < n`, all kept exact.
pub fn r_sequence(rec: &RecurrenceCoeffs, n: usize) -> Result<Vec<RatFunc>, RecurrenceError> {
    let (a_first, _) = rec.at(-1)?;
    let mut out = Vec::with_capacity(n + 1);
    out.push(a_first);
    for k in 0..n {
        let r = out.last().expect("nonempty");
        if r.is_zero() {
            return Err(RecurrenceError::IntermediateZeroFunction(k));
        }
        let (a, b) = rec.at(k as i64)?;
        // A + B/r written over r's numerator.
        let (rn, rd) = (r.num(), r.den());
        let num = &(&(a.num() * b.den()) * rn) + &(&(b.num() * a.den()) * rd);
        let den = a.den() * &(b.den() * rn);
        out.push(RatFunc::new(num, den)?);
    }
    Ok(out)
}

/// `r_n` for the family.
pub fn r_symbolic_at(case: &CaseSpec, n: usize) -> Result<RatFunc, RecurrenceError> {
    Ok(r_sequence(&coeffs(case)?, n)?.pop().expect("nonempty"))
}

/// `r_N` with `N = N(d, l, m)` the family's start index.
pub fn r_symbolic(case: &CaseSpec) -> Result<RatFunc, RecurrenceError> {
    r_symbolic_at(case, case.start_index())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case::{MKind, Range};
    use crate::exactalg::{parse_ratfunc, Var};

    #[test]
    fn r3_for_d4_l1_plus() {
        let case = CaseSpec::new(Range::Exact(1), MKind::Plus, Range::Exact(4));
        let r3 = r_symbolic_at(&case, 3).unwrap();
        let expected = parse_ratfunc(
            "(lambda^8 + 44*lambda^7 + 802*lambda^6 + 7832*lambda^5 + 44497*lambda^4 \
             + 149708*lambda^3 + 284172*lambda^2 + 253680*lambda + 95616)\
             /(112*(lambda^6 + 27*lambda^5 + 277*lambda^4 + 1341*lambda^3 + 3202*lambda^2 \
             + 3744*lambda + 768))",
        )
        .unwrap();
        assert!(r3.equals(&expected));
        assert_eq!(r3.num().degree_in(Var::Lambda), 8);
        assert_eq!(r3.den().degree_in(Var::Lambda), 6);
    }

    #[test]
    fn r0_is_a_at_minus_one() {
        for case in CaseSpec::families() {
            let rec = coeffs(&case).unwrap();
            assert_eq!(r_symbolic_at(&case, 0).unwrap(), rec.at(-1).unwrap().0);
        }
    }

    #[test]
    fn general_r1_by_hand() {
        let case = CaseSpec::new(Range::AtLeast(3), MKind::One, Range::AtLeast(6));
        let rec = coeffs(&case).unwrap();
        let (a_m1, _) = rec.at(-1).unwrap();
        let (a0, b0) = rec.at(0).unwrap();
        let hand = &a0 + &b0.checked_div(&a_m1).unwrap();
        assert_eq!(r_symbolic_at(&case, 1).unwrap(), hand);
    }

    #[test]
    fn lambda_degrees_grow_by_two() {
        for case in CaseSpec::families() {
            let n = case.start_index();
            let r = r_symbolic(&case).unwrap();
            assert_eq!(r.num().degree_in(Var::Lambda) as usize, 2 * (n + 1), "{case}");
            assert_eq!(r.den().degree_in(Var::Lambda) as usize, 2 * n, "{case}");
        }
    }
}
