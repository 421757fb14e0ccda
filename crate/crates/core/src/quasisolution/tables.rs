use crate::case::{CaseSpec, MKind, Range};
use crate::exactalg::{cst, parse_ratfunc, var, RatFunc, Var};
use crate::recurrence::row_tables;

use super::QuasiError;

/// `rt_n`, quadratic in `lambda`, symbolic in `n` and in the open parameters.
#[derive(Clone, Debug)]
pub struct QuasiSolution {
    pub expr: RatFunc,
    pub case: CaseSpec,
}

impl QuasiSolution {
    /// Coefficients of `lambda^0`, `lambda^1`, `lambda^2`.
    pub fn lambda_coefficients(&self) -> [RatFunc; 3] {
        let parts = self.expr.num().coefficients_in(Var::Lambda);
        let den = self.expr.den();
        std::array::from_fn(|k| {
            let c = parts.get(k).cloned().unwrap_or_default();
            RatFunc::new(c, den.clone()).expect("nonzero")
        })
    }
}

fn rf(src: &str) -> RatFunc {
    parse_ratfunc(src).expect("built-in expression")
}

/// `lambda^2/(2(n+1)D) + c1 lambda/(2(n+1)D) + c0`.
fn standard(den: &str, c1: &str, c0: &str) -> RatFunc {
    rf(&format!(
        "lambda^2/(2*(n + 1)*({den})) + ({c1})*lambda/(2*(n + 1)*({den})) + {c0}"
    ))
}

/// The `d = 4, 5` rows with `l >= 3`; `c` is the numerator of the `1/(2(7n+3))` term.
fn low_dimension(d: i64, c: &str) -> RatFunc {
    rf(&format!(
        "lambda^2/(2*(n + 1)*(2*n + 2*l + {d})) \
         + ((4*n + 2*l + 1)/(2*(n + 1)*(2*n + 2*l + {d})) + 1/(2*(n + 1)*(2*n + {d})))*lambda \
         + ({c})/(2*(7*n + 3)) + (n - 1)/(n + 1)"
    ))
}

/// `A_{n-1} + 1/(d - 2) - 5/(10n + 3d + 10)`, symbolic in `d`, `l`.
fn general(m: MKind) -> RatFunc {
    let (a, _) = row_tables(crate::case::Row::General, m);
    let a_prev = a.substitute_all(&[(Var::N, var(Var::N) - cst(1))]).expect("nonzero");
    &a_prev + &rf("1/(d - 2) - 5/(10*n + 3*d + 10)")
}

/// The expanded second form of the general quasi-solution.
pub fn rtilde_general_expanded(m: MKind) -> RatFunc {
    rf(&format!(
        "lambda^2/(2*(n + 1)*(2*n + 2*l + d)) + (4*n + 2*l + 1)*lambda/(2*(n + 1)*(2*n + 2*l + d)) \
         + 1 - 5/(10*n + 3*d + 10) \
         + ((-2*d^2 + 2*d + 20)*n + (d - 2)*l^2 + (-3*d + 14)*l - 2*d^2 + 4*d - 4*{m} + 4)\
         /(2*(d - 2)*(n + 1)*(2*n + 2*l + d))",
        m = crate::recurrence::m_text(m)
    ))
}

pub fn rtilde(case: &CaseSpec) -> Result<QuasiSolution, QuasiError> {
    use MKind::*;
    use Range::*;
    let expr = match (case.l, case.m, case.d) {
        (Exact(1), Plus, Exact(4)) => standard("2*n + 8", "4*n + 5", "(4*n + 5)/(2*(2*n + 7))"),
        (Exact(1), Plus, AtLeast(5)) => {
            standard("2*n + d + 4", "4*n + 5", "(4*n + 5)/(2*(2*n + d + 4))")
        }
        (Exact(1), One, Exact(4)) => standard("2*n + 8", "4*n + 5", "(20*n + 33)/(10*(2*n + 9))"),
        (Exact(1), One, AtLeast(5)) => standard("2*n + d + 4", "4*n + 5", "(2*n + 3)/(2*n + d + 5)"),
        (Exact(2), Plus, Exact(4)) => standard("2*n + 10", "4*n + 7", "(2*n + 3)/(2*n + 7)"),
        (Exact(2), Plus, AtLeast(5)) => standard("2*n + d + 6", "4*n + 7", "(2*n + 5)/(2*n + d + 6)"),
        (Exact(1), Minus, _) => standard("2*n + d + 2", "4*n + 4", "(2*n + 1)/(2*n + d + 2)"),
        (Exact(2), One, _) => standard("2*n + d + 4", "4*n + 6", "(2*n + 2)/(2*n + d + 4)"),
        (Exact(2), Minus, _) => standard("2*n + d + 4", "4*n + 6", "(2*n + 3)/(2*n + d + 4)"),
        (AtLeast(3), m, Exact(d @ (4 | 5))) => {
            let c = match (d, m) {
                (_, Plus) => "3*l - 1",
                (_, One) | (5, Minus) => "3*l",
                (_, Minus) => "3*l + 2",
            };
            low_dimension(d, c)
        }
        (AtLeast(3), m, AtLeast(6)) => general(m),
        _ => return Err(QuasiError::InvalidCase(format!("no quasi-solution for {case}"))),
    };
    Ok(QuasiSolution {
        expr: expr.substitute_all(&case.substitutions())?,
        case: *case,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::MultiPoly;

    fn case(l: Range, m: MKind, d: Range) -> CaseSpec {
        CaseSpec::new(l, m, d)
    }

    #[test]
    fn general_forms_agree() {
        for m in MKind::ALL {
            let c = case(Range::AtLeast(3), m, Range::AtLeast(6));
            assert_eq!(rtilde(&c).unwrap().expr, rtilde_general_expanded(m), "{m:?}");
        }
    }

    #[test]
    fn d5_minus_equals_one() {
        let a = rtilde(&case(Range::AtLeast(3), MKind::Minus, Range::Exact(5))).unwrap();
        let b = rtilde(&case(Range::AtLeast(3), MKind::One, Range::Exact(5))).unwrap();
        assert_eq!(a.expr, b.expr);
    }

    #[test]
    fn quadratic_with_positive_leading_term_and_unit_limit() {
        for c in CaseSpec::families() {
            let q = rtilde(&c).unwrap();
            assert_eq!(q.expr.num().degree_in(Var::Lambda), 2, "{c}");
            assert_eq!(q.expr.den().degree_in(Var::Lambda), 0, "{c}");
            // Constant coefficient tends to 1 in n; lambda coefficients tend to 0.
            let [c0, c1, c2] = q.lambda_coefficients();
            let lim = |f: &RatFunc| {
                let (dn, dd) = (f.num().degree_in(Var::N), f.den().degree_in(Var::N));
                if dn < dd {
                    return RatFunc::zero();
                }
                assert_eq!(dn, dd);
                RatFunc::new(
                    f.num().coefficients_in(Var::N)[dn as usize].clone(),
                    f.den().coefficients_in(Var::N)[dd as usize].clone(),
                )
                .unwrap()
            };
            assert_eq!(lim(&c0), RatFunc::one(), "{c}");
            assert!(lim(&c1).is_zero() && lim(&c2).is_zero(), "{c}");
        }
    }

    #[test]
    fn general_constant_term_matches_displayed_cubic() {
        let q = rtilde(&case(Range::AtLeast(3), MKind::Plus, Range::AtLeast(6))).unwrap();
        let at0 = q.expr.substitute_all(&[(Var::Lambda, MultiPoly::zero())]).unwrap();
        let displayed = rf(
            "(40*(d - 2)*n^3 + (40*(d - 2)*l + 12*d^2 + 16*d + 80)*n^2 \
             + (10*(d - 2)*l^2 + (12*d^2 + 6*d - 20)*l - 4*d^2 + 16*d + 280)*n \
             + (d - 2)*(3*d + 10)*l^2 + (3*d^2 - 4*d + 60)*l - 22*d^2 + 16*d + 120)\
             /(2*(d - 2)*(n + 1)*(2*n + 2*l + d)*(10*n + 3*d + 10))",
        );
        assert_eq!(at0, displayed);
        let bracket = displayed.num().substitute_all(&[
            (Var::D, var(Var::D) + cst(6)),
            (Var::L, var(Var::L) + cst(3)),
            (Var::N, var(Var::N) + cst(1)),
        ]);
        assert!(bracket.all_coefficients_nonnegative());
        assert!(bracket.constant_term() > crate::exactalg::int(0));
    }

    #[test]
    fn constant_term_decreases_in_m() {
        // rt(0) depends on m only through -4m/(2(d-2)(n+1)(2n+2l+d)).
        let at0 = |m| {
            let q = rtilde(&case(Range::AtLeast(3), m, Range::AtLeast(6))).unwrap();
            q.expr.substitute_all(&[(Var::Lambda, MultiPoly::zero())]).unwrap()
        };
        let step = |hi, lo| {
            let diff = &at0(lo) - &at0(hi);
            let shifted = diff
                .substitute_all(&[
                    (Var::D, var(Var::D) + cst(6)),
                    (Var::L, var(Var::L) + cst(3)),
                    (Var::N, var(Var::N) + cst(1)),
                ])
                .unwrap();
            shifted.num().all_coefficients_nonnegative() && shifted.den().all_coefficients_nonnegative()
        };
        assert!(step(MKind::Plus, MKind::One));
        assert!(step(MKind::One, MKind::Minus));
    }
}
