use crate::case::{MKind, Row};
use crate::exactalg::{cst, parse_ratfunc, rat, var, MultiPoly, PowerProduct, RatFunc, Var};

use super::potential::{mode_ode, poly, PotentialKind};
use super::{OdeError, OdeSecondOrder};

/// Row of the Heun-form table: the `l = 0` equation or one of the recurrence rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeunRow {
    Zero,
    Rec(Row),
}

impl HeunRow {
    pub fn of(l: Option<i64>, m: MKind) -> HeunRow {
        match l {
            Some(0) => HeunRow::Zero,
            Some(l) => HeunRow::Rec(Row::of(l, m)),
            None => HeunRow::Rec(Row::General),
        }
    }
}

fn rf(src: &str) -> RatFunc {
    parse_ratfunc(src).expect("built-in expression")
}

fn l_poly(l: Option<i64>) -> MultiPoly {
    l.map(cst).unwrap_or_else(|| var(Var::L))
}

/// Tabulated `(p, q)` of the standard Heun form in `x`, with `d`, `lambda`
/// (and `l` when `None`) symbolic.
pub fn heun_table(l: Option<i64>, m: MKind) -> (RatFunc, RatFunc) {
    let tail = rf("(2*lambda + 3 - d)/(2*(x - 1))");
    let den = "(4*x*(x - 1)*(d - 2 + x))";
    match HeunRow::of(l, m) {
        HeunRow::Zero => (
            &rf("(d + 4)/(2*x)") + &tail,
            rf("(lambda + 2)*(lambda + 3)/(4*x*(x - 1))"),
        ),
        HeunRow::Rec(Row::OnePlus) => (
            &rf("(d + 4)/(2*x)") + &tail,
            rf(&format!(
                "((d - 2)*lambda^2 + 5*(d - 2)*lambda + 2*d - 8 + (lambda + 2)*(lambda + 3)*x)/{den}"
            )),
        ),
        HeunRow::Rec(Row::OneOne) => (
            &rf("(d + 4)/(2*x)") + &tail,
            rf(&format!(
                "((d - 2)*lambda^2 + 5*(d - 2)*lambda + 4*d - 12 + (lambda + 1)*(lambda + 4)*x)/{den}"
            )),
        ),
        HeunRow::Rec(Row::TwoPlus) => (
            &rf("(d + 6)/(2*x)") + &tail,
            rf(&format!(
                "((d - 2)*lambda^2 + 7*(d - 2)*lambda + 8*d - 24 + (lambda + 3)*(lambda + 4)*x)/{den}"
            )),
        ),
        HeunRow::Rec(Row::General) => {
            let m = match m {
                MKind::Minus => "(-l)",
                MKind::One => "1",
                MKind::Plus => "(l + d - 2)",
            };
            let p = &(&rf("(d + 2*l)/(2*x)") + &tail) - &rf("2/(d - 2 + x)");
            let q = rf(&format!(
                "((d - 2)*l^2 + (d + 2)*l + (d - 2)*lambda*(2*l + lambda + 1) + 4 - 2*d - 4*{m} \
                 + (lambda + l - 1)*(lambda + l - 2)*x)/{den}"
            ));
            let bind = [(Var::L, l_poly(l))];
            (
                p.substitute_all(&bind).expect("nonzero"),
                q.substitute_all(&bind).expect("nonzero"),
            )
        }
    }
}

/// The gauge `g(x) = w(x) h(x)` taking the squared-variable equation to Heun form.
pub fn heun_gauge(l: Option<i64>, m: MKind) -> PowerProduct {
    let x = RatFunc::var(Var::X);
    match HeunRow::of(l, m) {
        HeunRow::Zero | HeunRow::Rec(Row::OnePlus) | HeunRow::Rec(Row::OneOne) => {
            PowerProduct::power(x, cst(1))
        }
        HeunRow::Rec(Row::TwoPlus) => PowerProduct::power(x, poly("3/2")),
        HeunRow::Rec(Row::General) => PowerProduct::power(x, l_poly(l).scale(&rat(1, 2)))
            .with(rf("x + d - 2"), cst(-1)),
    }
}

/// Removed-mode equation in `rho`, then `x = rho^2`, then the Heun gauge.
pub fn heun_chain(l: Option<i64>, m: MKind) -> Result<OdeSecondOrder, OdeError> {
    let ode = mode_ode(l, m, PotentialKind::Tilde)?;
    let in_x = ode.variable_square_substitution()?;
    Ok(in_x.gauge_transform(&heun_gauge(l, m)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(l: Option<i64>, m: MKind) {
        let chain = heun_chain(l, m).unwrap();
        let (p, q) = heun_table(l, m);
        assert_eq!(chain.var, Var::X);
        assert!(chain.p.equals(&p), "p mismatch for l={l:?} m={m:?}");
        assert!(chain.q.equals(&q), "q mismatch for l={l:?} m={m:?}");
    }

    #[test]
    fn zero_row() {
        check(Some(0), MKind::One);
        assert_eq!(heun_table(Some(0), MKind::One).1, rf("(lambda + 2)*(lambda + 3)/(4*x*(x - 1))"));
    }

    #[test]
    fn special_rows() {
        check(Some(1), MKind::Plus);
        check(Some(1), MKind::One);
        check(Some(2), MKind::Plus);
    }

    #[test]
    fn general_row_symbolic() {
        for m in MKind::ALL {
            check(None, m);
        }
    }

    #[test]
    fn general_row_concrete() {
        check(Some(1), MKind::Minus);
        check(Some(2), MKind::One);
        check(Some(2), MKind::Minus);
        check(Some(4), MKind::Plus);
    }

    #[test]
    fn squared_variable_equation() {
        // g'' + (d - (2 lambda + 3) x)/(2x(1-x)) g' + [-lambda(lambda+1)/(4x(1-x)) + V(sqrt x)/(4x)] g = 0
        let ode = mode_ode(Some(0), MKind::One, PotentialKind::Tilde).unwrap();
        let x = ode.variable_square_substitution().unwrap();
        assert_eq!(x.p, rf("(d - (2*lambda + 3)*x)/(2*x*(1 - x))"));
        assert_eq!(x.q, rf("-lambda*(lambda + 1)/(4*x*(1 - x)) - 2*d/(x*(1 - x))/(4*x)"));
    }
}
