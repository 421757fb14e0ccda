use crate::case::{CaseSpec, MKind, Row};
use crate::exactalg::{cst, parse_ratfunc, MultiPoly, RatFunc, Var};

use super::RecurrenceError;

/// `A_n`, `B_n` for one family, symbolic in `n`, `lambda` and in whichever
/// of `d`, `l` the family leaves open.
#[derive(Clone, Debug)]
pub struct RecurrenceCoeffs {
    pub a: RatFunc,
    pub b: RatFunc,
    pub row: Row,
    pub m: MKind,
}

impl RecurrenceCoeffs {
    /// `A_n` and `B_n` at a concrete index.
    pub fn at(&self, n: i64) -> Result<(RatFunc, RatFunc), RecurrenceError> {
        let bind = [(Var::N, cst(n))];
        Ok((self.a.substitute_all(&bind)?, self.b.substitute_all(&bind)?))
    }

    pub fn bind(&self, subs: &[(Var, MultiPoly)]) -> Result<RecurrenceCoeffs, RecurrenceError> {
        Ok(RecurrenceCoeffs {
            a: self.a.substitute_all(subs)?,
            b: self.b.substitute_all(subs)?,
            row: self.row,
            m: self.m,
        })
    }
}

fn rf(src: &str) -> RatFunc {
    parse_ratfunc(src).expect("built-in expression")
}

/// Table entries with `d`, `l`, `n`, `lambda` symbolic; `m` is expressed
/// through its kind.
pub fn row_tables(row: Row, m: MKind) -> (RatFunc, RatFunc) {
    let den = |tail: &str| format!("(2*(d - 2)*(n + 2)*({tail}))");
    match row {
        Row::OnePlus => {
            let den = den("2*n + d + 6");
            (
                rf(&format!(
                    "(4*(d - 3)*n^2 + (4*(d - 2)*lambda + 16*(d - 3))*n + (d - 2)*lambda^2 \
                     + 9*(d - 2)*lambda + 14*d - 44)/{den}"
                )),
                rf(&format!("(2*n + lambda + 2)*(2*n + lambda + 3)/{den}")),
            )
        }
        Row::OneOne => {
            let den = den("2*n + d + 6");
            (
                rf(&format!(
                    "(4*(d - 3)*n^2 + (4*(d - 2)*lambda + 16*(d - 3))*n + (d - 2)*lambda^2 \
                     + 9*(d - 2)*lambda + 16*(d - 3))/{den}"
                )),
                rf(&format!("(2*n + lambda + 1)*(2*n + lambda + 4)/{den}")),
            )
        }
        Row::TwoPlus => {
            let den = den("2*n + d + 8");
            (
                rf(&format!(
                    "(4*(d - 3)*n^2 + (4*(d - 2)*lambda + 20*(d - 3))*n + (d - 2)*lambda^2 \
                     + 11*(d - 2)*lambda + 24*(d - 3))/{den}"
                )),
                rf(&format!("(2*n + lambda + 3)*(2*n + lambda + 4)/{den}")),
            )
        }
        Row::General => {
            let den = den("2*n + 2*l + d + 2");
            let a = rf(&format!(
                "(4*(d - 3)*n^2 + (4*(d - 2)*lambda + 4*(d - 3)*l + 8*d - 16)*n \
                 + (d - 2)*lambda^2 + (d - 2)*(2*l + 5)*lambda + (d - 2)*l^2 + 5*(d - 2)*l \
                 + 2*d - 4*{m})/{den}",
                m = m_text(m)
            ));
            let b = rf(&format!("(2*n + lambda + l - 2)*(2*n + lambda + l - 1)/{den}"));
            (a, b)
        }
    }
}

/// `m` written in terms of `l` and `d`.
pub fn m_text(m: MKind) -> &'static str {
    match m {
        MKind::Minus => "(-l)",
        MKind::One => "1",
        MKind::Plus => "(l + d - 2)",
    }
}

/// Tables for one family.
pub fn coeffs(case: &CaseSpec) -> Result<RecurrenceCoeffs, RecurrenceError> {
    if case.l.start() < 1 {
        return Err(RecurrenceError::InvalidCase(format!("{case}: l must be at least 1")));
    }
    let (a, b) = row_tables(case.row(), case.m);
    RecurrenceCoeffs {
        a,
        b,
        row: case.row(),
        m: case.m,
    }
    .bind(&case.substitutions())
}

/// Tables at concrete `d`, `l` (any `d >= 3`, `l >= 1`).
pub fn coeffs_concrete(d: i64, l: i64, m: MKind) -> Result<RecurrenceCoeffs, RecurrenceError> {
    if l < 1 || d < 3 {
        return Err(RecurrenceError::InvalidCase(format!("d = {d}, l = {l} out of range")));
    }
    let row = Row::of(l, m);
    let (a, b) = row_tables(row, m);
    RecurrenceCoeffs { a, b, row, m }.bind(&[(Var::D, cst(d)), (Var::L, cst(l))])
}
