use crate::case::{CaseSpec, MKind, Range};
use crate::exactalg::{parse_ratfunc, rat, RatFunc, Rational};

use super::QuasiError;

/// The five rows of the bound table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum TripleRow {
    /// `(1/3, 1/2, 1/12)`
    Standard,
    /// `(1/4, 11/20, 1/15)` for `d = 4, l = 1, m = 1`
    OneOneFour,
    /// `(1/3, 1/3, 1/6)` for `d >= 5`, `l = 1, 2`, `m = -l`
    MinusHigh,
    /// `(1/3, 1/2 - l/(6(l+n+1)), 1/12 + l/(12(l+n+1)))` for `d = 4, l >= 3`
    LowDimension,
    /// `(1/2, 1/3, 1/6)` for `d >= 5, l >= 3`
    HighDimension,
}

#[derive(Clone, Debug)]
pub struct BoundTriple {
    pub row: TripleRow,
    pub alpha: Rational,
    pub beta: RatFunc,
    pub gamma: RatFunc,
}

impl TripleRow {
    pub const ALL: [TripleRow; 5] = [
        TripleRow::Standard,
        TripleRow::OneOneFour,
        TripleRow::MinusHigh,
        TripleRow::LowDimension,
        TripleRow::HighDimension,
    ];

    pub fn triple(self) -> BoundTriple {
        let c = |a, b| RatFunc::constant(rat(a, b));
        let (alpha, beta, gamma) = match self {
            TripleRow::Standard => (rat(1, 3), c(1, 2), c(1, 12)),
            TripleRow::OneOneFour => (rat(1, 4), c(11, 20), c(1, 15)),
            TripleRow::MinusHigh => (rat(1, 3), c(1, 3), c(1, 6)),
            TripleRow::LowDimension => (
                rat(1, 3),
                parse_ratfunc("1/2 - l/(6*(l + n + 1))").expect("built-in"),
                parse_ratfunc("1/12 + l/(12*(l + n + 1))").expect("built-in"),
            ),
            TripleRow::HighDimension => (rat(1, 2), c(1, 3), c(1, 6)),
        };
        BoundTriple {
            row: self,
            alpha,
            beta,
            gamma,
        }
    }

    /// Most specific row first, mirroring the ordered case analysis.
    pub fn of(case: &CaseSpec) -> TripleRow {
        use MKind::*;
        use Range::*;
        match (case.l, case.m, case.d) {
            (Exact(1), One, Exact(4)) => TripleRow::OneOneFour,
            (Exact(1 | 2), Minus, AtLeast(5)) => TripleRow::MinusHigh,
            (AtLeast(3), _, Exact(4)) => TripleRow::LowDimension,
            (AtLeast(3), _, _) => TripleRow::HighDimension,
            _ => TripleRow::Standard,
        }
    }
}

pub fn triple_rows() -> Vec<BoundTriple> {
    TripleRow::ALL.iter().map(|r| r.triple()).collect()
}

pub fn bound_triple(case: &CaseSpec) -> BoundTriple {
    TripleRow::of(case).triple()
}

/// `gamma + beta alpha/(1 - alpha) = alpha` as an exact identity, and `alpha <= 1/2`.
pub fn contraction_check(t: &BoundTriple) -> Result<(), QuasiError> {
    if t.alpha > rat(1, 2) {
        return Err(QuasiError::IdentityFailed(format!("{:?}: alpha exceeds 1/2", t.row)));
    }
    let alpha = RatFunc::constant(t.alpha.clone());
    let factor = RatFunc::constant(&t.alpha / (rat(1, 1) - &t.alpha));
    let lhs = &t.gamma + &(&t.beta * &factor);
    if lhs.equals(&alpha) {
        Ok(())
    } else {
        Err(QuasiError::IdentityFailed(format!("{:?}: gamma + beta alpha/(1-alpha) = {lhs}", t.row)))
    }
}
