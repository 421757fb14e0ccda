//! Quasi-solutions `rt_n`, the start index `N(d, l, m)`, the auxiliary
//! functions `delta_N`, `C_n`, `eps_n` and the bound triples.

mod bounds;
mod tables;

pub use bounds::{bound_triple, contraction_check, triple_rows, BoundTriple, TripleRow};
pub use tables::{rtilde, rtilde_general_expanded, QuasiSolution};

use crate::case::{CaseSpec, MKind};
use crate::exactalg::{cst, RatFunc, RatFuncError, Var};
use crate::recurrence::{coeffs, r_symbolic, RecurrenceError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuasiError {
    #[error("invalid case: {0}")]
    InvalidCase(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
}

/// `N(d, l, m)` for concrete parameters with `d >= 4`, `l >= 1`.
pub fn start_index(d: i64, l: i64, m: MKind) -> Result<usize, QuasiError> {
    CaseSpec::family_for(d, l, m)
        .map(|c| c.start_index())
        .ok_or_else(|| QuasiError::InvalidCase(format!("(d, l) = ({d}, {l}) has no family")))
}

/// `delta_N = r_N/rt_N - 1` at the start index, and `C_n`, `eps_n` with `n` symbolic.
#[derive(Clone, Debug)]
pub struct Auxiliary {
    pub n_start: usize,
    pub delta_n: RatFunc,
    pub c: RatFunc,
    pub epsilon: RatFunc,
}

pub fn auxiliary(case: &CaseSpec) -> Result<Auxiliary, QuasiError> {
    let n_start = case.start_index();
    let rt = rtilde(case)?.expr;
    let rt_next = rt.shift(Var::N, &crate::exactalg::int(1));
    let rec = coeffs(case)?;

    let r_n = r_symbolic(case)?;
    let rt_at_n = rt.substitute_all(&[(Var::N, cst(n_start as i64))])?;
    let delta_n = &r_n.checked_div(&rt_at_n)? - &RatFunc::one();

    let prod = &rt * &rt_next;
    let c = rec.b.checked_div(&prod)?;
    let epsilon = &(&(&rec.a * &rt) + &rec.b).checked_div(&prod)? - &RatFunc::one();
    Ok(Auxiliary {
        n_start,
        delta_n,
        c,
        epsilon,
    })
}
