//! The three-term recurrence `a_{n+2} = A_n a_{n+1} + B_n a_n` for the
//! power-series coefficients of the Heun-form equations.

mod derive;
mod limits;
mod numeric;
mod sweep;
mod symbolic;
mod tables;

pub use derive::{derive_recurrence_from_ode, DerivedRecurrence};
pub use limits::{limits, Limits};
pub use numeric::{numeric_sequence, NumericRecurrence, SequenceMode};
pub use sweep::{sweep, Grid, SweepPoint, SweepReport};
pub use symbolic::{r_symbolic, r_symbolic_at, r_sequence};
pub use tables::{coeffs, coeffs_concrete, m_text, row_tables, RecurrenceCoeffs};

use crate::exactalg::RatFuncError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecurrenceError {
    #[error("invalid case: {0}")]
    InvalidCase(String),
    #[error("series insertion produces {0} bands; expected at most three")]
    NotThreeTerm(usize),
    #[error("equation has no polynomial-coefficient form with a common denominator")]
    NotPolynomialForm,
    #[error("r_{0} vanishes identically")]
    IntermediateZeroFunction(usize),
    #[error("coefficient denominator vanishes at step n = {0}")]
    ZeroDenominatorAtStep(i64),
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
}
