use num_complex::Complex64;

use crate::case::CaseSpec;
use crate::exactalg::{cst, MultiPoly, Var};

use super::{coeffs, RecurrenceCoeffs, RecurrenceError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceMode {
    /// `r_n = a_{n+1}/a_n` for `n = 0..=n_max`.
    Ratio,
    /// `a_n` for `n = -1..=n_max`.
    Value,
}

/// Rescale `(a_n, a_{n+1})` every this many steps.
const RESCALE_PERIOD: usize = 64;

/// `A_n`, `B_n` at a fixed complex `lambda`, as polynomials in `n` with
/// complex coefficients for fast evaluation.
#[derive(Clone, Debug)]
pub struct NumericRecurrence {
    a_num: Vec<Complex64>,
    a_den: Vec<Complex64>,
    b_num: Vec<Complex64>,
    b_den: Vec<Complex64>,
}

fn in_n(p: &MultiPoly, lambda: Complex64) -> Result<Vec<Complex64>, RecurrenceError> {
    let mut out = Vec::new();
    for c in p.coefficients_in(Var::N) {
        if c.variables().iter().any(|&v| v != Var::Lambda) {
            return Err(RecurrenceError::InvalidCase(format!(
                "unbound parameters in recurrence coefficient: {:?}",
                c.variables()
            )));
        }
        out.push(c.eval_complex(&[(Var::Lambda, lambda)]));
    }
    Ok(out)
}

fn horner(coeffs: &[Complex64], n: f64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * n + c)
}

impl NumericRecurrence {
    /// `rec` must have only `n` and `lambda` free.
    pub fn new(rec: &RecurrenceCoeffs, lambda: Complex64) -> Result<Self, RecurrenceError> {
        Ok(Self {
            a_num: in_n(rec.a.num(), lambda)?,
            a_den: in_n(rec.a.den(), lambda)?,
            b_num: in_n(rec.b.num(), lambda)?,
            b_den: in_n(rec.b.den(), lambda)?,
        })
    }

    pub fn coefficients(&self, n: i64) -> Result<(Complex64, Complex64), RecurrenceError> {
        let x = n as f64;
        let (ad, bd) = (horner(&self.a_den, x), horner(&self.b_den, x));
        if ad == Complex64::new(0.0, 0.0) || bd == Complex64::new(0.0, 0.0) {
            return Err(RecurrenceError::ZeroDenominatorAtStep(n));
        }
        Ok((horner(&self.a_num, x) / ad, horner(&self.b_num, x) / bd))
    }

    /// Runs the recurrence from `a_{-1} = 0`, `a_0 = 1` and returns `(a_n, a_{n+1})`
    /// at `n = n_max`, rescaled by a common positive factor.
    pub fn final_pair(&self, n_max: usize) -> Result<(Complex64, Complex64), RecurrenceError> {
        let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        for n in -1..n_max as i64 {
            let (a, b) = self.coefficients(n)?;
            let next = a * cur + b * prev;
            prev = cur;
            cur = next;
            if (n + 1) as usize % RESCALE_PERIOD == 0 {
                let s = prev.norm().max(cur.norm());
                if s > 0.0 && s.is_finite() {
                    prev /= s;
                    cur /= s;
                }
            }
        }
        Ok((prev, cur))
    }

    /// `r_{n_max}`; non-finite when `a_{n_max}` vanishes.
    pub fn final_ratio(&self, n_max: usize) -> Result<Complex64, RecurrenceError> {
        let (a, b) = self.final_pair(n_max)?;
        Ok(b / a)
    }
}

/// Binds `d`, `l` into the family tables.
pub(super) fn concrete(case: &CaseSpec, d: i64, l: i64) -> Result<RecurrenceCoeffs, RecurrenceError> {
    if !case.d.contains(d) || !case.l.contains(l) {
        return Err(RecurrenceError::InvalidCase(format!("(d, l) = ({d}, {l}) is not in family {case}")));
    }
    coeffs(case)?.bind(&[(Var::D, cst(d)), (Var::L, cst(l))])
}

/// The sequence `a_n` or the ratios `r_n` at a complex `lambda`.
///
/// Ratio mode rescales the running pair periodically; entries where `a_n = 0`
/// are non-finite. Value mode returns unscaled `a_{-1}, ..., a_{n_max}`.
pub fn numeric_sequence(
    case: &CaseSpec,
    d: i64,
    l: i64,
    lambda: Complex64,
    n_max: usize,
    mode: SequenceMode,
) -> Result<Vec<Complex64>, RecurrenceError> {
    let rec = NumericRecurrence::new(&concrete(case, d, l)?, lambda)?;
    let (mut prev, mut cur) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
    let mut out = Vec::with_capacity(n_max + 2);
    if mode == SequenceMode::Value {
        out.extend([prev, cur]);
    }
    let steps = match mode {
        SequenceMode::Ratio => n_max + 1,
        SequenceMode::Value => n_max,
    };
    for k in 0..steps {
        let n = k as i64 - 1;
        let (a, b) = rec.coefficients(n)?;
        let next = a * cur + b * prev;
        prev = cur;
        cur = next;
        match mode {
            SequenceMode::Ratio => {
                out.push(cur / prev);
                if (k + 1) % RESCALE_PERIOD == 0 {
                    let s = prev.norm().max(cur.norm());
                    if s > 0.0 && s.is_finite() {
                        prev /= s;
                        cur /= s;
                    }
                }
            }
            SequenceMode::Value => out.push(cur),
        }
    }
    Ok(out)
}
