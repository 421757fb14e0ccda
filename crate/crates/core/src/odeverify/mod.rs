//! The spectral ODEs and the transformations leading to Heun form.

mod frobenius;
mod heun;
mod hypergeometric;
mod potential;
mod suite;
mod susy;

pub use frobenius::{indicial_equation, indicial_roots, IndicialEquation};
pub use heun::{heun_chain, heun_gauge, heun_table, HeunRow};
pub use hypergeometric::{
    hypergeometric_check, l_zero_route, series_coefficients, series_satisfies_heun_recurrence, HypergeometricReport,
    LZeroReport, L_ZERO_SAMPLES,
};
pub use potential::{mode_ode, potential, residual, symmetry_modes, PotentialKind, SymmetryMode};
pub use suite::{ode_suite, CheckGroup, OdeCheck};
pub use susy::{susy_factor_check, SusyIdentity};

use crate::exactalg::{MultiPoly, PowerProduct, RatFunc, RatFuncError, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OdeError {
    #[error("invalid case: {0}")]
    InvalidCase(String),
    #[error("coefficients are not compatible with the substitution x = rho^2")]
    SubstitutionParityError,
    #[error("point is an irregular singular point")]
    IrregularSingularPoint,
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("degenerate hypergeometric parameters")]
    DegenerateParameters,
    #[error(transparent)]
    RatFunc(#[from] RatFuncError),
}

/// `f'' + p f' + q f = 0` in the variable `var`.
#[derive(Clone, Debug, PartialEq)]
pub struct OdeSecondOrder {
    pub var: Var,
    pub p: RatFunc,
    pub q: RatFunc,
}

impl OdeSecondOrder {
    pub fn new(var: Var, p: RatFunc, q: RatFunc) -> Self {
        Self { var, p, q }
    }

    /// Coefficients of the equation for `h` where `f = w h`:
    /// `p + 2 w'/w` and `q + p w'/w + w''/w`.
    pub fn gauge_transform(&self, w: &PowerProduct) -> OdeSecondOrder {
        let l1 = w.log_derivative(self.var);
        let l2 = w.second_log_derivative(self.var);
        let p = &self.p + &(&RatFunc::int(2) * &l1);
        let q = &(&self.q + &(&self.p * &l1)) + &l2;
        OdeSecondOrder::new(self.var, p, q)
    }

    /// Rewrites an equation in `rho` for `f(rho) = g(rho^2)` as one for `g(x)`:
    /// `g'' + (2 + 2 rho p)/(4x) g' + q/(4x) g = 0`.
    pub fn variable_square_substitution(&self) -> Result<OdeSecondOrder, OdeError> {
        if self.var != Var::Rho {
            return Err(OdeError::InvalidCase("square substitution needs an equation in rho".into()));
        }
        let rho = RatFunc::var(Var::Rho);
        let rho_p = even_in_x(&(&rho * &self.p))?;
        let q = even_in_x(&self.q)?;
        let four_x = RatFunc::from_poly(MultiPoly::int(4) * MultiPoly::var(Var::X));
        let p_new = (&RatFunc::int(2) + &(&RatFunc::int(2) * &rho_p)).checked_div(&four_x)?;
        let q_new = q.checked_div(&four_x)?;
        Ok(OdeSecondOrder::new(Var::X, p_new, q_new))
    }

    /// Same equation with `lambda` bound to a value.
    pub fn at_lambda(&self, lambda: &MultiPoly) -> Result<OdeSecondOrder, OdeError> {
        let subs = [(Var::Lambda, lambda.clone())];
        Ok(OdeSecondOrder::new(
            self.var,
            self.p.substitute_all(&subs)?,
            self.q.substitute_all(&subs)?,
        ))
    }

    pub fn equals(&self, other: &OdeSecondOrder) -> bool {
        self.var == other.var && self.p.equals(&other.p) && self.q.equals(&other.q)
    }
}

/// Writes an even function of `rho` as a rational function of `x = rho^2`.
fn even_in_x(f: &RatFunc) -> Result<RatFunc, OdeError> {
    let flip = [(Var::Rho, -MultiPoly::var(Var::Rho))];
    let (num, den) = (f.num(), f.den());
    let (num, den) = match (parity(num), parity(den)) {
        (Some(a), Some(b)) if a == b => {
            if a == 1 {
                let rho = MultiPoly::var(Var::Rho);
                (num * &rho, den * &rho)
            } else {
                (num.clone(), den.clone())
            }
        }
        (Some(_), Some(_)) => return Err(OdeError::SubstitutionParityError),
        _ => {
            let conj = den.substitute_all(&flip);
            (num * &conj, den * &conj)
        }
    };
    let to_x = |p: &MultiPoly| -> Result<MultiPoly, OdeError> {
        let mut out = MultiPoly::zero();
        for (e, c) in p.terms() {
            let k = e[Var::Rho.index()];
            if k % 2 == 1 {
                return Err(OdeError::SubstitutionParityError);
            }
            let mut ne = *e;
            ne[Var::Rho.index()] = 0;
            ne[Var::X.index()] += k / 2;
            out.add_term(ne, c.clone());
        }
        Ok(out)
    };
    Ok(RatFunc::new(to_x(&num)?, to_x(&den)?)?)
}

/// `Some(0)` / `Some(1)` when all powers of `rho` are even / odd.
fn parity(p: &MultiPoly) -> Option<u16> {
    let mut seen = None;
    for (e, _) in p.terms() {
        let k = e[Var::Rho.index()] % 2;
        match seen {
            None => seen = Some(k),
            Some(s) if s != k => return None,
            _ => {}
        }
    }
    Some(seen.unwrap_or(0))
}
