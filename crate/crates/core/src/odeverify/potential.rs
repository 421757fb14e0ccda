use crate::case::MKind;
use crate::exactalg::{cst, parse_ratfunc, var, MultiPoly, PowerProduct, RatFunc, Var};

use super::{OdeError, OdeSecondOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PotentialKind {
    Original,
    /// After removal of the symmetry modes; differs only in the four special slots.
    Tilde,
}

fn rf(src: &str) -> RatFunc {
    parse_ratfunc(src).expect("built-in expression")
}

/// Potential with `d` symbolic. `l = None` keeps `l` symbolic (general row).
pub fn potential(l: Option<i64>, m: MKind, kind: PotentialKind) -> Result<RatFunc, OdeError> {
    if let Some(l) = l {
        if l < 0 {
            return Err(OdeError::InvalidCase(format!("l = {l} is negative")));
        }
    }
    if kind == PotentialKind::Tilde {
        let special = match (l, m) {
            (Some(0), _) => Some("-2*d/(rho^2*(1 - rho^2))"),
            (Some(1), MKind::Plus) => {
                Some("-2*(d - 2)*(d - rho^2)/(rho^2*(1 - rho^2)*(d - 2 + rho^2))")
            }
            (Some(1), MKind::One) => Some("(-2*d*(d - 2) + 2*rho^4)/(rho^2*(1 - rho^2)*(d - 2 + rho^2))"),
            (Some(2), MKind::Plus) => {
                Some("(-3*(d + 1)*(d - 2) + (d - 3)*rho^2)/(rho^2*(1 - rho^2)*(d - 2 + rho^2))")
            }
            _ => None,
        };
        if let Some(src) = special {
            return Ok(rf(src));
        }
    }
    if l == Some(0) {
        return Ok(rf("4*(d - 1)*(d - 2 - rho^2)/((1 - rho^2)*(d - 2 + rho^2)^2)"));
    }
    let l_poly = l.map(cst).unwrap_or_else(|| var(Var::L));
    let m_poly = m.symbolic().substitute(Var::L, &l_poly);
    let d = var(Var::D);
    let rho2 = var(Var::Rho).pow(2);
    let big_l = &l_poly * &(&l_poly + &d - cst(2));
    let num = -(&(&d - cst(2)).pow(2) * &big_l)
        + cst(2) * (&d - cst(2)) * (cst(-2) + cst(2) * &d + cst(2) * &m_poly - &big_l) * &rho2
        + (cst(4) - cst(4) * &d + cst(4) * &m_poly - &big_l) * rho2.pow(2);
    let den = &rho2 * &(cst(1) - &rho2) * (&d - cst(2) + &rho2).pow(2);
    Ok(RatFunc::new(num, den)?)
}

/// `f'' + (d - 1 - 2(lambda + 1) rho^2)/(rho (1 - rho^2)) f' + (-lambda(lambda + 1)/(1 - rho^2) + V) f = 0`.
pub fn mode_ode(l: Option<i64>, m: MKind, kind: PotentialKind) -> Result<OdeSecondOrder, OdeError> {
    let v = potential(l, m, kind)?;
    let p = rf("(d - 1 - 2*(lambda + 1)*rho^2)/(rho*(1 - rho^2))");
    let q = &rf("-lambda*(lambda + 1)/(1 - rho^2)") + &v;
    Ok(OdeSecondOrder::new(Var::Rho, p, q))
}

/// `f''/f + p f'/f + q`; identically zero iff `f` solves the equation.
pub fn residual(ode: &OdeSecondOrder, f: &PowerProduct) -> RatFunc {
    let l1 = f.log_derivative(ode.var);
    let l2 = f.second_log_derivative(ode.var);
    &(&l2 + &(&ode.p * &l1)) + &ode.q
}

#[derive(Clone, Debug)]
pub struct SymmetryMode {
    pub name: &'static str,
    pub l: i64,
    pub m: MKind,
    pub lambda: i64,
    pub f: RatFunc,
}

/// The five explicit solutions generated by the symmetries.
pub fn symmetry_modes() -> Vec<SymmetryMode> {
    let mode = |name, l, m, lambda, src: &str| SymmetryMode {
        name,
        l,
        m,
        lambda,
        f: rf(src),
    };
    vec![
        mode("f_0^0", 0, MKind::One, 0, "(d - rho^2)/(d - 2 + rho^2)"),
        mode("f_0^1", 0, MKind::One, 1, "1/(d - 2 + rho^2)"),
        mode("f_{1,1+d-2}^1", 1, MKind::Plus, 1, "rho/(d - 2 + rho^2)"),
        mode("f_{1,1}^0", 1, MKind::One, 0, "rho/(d - 2 + rho^2)"),
        mode("f_{2,2+d-2}^0", 2, MKind::Plus, 0, "rho^2/(d - 2 + rho^2)"),
    ]
}

impl SymmetryMode {
    /// Residual in the original equation at the stated eigenvalue.
    pub fn residual(&self) -> Result<RatFunc, OdeError> {
        self.residual_at(self.lambda)
    }

    pub fn residual_at(&self, lambda: i64) -> Result<RatFunc, OdeError> {
        let ode = mode_ode(Some(self.l), self.m, PotentialKind::Original)?.at_lambda(&cst(lambda))?;
        Ok(residual(&ode, &PowerProduct::from_ratfunc(self.f.clone())))
    }
}

/// Shorthand used by the SUSY and Heun layers.
pub(crate) fn poly(src: &str) -> MultiPoly {
    crate::exactalg::parse_poly(src).expect("built-in polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rational};

    #[test]
    fn tilde_zero_row() {
        let v = potential(Some(0), MKind::One, PotentialKind::Tilde).unwrap();
        assert_eq!(v, rf("-2*d/(rho^2*(1 - rho^2))"));
    }

    #[test]
    fn tilde_equals_original_outside_special_slots() {
        for (l, m) in [(Some(3), MKind::One), (Some(1), MKind::Minus), (Some(2), MKind::One), (None, MKind::Plus)] {
            assert_eq!(
                potential(l, m, PotentialKind::Tilde).unwrap(),
                potential(l, m, PotentialKind::Original).unwrap()
            );
        }
    }

    #[test]
    fn general_formula_at_l3_m1() {
        // Hand expansion with l(l+d-2) = 3(d+1), m = 1.
        let v = potential(Some(3), MKind::One, PotentialKind::Original).unwrap();
        let hand = rf("(-3*(d-2)^2*(d+1) + 2*(d-2)*(2*d - 3*d - 3)*rho^2 + (8 - 4*d - 3*d - 3)*rho^4)/(rho^2*(1-rho^2)*(d-2+rho^2)^2)");
        assert_eq!(v, hand);
    }

    #[test]
    fn numeric_point_d3_l1_m2() {
        // V_{1,2} at d = 3: l(l+d-2) = 2, so
        // (-2 + 2*(4 + 4 - 2)*rho^2 + (4 - 12 + 8 - 2)*rho^4) / (rho^2 (1 - rho^2)(1 + rho^2)^2)
        // at rho = 1/2: (-2 + 3 - 1/8) / (1/4 * 3/4 * 25/16) = (7/8) / (75/256) = 224/75.
        let v = potential(Some(1), MKind::Plus, PotentialKind::Original).unwrap();
        let value = v
            .eval_rational(&[(Var::D, rat(3, 1)), (Var::Rho, rat(1, 2))])
            .unwrap();
        assert_eq!(value, Rational::new(224.into(), 75.into()));
    }

    #[test]
    fn ode_has_residue_d_minus_1_at_origin() {
        let ode = mode_ode(None, MKind::One, PotentialKind::Original).unwrap();
        let rho_p = (&RatFunc::var(Var::Rho) * &ode.p).cancel_factor(&var(Var::Rho));
        let at0 = rho_p.evaluate(&[(Var::Rho, rat(0, 1))]).unwrap();
        assert_eq!(at0, rf("d - 1"));
    }

    #[test]
    fn symmetry_modes_solve_their_equations() {
        for mode in symmetry_modes() {
            assert!(mode.residual().unwrap().is_zero(), "{}", mode.name);
        }
    }

    #[test]
    fn wrong_eigenvalue_leaves_residual() {
        let modes = symmetry_modes();
        let f2 = modes.iter().find(|m| m.l == 2).unwrap();
        assert!(!f2.residual_at(1).unwrap().is_zero());
    }

    #[test]
    fn tilde_q_for_l1_plus() {
        let ode = mode_ode(Some(1), MKind::Plus, PotentialKind::Tilde).unwrap();
        let expected = rf("-lambda*(lambda + 1)/(1 - rho^2) - 2*(d - 2)*(d - rho^2)/(rho^2*(1 - rho^2)*(d - 2 + rho^2))");
        let at4 = |f: &RatFunc| f.evaluate(&[(Var::D, rat(4, 1))]).unwrap();
        assert_eq!(at4(&ode.q), at4(&expected));
    }
}
