use crate::exactalg::{cst, parse_ratfunc, MultiPoly, PowerProduct, RatFunc, Var};

use super::potential::poly;
use super::OdeError;

/// One checked identity and its residual (zero when it holds).
#[derive(Clone, Debug)]
pub struct SusyIdentity {
    pub name: &'static str,
    pub residual: RatFunc,
}

impl SusyIdentity {
    pub fn holds(&self) -> bool {
        self.residual.is_zero()
    }
}

struct Binder {
    subs: Vec<(Var, MultiPoly)>,
}

impl Binder {
    fn rf(&self, src: &str) -> RatFunc {
        parse_ratfunc(src)
            .expect("built-in expression")
            .substitute_all(&self.subs)
            .expect("nonzero denominator")
    }

    fn poly(&self, src: &str) -> MultiPoly {
        poly(src).substitute_all(&self.subs)
    }

    /// `rho^((d-1)/2) (1 - rho^2)^((2 lambda - (d - 3))/4) f`: the gauge that
    /// removes the first-order term, applied to a mode at eigenvalue `lambda`.
    fn gauge(&self, lambda: i64, f: &str) -> PowerProduct {
        let exponent = format!("(2*{lambda} - d + 3)/4");
        PowerProduct::power(RatFunc::var(Var::Rho), self.poly("(d - 1)/2"))
            .with(self.rf("1 - rho^2"), self.poly(&exponent))
            .with(self.rf(f), cst(1))
    }
}

/// Checks the factorization identity for `g_0^0` and the five displayed
/// logarithmic derivatives of the removal gauges. `d = None` keeps `d` symbolic.
pub fn susy_factor_check(d: Option<i64>) -> Result<Vec<SusyIdentity>, OdeError> {
    let b = Binder {
        subs: d.map(|d| vec![(Var::D, cst(d))]).unwrap_or_default(),
    };
    let rho = Var::Rho;
    let mut out = Vec::with_capacity(6);

    let g00 = b.gauge(0, "(d - rho^2)/(d - 2 + rho^2)");
    let v0 = b.rf("4*(d - 1)*(d - 2 - rho^2)/((1 - rho^2)*(d - 2 + rho^2)^2)");
    let extra = b.rf("(3 - d)*(d - 1 + 2*rho^2)/(4*rho^2*(1 - rho^2)^2)");
    out.push(SusyIdentity {
        name: "-g00''/g00 = V0 + (3-d)(d-1+2rho^2)/(4rho^2(1-rho^2)^2)",
        residual: &(&g00.second_log_derivative(rho) + &v0) + &extra,
    });

    let l00 = b.rf(
        "(d*(d - 1)*(d - 2) - 2*(d^2 + d - 3)*rho^2 + (7*d - 11)*rho^4 + 2*rho^6)\
         /(2*rho*(1 - rho^2)*(d - rho^2)*(d - 2 + rho^2))",
    );
    out.push(SusyIdentity {
        name: "g00'/g00",
        residual: &g00.log_derivative(rho) - &l00,
    });

    // The lambda = 1 mode after the first removal step, multiplied by (1 - rho^2).
    let g01 = b.gauge(1, "1/(d - 2 + rho^2)");
    let h = &g01.log_derivative(rho) - &l00;
    let gt01 = (&g01 * &PowerProduct::from_ratfunc(h)).with(b.rf("1 - rho^2"), cst(1));
    out.push(SusyIdentity {
        name: "gt01'/gt01",
        residual: &gt01.log_derivative(rho)
            - &b.rf("(d*(d + 1) + (3 - 7*d)*rho^2 + 2*rho^4)/(2*rho*(1 - rho^2)*(d - rho^2))"),
    });

    let g1pl = b.gauge(1, "rho/(d - 2 + rho^2)");
    out.push(SusyIdentity {
        name: "g_{1,1+d-2}'/g_{1,1+d-2}",
        residual: &g1pl.log_derivative(rho)
            - &b.rf("((d + 1)*(d - 2) + (-5*d + 9)*rho^2 - 2*rho^4)/(2*rho*(1 - rho^2)*(d - 2 + rho^2))"),
    });

    let g11 = b.gauge(0, "rho/(d - 2 + rho^2)");
    out.push(SusyIdentity {
        name: "g_{1,1}'/g_{1,1}",
        residual: &g11.log_derivative(rho)
            - &b.rf("((d + 1)*(d - 2) + (5 - 3*d)*rho^2)/(2*rho*(1 - rho^2)*(d - 2 + rho^2))"),
    });

    let g2pl = b.gauge(0, "rho^2/(d - 2 + rho^2)");
    out.push(SusyIdentity {
        name: "g_{2,2+d-2}'/g_{2,2+d-2}",
        residual: &g2pl.log_derivative(rho)
            - &b.rf("((d - 2)*(d + 3) + (11 - 5*d)*rho^2 - 2*rho^4)/(2*rho*(1 - rho^2)*(d - 2 + rho^2))"),
    });

    if let Some(bad) = out.iter().find(|i| !i.holds()) {
        return Err(OdeError::IdentityFailed(bad.name.to_string()));
    }
    Ok(out)
}
