use crate::case::MKind;
use crate::exactalg::{int, parse_ratfunc};

use super::{heun_chain, heun_table, indicial_equation, mode_ode, susy_factor_check, symmetry_modes, PotentialKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckGroup {
    SymmetryMode,
    Susy,
    Heun,
    Indicial,
}

#[derive(Clone, Debug)]
pub struct OdeCheck {
    pub group: CheckGroup,
    pub name: String,
    pub pass: bool,
}

fn record(out: &mut Vec<OdeCheck>, group: CheckGroup, name: String, pass: bool) {
    out.push(OdeCheck { group, name, pass });
}

fn rf(src: &str) -> crate::exactalg::RatFunc {
    parse_ratfunc(src).expect("built-in expression")
}

/// Symmetry-mode residuals, SUSY identities, the Heun chain per row and the
/// indicial roots at the origin, all with `d` symbolic.
pub fn ode_suite() -> Vec<OdeCheck> {
    let mut out = Vec::new();
    for mode in symmetry_modes() {
        let ok = mode.residual().is_ok_and(|r| r.is_zero());
        record(&mut out, CheckGroup::SymmetryMode, format!("{} at lambda = {}", mode.name, mode.lambda), ok);
    }
    match susy_factor_check(None) {
        Ok(ids) => {
            for id in ids {
                let ok = id.holds();
                record(&mut out, CheckGroup::Susy, id.name.to_string(), ok);
            }
        }
        Err(e) => record(&mut out, CheckGroup::Susy, format!("susy: {e}"), false),
    }
    let rows = [
        (Some(0), MKind::One),
        (Some(1), MKind::Plus),
        (Some(1), MKind::One),
        (Some(2), MKind::Plus),
        (None, MKind::Minus),
        (None, MKind::One),
        (None, MKind::Plus),
    ];
    for (l, m) in rows {
        let (p, q) = heun_table(l, m);
        let ok = heun_chain(l, m).is_ok_and(|c| c.p.equals(&p) && c.q.equals(&q));
        let l_text = l.map_or("l".to_string(), |v| v.to_string());
        record(&mut out, CheckGroup::Heun, format!("Heun form l={l_text}, m={}", m.tag()), ok);
    }
    for m in MKind::ALL {
        let ok = mode_ode(None, m, PotentialKind::Original)
            .and_then(|ode| indicial_equation(&ode, &int(0)))
            .is_ok_and(|eq| eq.has_roots(&rf("l"), &rf("-(l + d - 2)")));
        record(&mut out, CheckGroup::Indicial, format!("roots l, -(l+d-2) at rho=0, m={}", m.tag()), ok);
    }
    let ok = mode_ode(Some(0), MKind::One, PotentialKind::Tilde)
        .and_then(|ode| indicial_equation(&ode, &int(0)))
        .is_ok_and(|eq| eq.has_roots(&rf("2"), &rf("-d")));
    record(&mut out, CheckGroup::Indicial, "roots 2, -d at rho=0 for the removed l=0 equation".into(), ok);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let s = ode_suite();
        let count = |g| s.iter().filter(|c| c.group == g).count();
        assert_eq!(count(CheckGroup::SymmetryMode), 5);
        assert_eq!(count(CheckGroup::Susy), 6);
        assert_eq!(count(CheckGroup::Heun), 7);
        let failed: Vec<&str> = s.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }
}
