use modecert::case::{CaseSpec, MKind};
use modecert::exactalg::rat;
use modecert::odeverify::{l_zero_route, ode_suite, series_satisfies_heun_recurrence};
use modecert::recurrence::{r_symbolic_at, sweep, Grid};
use proptest::prelude::*;

#[test]
fn ode_suite_holds() {
    let failed: Vec<String> = ode_suite().into_iter().filter(|c| !c.pass).map(|c| c.name).collect();
    assert!(failed.is_empty(), "{failed:?}");
}

#[test]
fn l_zero_ratios_approach_one() {
    for d in [4, 7] {
        let r = l_zero_route(d, 10_000, 20).unwrap();
        assert!(r.pass(1e-3), "d = {d}");
    }
}

#[test]
fn sweep_never_selects_the_other_root() {
    let grid = Grid { re_max: 2.0, im_max: 2.0, step: 1.0 };
    for m in MKind::ALL {
        let r = sweep(5, 2, m, &grid, 4000, 1e-2).unwrap();
        assert!(r.points.iter().all(|p| !p.toward_other_root));
        assert!(r.pass(), "m = {m:?}, max deviation {}", r.max_deviation());
    }
}

#[test]
fn symbolic_ratio_matches_numeric_iteration() {
    // r_3 at lambda = 1 for d = 4, l = 1, m = 3, from the displayed quotient of two polynomials.
    let case = CaseSpec::family_for(4, 1, MKind::Plus).unwrap();
    let r3 = r_symbolic_at(&case, 3).unwrap().substitute_all(&case.substitutions()).unwrap();
    let num: i64 = 1 + 44 + 802 + 7832 + 44497 + 149708 + 284172 + 253680 + 95616;
    let den: i64 = 112 * (1 + 27 + 277 + 1341 + 3202 + 3744 + 768);
    let at_one = r3.num().eval_rational(&[(modecert::exactalg::Var::Lambda, rat(1, 1))]).unwrap()
        / r3.den().eval_rational(&[(modecert::exactalg::Var::Lambda, rat(1, 1))]).unwrap();
    assert_eq!(at_one, rat(num, den));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn l_zero_series_satisfies_recurrence(d in 3i64..=9, num in 0i64..=12, den in 1i64..=5) {
        prop_assert!(series_satisfies_heun_recurrence(d, &rat(num, den), 25).unwrap());
    }
}
