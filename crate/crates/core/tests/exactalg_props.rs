use modecert::exactalg::{
    cst, parse_poly, parse_ratfunc, poly_to_string, ratfunc_to_string, rat, s_to_t_squared, t_squared_to_s, var,
    MultiPoly, RatFunc, Var,
};
use proptest::prelude::*;

const VARS: [Var; 4] = [Var::Lambda, Var::N, Var::D, Var::L];

fn poly(vars: &'static [Var], max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-6i64..=6, prop::collection::vec(0u16..=3, vars.len())), 0..max_terms).prop_map(
        move |terms| {
            terms.into_iter().fold(MultiPoly::zero(), |acc, (c, exps)| {
                let mono = vars
                    .iter()
                    .zip(exps)
                    .fold(cst(c), |m, (&v, k)| m * MultiPoly::var_pow(v, k));
                acc + mono
            })
        },
    )
}

fn nonzero_poly(vars: &'static [Var]) -> impl Strategy<Value = MultiPoly> {
    poly(vars, 5).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn taylor_shift_matches_substitution(p in poly(&VARS, 6), which in 0usize..4, num in -5i64..=5, den in 1i64..=4) {
        let v = VARS[which];
        let k = rat(num, den);
        let by_sub = p.substitute(v, &(var(v) + MultiPoly::constant(k.clone())));
        prop_assert_eq!(p.shift(v, &k), by_sub);
    }

    #[test]
    fn polynomials_print_and_parse_back(p in poly(&VARS, 8)) {
        prop_assert_eq!(parse_poly(&poly_to_string(&p)).unwrap(), p);
    }

    #[test]
    fn fractions_print_and_parse_back(p in poly(&VARS, 5), q in nonzero_poly(&VARS)) {
        let f = RatFunc::new(p, q).unwrap();
        let g = parse_ratfunc(&ratfunc_to_string(&f)).unwrap();
        prop_assert!(g.equals(&f));
    }

    #[test]
    fn common_factors_do_not_change_equality(p in poly(&VARS, 4), q in nonzero_poly(&VARS), h in nonzero_poly(&VARS)) {
        let f = RatFunc::new(p.clone(), q.clone()).unwrap();
        let g = RatFunc::new(&p * &h, &q * &h).unwrap();
        prop_assert_eq!(f, g);
    }

    #[test]
    fn arithmetic_agrees_with_evaluation(p in poly(&VARS, 4), q in poly(&VARS, 4), x in -4i64..=4, y in -4i64..=4) {
        let point = [(Var::Lambda, rat(x, 1)), (Var::N, rat(y, 3)), (Var::D, rat(5, 1)), (Var::L, rat(2, 1))];
        let at = |m: &MultiPoly| m.eval_rational(&point).unwrap();
        prop_assert_eq!(at(&(&p * &q)), at(&p) * at(&q));
        prop_assert_eq!(at(&(&p + &q)), at(&p) + at(&q));
    }

    #[test]
    fn s_and_t_squared_are_inverse(p in poly(&[Var::S, Var::N], 6)) {
        prop_assert_eq!(t_squared_to_s(&s_to_t_squared(&p)), Some(p));
    }
}
