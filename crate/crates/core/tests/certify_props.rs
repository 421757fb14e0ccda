use modecert::certify::{
    hurwitz_conditions, imag_axis_bound_certificate, monic_coefficients, wall_criterion, Shifts, Verdict,
};
use modecert::exactalg::{cst, rat, var, MultiPoly, RatFunc, Var};
use proptest::prelude::*;

fn lambda() -> MultiPoly {
    var(Var::Lambda)
}

/// Product of `lambda + a` and `lambda^2 + 2 b lambda + b^2 + c^2` factors.
fn product(real: &[i64], pairs: &[(i64, i64)]) -> MultiPoly {
    let mut p = MultiPoly::one();
    for &a in real {
        p = &p * &(lambda() + cst(a));
    }
    for &(b, c) in pairs {
        p = &p * &(lambda() * lambda() + cst(2 * b) * lambda() + cst(b * b + c * c));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wall_accepts_left_half_plane_roots(
        real in prop::collection::vec(1i64..=9, 0..4),
        pairs in prop::collection::vec((1i64..=5, 1i64..=5), 0..3),
    ) {
        prop_assume!(real.len() + 2 * pairs.len() >= 1);
        let report = wall_criterion(&product(&real, &pairs)).unwrap();
        prop_assert!(report.hurwitz);
        prop_assert_eq!(report.coefficients.len(), real.len() + 2 * pairs.len());
    }

    #[test]
    fn wall_rejects_one_flipped_root(
        real in prop::collection::vec(1i64..=9, 1..4),
        pairs in prop::collection::vec((1i64..=5, 1i64..=5), 0..3),
        flip in 0usize..4,
    ) {
        let mut real = real;
        let k = flip % real.len();
        real[k] = -real[k];
        prop_assert!(!wall_criterion(&product(&real, &pairs)).unwrap().hurwitz);
    }

    #[test]
    fn closed_forms_agree_with_wall(
        deg4 in any::<bool>(),
        cs in prop::collection::vec(-3i64..=12, 4),
    ) {
        let k = if deg4 { 4 } else { 2 };
        let mut p = MultiPoly::var_pow(Var::Lambda, k as u16);
        for (j, c) in cs.iter().take(k).enumerate() {
            p = p + cst(*c) * MultiPoly::var_pow(Var::Lambda, (k - 1 - j) as u16);
        }
        let b = monic_coefficients(&p).unwrap();
        let conds = hurwitz_conditions(&b[..]).unwrap();
        let closed = conds.iter().all(|(_, f)| f.as_constant().unwrap() > rat(0, 1));
        prop_assert_eq!(closed, wall_criterion(&p).unwrap().hurwitz);
    }

    #[test]
    fn passing_certificates_are_nonnegative(
        a in 1i64..=6,
        b in 0i64..=6,
        c in 1i64..=9,
        bound in 1i64..=8,
        samples in prop::collection::vec((0i64..=400, 1i64..=7), 8),
    ) {
        // F = (lambda + a)/(lambda^2 + b lambda + c) against a constant bound 1/bound.
        let f = RatFunc::new(lambda() + cst(a), lambda() * lambda() + cst(b) * lambda() + cst(c)).unwrap();
        let cert = imag_axis_bound_certificate(&f, &RatFunc::constant(rat(1, bound)), Shifts::NONE).unwrap();
        if cert.verdict != Verdict::Fail {
            for (num, den) in samples {
                let v = cert.poly.eval_rational(&[(Var::S, rat(num, den))]).unwrap();
                prop_assert!(v >= rat(0, 1), "negative at s = {num}/{den}");
            }
        } else {
            prop_assert!(cert.witness.is_some() || cert.fallback.is_some());
        }
    }
}
