use modecert::casimir::{
    bareiss_rank, eigen_check, harmonic_basis, harmonic_dimension, rref, skew_symmetry_check, sphere_pairing,
};
use modecert::exactalg::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn bareiss_rank_matches_rref(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..7)) {
        let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut rats: Vec<Vec<Rational>> =
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
        prop_assert_eq!(bareiss_rank(ints), rref(&mut rats).len());
    }

    #[test]
    fn basis_vectors_are_harmonic(d in 3usize..=6, l in 0usize..=4) {
        let b = harmonic_basis(d, l).unwrap();
        prop_assert_eq!(b.dimension(), harmonic_dimension(d, l));
        prop_assert!(b.vectors.iter().all(|v| b.is_harmonic(v)));
    }
}

/// `-l` on `dim Y_{l+1}`, `l + d - 2` on `dim Y_{l-1}`, `1` on the rest.
fn expected(d: usize, l: usize) -> Vec<(i64, usize)> {
    let top = harmonic_dimension(d, l + 1);
    let bottom = harmonic_dimension(d, l - 1);
    vec![(-(l as i64), top), (1, d * harmonic_dimension(d, l) - top - bottom), ((l + d - 2) as i64, bottom)]
}

#[test]
fn multiplicities_follow_neighbouring_harmonics() {
    for d in 3..=5 {
        for l in 1..=3 {
            let r = eigen_check(d, l).unwrap();
            assert_eq!(r.eigenvalues, expected(d, l), "d = {d}, l = {l}");
            if let Some(ranks) = &r.rank_multiplicities {
                let by_trace: Vec<usize> = r.eigenvalues.iter().map(|(_, k)| *k).collect();
                assert_eq!(ranks, &by_trace);
            }
        }
    }
}

#[test]
fn rotations_are_skew_for_the_sphere_pairing() {
    for (d, l) in [(3, 1), (3, 2), (4, 2), (5, 1)] {
        assert!(skew_symmetry_check(d, l).unwrap(), "d = {d}, l = {l}");
    }
}

#[test]
fn sphere_pairing_is_positive_on_basis() {
    let b = harmonic_basis(4, 2).unwrap();
    for v in &b.vectors {
        assert!(sphere_pairing(&b, v, v) > BigInt::from(0));
    }
}
