use modecert::appendix::{parse_rows, CaseFile, Value};
use modecert::case::{CaseFilter, CaseSpec, MKind};
use modecert::casimir::eigen_check;
use modecert::certify::{certify_case, Target, Verdict};
use modecert::exactalg::{parse_poly, MultiPoly, RatFunc, Var};
use modecert::recurrence::{sweep, Grid};
use proptest::prelude::*;

fn exceptional() -> CaseSpec {
    CaseFilter::parse("l=1,m=minus,d=4").unwrap().select()[0]
}

#[test]
fn exceptional_family_uses_fallback() {
    let b = certify_case(&exceptional()).unwrap();
    assert!(b.pass());
    let delta = b.get(Target::DeltaN).unwrap();
    assert_eq!(delta.verdict, Verdict::PassWithFallback);
    let expected = parse_poly("s^6 + 89*s^5 + 2987*s^4 + 75391*s^3 + 606252*s^2 - 380160*s + 1843200").unwrap();
    assert_eq!(delta.polynomials[0].1, expected);
    assert!(delta.fallback.as_ref().is_some_and(|f| f.pass));
}

#[test]
fn certification_is_deterministic() {
    let c = CaseFilter::parse("l=2,m=plus,d=4").unwrap().select()[0];
    assert_eq!(certify_case(&c).unwrap().serialize(), certify_case(&c).unwrap().serialize());
}

#[test]
fn csv_rows_for_small_family() {
    let c = CaseFilter::parse("l=1,m=plus,d=4").unwrap().select()[0];
    let file = CaseFile::from_bundle(&certify_case(&c).unwrap()).unwrap();
    assert_eq!(file.file_name(), "1_pl_4.csv");
    let text = file.to_csv(false).unwrap();
    let rows = parse_rows(&text).unwrap();
    assert_eq!(rows.iter().find(|(k, _)| k == "N").map(|(_, v)| v.as_str()), Some("4"));
    file.verify_round_trip(&text).unwrap();
    file.verify_round_trip(&file.to_csv(true).unwrap()).unwrap();
}

#[test]
fn general_file_name() {
    let c = CaseFilter::parse("l=5,m=plus,d=9").unwrap().select();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0].file_name(), "geq3_pl_geq6.csv");
}

#[test]
fn ratio_tends_to_one_at_origin() {
    let grid = Grid { re_max: 0.0, im_max: 0.0, step: 0.5 };
    let r = sweep(6, 3, MKind::One, &grid, 20_000, 1e-3).unwrap();
    assert_eq!(r.points.len(), 1);
    assert!(r.pass());
    assert_eq!(r.roots, (1.0, -0.25));
}

#[test]
fn casimir_smallest_case() {
    let r = eigen_check(3, 1).unwrap();
    assert_eq!(r.eigenvalues, vec![(-1, 5), (1, 3), (2, 1)]);
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-9i64..=9, 0u16..=4, 0u16..=6), 1..8).prop_map(|ts| {
        ts.into_iter().fold(MultiPoly::zero(), |acc, (c, a, b)| {
            acc + MultiPoly::int(c) * MultiPoly::var_pow(Var::T, 2 * a) * MultiPoly::var_pow(Var::N, b)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn csv_round_trip(p in poly(), q in poly(), r in poly(), with_descriptions in any::<bool>()) {
        prop_assume!(!r.is_zero());
        let rows = vec![
            ("N", Value::Int(3)),
            ("C", Value::Func(RatFunc::new(q.substitute(Var::T, &MultiPoly::var(Var::Lambda)), r).unwrap())),
            ("boundC", Value::Poly(p)),
        ];
        let file = CaseFile { case: exceptional(), rows };
        let text = file.to_csv(with_descriptions).unwrap();
        prop_assert!(file.verify_round_trip(&text).is_ok());
    }
}
