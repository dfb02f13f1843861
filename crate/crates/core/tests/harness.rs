use tutte_dfs_core::harness::{verify, DerivationStatus, Verdict};
use tutte_dfs_core::parallel::EnumConfig;
use tutte_dfs_core::partition::Partition;
use tutte_dfs_core::poly::{RatPoly, UniPoly};

fn rat(num: &[(i64, i64)]) -> RatPoly {
    UniPoly::from_coeffs(
        num.iter().map(|&(a, b)| num_rational::BigRational::new(a.into(), b.into())).collect(),
    )
}

#[test]
fn five_is_a_finding_with_exact_identities() {
    let rep = verify(5, &EnumConfig::with_workers(2)).unwrap();
    assert_eq!(rep.verdict, Verdict::Finding);
    assert!(rep.aggregates.iter().all(|a| a.holds));

    let non_integral: Vec<String> = rep
        .classes
        .iter()
        .filter(|c| c.derived_j.status != DerivationStatus::Integral)
        .map(|c| c.lambda.to_string())
        .collect();
    assert_eq!(non_integral, ["(4,1)", "(3,2)"]);

    let j41 = rep.record(&Partition::new(vec![4, 1]).unwrap()).unwrap();
    assert_eq!(
        RatPoly::from_json(j41.derived_j.poly.as_ref().unwrap()).unwrap(),
        rat(&[(12, 1), (88, 5), (74, 5), (48, 5), (6, 1), (3, 1), (1, 1)])
    );
    let j32 = rep.record(&Partition::new(vec![3, 2]).unwrap()).unwrap();
    assert_eq!(
        RatPoly::from_json(j32.derived_j.poly.as_ref().unwrap()).unwrap(),
        rat(&[(32, 5), (46, 5), (52, 5), (6, 1), (3, 1), (1, 1)])
    );
    // the rational candidates still have the predicted shape
    assert!(rep.classes.iter().all(|c| c.order_ok && c.degree_ok && c.positive && c.log_concave));
}

#[test]
fn closed_families_match_at_six() {
    let rep = verify(6, &EnumConfig::with_workers(2)).unwrap();
    for c in rep.classes.iter().filter(|c| c.label == "known") {
        assert_eq!(c.matches, Some(true), "{}", c.lambda);
        assert_eq!(c.derived_j.status, DerivationStatus::Integral);
    }
    assert!(rep.aggregates.iter().all(|a| a.holds));
}

#[test]
fn report_is_deterministic_json() {
    let a = serde_json::to_string(&verify(5, &EnumConfig::with_workers(1)).unwrap()).unwrap();
    let b = serde_json::to_string(&verify(5, &EnumConfig::with_workers(3)).unwrap()).unwrap();
    assert_eq!(a, b);
}
