use liespec_core::exact::{fmt_rat, int, rat};
use liespec_core::spectra::{
    branching_table, builtin_contributions, eigenvalue_closed_form, first_eigenvalue_at,
    first_eigenvalue_report, symmetric_family,
};
use liespec_core::uniqueness::{certify_with_volume, symmetric_volume};
use liespec_core::{certify_uniqueness, model, Case, MetricParams, Verdict};
use proptest::prelude::*;

#[test]
fn both_cases_certify() {
    let m = model().unwrap();
    for (case, s0) in [(Case::Gr27, [6, 3, 2]), (Case::Gr38, [12, 4, 3])] {
        let c = certify_uniqueness(m, case).unwrap();
        assert!(c.passed(), "{case}");
        assert_eq!(c.solutions, vec![MetricParams::from_ints(s0).unwrap()]);
    }
}

#[test]
fn symmetric_volumes() {
    assert_eq!(symmetric_volume(Case::Gr27).unwrap(), int(432));
    assert_eq!(symmetric_volume(Case::Gr38).unwrap(), int(93312));
}

#[test]
fn normal_metric_first_eigenvalues() {
    let m = model().unwrap();
    let r = first_eigenvalue_report(m, Case::Gr27).unwrap();
    assert_eq!((fmt_rat(&r.lambda1), r.multiplicity), ("1".to_string(), 21));
    let r = first_eigenvalue_report(m, Case::Gr38).unwrap();
    assert_eq!(
        (fmt_rat(&r.lambda1), r.multiplicity),
        ("5/4".to_string(), 56)
    );
}

#[test]
fn branching_sums_match_dimensions() {
    for case in [Case::Gr27, Case::Gr38] {
        let t = branching_table(case).unwrap();
        for row in t.g_to_k.iter().chain(&t.k_to_h) {
            let sum: u64 = row.to.iter().map(|x| u64::from(x.mult) * x.dim).sum();
            assert_eq!(sum, row.dim, "{case} {}", row.from);
        }
    }
}

#[test]
fn einstein_metrics_tabulated() {
    let m = model().unwrap();
    let mut unstable = 0;
    for rec in liespec_core::einstein::builtin_records().unwrap() {
        if let Verdict::Unstable { .. } = liespec_core::nu_stability_check(m, &rec).unwrap().verdict
        {
            unstable += 1;
        }
    }
    assert_eq!(unstable, 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_family_is_spectrally_flat(n in 1i64..50, d in 1i64..50) {
        // every modelled scalar eigenvalue coincides along the family
        let m = model().unwrap();
        for case in [Case::Gr27, Case::Gr38] {
            let s = symmetric_family(case, &rat(n, d)).unwrap();
            let r = first_eigenvalue_at(m, case, &s).unwrap();
            prop_assert_eq!(r.attained_by.len(), 2);
        }
    }

    #[test]
    fn eigenvalues_scale_linearly(a in 1i64..30, b in 1i64..30, c in 1i64..30, k in 2i64..6) {
        let m = model().unwrap();
        let s = MetricParams::from_ints([a, b, c]).unwrap();
        let ks = MetricParams::from_ints([k * a, k * b, k * c]).unwrap();
        for e in builtin_contributions(m, Case::Gr38).unwrap() {
            prop_assert_eq!(eigenvalue_closed_form(&e, &ks).unwrap(), eigenvalue_closed_form(&e, &s).unwrap() * int(k));
        }
    }

    #[test]
    fn other_volumes_never_certify(delta in 1i64..200) {
        let m = model().unwrap();
        let v = symmetric_volume(Case::Gr27).unwrap() + int(delta);
        if let Ok(c) = certify_with_volume(m, Case::Gr27, &v) {
            prop_assert!(!c.passed());
        }
    }
}
