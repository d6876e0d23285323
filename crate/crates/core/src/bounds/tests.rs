use super::*;
use crate::error::Error;
use crate::integral::f_integral;
use crate::specfun::{bessel_k_wide, struve_l_wide};
use proptest::prelude::*;

const NO_OPTS: BoundOptions = BoundOptions {
    x_star: None,
    truncation: None,
};

fn single(v: BoundValue) -> f64 {
    match v {
        BoundValue::Single(s) => s.to_f64(),
        other => panic!("expected a single value, got {other:?}"),
    }
}

#[test]
fn catalog_has_28_unique_entries() {
    let all = list_bounds();
    assert_eq!(all.len(), 28);
    let mut names: Vec<_> = all.iter().map(|b| b.id.as_str()).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), 28);
    for b in &all {
        assert_eq!(b.id.as_str().parse::<BoundId>().unwrap(), b.id);
    }
    assert!("LB-9.9".parse::<BoundId>().is_err());
}

#[test]
fn catalog_entries_describe_their_hypotheses() {
    let series = BoundId::LowerStruveSeries.spec();
    assert_eq!(series.target, Target::FIntegral);
    assert_eq!(series.side, Side::Lower);
    assert!(series.order_range.contains(-0.99) && !series.order_range.contains(-1.0));
    assert_eq!(series.hypothesis(), "nu > -1, 0 < beta < 1, x > 0");

    let product = BoundId::ProductTwoSided.spec();
    assert_eq!(product.side, Side::TwoSided);
    match eval_bound(BoundId::ProductTwoSided, 1.0, 0.0, 2.0, NO_OPTS).unwrap() {
        BoundValue::Pair { lower, upper } => {
            assert_eq!(lower.to_f64(), 0.5);
            // 2 Gamma(3) / (sqrt(pi) Gamma(5/2)) = 16 / (3 pi)
            assert!((upper.to_f64() - 16.0 / (3.0 * std::f64::consts::PI)).abs() < 1e-14);
        }
        other => panic!("{other:?}"),
    }

    let small = BoundId::LowerGammaSmallOrder.spec();
    assert!(small.order_range.contains(0.0) && !small.order_range.contains(-0.5));
    assert!(BoundId::StruveRatioSimple.spec().check_validity(0.5, f64::NAN, 1.0, None).is_ok());
}

#[test]
fn hypotheses_are_enforced() {
    let err = eval_bound(BoundId::LowerGammaSmallOrder, 1.0, 0.5, 2.0, NO_OPTS).unwrap_err();
    assert!(matches!(err, Error::Validity { id: "LB-2.1", .. }), "{err}");
    assert!(eval_bound(BoundId::UpperSameOrder, 1.0, 1.0, 2.0, NO_OPTS).is_err());
    assert!(eval_bound(BoundId::UpperSameOrder, 1.0, 0.5, 0.0, NO_OPTS).is_err());
    assert_eq!(
        eval_bound(BoundId::UpperXStar, 1.0, 0.5, 5.0, NO_OPTS).unwrap_err(),
        Error::MissingXStar("UB-3.8")
    );
    let below = BoundOptions {
        x_star: Some(4.5),
        truncation: None,
    };
    assert!(eval_bound(BoundId::UpperXStar, 1.0, 0.5, 4.0, below).is_err());
    let at_pole = BoundOptions {
        x_star: Some(2.0),
        truncation: None,
    };
    assert!(eval_bound(BoundId::UpperXStar, 1.0, 0.5, 4.0, at_pole).is_err());
}

#[test]
fn plain_formula_value() {
    // 2 e^{-1} 2 L_1(2), L_1(2) = 1.10275978736771581758972 (mpmath)
    let v = single(eval_bound(BoundId::UpperSameOrder, 1.0, 0.5, 2.0, NO_OPTS).unwrap());
    assert!((v - 1.622_730_617_292_695_4).abs() < 1e-13);
    let f = f_integral(1.0, 0.5, 2.0).unwrap().to_f64();
    assert!(f < v);
}

#[test]
fn sample_checks_are_strict() {
    let m = check(BoundId::UpperSameOrderWide, 0.0, 0.5, 5.0, NO_OPTS).unwrap();
    assert_eq!(m.status, Status::Strict);
    assert!(m.strict() && m.signed_margin > 0.0);

    let m = check(BoundId::StruveOrderMonotone, 0.5, 0.0, 3.0, NO_OPTS).unwrap();
    assert_eq!(m.status, Status::Strict);
    // L_{1/2}(3)/L_{-1/2}(3) = (cosh 3 - 1)/sinh 3
    assert!((m.reference_value.to_f64() - 0.905_148_253_644_866_4).abs() < 1e-13);
}

#[test]
fn struve_ratio_bound_tight_at_both_ends() {
    let small = check(BoundId::StruveRatioSimple, 0.5, 0.0, 1e-4, NO_OPTS).unwrap();
    let mid = check(BoundId::StruveRatioSimple, 0.5, 0.0, 2.0, NO_OPTS).unwrap();
    let large = check(BoundId::StruveRatioSimple, 0.5, 0.0, 2000.0, NO_OPTS).unwrap();
    assert!(small.signed_margin > 0.0 && small.signed_margin < 1e-4);
    assert!(large.signed_margin > 0.0 && large.signed_margin < 1e-3);
    assert!(mid.signed_margin > 10.0 * large.signed_margin);
}

#[test]
fn factor_helpers() {
    assert_eq!(m_factor(0.5, 0.5, 4.0).unwrap(), 6.0);
    assert!(m_factor(0.5, 0.5, 2.0 + 1e-9).unwrap() > 1e8);
    assert!(m_factor(0.5, 0.5, 2.0).is_err());
    let (nu, beta) = (0.0, 0.5);
    let x_star = default_x_star(beta);
    let first = (2.0 * nu + 3.0 + 4.0 / (1.0 - beta)) / (2.0 * nu + 1.0);
    assert_eq!(m_factor(nu, beta, x_star).unwrap(), first);

    assert_eq!(a_factor(1.0).unwrap(), 4.0);
    assert_eq!(a_factor(0.0).unwrap(), 29.0);
    assert_eq!(a_factor(0.5).unwrap(), 3.0);
    assert!(a_factor(-0.5).is_err());
}

#[test]
fn product_asymptotes() {
    assert_eq!(
        product_asymptote(AsymptoteKind::LargeX, 3.0).unwrap(),
        ProductAsymptote::LargeX {
            limit: 0.5,
            first_order: 7.0 / 4.0
        }
    );
    match product_asymptote(AsymptoteKind::SmallX, 0.5).unwrap() {
        ProductAsymptote::SmallX { slope } => assert!((slope - 0.5).abs() < 1e-14),
        other => panic!("{other:?}"),
    }
    let x = 500.0;
    let p = (bessel_k_wide(2.0, x).unwrap() * struve_l_wide(1.0, x).unwrap() * x).to_f64();
    assert!((p - (0.5 + 3.0 / 2000.0)).abs() < 1e-3);
}

#[test]
fn truncated_series_reproduces_table_cell() {
    let opts = BoundOptions {
        x_star: None,
        truncation: Some(5),
    };
    let l = struve_sum_lower(1.0, 0.75, 10.0, opts.truncation).unwrap();
    let f = f_integral(1.0, 0.75, 10.0).unwrap();
    assert!((1.0 - l.ratio(&f) - 0.3723).abs() < 1.5e-4);
    assert_eq!(
        eval_bound(BoundId::LowerStruveSeries, 1.0, 0.75, 10.0, opts).unwrap(),
        BoundValue::Single(l)
    );
    assert!(struve_sum_lower(1.0, 0.75, 10.0, Some(0)).is_err());
}

#[test]
fn series_bound_improves_on_first_term() {
    for &nu in &[-0.25, 0.5, 3.0] {
        for &beta in &[0.1, 0.9] {
            for &x in &[0.1, 5.0, 60.0] {
                let full = single(eval_bound(BoundId::LowerStruveSeries, nu, beta, x, NO_OPTS).unwrap());
                let first = single(eval_bound(BoundId::LowerFirstTerm, nu, beta, x, NO_OPTS).unwrap());
                assert!(full > first);
            }
        }
    }
}

#[test]
fn gamma_corrected_bounds_negative_for_small_x() {
    for &beta in &[0.25, 0.75] {
        let a = single(eval_bound(BoundId::LowerGammaSmallOrder, -0.25, beta, 1e-3, NO_OPTS).unwrap());
        let b = single(eval_bound(BoundId::LowerGammaLargeOrder, 2.5, beta, 0.05, NO_OPTS).unwrap());
        assert!(a < 0.0 && b < 0.0, "{a} {b}");
    }
}

#[test]
fn full_form_sharpens_next_order_bound() {
    for &x in &[0.5, 4.0, 30.0] {
        let full = single(eval_bound(BoundId::UpperNextOrderFull, 1.0, 0.5, x, NO_OPTS).unwrap());
        let plain = single(eval_bound(BoundId::UpperNextOrder, 1.0, 0.5, x, NO_OPTS).unwrap());
        assert!(full < plain);
    }
}

#[test]
fn chain_margin_uses_both_links() {
    let m = check(BoundId::BesselKRatioChain, 2.0, 0.0, 3.0, NO_OPTS).unwrap();
    assert_eq!(m.status, Status::Strict);
    match eval_bound(BoundId::BesselKRatioChain, 2.0, 0.0, 3.0, NO_OPTS).unwrap() {
        BoundValue::Chain { inner, outer } => {
            assert_eq!(m.bound_value, inner);
            assert!(inner < outer);
        }
        other => panic!("{other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_bounds_hold(nu in -0.5f64..0.5, x in 0.01f64..80.0) {
        for id in [
            BoundId::ProductTwoSided,
            BoundId::ProductShift1,
            BoundId::ProductShift3,
            BoundId::ProductShift2Narrow,
            BoundId::ProductShift3Narrow,
            BoundId::ProductNextOrderNarrow,
        ] {
            let m = check(id, nu, 0.0, x, NO_OPTS).unwrap();
            prop_assert!(m.status != Status::Violated, "{id} {nu} {x}: {m:?}");
        }
    }

    #[test]
    fn ratio_bounds_hold(nu in 0.51f64..8.0, x in 0.01f64..80.0) {
        for id in [
            BoundId::StruveRatioSimple,
            BoundId::StruveRatioViaBesselI,
            BoundId::BesselIRatioRational,
            BoundId::BesselKRatioChain,
            BoundId::StruveOrderMonotone,
        ] {
            let m = check(id, nu, 0.0, x, NO_OPTS).unwrap();
            prop_assert!(m.status != Status::Violated, "{id} {nu} {x}: {m:?}");
        }
    }
}
