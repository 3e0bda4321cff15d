mod common;

use num_traits::Zero;
use proptest::prelude::*;

use common::{random_cubic, random_pair, rng};
use tck_core::classify::{classify, cross_validate, Case, Certificate, CoverSpec};
use tck_core::cover::{AffineCoverData, TotalBranch};
use tck_core::etamap::{eta, TernaryCubic};
use tck_core::polyparse::parse_poly;
use tck_core::polyring::{mat_det, rat, Matrix3, VarSet};
use tck_core::torus::{build_cover, TorusPair};

fn smooth_flag() -> CoverSpec {
    CoverSpec::FlagCubic(TernaryCubic::fermat())
}

fn standard_torus() -> CoverSpec {
    CoverSpec::Torus(TorusPair::parse("x0*x1", "x2^3-x0^3").unwrap())
}

#[test]
fn fermat_is_a_flag_bundle() {
    let rep = classify(&smooth_flag());
    assert_eq!(rep.case, Case::FlagBundle);
    assert_eq!(rep.lambda(), Some(&rat(-27)));
    let tb = rep.total_branch.as_ref().unwrap();
    assert_eq!(tb.count, 9);
    assert_eq!(tb.rational_points.len(), 3);
    let cusps: Vec<_> = rep.cusps().collect();
    assert_eq!(cusps.len(), 3);
    for c in cusps {
        assert!(c.jets.is_a2 && c.perfect_cube_fiber, "{}", c.point);
        assert_eq!(c.total, TotalBranch::Total);
    }
    assert!(rep.decomposition.as_ref().unwrap().t_form.is_constant());
    assert!(cross_validate(&rep).is_empty());
}

#[test]
fn standard_pair_is_a_cubic_surface() {
    let rep = classify(&standard_torus());
    assert_eq!(rep.case, Case::CubicSurface);
    assert_eq!(rep.surface().unwrap().to_string(), "x3^3 + 3*x0*x1*x3 + 2*x2^3 - 2*x0^3");
    assert!(rep.conditions().unwrap().all_hold());
    assert_eq!(rep.total_branch.as_ref().unwrap().count, 6);
    assert!(cross_validate(&rep).is_empty());
}

#[test]
fn singular_and_reducible_cubics_are_not_normal() {
    let rep = classify(&CoverSpec::FlagCubic(TernaryCubic::parse("v1^3+v2^3+v0*v1*v2").unwrap()));
    assert_eq!(rep.case, Case::NotNormal);
    assert!(rep.notes.iter().any(|n| n.contains("(1:0:0)")), "{:?}", rep.notes);
    let rep = classify(&CoverSpec::FlagCubic(TernaryCubic::parse("v0*v1*v2").unwrap()));
    assert_eq!(rep.case, Case::NotNormal);
    assert!(rep.certificates.iter().any(|c| matches!(c, Certificate::LinearFactor(l) if l.reducible)));
    assert!(rep.lambda().is_none());
}

#[test]
fn failing_pairs_are_not_normal() {
    for (g2, g3) in [("x0*x1", "x0^2*x2"), ("-x0^2", "x0^3+x0*x2^2")] {
        let rep = classify(&CoverSpec::Torus(TorusPair::parse(g2, g3).unwrap()));
        assert_eq!(rep.case, Case::NotNormal, "{g2}, {g3}");
        assert!(!rep.conditions().unwrap().all_hold());
        assert!(rep.surface().is_none());
    }
}

#[test]
fn degenerate_pair_is_indeterminate() {
    // G2^3 + G3^2 vanishes identically
    let rep = classify(&CoverSpec::Torus(TorusPair::parse("-x0^2", "x0^3").unwrap()));
    assert_eq!(rep.case, Case::Indeterminate);
    assert!(!rep.notes.is_empty());
}

#[test]
fn reports_are_deterministic() {
    for spec in [smooth_flag(), standard_torus()] {
        let (a, b) = (classify(&spec), classify(&spec));
        assert_eq!(a, b);
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }
}

#[test]
fn corrupted_reports_are_flagged() {
    let mut rep = classify(&smooth_flag());
    rep.total_branch.as_mut().unwrap().count = 8;
    assert_eq!(cross_validate(&rep).len(), 1);

    let mut rep = classify(&standard_torus());
    rep.branch_form = None;
    assert_eq!(cross_validate(&rep).len(), 1);
}

#[test]
fn raw_data_is_routed_through_normal_forms() {
    let rep = classify(&CoverSpec::Raw(eta(&TernaryCubic::fermat()).unwrap()));
    assert_eq!(rep.case, Case::FlagBundle);
    let pair = TorusPair::parse("x0*x1", "x2^3-x0^3").unwrap();
    let rep = classify(&CoverSpec::Raw(build_cover(&pair).unwrap()));
    assert_eq!(rep.case, Case::CubicSurface);

    let c = |s: &str| parse_poly(s, &VarSet::chart()).unwrap();
    let other = AffineCoverData::new(c("u1"), c("1"), c("0"), c("u2 + 1")).unwrap();
    let rep = classify(&CoverSpec::Raw(other));
    assert_eq!(rep.case, Case::Indeterminate);
    assert!(rep.branch_form.is_some(), "{:?}", rep.notes);
    assert!(cross_validate(&rep).is_empty());

    let zero = AffineCoverData::new(c("0"), c("0"), c("0"), c("0")).unwrap();
    assert_eq!(classify(&CoverSpec::Raw(zero)).case, Case::Indeterminate);
}

fn invertible() -> impl Strategy<Value = Matrix3> {
    prop::array::uniform9(-3i64..=3).prop_filter_map("singular", |e| {
        let m: Matrix3 = std::array::from_fn(|i| std::array::from_fn(|j| rat(e[3 * i + j])));
        (!mat_det(&m).is_zero()).then_some(m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn transformed_fermat_stays_a_flag_bundle(m in invertible()) {
        let rep = classify(&CoverSpec::FlagCubic(TernaryCubic::fermat().transform(&m)));
        prop_assert_eq!(rep.case, Case::FlagBundle);
        prop_assert_eq!(rep.cusps().count(), 3);
        prop_assert!(cross_validate(&rep).is_empty());
    }

    /// The case is fixed by the certificates: a failed check forces
    /// NotNormal and a positive case carries its full evidence.
    #[test]
    fn cases_match_their_certificates(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cubic = classify(&CoverSpec::FlagCubic(random_cubic(&mut r, 4)));
        let smooth = cubic.certificates.iter().any(|c| matches!(c, Certificate::Smoothness { smooth: true, .. }));
        prop_assert_eq!(cubic.case == Case::NotNormal, !smooth);
        prop_assert!(cubic.case != Case::CubicSurface);
        if cubic.case == Case::FlagBundle {
            prop_assert!(cubic.lambda().is_some());
        }
        prop_assert!(cross_validate(&cubic).is_empty(), "{:?}", cross_validate(&cubic));

        let torus = classify(&CoverSpec::Torus(random_pair(&mut r, 4)));
        let held = torus.conditions().map(|c| c.all_hold());
        prop_assert!(torus.case != Case::FlagBundle);
        prop_assert_eq!(torus.case == Case::NotNormal, held == Some(false));
        prop_assert_eq!(torus.case == Case::CubicSurface, held == Some(true));
        prop_assert_eq!(torus.surface().is_some(), torus.case == Case::CubicSurface);
        prop_assert!(cross_validate(&torus).is_empty(), "{:?}", cross_validate(&torus));
    }
}
