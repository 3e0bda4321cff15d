mod common;

use num_traits::Zero;
use proptest::prelude::*;

use common::{fiber_disc_at, rng};
use tck_core::cover::{derived_invariants, is_total_branch_point, resolvent_cubic, FiberCoordinate, TotalBranch};
use tck_core::etamap::{
    binary_cubic_discriminant, delta_f, eta, fiber_at, fiber_at_projective, has_linear_factor,
    is_perfect_cube, is_smooth_cubic, reducible_resolvent_factor, singular_witness,
    total_branch_locus, verify_discrim_lemma, BinaryCubic, SingularWitness, TernaryCubic,
};
use tck_core::polyring::{mat_det, rat, MPoly, Matrix3, ProjPoint};

fn cubic(height: i64) -> impl Strategy<Value = TernaryCubic> {
    prop::array::uniform10(-height..=height).prop_map(TernaryCubic::from_ints)
}

fn invertible() -> impl Strategy<Value = Matrix3> {
    prop::array::uniform9(-3i64..=3).prop_filter_map("singular", |e| {
        let m: Matrix3 = std::array::from_fn(|i| std::array::from_fn(|j| rat(e[3 * i + j])));
        (!mat_det(&m).is_zero()).then_some(m)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fiber_discriminant_is_minus_27_branch(f in cubic(10), u1 in -9i64..=9, u2 in -9i64..=9) {
        let d = derived_invariants(&eta(&f).unwrap()).D;
        prop_assume!(!d.is_zero());
        let cert = verify_discrim_lemma(&f).unwrap();
        prop_assert_eq!(&cert.lambda, &rat(-27));
        prop_assert_eq!(&cert.delta_f, &d.scale_int(-27));
        let (u1, u2) = (rat(u1), rat(u2));
        prop_assert_eq!(fiber_disc_at(&f, &u1, &u2), d.eval(&[u1, u2]).unwrap() * rat(-27));
    }

    #[test]
    fn fiber_discriminant_degree(f in cubic(10)) {
        prop_assume!(!f.is_zero());
        let delta = delta_f(&f).unwrap();
        prop_assert!(delta.total_degree() <= 6);
        if is_smooth_cubic(&f).unwrap() {
            prop_assert_eq!(delta.total_degree(), 6);
        }
    }

    #[test]
    fn reducible_cubics_split_the_resolvent(t in prop::array::uniform6(-10i64..=10)) {
        let mut all = [0i64; 10];
        all[..6].copy_from_slice(&t);
        let f = TernaryCubic::from_ints(all);
        let cov = eta(&f).unwrap();
        prop_assume!(!cov.b.is_zero());
        let res = resolvent_cubic(&cov, FiberCoordinate::Z).as_poly();
        let factor = reducible_resolvent_factor(&f).unwrap();
        prop_assert!(res.try_div(&factor).unwrap().is_some());
        prop_assert!(has_linear_factor(&f).unwrap().reducible);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn perfect_cubes_have_zero_discriminant(a in -20i64..=20, b in -20i64..=20) {
        prop_assume!(a != 0 || b != 0);
        // (a X + b Y)^3
        let bc = BinaryCubic::from_ints(a.pow(3), 3 * a * a * b, 3 * a * b * b, b.pow(3));
        prop_assert!(is_perfect_cube(&bc));
        prop_assert!(binary_cubic_discriminant(&bc).is_zero());
    }

    #[test]
    fn cube_test_rejects_distinct_roots(r in -9i64..=9, s in -9i64..=9) {
        prop_assume!(r != s);
        // X (X - r Y)(X - s Y) has at least two distinct roots
        let bc = BinaryCubic::from_ints(1, -(r + s), r * s, 0);
        prop_assert!(!is_perfect_cube(&bc));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    /// Over the rational cusps of a transformed Fermat cubic the fiber is a
    /// perfect cube exactly where both resolvents are pure cubes.
    #[test]
    fn perfect_cube_fibers_match_resolvents(m in invertible(), probes in prop::collection::vec((-6i64..=6, -6i64..=6, 1i64..=6), 6)) {
        let f = TernaryCubic::fermat().transform(&m);
        prop_assert!(is_smooth_cubic(&f).unwrap());
        let locus = total_branch_locus(&f).unwrap();
        prop_assert_eq!(locus.count, 9);
        prop_assert_eq!(locus.rational_points.len(), 3);
        let mut points = locus.rational_points.clone();
        points.extend(probes.iter().filter_map(|&(a, b, c)| ProjPoint::from_ints(c, a, b)));
        for p in points {
            let cube = is_perfect_cube(&fiber_at_projective(&f, &p));
            prop_assert_eq!(cube, locus.rational_points.contains(&p));
            let k = p.coords().iter().position(|c| !c.is_zero()).unwrap();
            let chart = p.swapped(k).chart().unwrap();
            let total = is_total_branch_point(&eta(&f.rotate(k)).unwrap(), &chart);
            prop_assert_eq!(cube, total == TotalBranch::Total, "at {}", p);
        }
    }
}

#[test]
fn fermat_fibers() {
    let f = TernaryCubic::fermat();
    assert_eq!(fiber_at(&f, &(rat(1), rat(0))), BinaryCubic::from_ints(0, 0, 0, 1));
    let d = derived_invariants(&eta(&f).unwrap()).D;
    let x = |s: &str| tck_core::polyparse::parse_poly(s, d.vars()).unwrap();
    assert_eq!(d, x("(1-u1^3-u2^3)^2-4*u1^3*u2^3"));
}

#[test]
fn singular_cubics() {
    let f = TernaryCubic::parse("v1^3+v2^3+v0*v1*v2").unwrap();
    assert!(!is_smooth_cubic(&f).unwrap());
    assert_eq!(
        singular_witness(&f).unwrap(),
        SingularWitness::Points(vec![ProjPoint::from_ints(1, 0, 0).unwrap()])
    );
    let triangle = TernaryCubic::parse("v0*v1*v2").unwrap();
    let lf = has_linear_factor(&triangle).unwrap();
    assert!(lf.reducible);
    let nodal = TernaryCubic::parse("v1^2*v0 - v2^2*v0 - v2^3").unwrap();
    assert!(!is_smooth_cubic(&nodal).unwrap());
    assert!(!has_linear_factor(&nodal).unwrap().reducible);
    let conic_line = TernaryCubic::parse("(v0^2 + v1^2 + v2^2)*(v0 + 2*v1)").unwrap();
    let lf = has_linear_factor(&conic_line).unwrap();
    assert!(lf.reducible);
    let w: MPoly = lf.witness.unwrap();
    assert_eq!(w.total_degree(), 1);
}

#[test]
fn smooth_cubics_are_irreducible() {
    let mut r = rng(11);
    let mut seen = 0;
    while seen < 5 {
        let f = common::random_cubic(&mut r, 5);
        if !is_smooth_cubic(&f).unwrap() {
            continue;
        }
        assert!(!has_linear_factor(&f).unwrap().reducible, "{f}");
        seen += 1;
    }
}
