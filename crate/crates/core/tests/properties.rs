use hankelcert::algebra::{int, rat, Rat};
use hankelcert::boxopt::{certify_max, isolate_roots, UniPoly};
use hankelcert::caratheodory::ParamPoint;
use hankelcert::functionals::{surrogate_at, FunctionalId};
use hankelcert::oracle::exact_value;
use hankelcert::polyalg::bernstein_enclosure;
use hankelcert::series::TruncatedSeries;
use hankelcert::{BoxRegion, RatInterval, RatPoly};
use proptest::prelude::*;

const VARS: [&str; 2] = ["u", "v"];

fn small_rat(lo: i64, hi: i64, den: i64) -> impl Strategy<Value = Rat> {
    (lo * den..=hi * den).prop_map(move |n| rat(n, den))
}

fn poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -20i64..=20, 1i64..=6), 1..8).prop_map(|terms| {
        RatPoly::from_terms(&VARS, terms.into_iter().map(|((a, b), n, d)| (vec![a, b], rat(n, d)))).unwrap()
    })
}

fn point() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(small_rat(-1, 1, 16), 2)
}

fn real_param() -> impl Strategy<Value = ParamPoint<Rat>> {
    (small_rat(0, 2, 64), small_rat(-1, 1, 64), small_rat(-1, 1, 64), small_rat(-1, 1, 64))
        .prop_map(|(p, g, e, r)| ParamPoint::real(p, g, e, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomials_form_a_commutative_ring(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(a in poly(), b in poly(), x in point()) {
        let (fa, fb) = (a.eval_rational(&x).unwrap(), b.eval_rational(&x).unwrap());
        prop_assert_eq!((&a * &b).eval_rational(&x).unwrap(), &fa * &fb);
        prop_assert_eq!((&a + &b).eval_rational(&x).unwrap(), fa + fb);
    }

    #[test]
    fn records_round_trip(a in poly()) {
        prop_assert_eq!(RatPoly::from_records(&a.to_records()).unwrap(), a);
    }

    #[test]
    fn bernstein_enclosure_contains_the_range(a in poly(), x in point()) {
        let region = BoxRegion::from_bounds(&[(int(-1), int(1)), (int(-1), int(1))]).unwrap();
        let hull = bernstein_enclosure(&a, &region).unwrap();
        prop_assert!(hull.contains(&a.eval_rational(&x).unwrap()));
    }

    #[test]
    fn certified_max_brackets_sampled_values(a in poly(), xs in prop::collection::vec(point(), 1..6)) {
        let region = BoxRegion::from_bounds(&[(int(-1), int(1)), (int(-1), int(1))]).unwrap();
        let m = certify_max(&a, &region, &rat(1, 1000)).unwrap();
        prop_assert!(m.upper() - m.lower() <= rat(1, 1000));
        prop_assert_eq!(a.eval_rational(&m.witness).unwrap(), m.lower().clone());
        for x in xs {
            prop_assert!(a.eval_rational(&x).unwrap() <= *m.upper());
        }
    }

    #[test]
    fn sturm_isolation_counts_distinct_roots(roots in prop::collection::btree_set(1i64..40, 1..5)) {
        // prod (20 p - r), roots r/20 in (0, 2)
        let mut f = UniPoly::from_ints(&[1]);
        for r in &roots {
            f = f.mul(&UniPoly::from_ints(&[-r, 20]));
        }
        let squared = f.mul(&f);
        let iso = isolate_roots(&squared.to_ratpoly("p"), &RatInterval::new(int(0), int(2)).unwrap(), &rat(1, 1000)).unwrap();
        prop_assert_eq!(iso.len(), roots.len());
        for (iv, r) in iso.intervals.iter().zip(&roots) {
            prop_assert!(iv.contains(&rat(*r, 20)));
        }
    }

    #[test]
    fn real_points_respect_the_sharp_bounds(pt in real_param()) {
        for id in [FunctionalId::H3_1, FunctionalId::H2_3, FunctionalId::Zalcman3] {
            let v = exact_value(id, &pt).unwrap();
            prop_assert!(v <= id.sharp_bound().unwrap(), "{} at {:?}", id, pt);
        }
    }

    #[test]
    fn surrogates_majorize_at_real_points(pt in real_param()) {
        let abs = |r: &Rat| if r < &int(0) { -r } else { r.clone() };
        let (p, x, y) = (pt.p().clone(), abs(&pt.gamma().re), abs(&pt.eta().re));
        for id in [FunctionalId::H3_1, FunctionalId::H2_3] {
            let v = exact_value(id, &pt).unwrap();
            prop_assert!(v <= surrogate_at(id, &p, &x, &y).unwrap());
        }
    }

    #[test]
    fn sqrt_and_log_invert_their_counterparts(tail in prop::collection::vec(-5i64..=5, 1..6)) {
        let mut c = vec![1];
        c.extend(tail);
        let s = TruncatedSeries::from_ints(&c, 8);
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s.clone());
        prop_assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }
}
