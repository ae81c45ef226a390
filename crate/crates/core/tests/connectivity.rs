use hermpos::barth_lefschetz::{
    closed_form_grid, connectivity_with_ell, grassmann_rank_refinement, index_bound, CurvatureMode,
};
use hermpos::hss_catalog::{resolve, verification_catalog, SpaceId};
use proptest::prelude::*;

#[test]
fn closed_forms_hold_on_full_grid() {
    for id in verification_catalog() {
        let grid = closed_form_grid(&resolve(id).unwrap()).unwrap();
        assert_eq!(grid.points, (grid.v + 1) * (grid.v + 1));
        assert!(grid.mismatches.is_empty(), "{id}: {:?}", grid.mismatches);
    }
}

#[test]
fn refinement_is_increasing_and_reaches_v() {
    for p in 1..=6 {
        for q in 1..=6 {
            let values: Vec<usize> = (1..=p.min(q)).map(|r| grassmann_rank_refinement(p, q, r).unwrap().ell0).collect();
            assert_eq!(values[0], p + q - 1);
            assert!(values.windows(2).all(|w| w[0] < w[1]));
            if p == q {
                assert_eq!(*values.last().unwrap(), p * q);
            }
            for (k, r) in (1..=p.min(q)).enumerate() {
                let inc = grassmann_rank_refinement(p, q, r).unwrap().increase;
                assert!(inc >= r - 1);
                assert_eq!(inc, (p - 1) * (q - 1) - (p - r) * (q - r));
                assert_eq!(inc, values[k] - values[0]);
            }
        }
    }
}

proptest! {
    #[test]
    fn nonnegative_bound_differs_by_defect(v in 1usize..40, m in 0usize..40, n in 0usize..40, ell in 0usize..40) {
        prop_assume!(m <= v && n <= v && ell <= v);
        let pos = index_bound(m, n, v, ell, CurvatureMode::Positive).unwrap();
        let non = index_bound(m, n, v, ell, CurvatureMode::Nonnegative).unwrap();
        prop_assert_eq!(non + (v - ell) as i64, pos);
    }

    #[test]
    fn report_invariants(v in 1usize..40, m in 0usize..40, n in 0usize..40, ell in 0usize..40) {
        prop_assume!(m <= v && n <= v && ell <= v);
        let id = SpaceId::Quadric { p: 3 };
        let r = connectivity_with_ell(id, v, ell, m, n, None).unwrap();
        prop_assert_eq!(r.lambda0, (n + m) as i64 - v as i64 - (v - ell) as i64);
        prop_assert_eq!(r.iso_max, r.lambda0);
        prop_assert_eq!(r.surj_at, r.lambda0 + 1);
        prop_assert_eq!(r.pi_vanish_max, 2 * m as i64 - v as i64 - (v - ell) as i64 + 1);
        prop_assert_eq!(r.pair_vanish_max, r.pi_vanish_max.min(r.lambda0));
        prop_assert_eq!(r.vacuous, r.lambda0 < 0);
        prop_assert_eq!(&connectivity_with_ell(id, v, ell, m, n, Some(ell)).unwrap(), &r);
    }
}
