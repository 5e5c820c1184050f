use hermquot::agc::{
    brute_min_distance, build_cl, designed_distances, dot, gkl_bound_cl, AgcError, DEFAULT_BRUTE_BUDGET,
};
use hermquot::curves::{build_curve, enumerate_points, AffinePoint, Budget, CurveSpec, Family};
use hermquot::numsg::NumericalSemigroup;
use hermquot::rrspace::{cab_parameters, pole_order, rr_basis};
use proptest::prelude::*;

fn desk_curve(n: usize) -> (CurveSpec, Vec<AffinePoint>) {
    let spec = build_curve(Family::FamilyI, 5, 2, Some(13), false).unwrap();
    let pts = enumerate_points(&spec, &Budget::default()).unwrap().points;
    (spec, pts.into_iter().take(n).collect())
}

#[test]
fn dual_is_orthogonal_and_complementary() {
    let (spec, pts) = desk_curve(40);
    for gamma in [0, 4, 9, 15, 30] {
        let code = build_cl(&spec, gamma, Some(pts.clone()), &Budget::default()).unwrap();
        let dual = code.dual();
        assert_eq!(code.k + dual.k, code.n);
        let f = code.field();
        let (g, _) = code.systematic();
        for r in 0..g.rows() {
            for i in 0..dual.k {
                assert!(dot(f, g.row(r), &dual.row(i)).is_zero());
            }
        }
        assert_eq!(dual.to_matrix().rank(f), dual.k);
    }
}

#[test]
fn dimension_counts_nongaps_below_n() {
    let (spec, pts) = desk_curve(30);
    let s = NumericalSemigroup::from_generators(&[5, 2]).unwrap();
    let mut last = 0;
    for gamma in 0..25 {
        let code = build_cl(&spec, gamma, Some(pts.clone()), &Budget::default()).unwrap();
        assert_eq!(code.basis.len() as u64, s.nongaps_up_to(gamma));
        assert!(code.k >= last);
        last = code.k;
        // evaluation is injective while deg < n
        if gamma < 30 {
            assert_eq!(code.k, code.basis.len());
        }
    }
}

#[test]
fn exhaustive_distance_respects_bounds() {
    let (spec, pts) = desk_curve(20);
    let s = NumericalSemigroup::from_generators(&[5, 2]).unwrap();
    for gamma in 0..=3 {
        let code = build_cl(&spec, gamma, Some(pts.clone()), &Budget::default()).unwrap();
        let d = brute_min_distance(&code, DEFAULT_BRUTE_BUDGET).unwrap().value;
        let n = code.n as i64;
        assert!(d >= designed_distances(20, gamma, spec.genus()).d_cl);
        assert!(d <= n - code.k as i64 + 1);
        if let Ok(c) = gkl_bound_cl(&s, gamma, 20) {
            assert!(d >= c.value, "gamma {gamma}: {d} < {}", c.value);
        }
    }
}

#[test]
fn brute_budget_is_enforced() {
    let (spec, pts) = desk_curve(20);
    let code = build_cl(&spec, 6, Some(pts), &Budget::default()).unwrap();
    assert!(matches!(brute_min_distance(&code, 1000), Err(AgcError::BudgetExceeded { .. })));
}

#[test]
fn pole_orders_are_distinct_and_sorted() {
    let spec = build_curve(Family::FamilyI, 7, 2, Some(5), false).unwrap();
    let shape = cab_parameters(&spec).unwrap();
    let s = NumericalSemigroup::from_generators(&[shape.a, shape.b]).unwrap();
    let basis = rr_basis(&spec, 120).unwrap();
    let orders: Vec<u64> = basis.monomials.iter().map(|&[i, j]| pole_order(i, j, &shape).unwrap()).collect();
    assert_eq!(orders, basis.pole_orders);
    assert!(orders.windows(2).all(|w| w[0] < w[1]));
    let nongaps: Vec<u64> = (0..=120).filter(|&m| s.contains(m)).collect();
    assert_eq!(orders, nongaps);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn riemann_roch_dimension_is_monotone(m in 0u64..200) {
        let spec = build_curve(Family::FamilyI, 7, 2, Some(5), false).unwrap();
        let a = rr_basis(&spec, m).unwrap().len();
        let b = rr_basis(&spec, m + 1).unwrap().len();
        prop_assert!(b == a || b == a + 1);
        // l(m) = m + 1 - g once m > 2g - 2
        if m > 52 {
            prop_assert_eq!(a as u64, m + 1 - 27);
        }
    }
}
