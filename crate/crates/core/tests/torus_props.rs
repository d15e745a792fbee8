mod common;

use proptest::prelude::*;
use vgit::rational::{int, Rational};
use vgit::torus::*;

fn zero() -> Vec<Rational> {
    vec![int(0), int(0)]
}

fn coefficients() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(prop_oneof![Just(int(0)), common::nonzero_rational()], 4)
        .prop_filter("nonzero", |c| c.iter().any(|x| *x != int(0)))
}

fn table() -> impl Strategy<Value = WeightTable> {
    (1usize..=3, 2usize..=6).prop_flat_map(|(rank, len)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, rank), len)
            .prop_map(move |weights| WeightTable::new(rank, weights).unwrap())
    })
}

proptest! {
    #[test]
    fn verdict_ignores_coefficient_values(c in coefficients(), s in common::nonzero_rational()) {
        let t = three_a2_weight_table();
        let base = centroid_verdict(&c, &t, &zero()).unwrap();
        let scaled: Vec<Rational> = c.iter().map(|x| x * &s).collect();
        prop_assert_eq!(centroid_verdict(&scaled, &t, &zero()).unwrap(), base.clone());
        let support: Vec<Rational> = c.iter().map(|x| if *x == int(0) { int(0) } else { int(1) }).collect();
        prop_assert_eq!(centroid_verdict(&support, &t, &zero()).unwrap(), base);
    }

    #[test]
    fn verdict_ignores_row_order(t in table(), sigma_seed in any::<u64>(), mask in 1u32..64) {
        let len = t.len();
        let c: Vec<Rational> = (0..len).map(|i| int((mask >> (i % 6) & 1) as i64)).collect();
        prop_assume!(c.iter().any(|x| *x != int(0)));
        let shift = vec![int(0); t.rank];
        let base = centroid_verdict(&c, &t, &shift).unwrap();
        let mut order: Vec<usize> = (0..len).collect();
        order.rotate_left((sigma_seed as usize) % len);
        order.swap(0, len - 1);
        let rows = WeightTable::new(t.rank, order.iter().map(|&i| t.weights[i].clone()).collect()).unwrap();
        let moved: Vec<Rational> = order.iter().map(|&i| c[i].clone()).collect();
        prop_assert_eq!(centroid_verdict(&moved, &rows, &shift).unwrap(), base);
    }

    #[test]
    fn verdicts_are_consistent(t in table(), mask in 1u32..64) {
        let c: Vec<Rational> = (0..t.len()).map(|i| int((mask >> (i % 6) & 1) as i64)).collect();
        prop_assume!(c.iter().any(|x| *x != int(0)));
        let v = centroid_verdict(&c, &t, &vec![int(0); t.rank]).unwrap();
        prop_assert!(v.hull_dimension <= t.rank);
        let expected = match v.origin_position {
            OriginPosition::Outside => TorusVerdictKind::Unstable,
            OriginPosition::Boundary => TorusVerdictKind::StrictlySemistable,
            OriginPosition::Interior => TorusVerdictKind::Stable,
            OriginPosition::RelativeInterior => TorusVerdictKind::StrictlyPolystable,
        };
        prop_assert_eq!(v.kind, expected);
        prop_assert_eq!(v.kind == TorusVerdictKind::Stable, v.origin_position == OriginPosition::Interior && v.hull_dimension == t.rank);
        let points = weight_set(&c, &t).unwrap();
        if points.contains(&vec![0; t.rank]) {
            prop_assert_ne!(v.kind, TorusVerdictKind::Unstable);
        }
    }
}

#[test]
fn zero_shift_sweep_partitions_patterns() {
    let t = three_a2_weight_table();
    let group = permutations_of(&[0, 2, 3], 4);
    let (mut stable, mut semistable, mut unstable) = (0, 0, 0);
    for c in support_patterns(4) {
        let v = centroid_verdict(&c, &t, &zero()).unwrap();
        assert_eq!(extended_verdict(&c, &t, &zero(), &group).unwrap(), v);
        let nz = |i: usize| c[i] != int(0);
        assert_eq!(v.kind == TorusVerdictKind::Stable, nz(0) && nz(2) && nz(3));
        match v.kind {
            TorusVerdictKind::Stable => stable += 1,
            TorusVerdictKind::StrictlyPolystable | TorusVerdictKind::StrictlySemistable => semistable += 1,
            TorusVerdictKind::Unstable => unstable += 1,
        }
    }
    assert_eq!((stable, semistable, unstable), (2, 7, 6));
}

#[test]
fn shifted_linearisations_have_no_stable_patterns() {
    let t = three_a2_weight_table();
    for a in -2..=2i64 {
        for b in -2..=2i64 {
            if (a, b) == (0, 0) {
                continue;
            }
            for c in support_patterns(4) {
                let v = centroid_verdict(&c, &t, &[int(a), int(b)]).unwrap();
                assert_ne!(v.kind, TorusVerdictKind::Stable, "shift ({a}, {b})");
            }
        }
    }
}

#[test]
fn rank_above_limit_is_rejected() {
    let t = WeightTable { rank: 4, weights: vec![vec![1, 0, 0, 0], vec![-1, 0, 0, 0]] };
    assert!(centroid_verdict(&[int(1), int(1)], &t, &[int(0), int(0), int(0), int(0)]).is_err());
}
