mod common;

use common::{nonzero_rational, poly_strategy, random_cubic, random_linear, A2_F};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vgit::engine::{candidate_walls, limit_pair, mu_t, mu_t_weights, verdict_in_coords, PairState, VerdictKind};
use vgit::one_param::monomial_weight;
use vgit::poly::apply_permutation;
use vgit::rational::{int, ratio, Rational};
use vgit::{generate_candidates, parse_polynomial, OneParamSubgroup};

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    vgit::torus::permutations_of(&(0..n).collect::<Vec<_>>(), n)
}

proptest! {
    #[test]
    fn mu_is_scale_invariant(f in poly_strategy(4, 3, 8), h in poly_strategy(4, 1, 3), cf in nonzero_rational(), ch in nonzero_rational(), k in 0usize..49) {
        let set = generate_candidates(2, 3).unwrap();
        let lambda = &set.candidates[k];
        let t = ratio(3, 10);
        let base = mu_t(&PairState::new(2, 3, f.clone(), h.clone()).unwrap(), lambda, &t).unwrap();
        let scaled = PairState::new(2, 3, f.scale(&cf), h.scale(&ch)).unwrap();
        prop_assert_eq!(mu_t(&scaled, lambda, &t).unwrap(), base);
    }

    #[test]
    fn limit_is_fixed_and_keeps_mu(f in poly_strategy(4, 3, 10), h in poly_strategy(4, 1, 4), k in 0usize..49, tn in 0i64..=10) {
        let set = generate_candidates(2, 3).unwrap();
        let lambda = &set.candidates[k];
        let pair = PairState::new(2, 3, f, h).unwrap();
        let limit = limit_pair(&pair, lambda).unwrap();
        let wf: Vec<i64> = limit.f0.support().map(|m| monomial_weight(m, lambda.weights()).unwrap()).collect();
        let wh: Vec<i64> = limit.h0.support().map(|m| monomial_weight(m, lambda.weights()).unwrap()).collect();
        prop_assert!(wf.windows(2).all(|w| w[0] == w[1]));
        prop_assert!(wh.windows(2).all(|w| w[0] == w[1]));
        let t = ratio(tn, 10);
        let fixed = limit.as_pair(2, 3).unwrap();
        prop_assert_eq!(mu_t(&fixed, lambda, &t).unwrap(), mu_t(&pair, lambda, &t).unwrap());
        prop_assert_eq!(limit_pair(&fixed, lambda).unwrap(), limit);
    }
}

#[test]
fn verdicts_are_permutation_equivariant() {
    // mu_t(sigma . pair, sigma . a) = mu_t(pair, a), so the maximum over the
    // conjugated candidates is unchanged.
    let set = generate_candidates(2, 3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        let pair = PairState::new(2, 3, random_cubic(&mut rng, 4), random_linear(&mut rng, 4)).unwrap();
        let t = ratio(1, 7);
        let verdict = verdict_in_coords(&pair, &t, &set.candidates).unwrap();
        for sigma in all_permutations(4) {
            let moved = PairState::new(
                2,
                3,
                apply_permutation(pair.f(), &sigma).unwrap(),
                apply_permutation(pair.h(), &sigma).unwrap(),
            )
            .unwrap();
            let mut best: Option<Rational> = None;
            for lambda in set.iter() {
                let mut conjugated = vec![0i64; 4];
                for (i, &a) in lambda.weights().iter().enumerate() {
                    conjugated[sigma[i]] = a;
                }
                let mu = mu_t_weights(&moved, &conjugated, &t).unwrap();
                assert_eq!(mu, mu_t(&pair, lambda, &t).unwrap());
                best = Some(best.map_or(mu.clone(), |b| b.max(mu)));
            }
            let positive = best.unwrap() > Rational::from_integer(0.into());
            assert_eq!(positive, verdict.kind == VerdictKind::UnstableCertified);
        }
    }
}

#[test]
fn verdicts_are_constant_between_walls() {
    let set = generate_candidates(2, 3).unwrap();
    let walls: Vec<Rational> = candidate_walls(2, 3, &set.candidates).into_iter().map(|w| w.t).collect();
    let mut points = vec![int(0)];
    points.extend(walls);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10 {
        let pair = PairState::new(2, 3, random_cubic(&mut rng, 4), random_linear(&mut rng, 4)).unwrap();
        for w in points.windows(2) {
            let eps = (&w[1] - &w[0]) / int(1000);
            let kinds: Vec<VerdictKind> = [(&w[0] + &w[1]) / int(2), &w[0] + &eps, &w[1] - &eps]
                .iter()
                .map(|t| verdict_in_coords(&pair, t, &set.candidates).unwrap().kind)
                .collect();
            assert!(kinds.windows(2).all(|k| k[0] == k[1]), "pair {} / {} on ({}, {})", pair.f(), pair.h(), w[0], w[1]);
        }
    }
}

#[test]
fn classical_certificates_at_t_zero() {
    let set = generate_candidates(2, 3).unwrap();
    let h = parse_polynomial("x0 + x1 + x2 + x3", 4).unwrap();
    let cone = PairState::new(2, 3, parse_polynomial("x0^3 + x1^3 + x2^3", 4).unwrap(), h.clone()).unwrap();
    let v = verdict_in_coords(&cone, &int(0), &set.candidates).unwrap();
    assert_eq!(v.kind, VerdictKind::UnstableCertified);
    let fermat = PairState::new(2, 3, parse_polynomial("x0^3 + x1^3 + x2^3 + x3^3", 4).unwrap(), h).unwrap();
    let v = verdict_in_coords(&fermat, &int(0), &set.candidates).unwrap();
    assert_eq!(v.kind, VerdictKind::NotDestabilizedInCoordinates);
    assert!(v.mu_max < int(0));
}

#[test]
fn generic_cubic_is_not_destabilized() {
    let set = generate_candidates(2, 3).unwrap();
    let monos = vgit::Monomial::all_of_degree(4, 3);
    let f = vgit::SparsePolynomial::from_terms(
        4,
        monos.iter().enumerate().map(|(i, m)| (m.exponents().to_vec(), int(i as i64 + 1))),
    )
    .unwrap();
    let pair = PairState::new(2, 3, f, parse_polynomial("x0 + 2*x1 - x2 + 5*x3", 4).unwrap()).unwrap();
    let v = verdict_in_coords(&pair, &ratio(1, 10), &set.candidates).unwrap();
    assert_eq!(v.kind, VerdictKind::NotDestabilizedInCoordinates);
    assert!(v.mu_max < int(0));
}

#[test]
fn a2_limit_with_two_term_hyperplane() {
    let star = OneParamSubgroup::normalize(&[1, 1, 0, -2]).unwrap();
    let pair = PairState::new(2, 3, parse_polynomial(A2_F, 4).unwrap(), parse_polynomial("3*x0 - 5*x1", 4).unwrap())
        .unwrap();
    let limit = limit_pair(&pair, &star).unwrap();
    assert_eq!(limit.f0, parse_polynomial("x0*x1*x3 + x2^3", 4).unwrap());
    assert_eq!(limit.h0, parse_polynomial("3*x0 - 5*x1", 4).unwrap());
    assert!(limit.is_log_pair);
}
