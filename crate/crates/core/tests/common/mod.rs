#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use vgit::rational::{int, Rational};
use vgit::{Monomial, SparsePolynomial};

/// Cubic surface with an A2 point: `x0 x1 x3 + x2^3` plus generic terms in
/// `x0, x1, x2`.
pub const A2_F: &str = "x0*x1*x3 + x2^3 + 2*x2^2*x0 - 3*x2^2*x1 + 5*x2*x0^2 + 7*x2*x0*x1 \
                        - x2*x1^2 + 11*x0^3 + 13*x0^2*x1 - 17*x0*x1^2 + 19*x1^3";

/// Hyperplanes with `h2 != 0` and with `h2 = 0`.
pub const A2_H_GENERIC: &str = "x0 - 4*x1 + 3*x2";
pub const A2_H_ZERO: &[&str] = &["x0", "2*x0 - x1", "x1", "x0 + x1"];

pub fn poly_strategy(nvars: usize, degree: u32, max_terms: usize) -> impl Strategy<Value = SparsePolynomial> {
    let monos = Monomial::all_of_degree(nvars, degree);
    let count = monos.len();
    prop::collection::vec((0..count, -6i64..=6, 1i64..=4), 1..=max_terms)
        .prop_map(move |terms| {
            SparsePolynomial::from_terms(
                nvars,
                terms.into_iter().map(|(i, p, q)| (monos[i].exponents().to_vec(), Rational::new(p.into(), q.into()))),
            )
            .expect("valid terms")
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=20)
        .prop_filter("nonzero", |(p, _)| *p != 0)
        .prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

/// A random cubic with a support skewed towards low powers of the last
/// variables, so that unstable and semistable pairs both occur.
pub fn random_cubic(rng: &mut ChaCha8Rng, nvars: usize) -> SparsePolynomial {
    let monos = Monomial::all_of_degree(nvars, 3);
    loop {
        let mut terms: Vec<(Vec<u32>, Rational)> = Vec::new();
        for m in &monos {
            let tail: u32 = m.exponents()[nvars - 2..].iter().sum();
            let keep = rng.gen_bool(match tail {
                0 => 0.5,
                1 => 0.35,
                2 => 0.15,
                _ => 0.05,
            });
            if keep {
                let c = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
                terms.push((m.exponents().to_vec(), int(c)));
            }
        }
        let f = SparsePolynomial::from_terms(nvars, terms).expect("valid terms");
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_linear(rng: &mut ChaCha8Rng, nvars: usize) -> SparsePolynomial {
    loop {
        let mut terms: Vec<(Vec<u32>, Rational)> = Vec::new();
        for i in 0..nvars {
            if rng.gen_bool(0.5) {
                let mut e = vec![0; nvars];
                e[i] = 1;
                terms.push((e, int(rng.gen_range(-5..=5))));
            }
        }
        let h = SparsePolynomial::from_terms(nvars, terms).expect("valid terms");
        if !h.is_zero() {
            return h;
        }
    }
}

/// Seeded `(pair, lambda, beta)` triples at `(n, d) = (2, 3)` whose limit under
/// `lambda` is a log pair.
pub fn dictionary_battery(
    count: usize,
    seed: u64,
) -> Vec<(vgit::PairState, vgit::OneParamSubgroup, vgit::Rational)> {
    use rand::SeedableRng;
    let set = vgit::generate_candidates(2, 3).expect("candidates");
    let betas = [vgit::rational::ratio(1, 2), vgit::rational::ratio(9, 10), vgit::rational::ratio(99, 100)];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let pair = vgit::PairState::new(2, 3, random_cubic(&mut rng, 4), random_linear(&mut rng, 4)).expect("pair");
        let lambda = set.candidates[rng.gen_range(0..set.len())].clone();
        match vgit::limit_pair(&pair, &lambda) {
            Ok(limit) if limit.is_log_pair => {}
            _ => continue,
        }
        let beta = betas[out.len() % betas.len()].clone();
        out.push((pair, lambda, beta));
    }
    out
}
