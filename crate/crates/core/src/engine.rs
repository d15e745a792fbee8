//! Hilbert–Mumford evaluation for pairs `(X, H)` of a degree `d` hypersurface
//! and a hyperplane in `P^{n+1}`, linearized by `O(1, t)`.
//!
//! Verdicts are relative to the coordinates the pair is written in. A positive
//! value of `mu_t` for some candidate certifies instability outright; a
//! nonpositive maximum only says no diagonal subgroup in these coordinates
//! destabilizes the pair, which coincides with semistability when the pair is
//! already in a normal form.

use std::collections::BTreeMap;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::one_param::{
    minimal_support, monomial_weight, weight_f_raw, weight_h_raw, OneParamSubgroup,
};
use crate::poly::{divides, Monomial, SparsePolynomial};
use crate::rational::{int, ratio, Rational};

/// A hypersurface `f = 0` of degree `d` in `P^{n+1}` with a hyperplane `h = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairState {
    n: usize,
    d: u32,
    f: SparsePolynomial,
    h: SparsePolynomial,
}

impl PairState {
    pub fn new(n: usize, d: u32, f: SparsePolynomial, h: SparsePolynomial) -> Result<Self> {
        if n < 1 || d < 1 {
            return Err(Error::invalid(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
        }
        for (name, p) in [("f", &f), ("h", &h)] {
            if p.nvars() != n + 2 {
                return Err(Error::invalid(format!(
                    "{name} has {} variables, expected {}",
                    p.nvars(),
                    n + 2
                )));
            }
            if p.is_zero() {
                return Err(Error::invalid(format!("{name} is the zero polynomial")));
            }
        }
        if !f.is_homogeneous_of_degree(d) {
            return Err(Error::invalid(format!("f is not homogeneous of degree {d}")));
        }
        if !h.is_homogeneous_of_degree(1) {
            return Err(Error::invalid("h is not a linear form"));
        }
        Ok(PairState { n, d, f, h })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn f(&self) -> &SparsePolynomial {
        &self.f
    }

    pub fn h(&self) -> &SparsePolynomial {
        &self.h
    }

    pub fn nvars(&self) -> usize {
        self.n + 2
    }

    /// Same pair after relabelling coordinates by `sigma`.
    pub fn permuted(&self, sigma: &[usize]) -> Result<Self> {
        Ok(PairState {
            n: self.n,
            d: self.d,
            f: crate::poly::apply_permutation(&self.f, sigma)?,
            h: crate::poly::apply_permutation(&self.h, sigma)?,
        })
    }
}

/// Largest `t` admitting semistable pairs: `d / (n+1)`.
pub fn t_max(n: usize, d: u32) -> Rational {
    ratio(d as i64, n as i64 + 1)
}

fn check_t(n: usize, d: u32, t: &Rational) -> Result<()> {
    if t.is_negative() || *t > t_max(n, d) {
        return Err(Error::domain(format!("t = {t} lies outside [0, {}]", t_max(n, d))));
    }
    Ok(())
}

/// `<f, a> + t <h, a>` for an arbitrary diagonal weight vector `a`.
pub fn mu_t_weights(pair: &PairState, weights: &[i64], t: &Rational) -> Result<Rational> {
    check_t(pair.n, pair.d, t)?;
    let wf = weight_f_raw(&pair.f, weights)?;
    let wh = weight_h_raw(&pair.h, weights)?;
    Ok(int(wf) + t * int(wh))
}

pub fn mu_t(pair: &PairState, lambda: &OneParamSubgroup, t: &Rational) -> Result<Rational> {
    mu_t_weights(pair, lambda.weights(), t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    UnstableCertified,
    NotDestabilizedInCoordinates,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub kind: VerdictKind,
    /// A maximizer of `mu_t(lambda) / max_i |a_i|` over the candidates, first
    /// in candidate order on ties. Ranking by the scale-free value keeps the
    /// witness from drifting to long weight vectors; the sign is unaffected.
    pub witness: Option<OneParamSubgroup>,
    /// `mu_t` of the witness; positive iff some candidate destabilizes.
    pub mu_max: Rational,
}

impl StabilityVerdict {
    pub fn is_unstable(&self) -> bool {
        self.kind == VerdictKind::UnstableCertified
    }

    pub fn to_record(&self, t: &Rational) -> VerdictRecord {
        VerdictRecord {
            kind: self.kind,
            witness: self.witness.as_ref().map(|w| w.weights().to_vec()),
            mu_max: self.mu_max.to_string(),
            t: t.to_string(),
        }
    }
}

/// Serialized verdict: exact rationals as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub kind: VerdictKind,
    pub witness: Option<Vec<i64>>,
    pub mu_max: String,
    pub t: String,
}

pub fn verdict_in_coords(
    pair: &PairState,
    t: &Rational,
    candidates: &[OneParamSubgroup],
) -> Result<StabilityVerdict> {
    if candidates.is_empty() {
        return Err(Error::invalid("candidate set is empty"));
    }
    check_t(pair.n, pair.d, t)?;
    if let Some(bad) = candidates.iter().find(|c| c.len() != pair.nvars()) {
        return Err(Error::invalid(format!("candidate {bad} has the wrong length")));
    }
    // the Mukai-minimal monomials already realize <f, lambda> for normalized lambda
    let minimal = minimal_support(&pair.f)?;
    let h_support: Vec<usize> = pair
        .h
        .support()
        .map(|m| m.exponents().iter().position(|&e| e == 1).expect("linear"))
        .collect();

    let (best_index, _, mu_max) = candidates
        .par_iter()
        .enumerate()
        .map(|(i, lambda)| {
            let a = lambda.weights();
            let wf = minimal
                .iter()
                .map(|m| monomial_weight(m, a).expect("length checked"))
                .min()
                .expect("nonzero f");
            let wh = h_support.iter().map(|&j| a[j]).min().expect("nonzero h");
            let mu = int(wf) + t * int(wh);
            let sup = a.iter().map(|x| x.abs()).max().expect("nonempty");
            (i, &mu / int(sup), mu)
        })
        .reduce_with(|x, y| if y.1 > x.1 || (y.1 == x.1 && y.0 < x.0) { y } else { x })
        .expect("nonempty");

    let kind = if mu_max.is_positive() {
        VerdictKind::UnstableCertified
    } else {
        VerdictKind::NotDestabilizedInCoordinates
    };
    Ok(StabilityVerdict { kind, witness: Some(candidates[best_index].clone()), mu_max })
}

/// The linear-in-`t` expression `w + t a_j` that produced a wall.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallSource {
    pub lambda: OneParamSubgroup,
    pub monomial_weight: i64,
    pub h_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    pub t: Rational,
    pub source: WallSource,
}

/// Every `t = -w / a_j` in `(0, d/(n+1)]` with `w` a monomial weight and `a_j`
/// a nonzero entry of some candidate, ascending. Sign changes of `mu_t` can
/// only happen at these values.
pub fn candidate_walls(n: usize, d: u32, candidates: &[OneParamSubgroup]) -> Vec<Wall> {
    let top = t_max(n, d);
    let monos = Monomial::all_of_degree(n + 2, d);
    let found: Vec<BTreeMap<Rational, WallSource>> = candidates
        .par_iter()
        .map(|lambda| {
            let mut local = BTreeMap::new();
            let mut weights: Vec<i64> = monos
                .iter()
                .filter_map(|m| monomial_weight(m, lambda.weights()).ok())
                .collect();
            weights.sort_unstable();
            weights.dedup();
            for &w in &weights {
                for (j, &a) in lambda.weights().iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    let t = ratio(-w, a);
                    if t.is_positive() && t <= top {
                        local.entry(t).or_insert_with(|| WallSource {
                            lambda: lambda.clone(),
                            monomial_weight: w,
                            h_index: j,
                        });
                    }
                }
            }
            local
        })
        .collect();
    let mut merged: BTreeMap<Rational, WallSource> = BTreeMap::new();
    for local in found {
        for (t, src) in local {
            merged.entry(t).or_insert(src);
        }
    }
    merged.into_iter().map(|(t, source)| Wall { t, source }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitPair {
    pub f0: SparsePolynomial,
    pub h0: SparsePolynomial,
    /// `h0` does not divide `f0`.
    pub is_log_pair: bool,
}

impl LimitPair {
    pub fn as_pair(&self, n: usize, d: u32) -> Result<PairState> {
        PairState::new(n, d, self.f0.clone(), self.h0.clone())
    }
}

/// `lim_{s -> 0} lambda(s) . (f, h)`: the terms of minimal weight survive.
pub fn limit_pair(pair: &PairState, lambda: &OneParamSubgroup) -> Result<LimitPair> {
    let a = lambda.weights();
    let wf = weight_f_raw(&pair.f, a)?;
    let wh = weight_h_raw(&pair.h, a)?;
    let f0 = pair.f.filter_terms(|m| monomial_weight(m, a).ok() == Some(wf));
    let h0 = pair.h.filter_terms(|m| monomial_weight(m, a).ok() == Some(wh));
    let is_log_pair = !divides(&h0, &f0)?;
    Ok(LimitPair { f0, h0, is_log_pair })
}

/// Degree-`d` monomials `I` with `<I, lambda> + t a_j >= 0`. Any `f` supported
/// there, paired with an `h` whose weight is `a_j`, has `mu_t >= 0` against
/// `lambda`.
pub fn destabilizing_family(
    d: u32,
    lambda: &OneParamSubgroup,
    t: &Rational,
    j: usize,
) -> Result<Vec<Monomial>> {
    let nvars = lambda.len();
    if j >= nvars {
        return Err(Error::invalid(format!("index {j} out of range for {nvars} variables")));
    }
    let shift = t * int(lambda.weight(j));
    Ok(Monomial::all_of_degree(nvars, d)
        .into_iter()
        .filter(|m| {
            let w = monomial_weight(m, lambda.weights()).expect("same length");
            !(int(w) + &shift).is_negative()
        })
        .collect())
}
