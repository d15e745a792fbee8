//! Normalized one-parameter subgroups of the diagonal torus, their pairing
//! with monomials, and the Mukai order on monomials of a fixed degree.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, SparsePolynomial};

/// `Diag(s^a0, ..., s^a_{n+1})` with `a0 >= ... >= a_{n+1}`, `sum a_i = 0` and
/// primitive weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct OneParamSubgroup {
    weights: Vec<i64>,
}

impl OneParamSubgroup {
    /// Sorts descending and divides by the gcd of the entries.
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if raw.iter().all(|&a| a == 0) {
            return Err(Error::invalid("one-parameter subgroup weights are all zero"));
        }
        if raw.iter().sum::<i64>() != 0 {
            return Err(Error::invalid(format!("weights {raw:?} do not sum to zero")));
        }
        let g = raw.iter().fold(0i64, |g, &a| g.gcd(&a));
        let mut weights: Vec<i64> = raw.iter().map(|a| a / g).collect();
        weights.sort_unstable_by(|a, b| b.cmp(a));
        Ok(OneParamSubgroup { weights })
    }

    /// Accepts only vectors that already satisfy every normalization invariant.
    pub fn from_normalized(weights: Vec<i64>) -> Result<Self> {
        let normalized = Self::normalize(&weights)?;
        if normalized.weights != weights {
            return Err(Error::invalid(format!("weights {weights:?} are not normalized")));
        }
        Ok(normalized)
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, index: usize) -> i64 {
        self.weights[index]
    }

    /// `(n+1, -1, ..., -1)`, the subgroup acting on `x0` alone.
    pub fn first_extreme_ray(nvars: usize) -> Self {
        let mut w = vec![-1; nvars];
        w[0] = nvars as i64 - 1;
        OneParamSubgroup { weights: w }
    }
}

impl TryFrom<Vec<i64>> for OneParamSubgroup {
    type Error = Error;
    fn try_from(weights: Vec<i64>) -> Result<Self> {
        Self::from_normalized(weights)
    }
}

impl From<OneParamSubgroup> for Vec<i64> {
    fn from(l: OneParamSubgroup) -> Vec<i64> {
        l.weights
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Generators `r_k` (k = 0..=n) of the cone of normalized weights: `k+1`
/// leading entries `n+1-k`, trailing entries `-(k+1)`.
pub fn extreme_rays(nvars: usize) -> Vec<Vec<i64>> {
    let m = nvars as i64;
    (0..nvars.saturating_sub(1))
        .map(|k| {
            let k = k as i64;
            (0..m).map(|i| if i <= k { m - 1 - k } else { -(k + 1) }).collect()
        })
        .collect()
}

/// `sum a_i I_i` for an arbitrary diagonal weight vector.
pub fn monomial_weight(mono: &Monomial, weights: &[i64]) -> Result<i64> {
    if mono.nvars() != weights.len() {
        return Err(Error::invalid(format!(
            "monomial has {} variables, subgroup has {} weights",
            mono.nvars(),
            weights.len()
        )));
    }
    Ok(mono.exponents().iter().zip(weights).map(|(&e, &a)| e as i64 * a).sum())
}

pub fn pairing(mono: &Monomial, lambda: &OneParamSubgroup) -> Result<i64> {
    monomial_weight(mono, &lambda.weights)
}

/// `min { <x^I, a> : f_I != 0 }` for an arbitrary diagonal weight vector.
pub fn weight_f_raw(f: &SparsePolynomial, weights: &[i64]) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::invalid("weight of the zero polynomial is undefined"));
    }
    let mut best = i64::MAX;
    for mono in f.support() {
        best = best.min(monomial_weight(mono, weights)?);
    }
    Ok(best)
}

pub fn weight_f(f: &SparsePolynomial, lambda: &OneParamSubgroup) -> Result<i64> {
    weight_f_raw(f, &lambda.weights)
}

/// `min { a_i : h_i != 0 }` for a linear form `h`.
pub fn weight_h_raw(h: &SparsePolynomial, weights: &[i64]) -> Result<i64> {
    if h.is_zero() {
        return Err(Error::invalid("weight of the zero linear form is undefined"));
    }
    if !h.is_homogeneous_of_degree(1) {
        return Err(Error::invalid("hyperplane equation must be a homogeneous linear form"));
    }
    weight_f_raw(h, weights)
}

pub fn weight_h(h: &SparsePolynomial, lambda: &OneParamSubgroup) -> Result<i64> {
    weight_h_raw(h, &lambda.weights)
}

/// Mukai order: `I <= J` iff every partial sum of `I` is at most that of `J`.
/// Equivalent to `<I, lambda> <= <J, lambda>` for every normalized `lambda`,
/// since the partial sums are affine in the pairings with the extreme rays.
pub fn mukai_leq(i: &Monomial, j: &Monomial) -> Result<bool> {
    if i.nvars() != j.nvars() {
        return Err(Error::invalid("monomials have different variable counts"));
    }
    if i.degree() != j.degree() {
        return Err(Error::invalid("Mukai order compares monomials of equal degree"));
    }
    let mut si = 0u32;
    let mut sj = 0u32;
    for (a, b) in i.exponents().iter().zip(j.exponents()) {
        si += a;
        sj += b;
        if si > sj {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Mukai-minimal monomials of `supp(f)`, in descending grlex order.
pub fn minimal_support(f: &SparsePolynomial) -> Result<Vec<Monomial>> {
    if f.is_zero() {
        return Err(Error::invalid("minimal support of the zero polynomial is undefined"));
    }
    if f.homogeneous_degree().is_none() {
        return Err(Error::invalid("minimal support requires a homogeneous polynomial"));
    }
    let support: Vec<&Monomial> = f.support().collect();
    let mut minimal = Vec::new();
    for &cand in support.iter().rev() {
        let dominated = support
            .iter()
            .any(|&other| other != cand && mukai_leq(other, cand).expect("same degree"));
        if !dominated {
            minimal.push(cand.clone());
        }
    }
    Ok(minimal)
}
