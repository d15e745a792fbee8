//! Equivariant Hilbert and weight functions of the test configuration induced
//! by a one-parameter subgroup, read off bigraded Hilbert series
//!
//! ```text
//! S_X(q, z) = (1 - q^{w_f} z^d) / prod_i (1 - q^{a_i} z)
//! S_D(q, z) = S_X(q, z) (1 - q^{w_h} z)
//! ```
//!
//! of the hypersurface ring `C[x]/(f0)` and the complete intersection
//! `C[x]/(f0, h0)`. The coefficient of `z^k` is a Laurent polynomial in `q`
//! whose value at `q = 1` is the dimension of the degree `k` piece and whose
//! derivative at `q = 1` is the total weight.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::cm::{a_beta, b_beta, df_from_coefficients, hilbert_coefficients, HilbertWeightData};
use crate::engine::{limit_pair, PairState};
use crate::error::{Error, Result};
use crate::one_param::{monomial_weight, OneParamSubgroup};
use crate::poly::{divides, SparsePolynomial};
use crate::rational::{factorial, int, Rational};

/// Power series in `z`, truncated at a fixed degree, with Laurent polynomial
/// coefficients in `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedSeries {
    coeffs: Vec<BTreeMap<i64, BigInt>>,
}

impl BigradedSeries {
    pub fn one(max_degree: usize) -> Self {
        let mut coeffs = vec![BTreeMap::new(); max_degree + 1];
        coeffs[0].insert(0, BigInt::one());
        BigradedSeries { coeffs }
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Multiplies by `1 / (1 - q^w z)`.
    pub fn divide_by_linear(&mut self, w: i64) {
        for k in 1..self.coeffs.len() {
            let shifted: Vec<(i64, BigInt)> =
                self.coeffs[k - 1].iter().map(|(e, c)| (e + w, c.clone())).collect();
            add_into(&mut self.coeffs[k], shifted);
        }
    }

    /// Multiplies by `1 - q^w z^e`.
    pub fn multiply_by_binomial(&mut self, w: i64, e: usize) {
        for k in (e..self.coeffs.len()).rev() {
            let shifted: Vec<(i64, BigInt)> =
                self.coeffs[k - e].iter().map(|(x, c)| (x + w, -c)).collect();
            add_into(&mut self.coeffs[k], shifted);
        }
    }

    /// The Laurent polynomial in front of `z^k`.
    pub fn coefficient(&self, k: usize) -> &BTreeMap<i64, BigInt> {
        &self.coeffs[k]
    }

    /// Value at `q = 1` of the `z^k` coefficient.
    pub fn dimension(&self, k: usize) -> BigInt {
        self.coeffs[k].values().sum()
    }

    /// Derivative at `q = 1` of the `z^k` coefficient.
    pub fn weight(&self, k: usize) -> BigInt {
        self.coeffs[k].iter().map(|(e, c)| BigInt::from(*e) * c).sum()
    }
}

fn add_into(target: &mut BTreeMap<i64, BigInt>, terms: Vec<(i64, BigInt)>) {
    for (e, c) in terms {
        let entry = target.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            target.remove(&e);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSample {
    pub k: u32,
    #[serde(serialize_with = "ser_big")]
    pub dim: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub weight: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub divisor_dim: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub divisor_weight: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}


fn homogeneous_weight(p: &SparsePolynomial, weights: &[i64], what: &str) -> Result<i64> {
    let mut found = None;
    for mono in p.support() {
        let w = monomial_weight(mono, weights)?;
        match found {
            None => found = Some(w),
            Some(prev) if prev != w => {
                return Err(Error::invalid(format!("{what} is not weight-homogeneous for the subgroup")))
            }
            _ => {}
        }
    }
    found.ok_or_else(|| Error::invalid(format!("{what} is zero")))
}

/// Dimensions and total weights of the degree `k` pieces of `C[x]/(f0)` and
/// `C[x]/(f0, h0)` for each `k` in `degrees`. `None` means the trivial action.
pub fn equivariant_weights(
    f0: &SparsePolynomial,
    h0: &SparsePolynomial,
    lambda: Option<&OneParamSubgroup>,
    degrees: impl IntoIterator<Item = u32>,
) -> Result<Vec<WeightSample>> {
    let nvars = f0.nvars();
    if h0.nvars() != nvars {
        return Err(Error::invalid("f0 and h0 live in different variable counts"));
    }
    let d = f0
        .homogeneous_degree()
        .ok_or_else(|| Error::invalid("f0 must be a nonzero homogeneous polynomial"))?;
    if !h0.is_homogeneous_of_degree(1) || h0.is_zero() {
        return Err(Error::invalid("h0 must be a nonzero linear form"));
    }
    if divides(h0, f0)? {
        return Err(Error::domain("h0 divides f0; (f0, h0) is not a complete intersection"));
    }
    let weights: Vec<i64> = match lambda {
        Some(l) if l.len() != nvars => {
            return Err(Error::invalid(format!("subgroup has {} weights, expected {nvars}", l.len())))
        }
        Some(l) => l.weights().to_vec(),
        None => vec![0; nvars],
    };
    let w_f = homogeneous_weight(f0, &weights, "f0")?;
    let w_h = homogeneous_weight(h0, &weights, "h0")?;

    let degrees: Vec<u32> = degrees.into_iter().collect();
    let top = degrees.iter().copied().max().unwrap_or(0) as usize;
    let mut hypersurface = BigradedSeries::one(top);
    for &a in &weights {
        hypersurface.divide_by_linear(a);
    }
    hypersurface.multiply_by_binomial(w_f, d as usize);
    let mut divisor = hypersurface.clone();
    divisor.multiply_by_binomial(w_h, 1);

    Ok(degrees
        .into_iter()
        .map(|k| {
            let k_ = k as usize;
            WeightSample {
                k,
                dim: hypersurface.dimension(k_),
                weight: hypersurface.weight(k_),
                divisor_dim: divisor.dimension(k_),
                divisor_weight: divisor.weight(k_),
            }
        })
        .collect())
}

/// Coefficients, highest degree first, of the unique polynomial of the given
/// degree through the first `degree + 1` samples. Every further sample must
/// lie on it; at least one such verification sample is required.
pub fn fit_polynomial(samples: &[(Rational, Rational)], degree: usize) -> Result<Vec<Rational>> {
    if samples.len() < degree + 2 {
        return Err(Error::invalid(format!(
            "fitting degree {degree} needs at least {} samples, got {}",
            degree + 2,
            samples.len()
        )));
    }
    let m = degree + 1;
    let mut rows: Vec<Vec<Rational>> = samples[..m]
        .iter()
        .map(|(x, y)| {
            let mut row: Vec<Rational> = Vec::with_capacity(m + 1);
            let mut p = Rational::one();
            let mut powers = Vec::with_capacity(m);
            for _ in 0..m {
                powers.push(p.clone());
                p = &p * x;
            }
            powers.reverse();
            row.extend(powers);
            row.push(y.clone());
            row
        })
        .collect();

    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| Error::invalid("sample abscissae are not distinct"))?;
        rows.swap(col, pivot);
        let inv = Rational::one() / &rows[col][col];
        for v in rows[col].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *v -= &factor * p;
                }
            }
        }
    }
    let coeffs: Vec<Rational> = rows.into_iter().map(|row| row[m].clone()).collect();

    for (x, y) in &samples[m..] {
        let value = coeffs.iter().fold(Rational::zero(), |acc, c| acc * x + c);
        if value != *y {
            return Err(Error::domain(format!(
                "sample at k = {x} is {y}, but the degree {degree} fit predicts {value}"
            )));
        }
    }
    Ok(coeffs)
}

/// Leading two coefficients of the weight polynomial fitted to `(k, w(k))`.
pub fn fit_weight_polynomial(samples: &[(i64, BigInt)], degree: usize) -> Result<(Rational, Rational)> {
    let points: Vec<(Rational, Rational)> = samples
        .iter()
        .map(|(k, w)| (int(*k), Rational::from_integer(w.clone())))
        .collect();
    let coeffs = fit_polynomial(&points, degree)?;
    let next = coeffs.get(1).cloned().unwrap_or_else(Rational::zero);
    Ok((coeffs[0].clone(), next))
}

/// Polarization exponent `n + 2 - d` of `-K_X = O(n+2-d)`.
pub fn anticanonical_degree(n: usize, d: u32) -> Result<u32> {
    if d < 2 || d as usize > n + 1 {
        return Err(Error::domain(format!("need 2 <= d <= n+1, got n={n}, d={d}")));
    }
    Ok(n as u32 + 2 - d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DfReport {
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub df: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub beta: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub b0: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub b1: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub b0_tilde: Rational,
    pub weight_f: i64,
    pub weight_h: i64,
    /// Samples indexed by the power `k` of `-K_X`; the ring degree is `r k`.
    pub w_samples: Vec<WeightSample>,
}

/// Hilbert and weight data of the test configuration that `lambda` induces on
/// the pair, sampled in powers of `-K_X`.
pub fn hilbert_weight_data(
    pair: &PairState,
    lambda: &OneParamSubgroup,
) -> Result<(HilbertWeightData, Vec<WeightSample>, i64, i64)> {
    let (n, d) = (pair.n(), pair.d());
    let r = anticanonical_degree(n, d)?;
    let limit = limit_pair(pair, lambda)?;
    if !limit.is_log_pair {
        return Err(Error::domain(format!(
            "limit hyperplane divides the limit hypersurface under {lambda}; no log test configuration"
        )));
    }
    let ks: Vec<u32> = (d + 1..=d + n as u32 + 3).collect();
    let samples = equivariant_weights(&limit.f0, &limit.h0, Some(lambda), ks.iter().map(|k| r * k))?
        .into_iter()
        .zip(&ks)
        .map(|(s, &k)| WeightSample { k, ..s })
        .collect::<Vec<_>>();
    let total: Vec<(i64, BigInt)> = samples.iter().map(|s| (s.k as i64, s.weight.clone())).collect();
    let boundary: Vec<(i64, BigInt)> =
        samples.iter().map(|s| (s.k as i64, s.divisor_weight.clone())).collect();
    let (b0, b1) = fit_weight_polynomial(&total, n + 1)?;
    let (b0_tilde, _) = fit_weight_polynomial(&boundary, n)?;
    let (a0, a1, a0_tilde) = hilbert_coefficients(n, d)?;
    let w_f = limit_weight(&limit.f0, lambda)?;
    let w_h = limit_weight(&limit.h0, lambda)?;
    Ok((HilbertWeightData { a0, a1, a0_tilde, b0, b1, b0_tilde }, samples, w_f, w_h))
}

fn limit_weight(p: &SparsePolynomial, lambda: &OneParamSubgroup) -> Result<i64> {
    homogeneous_weight(p, lambda.weights(), "limit")
}

/// `DF_beta` of the test configuration induced by `lambda`.
pub fn df_of_one_ps(pair: &PairState, lambda: &OneParamSubgroup, beta: &Rational) -> Result<DfReport> {
    let (data, w_samples, weight_f, weight_h) = hilbert_weight_data(pair, lambda)?;
    let df = df_from_coefficients(&data, beta)?;
    Ok(DfReport {
        df,
        beta: beta.clone(),
        b0: data.b0,
        b1: data.b1,
        b0_tilde: data.b0_tilde,
        weight_f,
        weight_h,
        w_samples,
    })
}

/// `a(beta) <f, lambda> + b(beta) <h, lambda>`, the weight of `O(a, b)` at the
/// limit point.
pub fn cm_weight(n: usize, d: u32, beta: &Rational, weight_f: i64, weight_h: i64) -> Result<Rational> {
    Ok(a_beta(n, d, beta)? * int(weight_f) + b_beta(n, d, beta)? * int(weight_h))
}

/// `(n+1)! DF_beta / (a(beta) <f,lambda> + b(beta) <h,lambda>)`, or `None`
/// when the denominator vanishes. A constant value across pairs, subgroups and
/// angles is the signed normalization between the two sides.
pub fn dictionary_ratio(n: usize, d: u32, report: &DfReport) -> Result<Option<Rational>> {
    let denom = cm_weight(n, d, &report.beta, report.weight_f, report.weight_h)?;
    if denom.is_zero() {
        return Ok(None);
    }
    let scaled = Rational::from_integer(factorial(n as u32 + 1)) * &report.df;
    Ok(Some(scaled / denom))
}
