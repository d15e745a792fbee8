//! Closed-form thresholds: angle bounds `beta_0`, normalized-volume
//! inequalities, quotient-singularity volumes, the gap bound, and the
//! codimensions of the loci `Z1`, `Z1'` and `Z2`.
//!
//! Predicates that involve roots are decided by exact comparisons of integer
//! powers; floating values are for display only.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{binomial, floor_to_bigint, int, pow, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VolumeBoundQuery {
    pub n: u32,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub pair_degree: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub vol_hat: Rational,
}

impl VolumeBoundQuery {
    pub fn new(n: u32, pair_degree: Rational, vol_hat: Rational) -> Result<Self> {
        if n < 1 {
            return Err(Error::domain("dimension must be at least 1"));
        }
        if !pair_degree.is_positive() || !vol_hat.is_positive() {
            return Err(Error::domain("degree and normalized volume must be positive"));
        }
        Ok(VolumeBoundQuery { n, pair_degree, vol_hat })
    }
}

/// `(-K - (1-beta) Delta)^n <= (1 + 1/n)^n vol_hat`.
pub fn liu_bound_ok(q: &VolumeBoundQuery) -> bool {
    let base = Rational::one() + Rational::new(BigInt::one(), BigInt::from(q.n));
    q.pair_degree <= pow(&base, q.n) * &q.vol_hat
}

/// Normalized volume `4 / |Gamma|` of `C^2 / Gamma` at the origin.
pub fn quotient_volume(order: u64) -> Result<Rational> {
    if order < 1 {
        return Err(Error::domain("group order must be at least 1"));
    }
    Ok(Rational::new(BigInt::from(4), BigInt::from(order)))
}

/// Largest `|Gamma|` allowed by `4/|Gamma| >= (4/3) beta^2`, i.e. `floor(3 / beta^2)`.
pub fn max_group_order_cubic(beta: &Rational) -> Result<BigInt> {
    if !beta.is_positive() || *beta > Rational::one() {
        return Err(Error::domain(format!("beta = {beta} lies outside (0, 1]")));
    }
    Ok(floor_to_bigint(&(int(3) / (beta * beta))))
}

/// `2 (n-1)^n`.
pub fn gap_bound(n: u32) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::domain("gap bound needs n >= 2"));
    }
    Ok(BigInt::from(2) * BigInt::from(n - 1).pow(n))
}

fn check_beta0_range(n: u32, d: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::domain("beta_0 needs n >= 2"));
    }
    if d < n + 1 {
        return Err(Error::domain(format!("beta_0 needs d >= n+1, got n={n}, d={d}")));
    }
    Ok(())
}

/// `1 - ((n+1)/d)(1 - 2^{1/n}(1 - 1/n))`.
pub fn beta0_pn(n: u32, d: u32) -> Result<f64> {
    check_beta0_range(n, d)?;
    let (nf, df) = (n as f64, d as f64);
    Ok(1.0 - (nf + 1.0) / df * (1.0 - 2f64.powf(1.0 / nf) * (1.0 - 1.0 / nf)))
}

/// `beta > beta0_pn(n, d)`, decided as `((1 - (1-beta) d/(n+1)) / (1 - 1/n))^n > 2`
/// with a positive base.
pub fn is_above_beta0(n: u32, d: u32, beta: &Rational) -> Result<bool> {
    check_beta0_range(n, d)?;
    let base = Rational::one() - (Rational::one() - beta) * Rational::new(BigInt::from(d), BigInt::from(n + 1));
    if !base.is_positive() {
        return Ok(false);
    }
    let scale = Rational::one() - Rational::new(BigInt::one(), BigInt::from(n));
    Ok(pow(&(base / scale), n) > int(2))
}

/// `beta > sqrt(3)/2`, decided as `beta^2 > 3/4`.
pub fn beta0_cubic_predicate(beta: &Rational) -> bool {
    beta.is_positive() && beta * beta > Rational::new(BigInt::from(3), BigInt::from(4))
}

/// `C(n+d, d)`.
pub fn codim_z1(n: u32, d: u32) -> Result<BigInt> {
    if d < 2 || d > n + 1 {
        return Err(Error::domain(format!("Z1 needs 2 <= d <= n+1, got n={n}, d={d}")));
    }
    Ok(binomial((n + d) as i64, d as i64))
}

/// `C(n+d, d) - (n+1)`.
pub fn codim_z1prime(n: u32, d: u32) -> Result<BigInt> {
    if n < 2 || d < 2 {
        return Err(Error::domain(format!("Z1' needs n, d >= 2, got n={n}, d={d}")));
    }
    Ok(binomial((n + d) as i64, d as i64) - BigInt::from(n + 1))
}

/// `C(n+d+1, d) - C(n+d-1, d-2) + n - 2`.
pub fn codim_z2(n: u32, d: u32) -> Result<BigInt> {
    if n < 2 || d < 2 {
        return Err(Error::domain(format!("Z2 needs n >= 2 and d >= 2, got n={n}, d={d}")));
    }
    Ok(binomial((n + d + 1) as i64, d as i64) - binomial((n + d - 1) as i64, d as i64 - 2)
        + BigInt::from(n)
        - BigInt::from(2))
}
