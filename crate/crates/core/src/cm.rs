//! Log CM line bundle coefficients on the parameter space of pairs, the
//! `t <-> beta` dictionary, Hilbert polynomial data and the
//! beta-Donaldson–Futaki invariant.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{factorial, int, pow, Rational};

fn check_range(n: usize, d: u32) -> Result<()> {
    if n < 1 || d < 2 || d as usize > n + 1 {
        return Err(Error::domain(format!("need n >= 1 and 2 <= d <= n+1, got n={n}, d={d}")));
    }
    Ok(())
}

fn check_beta(beta: &Rational) -> Result<()> {
    if !beta.is_positive() || *beta > Rational::one() {
        return Err(Error::domain(format!("beta = {beta} lies outside (0, 1]")));
    }
    Ok(())
}

/// Coefficient of `O(1, 0)` in `Lambda_CM,beta ~ O(a, b)`.
pub fn a_beta(n: usize, d: u32, beta: &Rational) -> Result<Rational> {
    check_range(n, d)?;
    check_beta(beta)?;
    let n_ = int(n as i64);
    let d_ = int(d as i64);
    let r = int(n as i64 + 2 - d as i64);
    let one = Rational::one();
    let gap = &one - beta;
    let inner = &r
        * ((&n_ + int(2)) * (&d_ - &one) * (&one + &n_ * &gap) + &gap * (&n_ + &one))
        - &n_ * &d_ * &gap * (&n_ + &one);
    Ok(pow(&r, n as u32 - 1) * inner)
}

/// Coefficient of `O(0, 1)` in `Lambda_CM,beta ~ O(a, b)`.
pub fn b_beta(n: usize, d: u32, beta: &Rational) -> Result<Rational> {
    check_range(n, d)?;
    check_beta(beta)?;
    let r = int(n as i64 + 2 - d as i64);
    Ok(pow(&r, n as u32) * int(d as i64) * int(n as i64 + 1) * (Rational::one() - beta))
}

/// `t(beta) = b(beta) / a(beta)`.
pub fn t_of_beta(n: usize, d: u32, beta: &Rational) -> Result<Rational> {
    Ok(b_beta(n, d, beta)? / a_beta(n, d, beta)?)
}

/// Closed form `d^2 (1 - beta) / (d^2 - beta)`, valid when `d = n + 1`.
pub fn t_of_beta_closed(d: u32, beta: &Rational) -> Rational {
    let dd = int(d as i64 * d as i64);
    &dd * (Rational::one() - beta) / (&dd - beta)
}

/// Inverse of [`t_of_beta_closed`]: `d^2 (1 - t) / (d^2 - t)`.
pub fn beta_of_t(d: u32, t: &Rational) -> Result<Rational> {
    let dd = int(d as i64 * d as i64);
    if *t == dd {
        return Err(Error::domain("t = d^2 has no preimage"));
    }
    Ok(&dd * (Rational::one() - t) / (&dd - t))
}

/// Floating evaluation of `t(beta)` for irrational angles such as `sqrt(3)/2`.
pub fn t_of_beta_f64(n: usize, d: u32, beta: f64) -> f64 {
    let (n, d) = (n as f64, d as f64);
    let r = n + 2.0 - d;
    let gap = 1.0 - beta;
    let a = r.powf(n - 1.0)
        * (r * ((n + 2.0) * (d - 1.0) * (1.0 + n * gap) + gap * (n + 1.0)) - n * d * gap * (n + 1.0));
    let b = r.powf(n) * d * (n + 1.0) * gap;
    b / a
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CmCoefficients {
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub a: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub b: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub t: Rational,
    #[serde(serialize_with = "crate::rational::serde_rational::serialize")]
    pub beta: Rational,
}


pub fn cm_coefficients(n: usize, d: u32, beta: &Rational) -> Result<CmCoefficients> {
    let a = a_beta(n, d, beta)?;
    let b = b_beta(n, d, beta)?;
    let t = &b / &a;
    Ok(CmCoefficients { a, b, t, beta: beta.clone() })
}

/// Leading Hilbert data for `L = -K_X = O(n+2-d)` on a degree `d` hypersurface
/// and for its restriction to a hyperplane section: `(a0, a1, a0_tilde)`.
pub fn hilbert_coefficients(n: usize, d: u32) -> Result<(Rational, Rational, Rational)> {
    check_range(n, d)?;
    let r = int(n as i64 + 2 - d as i64);
    let d_ = int(d as i64);
    let nf = Rational::from_integer(factorial(n as u32));
    let nf1 = Rational::from_integer(factorial(n as u32 - 1));
    let a0 = &d_ * pow(&r, n as u32) / nf;
    let a1 = &d_ * pow(&r, n as u32) / (int(2) * &nf1);
    let a0_tilde = &d_ * pow(&r, n as u32 - 1) / nf1;
    Ok((a0, a1, a0_tilde))
}

/// Leading coefficients of the Hilbert and total-weight polynomials of a
/// test configuration and of its boundary divisor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertWeightData {
    pub a0: Rational,
    pub a1: Rational,
    pub a0_tilde: Rational,
    pub b0: Rational,
    pub b1: Rational,
    pub b0_tilde: Rational,
}

/// `2 (a1 b0 - a0 b1) / a0 + (1 - beta) (b0~ a0 - a0~ b0) / a0`.
pub fn df_from_coefficients(data: &HilbertWeightData, beta: &Rational) -> Result<Rational> {
    if data.a0.is_zero() {
        return Err(Error::domain("a0 = 0"));
    }
    let HilbertWeightData { a0, a1, a0_tilde, b0, b1, b0_tilde } = data;
    let main = int(2) * (a1 * b0 - a0 * b1) / a0;
    let boundary = (Rational::one() - beta) * (b0_tilde * a0 - a0_tilde * b0) / a0;
    Ok(main + boundary)
}

/// Degree of `Lambda_CM,beta` on a one-dimensional base from pushed-forward
/// intersection numbers `I1 = L^{n+1}`, `I2 = L^n . K`, `I3 = L^n . D`.
#[allow(clippy::too_many_arguments)]
pub fn cm_degree_from_intersections(
    n: usize,
    mu_l: &Rational,
    mu_ld: &Rational,
    i1: &Rational,
    i2: &Rational,
    i3: &Rational,
    beta: &Rational,
) -> Rational {
    let n_ = int(n as i64);
    let n1 = int(n as i64 + 1);
    &n_ * mu_l * i1 + &n1 * i2 + (Rational::one() - beta) * (&n1 * i3 - &n_ * mu_ld * i1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn a_examples() {
        assert_eq!(a_beta(2, 3, &ratio(9, 10)).unwrap(), ratio(81, 10));
        assert_eq!(a_beta(2, 3, &int(1)).unwrap(), int(8));
        assert_eq!(a_beta(3, 4, &ratio(1, 2)).unwrap(), ratio(31, 2));
        assert!(a_beta(2, 4, &ratio(1, 2)).is_err());
        assert!(a_beta(2, 3, &int(0)).is_err());
        assert!(a_beta(2, 3, &ratio(3, 2)).is_err());
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_beta(2, 3, &ratio(9, 10)).unwrap(), ratio(9, 10));
        assert_eq!(b_beta(3, 4, &ratio(1, 2)).unwrap(), int(8));
        for (n, d) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 4)] {
            assert!(b_beta(n, d, &int(1)).unwrap().is_zero());
        }
    }

    #[test]
    fn t_examples() {
        assert_eq!(t_of_beta(2, 3, &ratio(9, 10)).unwrap(), ratio(1, 9));
        assert!(t_of_beta(2, 3, &int(1)).unwrap().is_zero());
        assert_eq!(t_of_beta_closed(3, &ratio(9, 10)), ratio(1, 9));
        assert_eq!(beta_of_t(3, &ratio(1, 9)).unwrap(), ratio(9, 10));
        let root3 = 3f64.sqrt();
        let expected = 3.0 / 107.0 * (33.0 - 16.0 * root3);
        assert!((t_of_beta_f64(2, 3, root3 / 2.0) - expected).abs() < 1e-12);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_coefficients(2, 3).unwrap(), (ratio(3, 2), ratio(3, 2), int(3)));
        assert_eq!(hilbert_coefficients(3, 4).unwrap(), (ratio(2, 3), int(1), int(2)));
        for n in 1..6usize {
            let (a0, _, _) = hilbert_coefficients(n, n as u32 + 1).unwrap();
            assert_eq!(a0, int(n as i64 + 1) / Rational::from_integer(factorial(n as u32)));
        }
        assert!(hilbert_coefficients(2, 4).is_err());
    }

    #[test]
    fn df_examples() {
        let trivial = HilbertWeightData {
            a0: ratio(3, 2),
            a1: ratio(3, 2),
            a0_tilde: int(3),
            b0: int(0),
            b1: int(0),
            b0_tilde: int(0),
        };
        assert!(df_from_coefficients(&trivial, &ratio(1, 2)).unwrap().is_zero());

        // a1 b0 = a0 b1 and b0~ a0 = a0~ b0
        let proportional = HilbertWeightData { b0: int(2), b1: int(2), b0_tilde: int(4), ..trivial.clone() };
        for beta in [ratio(1, 3), ratio(1, 2), int(1)] {
            assert!(df_from_coefficients(&proportional, &beta).unwrap().is_zero());
        }

        let synthetic = HilbertWeightData { b0: int(1), ..trivial.clone() };
        assert_eq!(df_from_coefficients(&synthetic, &ratio(1, 2)).unwrap(), int(1));

        let bad = HilbertWeightData { a0: int(0), ..trivial };
        assert!(df_from_coefficients(&bad, &ratio(1, 2)).is_err());
    }

    #[test]
    fn cm_degree_at_beta_one() {
        let (n, mu, i1, i2, i3) = (3, ratio(1, 2), int(5), int(-7), int(11));
        let got = cm_degree_from_intersections(n, &mu, &int(4), &i1, &i2, &i3, &int(1));
        assert_eq!(got, int(3) * &mu * &i1 + int(4) * &i2);
    }
}
