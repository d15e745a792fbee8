//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are ordered graded-lexicographically with `x0 > x1 > ...`; the
//! same order drives canonical rendering and the single-divisor division used
//! by [`divides`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

/// Exponent vector of `x^I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Every monomial of total degree `degree`, in descending grlex order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn fill(prefix: &mut Vec<u32>, left: u32, slots: usize, out: &mut Vec<Monomial>) {
            if slots == 1 {
                prefix.push(left);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                fill(prefix, left - e, slots - 1, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars > 0 {
            fill(&mut Vec::with_capacity(nvars), degree, nvars, &mut out);
        }
        out
    }

    fn render(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        factors.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            f.write_str("1")
        } else {
            f.write_str(&self.render())
        }
    }
}

/// Map from monomial to nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(coeff: Rational, mono: Monomial) -> Self {
        let mut p = Self::zero(mono.nvars());
        p.add_term(mono, coeff);
        p
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(Rational::one(), Monomial::var(nvars, index))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, combining like terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::invalid(format!(
                    "monomial has {} exponents, expected {nvars}",
                    exps.len()
                )));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Common total degree of all terms, `None` for the zero polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of_degree(&self, degree: u32) -> bool {
        self.homogeneous_degree() == Some(degree)
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn mul_term(&self, mono: &Monomial, c: &Rational) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v * c)).collect(),
        }
    }

    /// Keeps only the terms selected by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Structured form: one record per term, highest term first.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord { exponents: m.0.clone(), coeff: c.to_string() })
            .collect()
    }

    pub fn from_records(nvars: usize, records: &[TermRecord]) -> Result<Self> {
        let terms = records
            .iter()
            .map(|r| Ok((r.exponents.clone(), parse_rational(&r.coeff)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(nvars, terms)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mono, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if mono.degree() == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono.render())?;
            } else {
                write!(f, "{abs}*{}", mono.render())?;
            }
        }
        Ok(())
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (m, c) in &rhs.terms {
            for (mm, cc) in self.mul_term(m, c).terms {
                out.add_term(mm, cc);
            }
        }
        out
    }
}

/// One term of the structured polynomial file form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// Parses a signed sum of terms such as `x0*x1*x3 + 1/2*x2^3 - 3`.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<SparsePolynomial> {
    if nvars < 1 {
        return Err(Error::invalid("nvars must be at least 1"));
    }
    Parser { src: text.as_bytes(), pos: 0, nvars }.polynomial()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn polynomial(&mut self) -> Result<SparsePolynomial> {
        let mut poly = SparsePolynomial::zero(self.nvars);
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -Rational::one()
            }
            Some(b'+') => {
                self.pos += 1;
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            self.skip_ws();
            let (mono, coeff) = self.term()?;
            poly.add_term(mono, sign * coeff);
            self.skip_ws();
            sign = match self.peek() {
                None => break,
                Some(b'+') => Rational::one(),
                Some(b'-') => -Rational::one(),
                Some(c) => return self.err(format!("unexpected character {:?}", c as char)),
            };
            self.pos += 1;
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.nvars];
        let mut coeff = Rational::one();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let at = self.pos;
                    let index: usize = self.digits()?.parse().map_err(|_| Error::Syntax {
                        position: at,
                        message: "variable index too large".into(),
                    })?;
                    if index >= self.nvars {
                        return Err(Error::VariableOutOfRange { index, nvars: self.nvars });
                    }
                    let mut e = 1u32;
                    self.skip_ws();
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let at = self.pos;
                        e = self.digits()?.parse().map_err(|_| Error::Syntax {
                            position: at,
                            message: "exponent too large".into(),
                        })?;
                    }
                    exps[index] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    let num: BigInt = self.digits()?.parse().expect("digits parse");
                    self.skip_ws();
                    let mut value = Rational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        self.skip_ws();
                        let den: BigInt = self.digits()?.parse().expect("digits parse");
                        if den.is_zero() {
                            return self.err("zero denominator");
                        }
                        value /= Rational::from_integer(den);
                    }
                    coeff *= value;
                }
                _ => return self.err("expected a number or a variable"),
            }
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((Monomial(exps), coeff));
            }
        }
    }
}

/// Exact test for `p = l * q`: divides `p` by the linear form `l` under grlex
/// and reports whether the remainder vanishes.
pub fn divides(l: &SparsePolynomial, p: &SparsePolynomial) -> Result<bool> {
    if l.nvars != p.nvars {
        return Err(Error::invalid("divisor and dividend have different variable counts"));
    }
    if l.is_zero() {
        return Err(Error::invalid("divisor is the zero polynomial"));
    }
    if !l.is_homogeneous_of_degree(1) {
        return Err(Error::invalid("divisor must be a homogeneous linear form"));
    }
    let (lead_mono, lead_coeff) = l.leading_term().map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let mut rest = p.clone();
    let mut remainder = SparsePolynomial::zero(p.nvars);
    while let Some((mono, coeff)) = rest.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
        match mono.checked_div(&lead_mono) {
            Some(quot) => {
                let factor = &coeff / &lead_coeff;
                rest = &rest - &l.mul_term(&quot, &factor);
            }
            None => {
                rest.terms.remove(&mono);
                remainder.add_term(mono, coeff);
            }
        }
    }
    Ok(remainder.is_zero())
}

/// Relabels variables: the exponent of `x_i` moves to `x_{sigma[i]}`.
pub fn apply_permutation(p: &SparsePolynomial, sigma: &[usize]) -> Result<SparsePolynomial> {
    check_permutation(sigma, p.nvars)?;
    let terms = p.terms.iter().map(|(m, c)| {
        let mut e = vec![0; p.nvars];
        for (i, &x) in m.0.iter().enumerate() {
            e[sigma[i]] = x;
        }
        (e, c.clone())
    });
    SparsePolynomial::from_terms(p.nvars, terms)
}

pub(crate) fn check_permutation(sigma: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if sigma.len() != n {
        return Err(Error::invalid(format!("permutation has length {}, expected {n}", sigma.len())));
    }
    for &s in sigma {
        if s >= n || std::mem::replace(&mut seen[s], true) {
            return Err(Error::invalid(format!("{sigma:?} is not a bijection on 0..{n}")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(text: &str) -> SparsePolynomial {
        parse_polynomial(text, 4).unwrap()
    }

    #[test]
    fn parses_a2_leading_part() {
        let f = p("x0*x1*x3 + x2^3");
        assert_eq!(f.len(), 2);
        assert_eq!(f.coeff(&Monomial::new(vec![1, 1, 0, 1])), int(1));
        assert_eq!(f.coeff(&Monomial::new(vec![0, 0, 3, 0])), int(1));
    }

    #[test]
    fn zero_and_cancellation() {
        assert!(p("0").is_zero());
        assert!(p("1/2*x0^3 - 1/2*x0^3").is_zero());
        assert_eq!(p("0").to_string(), "0");
    }

    #[test]
    fn combines_like_terms_and_coefficients() {
        let f = p("2*x0*3*x1 - x1*x0 + 1/2*x2^2*x2");
        assert_eq!(f.coeff(&Monomial::new(vec![1, 1, 0, 0])), int(5));
        assert_eq!(f.coeff(&Monomial::new(vec![0, 0, 3, 0])), ratio(1, 2));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_polynomial("x4", 4), Err(Error::VariableOutOfRange { index: 4, .. })));
        assert!(matches!(parse_polynomial("x0 +", 4), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x0 ** x1", 4), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("y0", 4), Err(Error::Syntax { position: 0, .. })));
        assert!(parse_polynomial("x0", 0).is_err());
        assert!(parse_polynomial("1/0*x0", 4).is_err());
    }

    #[test]
    fn renders_in_grlex_order() {
        let f = p("x2^3 + x0*x1*x3 - 1/2*x3^3 + 4");
        assert_eq!(f.to_string(), "x0*x1*x3 + x2^3 - 1/2*x3^3 + 4");
        assert_eq!(p("-x1").to_string(), "-x1");
    }

    #[test]
    fn divides_examples() {
        let x2 = p("x2");
        assert!(divides(&x2, &p("x2*x0*x1")).unwrap());
        assert!(!divides(&x2, &p("x0*x1*x3 + x2^3")).unwrap());
        assert!(divides(&p("x0 + x1"), &p("x0^2 - x1^2")).unwrap());
        assert!(!divides(&p("x0 + x1"), &p("x0^2 + x1^2")).unwrap());
        assert!(divides(&p("x0 - 2*x3"), &(&p("x0 - 2*x3") * &p("x1^2 + x2*x3"))).unwrap());
        assert!(divides(&x2, &SparsePolynomial::zero(4)).unwrap());
    }

    #[test]
    fn divides_errors() {
        assert!(divides(&SparsePolynomial::zero(4), &p("x0")).is_err());
        assert!(divides(&p("x0^2"), &p("x0^3")).is_err());
        assert!(divides(&parse_polynomial("x0", 3).unwrap(), &p("x0")).is_err());
    }

    #[test]
    fn permutation_examples() {
        let swapped = apply_permutation(&p("x0*x1*x3"), &[2, 1, 0, 3]).unwrap();
        assert_eq!(swapped, p("x2*x1*x3"));
        let f = p("x0*x1*x3 + x2^3");
        assert_eq!(apply_permutation(&f, &[0, 1, 2, 3]).unwrap(), f);
        // cycle 0 -> 2 -> 3 -> 0
        assert_eq!(apply_permutation(&p("x2^3"), &[2, 1, 3, 0]).unwrap(), p("x3^3"));
        assert!(apply_permutation(&f, &[0, 0, 1, 2]).is_err());
        assert!(apply_permutation(&f, &[0, 1, 2]).is_err());
    }

    #[test]
    fn records_round_trip() {
        let f = p("x0*x1*x3 + 2/3*x2^3 - x3^3");
        let back = SparsePolynomial::from_records(4, &f.to_records()).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.to_records()[0], TermRecord { exponents: vec![1, 1, 0, 1], coeff: "1".into() });
    }

    #[test]
    fn all_of_degree_counts() {
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(5, 4).len(), 70);
        let ms = Monomial::all_of_degree(4, 3);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }
}
