//! Finite candidate sets of one-parameter subgroups for pairs of degree `d`
//! hypersurfaces and hyperplanes in `P^{n+1}`.
//!
//! The Hilbert–Mumford function of a pair is piecewise linear on the cone of
//! normalized weights, with linearity domains cut out by the hyperplanes
//! `<I - J, a> = 0` (`I`, `J` monomials of degree `d`) together with the
//! chamber walls `a_i = a_{i+1}`. Its sign over the cone is therefore decided on
//! the rays of that arrangement. Generation enumerates every `n`-subset of
//! distinct normals, intersects it with `sum a_i = 0`, keeps one-dimensional
//! solutions that land in the normalized cone, and primitivizes.

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::path::Path;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::one_param::OneParamSubgroup;
use crate::poly::Monomial;

pub const GENERATOR_TAG: &str = "arrangement-vertices-v1";
pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone)]
pub struct CandidateConfig {
    /// Hard cap on the number of linear systems solved.
    pub max_systems: u128,
    /// Drop candidates with `max |a_i| > bound`. The result is then flagged incomplete.
    pub weight_bound: Option<i64>,
}

impl Default for CandidateConfig {
    fn default() -> Self {
        CandidateConfig { max_systems: 500_000_000, weight_bound: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSet {
    pub n: usize,
    pub d: u32,
    /// Sorted ascending, no duplicates.
    pub candidates: Vec<OneParamSubgroup>,
    /// False when a weight bound pruned the enumeration.
    pub complete: bool,
}

impl CandidateSet {
    pub fn nvars(&self) -> usize {
        self.n + 2
    }

    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn contains(&self, weights: &[i64]) -> bool {
        self.candidates.iter().any(|c| c.weights() == weights)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, OneParamSubgroup> {
        self.candidates.iter()
    }
}

/// Distinct primitive normals of the arrangement, first nonzero entry positive.
pub fn arrangement_normals(n: usize, d: u32) -> Vec<Vec<i64>> {
    let nvars = n + 2;
    let monos = Monomial::all_of_degree(nvars, d);
    let mut normals = BTreeSet::new();
    for (i, a) in monos.iter().enumerate() {
        for b in &monos[i + 1..] {
            let diff: Vec<i64> = a
                .exponents()
                .iter()
                .zip(b.exponents())
                .map(|(&x, &y)| x as i64 - y as i64)
                .collect();
            normals.insert(primitive_oriented(diff));
        }
    }
    for i in 0..nvars - 1 {
        let mut e = vec![0; nvars];
        e[i] = 1;
        e[i + 1] = -1;
        normals.insert(e);
    }
    normals.into_iter().collect()
}

fn primitive_oriented(mut v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    v
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Determinant by fraction-free elimination.
fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let size = m.len();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..size {
        if m[k][k] == 0 {
            match (k + 1..size).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[size - 1][size - 1]
}

/// Generator of the kernel of a full-rank `(m-1) x m` integer matrix, or
/// `None` when the rows are dependent.
fn kernel_ray(rows: &[&[i64]]) -> Option<Vec<i64>> {
    let m = rows[0].len();
    let mut v = Vec::with_capacity(m);
    for skip in 0..m {
        let minor: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| (0..m).filter(|&c| c != skip).map(|c| r[c] as i128).collect())
            .collect();
        let sign = if skip % 2 == 0 { 1 } else { -1 };
        v.push(sign * det(minor));
    }
    if v.iter().all(|&x| x == 0) {
        return None;
    }
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    Some(v.into_iter().map(|x| (x / g) as i64).collect())
}

fn in_normalized_cone(v: &[i64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

pub fn generate_candidates(n: usize, d: u32) -> Result<CandidateSet> {
    generate_candidates_with(n, d, &CandidateConfig::default())
}

pub fn generate_candidates_with(n: usize, d: u32, config: &CandidateConfig) -> Result<CandidateSet> {
    if n < 1 || d < 2 {
        return Err(Error::invalid(format!("candidate generation needs n >= 1 and d >= 2, got n={n}, d={d}")));
    }
    let normals = arrangement_normals(n, d);
    let systems = binomial_u128(normals.len(), n);
    if systems > config.max_systems {
        return Err(Error::Envelope(format!(
            "(n, d) = ({n}, {d}) needs {systems} linear systems, cap is {}",
            config.max_systems
        )));
    }
    let nvars = n + 2;
    let ones = vec![1i64; nvars];

    let found: HashSet<Vec<i64>> = (0..normals.len())
        .into_par_iter()
        .fold(HashSet::new, |mut acc, first| {
            let mut chosen: Vec<usize> = vec![first];
            collect_rays(&normals, &ones, n, &mut chosen, &mut acc);
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        });

    let mut complete = true;
    let mut candidates: Vec<OneParamSubgroup> = found
        .into_iter()
        .filter(|w| match config.weight_bound {
            Some(b) if w.iter().any(|x| x.abs() > b) => {
                complete = false;
                false
            }
            _ => true,
        })
        .map(|w| OneParamSubgroup::from_normalized(w).expect("rays are normalized"))
        .collect();
    candidates.sort();
    Ok(CandidateSet { n, d, candidates, complete })
}

fn collect_rays(
    normals: &[Vec<i64>],
    ones: &[i64],
    want: usize,
    chosen: &mut Vec<usize>,
    out: &mut HashSet<Vec<i64>>,
) {
    if chosen.len() == want {
        let mut rows: Vec<&[i64]> = Vec::with_capacity(want + 1);
        rows.push(ones);
        rows.extend(chosen.iter().map(|&i| normals[i].as_slice()));
        if let Some(v) = kernel_ray(&rows) {
            if in_normalized_cone(&v) {
                out.insert(v);
            } else {
                let neg: Vec<i64> = v.iter().map(|x| -x).collect();
                if in_normalized_cone(&neg) {
                    out.insert(neg);
                }
            }
        }
        return;
    }
    let start = chosen.last().map_or(0, |&i| i + 1);
    for next in start..normals.len() {
        chosen.push(next);
        collect_rays(normals, ones, want, chosen, out);
        chosen.pop();
    }
}

/// On-disk form of a candidate set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CandidateCacheFile {
    pub format_version: u32,
    pub n: usize,
    pub d: u32,
    pub generator: String,
    pub complete: bool,
    pub candidates: Vec<Vec<i64>>,
}

impl From<&CandidateSet> for CandidateCacheFile {
    fn from(set: &CandidateSet) -> Self {
        CandidateCacheFile {
            format_version: CACHE_FORMAT_VERSION,
            n: set.n,
            d: set.d,
            generator: GENERATOR_TAG.to_string(),
            complete: set.complete,
            candidates: set.candidates.iter().map(|c| c.weights().to_vec()).collect(),
        }
    }
}

pub fn write_candidates(set: &CandidateSet, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(&CandidateCacheFile::from(set))?;
    fs::write(path, text)?;
    Ok(())
}

/// Generates the full candidate set for `(n, d)` and stores it at `path`.
pub fn cache_candidates(n: usize, d: u32, path: &Path) -> Result<CandidateSet> {
    let set = generate_candidates(n, d)?;
    write_candidates(&set, path)?;
    Ok(set)
}

pub fn load_candidates(path: &Path) -> Result<CandidateSet> {
    let text = fs::read_to_string(path)?;
    let file: CandidateCacheFile =
        serde_json::from_str(&text).map_err(|e| Error::Cache(format!("{}: {e}", path.display())))?;
    if file.format_version != CACHE_FORMAT_VERSION {
        return Err(Error::Cache(format!(
            "format version {} does not match {CACHE_FORMAT_VERSION}",
            file.format_version
        )));
    }
    if file.generator != GENERATOR_TAG {
        return Err(Error::Cache(format!(
            "generator {:?} does not match {GENERATOR_TAG:?}",
            file.generator
        )));
    }
    let mut candidates = Vec::with_capacity(file.candidates.len());
    for w in file.candidates {
        if w.len() != file.n + 2 {
            return Err(Error::Cache(format!("candidate {w:?} has wrong length for n={}", file.n)));
        }
        let lambda = OneParamSubgroup::from_normalized(w).map_err(|e| Error::Cache(e.to_string()))?;
        candidates.push(lambda);
    }
    candidates.sort();
    candidates.dedup();
    if candidates.is_empty() {
        return Err(Error::Cache("candidate list is empty".into()));
    }
    Ok(CandidateSet { n: file.n, d: file.d, candidates, complete: file.complete })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        assert_eq!(det(vec![vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(det(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn kernel_of_a2_system() {
        // a0 = a1 and a0 + a1 + a3 = 3 a2 inside sum a = 0
        let ones = [1, 1, 1, 1];
        let facet = [1, -1, 0, 0];
        let wall = [1, 1, -3, 1];
        let v = kernel_ray(&[&ones, &facet, &wall]).unwrap();
        let v = if v[0] < 0 { v.iter().map(|x| -x).collect() } else { v };
        assert_eq!(v, vec![1, 1, 0, -2]);
        assert!(kernel_ray(&[&ones, &facet, &facet]).is_none());
    }

    #[test]
    fn small_case_contains_known_rays() {
        let set = generate_candidates(2, 3).unwrap();
        assert!(set.contains(&[1, 1, 0, -2]));
        assert!(set.contains(&[1, 1, -1, -1]));
        assert!(set.contains(&[3, -1, -1, -1]));
        assert!(set.complete);
        let line = generate_candidates(1, 2).unwrap();
        assert!(line.contains(&[2, -1, -1]));
        assert!(line.contains(&[1, 1, -2]));
    }

    #[test]
    fn envelope_and_bounds() {
        assert!(generate_candidates(0, 3).is_err());
        assert!(generate_candidates(2, 1).is_err());
        let tight = CandidateConfig { max_systems: 10, weight_bound: None };
        assert!(matches!(generate_candidates_with(2, 3, &tight), Err(Error::Envelope(_))));
        let pruned = CandidateConfig { weight_bound: Some(1), ..Default::default() };
        let set = generate_candidates_with(2, 3, &pruned).unwrap();
        assert!(!set.complete);
        assert!(set.iter().all(|c| c.weights().iter().all(|x| x.abs() <= 1)));
    }
}
