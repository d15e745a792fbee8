//! Torus GIT by the centroid criterion: a section is stable, polystable,
//! semistable or unstable according to where the origin sits relative to the
//! convex hull of the characters occurring in it.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Largest torus rank the exact hull computation handles.
pub const MAX_RANK: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightTable {
    pub rank: usize,
    /// One character per basis section.
    pub weights: Vec<Vec<i64>>,
}

impl WeightTable {
    pub fn new(rank: usize, weights: Vec<Vec<i64>>) -> Result<Self> {
        let table = WeightTable { rank, weights };
        table.validate()?;
        Ok(table)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank < 1 {
            return Err(Error::invalid("torus rank must be at least 1"));
        }
        if self.weights.is_empty() {
            return Err(Error::invalid("weight table is empty"));
        }
        if let Some(w) = self.weights.iter().find(|w| w.len() != self.rank) {
            return Err(Error::invalid(format!("character {w:?} does not have length {}", self.rank)));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Characters of the rank two torus on `H^0(S, -K_S)` for the cubic surface
/// with three `A2` points, in the basis `x0, x1, x2, x3`.
pub fn three_a2_weight_table() -> WeightTable {
    WeightTable { rank: 2, weights: vec![vec![1, 0], vec![0, 0], vec![0, 1], vec![-1, -1]] }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusVerdictKind {
    Stable,
    StrictlyPolystable,
    StrictlySemistable,
    Unstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OriginPosition {
    Interior,
    RelativeInterior,
    Boundary,
    Outside,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusVerdict {
    pub kind: TorusVerdictKind,
    pub hull_dimension: usize,
    pub origin_position: OriginPosition,
}

fn check_coefficients(c: &[Rational], table: &WeightTable) -> Result<()> {
    table.validate()?;
    if c.len() != table.len() {
        return Err(Error::invalid(format!(
            "{} coefficients for a table of {} characters",
            c.len(),
            table.len()
        )));
    }
    if c.iter().all(Zero::is_zero) {
        return Err(Error::invalid("coefficient vector is zero"));
    }
    Ok(())
}

/// `{ table[i] : c_i != 0 }`.
pub fn weight_set(c: &[Rational], table: &WeightTable) -> Result<BTreeSet<Vec<i64>>> {
    check_coefficients(c, table)?;
    Ok(c.iter()
        .zip(&table.weights)
        .filter(|(ci, _)| !ci.is_zero())
        .map(|(_, w)| w.clone())
        .collect())
}

/// The occurring characters translated by `-shift`, as for the linearisation
/// twisted by `shift`.
pub fn shifted_weight_set(
    c: &[Rational],
    table: &WeightTable,
    shift: &[Rational],
) -> Result<BTreeSet<Vec<Rational>>> {
    if shift.len() != table.rank {
        return Err(Error::invalid(format!(
            "shift has length {}, torus rank is {}",
            shift.len(),
            table.rank
        )));
    }
    Ok(weight_set(c, table)?
        .into_iter()
        .map(|w| w.iter().zip(shift).map(|(&a, s)| int(a) - s).collect())
        .collect())
}

/// Row-reduces in place and returns the rank.
fn row_reduce(rows: &mut [Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Rational::one() / &rows[rank][col];
        for v in rows[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *v -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_of(rows: &[Vec<Rational>]) -> usize {
    row_reduce(&mut rows.to_vec())
}

fn det(m: &[Vec<Rational>]) -> Rational {
    match m.len() {
        0 => Rational::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<Rational>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()).collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(Rational::zero(), |a, b| a + b),
    }
}

/// Coordinates of `points` and `target` in an affine frame of the affine hull
/// of `points`, or `None` for the target when it lies off that hull.
fn affine_frame(
    points: &[Vec<Rational>],
    target: &[Rational],
) -> (usize, Vec<Vec<Rational>>, Option<Vec<Rational>>) {
    let base = &points[0];
    let diff = |p: &[Rational]| -> Vec<Rational> { p.iter().zip(base).map(|(a, b)| a - b).collect() };
    let mut basis_rows: Vec<Vec<Rational>> = points[1..].iter().map(|p| diff(p)).collect();
    let dim = if basis_rows.is_empty() { 0 } else { row_reduce(&mut basis_rows) };
    basis_rows.truncate(dim);
    let coords = |v: &[Rational]| -> Option<Vec<Rational>> {
        let mut residual = v.to_vec();
        let mut out = Vec::with_capacity(dim);
        for row in &basis_rows {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("reduced row is nonzero");
            let coef = residual[pivot].clone();
            for (r, b) in residual.iter_mut().zip(row) {
                *r -= &coef * b;
            }
            out.push(coef);
        }
        residual.iter().all(Zero::is_zero).then_some(out)
    };
    let local: Vec<Vec<Rational>> =
        points.iter().map(|p| coords(&diff(p)).expect("point lies on its own hull")).collect();
    (dim, local, coords(&diff(target)))
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Position of `target` relative to `conv(points)` inside the affine hull.
fn locate(points: &[Vec<Rational>], target: &[Rational]) -> (usize, OriginPosition) {
    let (dim, local, target) = affine_frame(points, target);
    let Some(target) = target else {
        return (dim, OriginPosition::Outside);
    };
    if dim == 0 {
        return (0, OriginPosition::RelativeInterior);
    }
    let mut on_boundary = false;
    for subset in k_subsets(local.len(), dim) {
        let anchor = &local[subset[0]];
        let rows: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| local[i].iter().zip(anchor).map(|(a, b)| a - b).collect())
            .collect();
        let normal: Vec<Rational> = (0..dim)
            .map(|j| {
                let minor: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let value = det(&minor);
                if j % 2 == 0 {
                    value
                } else {
                    -value
                }
            })
            .collect();
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let level = |p: &[Rational]| -> Rational {
            p.iter().zip(anchor).zip(&normal).map(|((a, b), n)| (a - b) * n).fold(Rational::zero(), |x, y| x + y)
        };
        let sides: Vec<Rational> = local.iter().map(|p| level(p)).collect();
        let sign = if sides.iter().any(Signed::is_positive) {
            if sides.iter().any(Signed::is_negative) {
                continue;
            }
            -Rational::one()
        } else {
            Rational::one()
        };
        // every point now satisfies sign * level <= 0
        let t = sign * level(&target);
        if t.is_positive() {
            return (dim, OriginPosition::Outside);
        }
        if t.is_zero() {
            on_boundary = true;
        }
    }
    (dim, if on_boundary { OriginPosition::Boundary } else { OriginPosition::Interior })
}

/// Centroid criterion for the section with coefficients `c` under the
/// linearisation twisted by `shift`.
pub fn centroid_verdict(c: &[Rational], table: &WeightTable, shift: &[Rational]) -> Result<TorusVerdict> {
    if table.rank > MAX_RANK {
        return Err(Error::invalid(format!("torus rank {} exceeds {MAX_RANK}", table.rank)));
    }
    let points: Vec<Vec<Rational>> = shifted_weight_set(c, table, shift)?.into_iter().collect();
    let origin = vec![Rational::zero(); table.rank];
    let (hull_dimension, position) = locate(&points, &origin);
    let full = hull_dimension == table.rank;
    let (kind, origin_position) = match position {
        OriginPosition::Outside => (TorusVerdictKind::Unstable, OriginPosition::Outside),
        OriginPosition::Boundary => (TorusVerdictKind::StrictlySemistable, OriginPosition::Boundary),
        OriginPosition::Interior | OriginPosition::RelativeInterior if full => {
            (TorusVerdictKind::Stable, OriginPosition::Interior)
        }
        _ => (TorusVerdictKind::StrictlyPolystable, OriginPosition::RelativeInterior),
    };
    Ok(TorusVerdict { kind, hull_dimension, origin_position })
}

/// Checks that `x_i -> x_{sigma(i)}` is induced by a linear automorphism of
/// the character lattice, so that it normalizes the torus.
fn check_table_symmetry(table: &WeightTable, sigma: &[usize]) -> Result<()> {
    crate::poly::check_permutation(sigma, table.len())?;
    let source: Vec<Vec<Rational>> =
        table.weights.iter().map(|w| w.iter().map(|&a| int(a)).collect()).collect();
    let stacked: Vec<Vec<Rational>> = (0..table.len())
        .map(|i| {
            let mut row = source[i].clone();
            row.extend(table.weights[sigma[i]].iter().map(|&a| int(a)));
            row
        })
        .collect();
    let image: Vec<Vec<Rational>> = stacked.iter().map(|row| row[table.rank..].to_vec()).collect();
    let r = rank_of(&source);
    if rank_of(&stacked) != r || rank_of(&image) != r {
        return Err(Error::invalid(format!(
            "permutation {sigma:?} does not act on the weight table by a lattice automorphism"
        )));
    }
    Ok(())
}

/// Centroid verdict for every translate `sigma . c` under `group`; the
/// verdicts must agree and the common one is returned.
pub fn extended_verdict(
    c: &[Rational],
    table: &WeightTable,
    shift: &[Rational],
    group: &[Vec<usize>],
) -> Result<TorusVerdict> {
    let base = centroid_verdict(c, table, shift)?;
    for sigma in group {
        check_table_symmetry(table, sigma)?;
        let mut moved = vec![Rational::zero(); c.len()];
        for (i, ci) in c.iter().enumerate() {
            moved[sigma[i]] = ci.clone();
        }
        let verdict = centroid_verdict(&moved, table, shift)?;
        if verdict != base {
            return Err(Error::invalid(format!(
                "verdict {:?} of the translate by {sigma:?} disagrees with {:?}",
                verdict.kind, base.kind
            )));
        }
    }
    Ok(base)
}

/// All permutations of `indices`, acting as the identity elsewhere.
pub fn permutations_of(indices: &[usize], len: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut images = Vec::new();
    rec(&mut indices.to_vec(), &mut Vec::new(), &mut images);
    images
        .into_iter()
        .map(|image| {
            let mut sigma: Vec<usize> = (0..len).collect();
            for (&from, to) in indices.iter().zip(image) {
                sigma[from] = to;
            }
            sigma
        })
        .collect()
}

/// The 0/1 coefficient vectors of all nonempty supports, in binary order.
pub fn support_patterns(len: usize) -> Vec<Vec<Rational>> {
    (1u32..(1 << len))
        .map(|mask| (0..len).map(|i| if mask >> i & 1 == 1 { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn c(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn zero_shift() -> Vec<Rational> {
        vec![int(0), int(0)]
    }

    #[test]
    fn table_examples() {
        let t = three_a2_weight_table();
        assert_eq!(t.len(), 4);
        assert_eq!(t.rank, 2);
        let sum: Vec<i64> = (0..2).map(|j| t.weights.iter().map(|w| w[j]).sum()).collect();
        assert_eq!(sum, vec![0, 0]);
        assert!(WeightTable::new(2, vec![vec![1]]).is_err());
    }

    #[test]
    fn weight_set_examples() {
        let t = three_a2_weight_table();
        assert_eq!(weight_set(&c(&[1, 1, 1, 1]), &t).unwrap().len(), 4);
        assert_eq!(weight_set(&c(&[0, 1, 0, 0]), &t).unwrap(), BTreeSet::from([vec![0, 0]]));
        assert_eq!(weight_set(&c(&[1, 0, 1, 0]), &t).unwrap(), BTreeSet::from([vec![1, 0], vec![0, 1]]));
        assert!(weight_set(&c(&[0, 0, 0, 0]), &t).is_err());
    }

    #[test]
    fn shifted_examples() {
        let t = three_a2_weight_table();
        let shifted = shifted_weight_set(&c(&[1, 1, 1, 1]), &t, &c(&[1, 0])).unwrap();
        let expected: BTreeSet<Vec<Rational>> =
            [[0, 0], [-1, 0], [-1, 1], [-2, -1]].iter().map(|p| c(p)).collect();
        assert_eq!(shifted, expected);
        assert!(shifted_weight_set(&c(&[1, 1, 1, 1]), &t, &c(&[1])).is_err());
        let big = centroid_verdict(&c(&[1, 1, 1, 1]), &t, &c(&[5, 5])).unwrap();
        assert_eq!(big.kind, TorusVerdictKind::Unstable);
    }

    #[test]
    fn three_a2_section_cases() {
        let t = three_a2_weight_table();
        for c1 in [ratio(0, 1), ratio(7, 3)] {
            let v = centroid_verdict(&[int(1), c1, int(1), int(1)], &t, &zero_shift()).unwrap();
            assert_eq!(v.kind, TorusVerdictKind::Stable);
            assert_eq!(v.origin_position, OriginPosition::Interior);
        }
        let star = centroid_verdict(&c(&[0, 1, 0, 0]), &t, &zero_shift()).unwrap();
        assert_eq!(star.kind, TorusVerdictKind::StrictlyPolystable);
        assert_eq!(star.hull_dimension, 0);
        let v = centroid_verdict(&c(&[1, 0, 1, 0]), &t, &zero_shift()).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::Unstable);
        let v = centroid_verdict(&c(&[1, 1, 1, 0]), &t, &zero_shift()).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::StrictlySemistable);
    }

    #[test]
    fn segment_through_origin_is_polystable() {
        let t = WeightTable::new(2, vec![vec![1, 1], vec![-2, -2], vec![3, 0]]).unwrap();
        let v = centroid_verdict(&c(&[1, 1, 0]), &t, &zero_shift()).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::StrictlyPolystable);
        assert_eq!(v.hull_dimension, 1);
        let tetra = WeightTable::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![-1, -1, -1]]).unwrap();
        let v = centroid_verdict(&c(&[1, 1, 1, 1]), &tetra, &c(&[0, 0, 0])).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::Stable);
        let v = centroid_verdict(&c(&[1, 1, 1, 0]), &tetra, &c(&[0, 0, 0])).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::Unstable);
    }

    #[test]
    fn extended_examples() {
        let t = three_a2_weight_table();
        let group = permutations_of(&[0, 2, 3], 4);
        assert_eq!(group.len(), 6);
        let v = extended_verdict(&c(&[1, 1, 1, 1]), &t, &zero_shift(), &group).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::Stable);
        let v = extended_verdict(&c(&[0, 1, 0, 0]), &t, &zero_shift(), &group).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::StrictlyPolystable);
        let v = extended_verdict(&c(&[0, 0, 1, 0]), &t, &zero_shift(), &group).unwrap();
        assert_eq!(v.kind, TorusVerdictKind::Unstable);
        let bad = vec![vec![1, 0, 2, 3]];
        assert!(extended_verdict(&c(&[1, 1, 1, 1]), &t, &zero_shift(), &bad).is_err());
    }
}
