use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Row-sparse matrix over the rationals.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>], ncols: usize) -> Self {
        let mut m = Self::new(ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
            m.push_row(r.iter().cloned().enumerate());
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>], nrows: usize) -> Self {
        let mut rows = vec![BTreeMap::new(); nrows];
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "ragged column");
            for (i, x) in col.iter().enumerate() {
                if !x.is_zero() {
                    rows[i].insert(j, x.clone());
                }
            }
        }
        Self {
            ncols: cols.len(),
            rows,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Appends a row given as `(column, value)` pairs; repeated columns add.
    pub fn push_row<I: IntoIterator<Item = (usize, Rational)>>(&mut self, entries: I) {
        let mut row = BTreeMap::new();
        for (j, x) in entries {
            assert!(j < self.ncols, "column {j} out of range");
            if x.is_zero() {
                continue;
            }
            let e = row.entry(j).or_insert_with(Rational::zero);
            *e += x;
            if e.is_zero() {
                row.remove(&j);
            }
        }
        self.rows.push(row);
    }

    /// Appends all rows of `other` (same column count).
    pub fn stack(&mut self, other: &SparseMatrix) {
        assert_eq!(self.ncols, other.ncols);
        self.rows.extend(other.rows.iter().cloned());
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .fold(Rational::zero(), |acc, (j, x)| acc + x * &v[*j])
            })
            .collect()
    }
}

type IntRow = BTreeMap<usize, BigInt>;

/// Clears denominators and divides out the content, so the row is a
/// primitive integer vector with the same span.
fn primitive_integer_row(row: &BTreeMap<usize, Rational>) -> IntRow {
    let lcm = row
        .values()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: IntRow = row
        .iter()
        .map(|(j, x)| (*j, (x * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut IntRow) {
    row.retain(|_, x| !x.is_zero());
    let g = row.values().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.values_mut() {
            *x = &*x / &g;
        }
    }
}

/// `target <- p * target - f * pivot_row`, where `p` is the pivot entry of
/// `pivot_row` at `col` and `f` is the entry of `target` at `col`. Clears the
/// column without introducing fractions.
fn eliminate(target: &mut IntRow, pivot_row: &IntRow, col: usize) {
    let f = match target.get(&col) {
        Some(f) => f.clone(),
        None => return,
    };
    let p = &pivot_row[&col];
    for x in target.values_mut() {
        *x *= p;
    }
    for (j, y) in pivot_row {
        let e = target.entry(*j).or_insert_with(BigInt::zero);
        *e -= &f * y;
    }
    make_primitive(target);
}

/// Fraction-free Gauss–Jordan reduction. Returns `(pivot column, row)`
/// pairs such that every row vanishes in the other rows' pivot columns.
fn reduce(m: &SparseMatrix) -> Vec<(usize, IntRow)> {
    let mut basis: Vec<(usize, IntRow)> = Vec::new();
    for row in &m.rows {
        let mut r = primitive_integer_row(row);
        for (pc, b) in &basis {
            eliminate(&mut r, b, *pc);
        }
        // Pick the entry of smallest magnitude as pivot to slow coefficient growth.
        let pivot = r
            .iter()
            .min_by(|(_, x), (_, y)| x.abs().cmp(&y.abs()))
            .map(|(j, _)| *j);
        let Some(pc) = pivot else { continue };
        for (_, b) in basis.iter_mut() {
            eliminate(b, &r, pc);
        }
        basis.push((pc, r));
    }
    basis
}

/// Basis of the right null space `{v : M v = 0}`, with exact entries.
///
/// The basis is the standard one attached to the reduced echelon form: one
/// vector per non-pivot column, carrying a 1 in that column. A matrix with no
/// rows yields the full standard basis.
pub fn kernel(m: &SparseMatrix) -> Vec<Vec<Rational>> {
    let basis = reduce(m);
    let mut is_pivot = vec![false; m.ncols];
    for (pc, _) in &basis {
        is_pivot[*pc] = true;
    }
    (0..m.ncols)
        .filter(|j| !is_pivot[*j])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.ncols];
            v[free] = Rational::one();
            for (pc, row) in &basis {
                if let Some(x) = row.get(&free) {
                    v[*pc] = -Rational::new(x.clone(), row[pc].clone());
                }
            }
            v
        })
        .collect()
}

pub fn rank(m: &SparseMatrix) -> usize {
    reduce(m).len()
}

/// Solution set of an affine system `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution {
    Inconsistent,
    Solutions {
        particular: Vec<Rational>,
        homogeneous: Vec<Vec<Rational>>,
    },
}

impl AffineSolution {
    /// The unique solution, if the system has exactly one.
    pub fn unique(&self) -> Option<&[Rational]> {
        match self {
            AffineSolution::Solutions {
                particular,
                homogeneous,
            } if homogeneous.is_empty() => Some(particular),
            _ => None,
        }
    }
}

/// Solves `A x = b` exactly by computing the kernel of `[A | -b]`.
pub fn solve_affine(a: &SparseMatrix, b: &[Rational]) -> AffineSolution {
    assert_eq!(a.nrows(), b.len());
    let n = a.ncols();
    let mut aug = SparseMatrix::new(n + 1);
    for (row, rhs) in a.rows.iter().zip(b) {
        aug.push_row(
            row.iter()
                .map(|(j, x)| (*j, x.clone()))
                .chain(std::iter::once((n, -rhs.clone()))),
        );
    }
    let ker = kernel(&aug);
    let Some(anchor) = ker.iter().find(|v| !v[n].is_zero()).cloned() else {
        return AffineSolution::Inconsistent;
    };
    let s = anchor[n].clone();
    let particular: Vec<Rational> = anchor[..n].iter().map(|x| x / &s).collect();
    // Every other kernel vector, with its affine part removed, is a
    // homogeneous solution; the anchor itself contributes nothing new.
    let homogeneous = ker
        .iter()
        .filter(|v| **v != anchor)
        .map(|v| {
            let t = &v[n] / &s;
            (0..n).map(|j| &v[j] - &anchor[j] * &t).collect()
        })
        .collect();
    AffineSolution::Solutions {
        particular,
        homogeneous,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{int, rat};

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|x| int(*x)).collect())
            .collect();
        SparseMatrix::from_dense(&rows, ncols)
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel(&dense(&[&[1, 0], &[0, 1]])).is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let k = kernel(&dense(&[&[0, 0], &[0, 0]]));
        assert_eq!(k, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    }

    #[test]
    fn row_one_one() {
        // x + y = 0
        let k = kernel(&dense(&[&[1, 1]]));
        assert_eq!(k.len(), 1);
        let v = &k[0];
        // Normalise to (1, -1).
        let s = v[0].clone();
        assert_eq!(vec![&v[0] / &s, &v[1] / &s], vec![int(1), int(-1)]);
    }

    #[test]
    fn empty_matrix_yields_full_basis() {
        let k = kernel(&SparseMatrix::new(3));
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn rational_entries() {
        let rows = vec![vec![rat(1, 2), rat(1, 3)], vec![int(3), int(2)]];
        let m = SparseMatrix::from_dense(&rows, 2);
        assert_eq!(rank(&m), 1);
        let k = kernel(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn affine_unique_and_inconsistent() {
        let a = dense(&[&[1, 0], &[0, 1]]);
        let sol = solve_affine(&a, &[int(1), int(0)]);
        assert_eq!(sol.unique(), Some(&[int(1), int(0)][..]));

        let a = dense(&[&[1, 0], &[1, 0]]);
        assert_eq!(solve_affine(&a, &[int(1), int(2)]), AffineSolution::Inconsistent);
    }
}
