use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{int, BivarPoly, PolyA, Rational};

/// Dense matrix with entries in `Q[a]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<PolyA>,
}

impl PolyMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            entries: vec![PolyA::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &PolyA::one())
    }

    /// `s * Id_n`.
    pub fn scalar(n: usize, s: &PolyA) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<PolyA>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix");
            entries.extend(r);
        }
        Self {
            nrows,
            ncols,
            entries,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &PolyA {
        &self.entries[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: PolyA) {
        self.entries[i * self.ncols + j] = x;
    }

    pub fn add_at(&mut self, i: usize, j: usize, x: &PolyA) {
        let idx = i * self.ncols + j;
        self.entries[idx] = &self.entries[idx] + x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(PolyA::is_zero)
    }

    pub fn rows(&self) -> Vec<Vec<PolyA>> {
        self.entries
            .chunks(self.ncols.max(1))
            .take(self.nrows)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn trace(&self) -> PolyA {
        assert!(self.is_square());
        (0..self.nrows).fold(PolyA::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Multiplies every entry by the polynomial `s`.
    pub fn scale(&self, s: &PolyA) -> Self {
        Self {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn map<F: Fn(&PolyA) -> PolyA>(&self, f: F) -> Self {
        Self {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entrywise evaluation at `a = x`, returned as a constant matrix.
    pub fn specialize(&self, x: &Rational) -> Self {
        self.map(|p| PolyA::constant(p.eval(x)))
    }

    pub fn pow(&self, n: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.nrows);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates `p(c := self)` for a polynomial `p` in `a` and `c`, with `a`
    /// acting as the scalar `a`.
    pub fn eval_bivar(&self, p: &BivarPoly) -> Self {
        assert!(self.is_square());
        let n = self.nrows;
        let mut acc = Self::zeros(n, n);
        let deg = p.degree_in_c().unwrap_or(0);
        for k in (0..=deg).rev() {
            acc = &(&acc * self) + &Self::scalar(n, &p.coeff_in_c(k));
        }
        acc
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        PolyMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.nrows, self.ncols), (rhs.nrows, rhs.ncols));
        PolyMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.ncols, rhs.nrows, "shape mismatch in product");
        let mut out = PolyMatrix::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let y = rhs.get(k, j);
                    if !y.is_zero() {
                        out.add_at(i, j, &(x * y));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `det(c * Id - C)` as a polynomial in `a` and `c`.
///
/// Computed with the Faddeev–LeVerrier recursion over `Q[a]`; the division
/// by `k` at step `k` is exact because the coefficients are rational.
pub fn char_poly_in_c(c_matrix: &PolyMatrix) -> BivarPoly {
    assert!(c_matrix.is_square(), "characteristic polynomial of a non-square matrix");
    let n = c_matrix.nrows();
    // coeffs[k] is the coefficient of c^k.
    let mut coeffs = vec![PolyA::zero(); n + 1];
    coeffs[n] = PolyA::one();
    let mut m = PolyMatrix::zeros(n, n);
    for k in 1..=n {
        m = &(c_matrix * &m) + &PolyMatrix::scalar(n, &coeffs[n + 1 - k]);
        let t = (c_matrix * &m).trace();
        coeffs[n - k] = t.scale(&(-int(1) / int(k as i64)));
    }
    BivarPoly::from_c_coefficients(&coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a_poly(coeffs: &[(u32, i64)]) -> PolyA {
        PolyA::from_terms(coeffs.iter().map(|(e, c)| (*e, int(*c))))
    }

    #[test]
    fn char_poly_of_zero_one_by_one() {
        let m = PolyMatrix::from_rows(vec![vec![PolyA::zero()]]);
        assert_eq!(char_poly_in_c(&m), BivarPoly::c());
    }

    #[test]
    fn char_poly_of_defining_t_matrix() {
        // [[0,1],[0,2a]] -> c^2 - 2ac
        let m = PolyMatrix::from_rows(vec![
            vec![PolyA::zero(), PolyA::one()],
            vec![PolyA::zero(), a_poly(&[(1, 2)])],
        ]);
        let expected =
            &BivarPoly::c().pow(2) - &BivarPoly::monomial(int(2), 1, 1);
        assert_eq!(char_poly_in_c(&m), expected);
    }

    #[test]
    fn char_poly_of_diagonal() {
        // diag(a, -a) -> c^2 - a^2
        let m = PolyMatrix::from_rows(vec![
            vec![PolyA::a(), PolyA::zero()],
            vec![PolyA::zero(), -PolyA::a()],
        ]);
        let expected = &BivarPoly::c().pow(2) - &BivarPoly::a().pow(2);
        assert_eq!(char_poly_in_c(&m), expected);
    }

    #[test]
    fn cayley_hamilton_on_fixed_matrix() {
        let m = PolyMatrix::from_rows(vec![
            vec![a_poly(&[(0, 1), (2, 3)]), PolyA::a(), PolyA::one()],
            vec![PolyA::zero(), a_poly(&[(1, -2)]), a_poly(&[(0, 5)])],
            vec![a_poly(&[(3, 1)]), PolyA::one(), PolyA::zero()],
        ]);
        let p = char_poly_in_c(&m);
        assert!(p.is_monic_in_c());
        assert_eq!(p.degree_in_c(), Some(3));
        assert!(m.eval_bivar(&p).is_zero());
    }
}
