//! Dense matrices of univariate polynomials.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use super::poly::{Poly, Sigma, Variable};
use super::rational::Rational;
use crate::error::{Error, Result};

pub struct PolyMatrix<V> {
    rows: usize,
    cols: usize,
    data: Vec<Poly<V>>,
}

/// Matrix over `K[σ]`; t-trailing and t-leading matrices live here.
pub type SigmaMatrix = PolyMatrix<Sigma>;

impl<V> Clone for PolyMatrix<V> {
    fn clone(&self) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }
}

impl<V> PartialEq for PolyMatrix<V> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<V> Eq for PolyMatrix<V> {}

impl<V> PolyMatrix<V> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: (0..rows * cols).map(|_| Poly::zero()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one();
        }
        m
    }

    /// Panics if the rows have differing lengths.
    pub fn from_rows(rows: Vec<Vec<Poly<V>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer coefficients by ascending power for each entry.
    pub fn from_int_rows(rows: &[&[&[i64]]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|c| Poly::from_ints(c)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Poly<V>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Poly<V>] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set_row(&mut self, i: usize, row: &[Poly<V>]) {
        self.row_mut(i).clone_from_slice(row);
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly<V>>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rows `range` as a new matrix.
    pub fn row_block(&self, range: std::ops::Range<usize>) -> Self {
        PolyMatrix {
            rows: range.len(),
            cols: self.cols,
            data: self.data[range.start * self.cols..range.end * self.cols].to_vec(),
        }
    }

    pub fn stack(&self, below: &Self) -> Self {
        assert_eq!(self.cols, below.cols, "column counts differ");
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        PolyMatrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Poly::is_zero)
    }

    /// Largest entry degree, `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.data.iter().filter_map(Poly::degree).max()
    }

    pub fn map(&self, f: impl FnMut(&Poly<V>) -> Poly<V>) -> Self {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Substitutes `v -> c·v` in every entry.
    pub fn scale_var(&self, c: &Rational) -> Self {
        self.map(|p| p.scale_var(c))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::dims(
                format!("{} rows", self.cols),
                format!("{} rows", rhs.rows),
            ));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::dims(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", rhs.rows, rhs.cols),
            ));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<Poly<V>> {
        if !self.is_square() {
            return Err(Error::dims(
                "a square matrix",
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Ok(Poly::zero());
                };
                m.swap_rows(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = num.exact_div(&prev)?;
                }
                m[(i, k)] = Poly::zero();
            }
            prev = m[(k, k)].clone();
        }
        let det = m[(n - 1, n - 1)].clone();
        Ok(if negate { -det } else { det })
    }

    /// Laplace expansion along the first row. Exponential; meant for small
    /// matrices and cross-checking.
    pub fn cofactor_determinant(&self) -> Result<Poly<V>> {
        if !self.is_square() {
            return Err(Error::dims(
                "a square matrix",
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        Ok(cofactor(self))
    }
}

fn cofactor<V>(m: &PolyMatrix<V>) -> Poly<V> {
    let n = m.rows;
    match n {
        0 => Poly::one(),
        1 => m[(0, 0)].clone(),
        _ => {
            let mut acc = Poly::zero();
            for j in 0..n {
                if m[(0, j)].is_zero() {
                    continue;
                }
                let minor = PolyMatrix::from_rows(
                    (1..n)
                        .map(|i| (0..n).filter(|&c| c != j).map(|c| m[(i, c)].clone()).collect())
                        .collect(),
                );
                let term = &m[(0, j)] * &cofactor(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

impl<V> Index<(usize, usize)> for PolyMatrix<V> {
    type Output = Poly<V>;
    fn index(&self, (i, j): (usize, usize)) -> &Poly<V> {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<V> IndexMut<(usize, usize)> for PolyMatrix<V> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly<V> {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on a dimension mismatch; see [`PolyMatrix::checked_mul`].
impl<V> Mul<&PolyMatrix<V>> for &PolyMatrix<V> {
    type Output = PolyMatrix<V>;
    fn mul(self, rhs: &PolyMatrix<V>) -> PolyMatrix<V> {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl<V: Variable> fmt::Display for PolyMatrix<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, p) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<V: Variable> fmt::Debug for PolyMatrix<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix{self}")
    }
}
