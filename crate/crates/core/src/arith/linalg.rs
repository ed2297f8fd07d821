//! Gaussian elimination over an exact field (ℚ or ℚ(t)).

use num_traits::{One, Zero};

use super::ratfunc::RationalFunction;
use super::rational::Rational;

pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `rhs` is never zero at call sites.
    fn div(&self, rhs: &Self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// Brings `m` (row-major, `cols` columns) into reduced row echelon form in
/// place and returns the pivot columns. The first nonzero entry in a column
/// is used as the pivot.
pub fn rref<F: Field>(m: &mut [Vec<F>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = F::one().div(&m[row][col]);
        for x in m[row].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (x, p) in r.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.sub(&factor.mul(p));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: Field>(m: &[Vec<F>], cols: usize) -> usize {
    let mut work = m.to_vec();
    rref(&mut work, cols).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace<F: Field>(m: &[Vec<F>], cols: usize) -> Vec<Vec<F>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); cols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = F::zero().sub(&work[r][f]);
            }
            v
        })
        .collect()
}

/// Nonzero `c` with `Σ c_i · rows[i] = 0`, if the rows are dependent.
pub fn left_kernel_vector<F: Field>(rows: &[Vec<F>], cols: usize) -> Option<Vec<F>> {
    let n = rows.len();
    // columns of the transpose are the given rows
    let transposed: Vec<Vec<F>> = (0..cols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect();
    nullspace(&transposed, n).into_iter().next()
}

/// Solves `m x = rhs`. Returns the particular solution with all free
/// variables set to zero together with a nullspace basis, or `None` if the
/// system is inconsistent.
pub fn solve<F: Field>(m: &[Vec<F>], rhs: &[F], cols: usize) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    let mut aug: Vec<Vec<F>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![F::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Some((x, nullspace(m, cols)))
}
