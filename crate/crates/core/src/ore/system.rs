use std::fmt;
use std::ops::Range;

use super::matrix::OreMatrix;
use crate::arith::{QParam, Rational, RationalFunction, SigmaMatrix, TPoly};
use crate::error::{Error, Result};

/// The system `A • y = t^{-nu} b` with `A` square over `K[t, σ]` and `b`
/// polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QRecSystem {
    a: OreMatrix,
    b: Vec<TPoly>,
    nu: usize,
}

impl QRecSystem {
    pub fn new(a: OreMatrix, b: Vec<TPoly>, nu: usize) -> Result<Self> {
        if a.rows() != a.cols() {
            return Err(Error::dims(
                "a square operator matrix",
                format!("{}x{}", a.rows(), a.cols()),
            ));
        }
        if b.len() != a.rows() {
            return Err(Error::dims(
                format!("{} right-hand side entries", a.rows()),
                b.len(),
            ));
        }
        Ok(QRecSystem { a, b, nu })
    }

    pub fn homogeneous(a: OreMatrix) -> Result<Self> {
        let m = a.rows();
        Self::new(a, vec![TPoly::zero(); m], 0)
    }

    pub fn matrix(&self) -> &OreMatrix {
        &self.a
    }

    pub fn rhs_poly(&self) -> &[TPoly] {
        &self.b
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn q(&self) -> &QParam {
        self.a.q()
    }

    pub fn dimension(&self) -> usize {
        self.a.rows()
    }

    pub fn order(&self) -> usize {
        self.a.sigma_order().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.b.iter().all(TPoly::is_zero)
    }

    /// The right-hand side `t^{-nu} b` as rational functions.
    pub fn rhs(&self) -> Vec<RationalFunction> {
        self.b
            .iter()
            .map(|p| RationalFunction::from_laurent(p.clone(), self.nu))
            .collect()
    }

    /// `κ = max deg b`, `None` when `b = 0`.
    pub fn rhs_degree(&self) -> Option<usize> {
        self.b.iter().filter_map(TPoly::degree).max()
    }

    /// Left multiplication of the whole system by an operator matrix, right
    /// side included.
    pub fn premultiply(&self, op: &OreMatrix) -> Result<QRecSystem> {
        let a = op.mul(&self.a)?;
        let b = (0..op.rows())
            .map(|k| {
                op.row(k)
                    .iter()
                    .zip(&self.b)
                    .fold(TPoly::zero(), |acc, (x, bj)| acc + x.apply_laurent(bj, self.nu))
            })
            .collect();
        QRecSystem::new(a, b, self.nu)
    }

    /// Left multiplication by a matrix over `K[σ]`.
    pub fn premultiply_sigma(&self, x: &SigmaMatrix) -> Result<QRecSystem> {
        if x.cols() != self.dimension() || x.rows() != self.dimension() {
            return Err(Error::dims(
                format!("{0}x{0}", self.dimension()),
                format!("{}x{}", x.rows(), x.cols()),
            ));
        }
        self.premultiply(&OreMatrix::from_sigma_matrix(x, self.q().clone()))
    }

    /// Multiplies equations `rows` by `t`. The right side keeps the shape
    /// `t^{-nu} b` with the same `nu`.
    pub fn mul_rows_by_t(&self, rows: Range<usize>) -> QRecSystem {
        let a = self.a.mul_rows_by_t(rows.clone());
        let mut b = self.b.clone();
        for i in rows {
            b[i] = b[i].shift_up(1);
        }
        QRecSystem { a, b, nu: self.nu }
    }

    /// Divides equations `rows` by `t`; `None` unless `t` divides every
    /// operator entry in those rows. The right side is re-homogenized to
    /// `nu + 1`.
    pub fn div_rows_by_t(&self, rows: Range<usize>) -> Option<QRecSystem> {
        let a = self.a.div_rows_by_t(rows.clone())?;
        let mut exps = vec![self.nu; self.b.len()];
        for i in rows {
            exps[i] += 1;
        }
        let (b, nu) = rehomogenize(&self.b, &exps);
        Some(QRecSystem { a, b, nu })
    }

    pub fn scale_row(&self, i: usize, c: &Rational) -> QRecSystem {
        let mut b = self.b.clone();
        b[i] = b[i].scale(c);
        QRecSystem { a: self.a.scale_row(i, c), b, nu: self.nu }
    }

    pub fn swap_rows(&self, i: usize, j: usize) -> QRecSystem {
        let mut b = self.b.clone();
        b.swap(i, j);
        QRecSystem { a: self.a.swap_rows(i, j), b, nu: self.nu }
    }

    /// Residual `A • y − t^{-nu} b`.
    pub fn residual(&self, y: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
        let lhs = self.a.apply_matrix(y)?;
        Ok(lhs.iter().zip(self.rhs()).map(|(l, r)| l - &r).collect())
    }
}

/// Brings right sides `t^{-e_i} b_i` to the common exponent `max e_i`.
pub fn rehomogenize(b: &[TPoly], exps: &[usize]) -> (Vec<TPoly>, usize) {
    let nu = exps.iter().copied().max().unwrap_or(0);
    let b = b.iter().zip(exps).map(|(p, &e)| p.shift_up(nu - e)).collect();
    (b, nu)
}

impl fmt::Display for QRecSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q = {}, nu = {}", self.q(), self.nu)?;
        for i in 0..self.dimension() {
            write!(f, "[")?;
            for (j, e) in self.a.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            match self.nu {
                0 => writeln!(f, "] = {}", self.b[i])?,
                nu => writeln!(f, "] = t^-{nu} ({})", self.b[i])?,
            }
        }
        Ok(())
    }
}
