use std::fmt;
use std::ops::Range;

use super::poly::OrePoly;
use crate::arith::{int, QParam, Rational, RationalFunction, SigmaMatrix, SigmaPoly, TPoly};
use crate::error::{Error, Result};

/// Matrix over `K[t, σ]`, stored σ-major: every entry keeps its
/// σ-coefficients as polynomials in `t`.
#[derive(Clone, PartialEq, Eq)]
pub struct OreMatrix {
    rows: usize,
    cols: usize,
    q: QParam,
    entries: Vec<OrePoly>,
}

impl OreMatrix {
    pub fn zeros(rows: usize, cols: usize, q: QParam) -> Self {
        OreMatrix {
            rows,
            cols,
            entries: (0..rows * cols).map(|_| OrePoly::zero(q.clone())).collect(),
            q,
        }
    }

    pub fn identity(n: usize, q: QParam) -> Self {
        let mut m = Self::zeros(n, n, q.clone());
        for i in 0..n {
            m.entries[i * n + i] = OrePoly::one(q.clone());
        }
        m
    }

    pub fn from_entries(rows: Vec<Vec<OrePoly>>, q: QParam) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::dims(format!("{c} columns"), format!("{} columns", bad.len())));
        }
        let entries: Vec<OrePoly> = rows.into_iter().flatten().collect();
        if let Some(e) = entries.iter().find(|e| e.q() != &q) {
            return Err(Error::QMismatch(q.value().clone(), e.q().value().clone()));
        }
        Ok(OreMatrix { rows: r, cols: c, q, entries })
    }

    /// Builds `Σ_j A_j σ^j` from the coefficient matrices `A_0, …, A_s`
    /// (each indexed `[row][col]`).
    pub fn from_coefficient_matrices(mats: &[Vec<Vec<TPoly>>], q: QParam) -> Result<Self> {
        let first = mats.first().ok_or_else(|| Error::dims("at least one coefficient matrix", "none"))?;
        let rows = first.len();
        let cols = first.first().map_or(0, Vec::len);
        for (j, m) in mats.iter().enumerate() {
            if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                return Err(Error::dims(
                    format!("{rows}x{cols} coefficient matrices"),
                    format!("a differently shaped matrix for sigma^{j}"),
                ));
            }
        }
        let mut out = Self::zeros(rows, cols, q.clone());
        for i in 0..rows {
            for k in 0..cols {
                let coeffs = mats.iter().map(|m| m[i][k].clone()).collect();
                out.entries[i * cols + k] = OrePoly::new(coeffs, q.clone());
            }
        }
        Ok(out)
    }

    /// Lifts a matrix over `K[σ]` (constant in `t`).
    pub fn from_sigma_matrix(m: &SigmaMatrix, q: QParam) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols(), q.clone());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.entries[i * m.cols() + j] = OrePoly::from_sigma_poly(&m[(i, j)], q.clone());
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }

    pub fn get(&self, i: usize, j: usize) -> &OrePoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: OrePoly) -> Result<()> {
        if value.q() != &self.q {
            return Err(Error::QMismatch(self.q.value().clone(), value.q().value().clone()));
        }
        self.entries[i * self.cols + j] = value;
        Ok(())
    }

    pub fn row(&self, i: usize) -> &[OrePoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(OrePoly::is_zero)
    }

    /// Order `s`: the largest σ-degree of any entry.
    pub fn sigma_order(&self) -> Option<usize> {
        self.entries.iter().filter_map(OrePoly::sigma_degree).max()
    }

    /// `ℓ`: the largest t-degree over all entries.
    pub fn t_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(OrePoly::t_degree).max()
    }

    /// Coefficient matrix `A_j` of `σ^j`.
    pub fn coefficient_matrix(&self, j: usize) -> Vec<Vec<TPoly>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.coeff(j)).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &OreMatrix) -> Result<OreMatrix> {
        if self.q != rhs.q {
            return Err(Error::QMismatch(self.q.value().clone(), rhs.q.value().clone()));
        }
        if self.cols != rhs.rows {
            return Err(Error::dims(format!("{} rows", self.cols), format!("{} rows", rhs.rows)));
        }
        let mut out = Self::zeros(self.rows, rhs.cols, self.q.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &a.mul(b)?;
                }
            }
        }
        Ok(out)
    }

    /// `X · self` for `X` over `K[σ]`.
    pub fn left_mul_sigma(&self, x: &SigmaMatrix) -> Result<OreMatrix> {
        OreMatrix::from_sigma_matrix(x, self.q.clone()).mul(self)
    }

    pub fn apply_matrix(&self, y: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
        if y.len() != self.cols {
            return Err(Error::dims(
                format!("a vector of length {}", self.cols),
                format!("length {}", y.len()),
            ));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(y)
                    .fold(RationalFunction::zero(), |acc, (a, f)| acc + a.apply(f))
            })
            .collect())
    }

    /// t-major view: `[Ã_0, …, Ã_ℓ]` with `self = Σ t^i Ã_i` (t on the left).
    /// Empty for the zero matrix.
    pub fn t_decompose(&self) -> Vec<SigmaMatrix> {
        let Some(ell) = self.t_degree() else {
            return Vec::new();
        };
        (0..=ell).map(|i| self.t_coefficient_matrix(i)).collect()
    }

    /// `Ã_i`; zero beyond the t-degree.
    pub fn t_coefficient_matrix(&self, i: usize) -> SigmaMatrix {
        let mut m = SigmaMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m[(r, c)] = self.get(r, c).t_coefficient(i);
            }
        }
        m
    }

    pub fn t_trailing(&self) -> SigmaMatrix {
        self.t_coefficient_matrix(0)
    }

    pub fn t_leading(&self) -> Result<SigmaMatrix> {
        let ell = self.t_degree().ok_or(Error::ZeroMatrix)?;
        Ok(self.t_coefficient_matrix(ell))
    }

    /// Multiplies the given rows by `t` on the left.
    pub fn mul_rows_by_t(&self, rows: Range<usize>) -> OreMatrix {
        let mut out = self.clone();
        for i in rows {
            for j in 0..self.cols {
                out.entries[i * self.cols + j] = self.get(i, j).mul_t();
            }
        }
        out
    }

    /// Divides the given rows by `t`; `None` if some row is not divisible.
    pub fn div_rows_by_t(&self, rows: Range<usize>) -> Option<OreMatrix> {
        let mut out = self.clone();
        for i in rows {
            for j in 0..self.cols {
                out.entries[i * self.cols + j] = self.get(i, j).div_t()?;
            }
        }
        Some(out)
    }

    /// Reassembles `Σ t^i Ã_i`.
    pub fn from_t_decomposition(parts: &[SigmaMatrix], q: QParam) -> Result<OreMatrix> {
        let Some(first) = parts.first() else {
            return Err(Error::dims("at least one t-coefficient matrix", "none"));
        };
        let (rows, cols) = (first.rows(), first.cols());
        let mut out = OreMatrix::zeros(rows, cols, q.clone());
        for (i, part) in parts.iter().enumerate() {
            if part.rows() != rows || part.cols() != cols {
                return Err(Error::dims(format!("{rows}x{cols}"), format!("{}x{}", part.rows(), part.cols())));
            }
            for r in 0..rows {
                for c in 0..cols {
                    let lifted = OrePoly::from_sigma_poly(&part[(r, c)], q.clone())
                        .left_mul_tpoly(&TPoly::monomial(int(1), i));
                    let idx = r * cols + c;
                    out.entries[idx] = &out.entries[idx] + &lifted;
                }
            }
        }
        Ok(out)
    }

    /// Substitutes `σ -> c σ` entrywise.
    pub fn twist(&self, c: &Rational) -> OreMatrix {
        OreMatrix {
            rows: self.rows,
            cols: self.cols,
            q: self.q.clone(),
            entries: self.entries.iter().map(|e| e.twist(c)).collect(),
        }
    }

    pub fn scale_row(&self, i: usize, c: &Rational) -> OreMatrix {
        let mut out = self.clone();
        for j in 0..self.cols {
            out.entries[i * self.cols + j] = self.get(i, j).scale(c);
        }
        out
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> OreMatrix {
        let mut out = self.clone();
        for j in 0..self.cols {
            out.entries.swap(a * self.cols + j, b * self.cols + j);
        }
        out
    }

    /// Row `i` of `Ã_k`.
    pub fn row_t_coefficient(&self, i: usize, k: usize) -> Vec<SigmaPoly> {
        self.row(i).iter().map(|e| e.t_coefficient(k)).collect()
    }
}

impl fmt::Display for OreMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for (j, e) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for OreMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OreMatrix(q = {})\n{self}", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> QParam {
        QParam::from_i64(2).unwrap()
    }

    #[test]
    fn decompose_t_sigma() {
        let a = OreMatrix::from_entries(
            vec![vec![OrePoly::monomial(TPoly::from_ints(&[0, 1]), 1, q2())]],
            q2(),
        )
        .unwrap();
        let parts = a.t_decompose();
        assert_eq!(parts.len(), 2);
        assert!(parts[0].is_zero());
        assert_eq!(parts[1][(0, 0)], SigmaPoly::from_ints(&[0, 1]));
        assert_eq!(OreMatrix::from_t_decomposition(&parts, q2()).unwrap(), a);
    }

    #[test]
    fn identity_action() {
        let id = OreMatrix::identity(2, q2());
        let y = vec![
            RationalFunction::from_laurent(TPoly::from_ints(&[1, 1]), 2),
            RationalFunction::constant(int(3)),
        ];
        assert_eq!(id.apply_matrix(&y).unwrap(), y);
        assert!(id.apply_matrix(&y[..1]).is_err());
    }

    #[test]
    fn leading_of_zero_matrix() {
        assert_eq!(OreMatrix::zeros(2, 2, q2()).t_leading(), Err(Error::ZeroMatrix));
    }
}
