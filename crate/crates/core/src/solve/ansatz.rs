use num_traits::Zero;

use crate::arith::linalg;
use crate::arith::{Rational, RationalFunction, TPoly};
use crate::ore::QRecSystem;

use super::SolutionSet;

/// Linear system over `K` for the coefficients of a polynomial solution of
/// degree at most `degree`, obtained by comparing coefficients of
/// `t^ν · A • y = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnsatzSystem {
    pub dimension: usize,
    pub degree: usize,
    /// Row-major coefficient matrix with `dimension · (degree + 1)` columns;
    /// unknown `y_{i,k}` (coefficient of `t^k` in `y_i`) sits in column
    /// `i · (degree + 1) + k`.
    pub matrix: Vec<Vec<Rational>>,
    pub rhs: Vec<Rational>,
    /// Whether `t^ν` divides every entry of `b`; otherwise no polynomial
    /// solves the system.
    pub rhs_compatible: bool,
}

impl AnsatzSystem {
    pub fn unknowns(&self) -> usize {
        self.dimension * (self.degree + 1)
    }

    /// Reassembles a solution vector from its coefficient vector.
    pub fn to_vector(&self, coeffs: &[Rational]) -> Vec<TPoly> {
        coeffs.chunks(self.degree + 1).map(|c| TPoly::from_coeffs(c.to_vec())).collect()
    }
}

pub fn build_ansatz(sys: &QRecSystem, degree: usize) -> AnsatzSystem {
    let m = sys.dimension();
    let nu = sys.nu();
    let width = degree + 1;
    let ell = sys.matrix().t_degree().unwrap_or(0);
    let top = match sys.rhs_degree() {
        Some(kappa) if kappa >= nu => (ell + degree).max(kappa - nu),
        _ => ell + degree,
    };
    let per_row = top + 1;
    let mut matrix = vec![vec![Rational::zero(); m * width]; m * per_row];
    let a = sys.matrix();
    let q = sys.q();
    for r in 0..m {
        for i in 0..m {
            for (j, coeff) in a.get(r, i).coeffs().iter().enumerate() {
                for (p, c) in coeff.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for k in 0..width {
                        let w = c * q.pow((j * k) as i64);
                        matrix[r * per_row + p + k][i * width + k] += w;
                    }
                }
            }
        }
    }
    let mut rhs = vec![Rational::zero(); m * per_row];
    let mut rhs_compatible = true;
    for (r, b) in sys.rhs_poly().iter().enumerate() {
        for (e, c) in b.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < nu {
                rhs_compatible = false;
            } else {
                rhs[r * per_row + e - nu] = c.clone();
            }
        }
    }
    AnsatzSystem { dimension: m, degree, matrix, rhs, rhs_compatible }
}

/// All polynomial solutions of degree at most `degree`.
pub fn polynomial_solutions(sys: &QRecSystem, degree: usize) -> SolutionSet {
    let ansatz = build_ansatz(sys, degree);
    let n = ansatz.unknowns();
    let lift = |c: &[Rational]| -> Vec<RationalFunction> {
        ansatz.to_vector(c).into_iter().map(RationalFunction::from_poly).collect()
    };
    let basis: Vec<Vec<RationalFunction>> =
        linalg::nullspace(&ansatz.matrix, n).iter().map(|v| lift(v)).collect();
    if sys.is_homogeneous() {
        return SolutionSet::homogeneous(basis, 0);
    }
    let particular = if ansatz.rhs_compatible {
        linalg::solve(&ansatz.matrix, &ansatz.rhs, n).map(|(x, _)| lift(&x))
    } else {
        None
    };
    SolutionSet::inhomogeneous(particular, basis, 0)
}
