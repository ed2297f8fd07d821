//! The skew polynomial ring `K[t, σ]` with `σ t = q t σ`, operator matrices
//! over it, and q-recurrence systems.

mod matrix;
mod poly;
mod system;

pub use matrix::OreMatrix;
pub use poly::OrePoly;
pub use system::{rehomogenize, QRecSystem};

use crate::arith::{RationalFunction, SigmaMatrix};
use crate::error::Result;

pub fn ore_mul(a: &OrePoly, b: &OrePoly) -> Result<OrePoly> {
    a.mul(b)
}

pub fn apply(a: &OrePoly, f: &RationalFunction) -> RationalFunction {
    a.apply(f)
}

pub fn apply_matrix(a: &OreMatrix, y: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
    a.apply_matrix(y)
}

pub fn t_decompose(a: &OreMatrix) -> Vec<SigmaMatrix> {
    a.t_decompose()
}

pub fn t_trailing(a: &OreMatrix) -> SigmaMatrix {
    a.t_trailing()
}

pub fn t_leading(a: &OreMatrix) -> Result<SigmaMatrix> {
    a.t_leading()
}
