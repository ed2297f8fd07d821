//! The denominator bound on t-powers and the degree bound for polynomial
//! solutions.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::arith::{QParam, SigmaPoly};
use crate::error::{Error, Result};
use crate::ore::QRecSystem;
use crate::popov::sigma_det;

/// `λ`, the determinant of the t-trailing matrix, as a polynomial in `x`.
pub fn lambda_poly(sys: &QRecSystem) -> SigmaPoly {
    sigma_det(&sys.matrix().t_trailing()).expect("operator matrix is square")
}

/// `ρ`, the determinant of the t-leading matrix. Zero for the zero operator.
pub fn rho_poly(sys: &QRecSystem) -> SigmaPoly {
    match sys.matrix().t_leading() {
        Ok(lead) => sigma_det(&lead).expect("operator matrix is square"),
        Err(_) => SigmaPoly::zero(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Roots of the form `q^n`.
    Positive,
    /// Roots of the form `q^{-n}`.
    Negative,
}

/// All `n ≥ 0` such that `p(q^n)` (positive) or `p(q^{-n})` (negative)
/// vanishes.
///
/// With `c_0, c_d` the outer coefficients of the integer-normalized
/// polynomial after stripping powers of `x`, a root `(a/b)^{±n}` in lowest
/// terms has `a^n` and `b^n` dividing `c_0` and `c_d`. Since
/// `max(|a|, |b|) ≥ 2` this forces `2^n ≤ max(|c_0|, |c_d|)`.
pub fn q_power_roots(p: &SigmaPoly, q: &QParam, direction: Direction) -> Result<BTreeSet<usize>> {
    let (_, g) = p.split_var_power()?;
    let c = g.integer_coeffs();
    let outer = c[0].abs().max(c[c.len() - 1].abs());
    let n_max = log2_floor(&outer);
    let sign = match direction {
        Direction::Positive => 1,
        Direction::Negative => -1,
    };
    Ok((0..=n_max)
        .filter(|&n| g.eval(&q.pow(sign * n as i64)).is_zero())
        .collect())
}

fn log2_floor(n: &BigInt) -> usize {
    (n.bits().max(1) - 1) as usize
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Denominator,
    Degree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bound {
    Value(usize),
    /// Only the zero vector can solve the homogeneous system, or no
    /// polynomial solves the inhomogeneous one.
    NoNonzeroSolution,
}

impl Bound {
    pub fn value(self) -> Option<usize> {
        match self {
            Bound::Value(n) => Some(n),
            Bound::NoNonzeroSolution => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Value(n) => write!(f, "{n}"),
            Bound::NoNonzeroSolution => write!(f, "no nonzero solution"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    /// `λ` for denominator bounds, `ρ` for degree bounds.
    pub det_poly: SigmaPoly,
    pub candidates: BTreeSet<usize>,
    /// `ν` for denominator bounds, `κ − ν − ℓ` for degree bounds (absent
    /// for a zero right side).
    pub structural_bound: Option<i64>,
    pub bound: Bound,
}

/// Bound `n` on `t^n` in the denominator of any rational solution. The
/// system must be t-tail regular.
pub fn denominator_t_bound(sys: &QRecSystem) -> Result<BoundReport> {
    let lambda = lambda_poly(sys);
    if lambda.is_zero() {
        return Err(Error::TailSingular);
    }
    let candidates = q_power_roots(&lambda, sys.q(), Direction::Negative)?;
    let bound = candidates.iter().copied().chain([sys.nu()]).max().unwrap_or(0);
    Ok(BoundReport {
        kind: BoundKind::Denominator,
        det_poly: lambda,
        candidates,
        structural_bound: Some(sys.nu() as i64),
        bound: Bound::Value(bound),
    })
}

/// Bound on the degree of polynomial solutions. The system must be t-head
/// regular.
pub fn degree_bound(sys: &QRecSystem) -> Result<BoundReport> {
    let rho = rho_poly(sys);
    if rho.is_zero() {
        return Err(Error::HeadSingular);
    }
    let nu = sys.nu();
    let rhs_has_negative_powers = sys
        .rhs_poly()
        .iter()
        .any(|b| b.valuation().is_some_and(|v| v < nu));
    if rhs_has_negative_powers {
        return Ok(BoundReport {
            kind: BoundKind::Degree,
            det_poly: rho,
            candidates: BTreeSet::new(),
            structural_bound: None,
            bound: Bound::NoNonzeroSolution,
        });
    }
    let candidates = q_power_roots(&rho, sys.q(), Direction::Positive)?;
    let ell = sys.matrix().t_degree().unwrap_or(0) as i64;
    let structural = sys.rhs_degree().map(|kappa| kappa as i64 - nu as i64 - ell);
    let best = candidates.iter().map(|&n| n as i64).chain(structural).max();
    let bound = match best {
        Some(n) if n >= 0 => Bound::Value(n as usize),
        _ => Bound::NoNonzeroSolution,
    };
    Ok(BoundReport {
        kind: BoundKind::Degree,
        det_poly: rho,
        candidates,
        structural_bound: structural,
        bound,
    })
}
