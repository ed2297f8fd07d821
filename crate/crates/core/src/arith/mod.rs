//! Exact scalars, polynomials in `t` and `σ`, rational functions in `t`, and
//! the linear algebra built on them.

pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod ratfunc;
pub mod rational;

pub use matrix::{PolyMatrix, SigmaMatrix};
pub use poly::{t_power_split, Poly, Sigma, SigmaPoly, TPoly, Variable, T};
pub use ratfunc::RationalFunction;
pub use rational::{int, parse_rational, pow_i, rat, QParam, Rational};

/// `a = quotient · d + remainder` with `deg remainder < deg d`.
pub fn poly_divmod(a: &TPoly, d: &TPoly) -> crate::Result<(TPoly, TPoly)> {
    a.div_rem(d)
}

/// `f(q t)`, normalized.
pub fn substitute_qt(f: &RationalFunction, q: &Rational) -> crate::Result<RationalFunction> {
    f.substitute_qt(q)
}
