//! Exact algorithms for systems of linear q-recurrence equations
//! `A(t, σ) • y = t^{-ν} b(t)` with `σ f(t) = f(q t)`.
//!
//! The crate bounds the power of `t` in denominators of rational solutions
//! and the degree of polynomial solutions, regularizes systems whose
//! t-trailing or t-leading matrix is singular, and computes all rational
//! solutions with `t`-power denominators.

pub mod arith;
pub mod bounds;
mod error;
pub mod io;
pub mod ore;
pub mod popov;
pub mod regularize;
pub mod solve;

pub use arith::{QParam, Rational, RationalFunction, SigmaMatrix, SigmaPoly, TPoly};
pub use bounds::{degree_bound, denominator_t_bound, lambda_poly, q_power_roots, rho_poly, Bound, BoundReport, Direction};
pub use error::{Error, Result};
pub use io::{parse_poly, parse_system, render_system};
pub use ore::{OreMatrix, OrePoly, QRecSystem};
pub use popov::{ore_row_rank, popov_form, reduce_rows, sigma_det, PopovResult};
pub use regularize::{head_regularize, replay_trace, tail_regularize, RegularizationTrace};
pub use solve::{polynomial_solutions, rational_t_solutions, substitute_t_power, verify_solution, SolutionSet};
