//! Polynomial solutions by an exact ansatz and rational solutions whose
//! denominators are powers of `t` (optionally times a given aperiodic
//! polynomial).

mod ansatz;

pub use ansatz::{build_ansatz, polynomial_solutions, AnsatzSystem};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{Rational, RationalFunction, TPoly};
use crate::bounds::{degree_bound, denominator_t_bound, Bound, BoundReport};
use crate::error::{Error, Result};
use crate::ore::{OreMatrix, OrePoly, QRecSystem};
use crate::regularize::{head_regularize_with, tail_regularize_with, RegularizationTrace, RegularizeConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    /// A solution of the full system; `None` for homogeneous systems and
    /// for infeasible ones.
    pub particular: Option<Vec<RationalFunction>>,
    /// Basis of the solutions of the associated homogeneous system.
    pub homogeneous_basis: Vec<Vec<RationalFunction>>,
    /// The exponent `n` of the `t^n` denominator used in the ansatz.
    pub denominator_exponent: usize,
    /// False when the right side is nonzero and no solution exists.
    pub feasible: bool,
}

impl SolutionSet {
    pub fn homogeneous(basis: Vec<Vec<RationalFunction>>, denominator_exponent: usize) -> Self {
        SolutionSet { particular: None, homogeneous_basis: basis, denominator_exponent, feasible: true }
    }

    pub fn inhomogeneous(
        particular: Option<Vec<RationalFunction>>,
        basis: Vec<Vec<RationalFunction>>,
        denominator_exponent: usize,
    ) -> Self {
        let feasible = particular.is_some();
        SolutionSet { particular, homogeneous_basis: basis, denominator_exponent, feasible }
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    /// Dimension of the homogeneous solution space.
    pub fn dimension(&self) -> usize {
        self.homogeneous_basis.len()
    }

    fn map(self, f: impl Fn(&RationalFunction) -> RationalFunction, denominator_exponent: usize) -> Self {
        let map_vec = |v: &Vec<RationalFunction>| v.iter().map(&f).collect::<Vec<_>>();
        SolutionSet {
            particular: self.particular.as_ref().map(map_vec),
            homogeneous_basis: self.homogeneous_basis.iter().map(map_vec).collect(),
            denominator_exponent,
            feasible: self.feasible,
        }
    }
}

/// True iff `A • y = t^{-ν} b` holds exactly.
pub fn verify_solution(sys: &QRecSystem, y: &[RationalFunction]) -> Result<bool> {
    Ok(sys.residual(y)?.iter().all(RationalFunction::is_zero))
}

/// The system satisfied by `z = t^n y`.
pub fn substitute_t_power(sys: &QRecSystem, n: usize) -> QRecSystem {
    substitute_denominator(sys, n, &TPoly::one()).expect("1 is a valid aperiodic denominator")
}

/// The system satisfied by `z = t^n d(t) y` where `d(0) ≠ 0`.
///
/// With `D_k = d(q^k t)` the equation becomes
/// `Σ_j q^{-nj} A_j (Π_{k≠j} D_k) σ^j z = t^{n−ν} (Π_k D_k) b`, which is then
/// scaled by a constant so that no new coefficient denominators appear.
pub fn substitute_denominator(sys: &QRecSystem, n: usize, d: &TPoly) -> Result<QRecSystem> {
    if d.is_zero() || d.coeff(0).is_zero() {
        return Err(Error::InvalidAperiodicDenominator);
    }
    let q = sys.q();
    let s = sys.order();
    let shifted: Vec<TPoly> = (0..=s).map(|k| d.scale_var(&q.pow(k as i64))).collect();
    let others = |j: usize| {
        shifted
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .fold(TPoly::one(), |acc, (_, p)| &acc * p)
    };
    let full = shifted.iter().fold(TPoly::one(), |acc, p| &acc * p);
    let cofactors: Vec<TPoly> = (0..=s)
        .map(|j| others(j).scale(&q.pow(-((n * j) as i64))))
        .collect();

    let a = sys.matrix();
    let m = sys.dimension();
    let mut rows = Vec::with_capacity(m);
    for r in 0..m {
        let row = a
            .row(r)
            .iter()
            .map(|e| {
                let coeffs = e.coeffs().iter().zip(&cofactors).map(|(c, f)| c * f).collect();
                OrePoly::new(coeffs, q.clone())
            })
            .collect();
        rows.push(row);
    }
    let (b, nu) = if n >= sys.nu() {
        (sys.rhs_poly().iter().map(|p| (p * &full).shift_up(n - sys.nu())).collect(), 0)
    } else {
        (sys.rhs_poly().iter().map(|p| p * &full).collect(), sys.nu() - n)
    };
    let out = QRecSystem::new(OreMatrix::from_entries(rows, q.clone())?, b, nu)?;
    let factor = Rational::new(denominator_lcm(&out), denominator_lcm(sys));
    Ok(scale_system(&out, &factor))
}

fn denominator_lcm(sys: &QRecSystem) -> BigInt {
    let a = sys.matrix();
    let entries = (0..sys.dimension()).flat_map(|r| a.row(r).iter().flat_map(OrePoly::coeffs));
    entries
        .chain(sys.rhs_poly())
        .flat_map(TPoly::coeffs)
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn scale_system(sys: &QRecSystem, c: &Rational) -> QRecSystem {
    if c.is_one() {
        return sys.clone();
    }
    (0..sys.dimension()).fold(sys.clone(), |acc, i| acc.scale_row(i, c))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveOptions {
    /// Known denominator factor `d` with `d(0) ≠ 0`; solutions are sought
    /// in the form `z / (t^n d)`.
    pub aperiodic_denominator: Option<TPoly>,
    pub regularize: RegularizeConfig,
}

/// Every intermediate result of [`rational_t_solutions`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSolveReport {
    pub tail_system: QRecSystem,
    pub tail_trace: RegularizationTrace,
    pub denominator: BoundReport,
    pub substituted: QRecSystem,
    pub head_system: QRecSystem,
    pub head_trace: RegularizationTrace,
    pub degree: BoundReport,
    pub solutions: SolutionSet,
}

/// All rational solutions whose denominator is a power of `t`.
pub fn rational_t_solutions(sys: &QRecSystem) -> Result<SolutionSet> {
    Ok(rational_t_solutions_with(sys, &SolveOptions::default())?.solutions)
}

pub fn rational_t_solutions_with(sys: &QRecSystem, options: &SolveOptions) -> Result<RationalSolveReport> {
    let (tail_system, tail_trace) = tail_regularize_with(sys, &options.regularize)?;
    let denominator = denominator_t_bound(&tail_system)?;
    let n = denominator.bound.value().expect("denominator bounds are finite");
    let d = options.aperiodic_denominator.clone().unwrap_or_else(TPoly::one);
    let substituted = substitute_denominator(sys, n, &d)?;
    let (head_system, head_trace) = head_regularize_with(&substituted, &options.regularize)?;
    let degree = degree_bound(&head_system)?;
    let z = match degree.bound {
        Bound::Value(big_n) => polynomial_solutions(&substituted, big_n),
        Bound::NoNonzeroSolution if sys.is_homogeneous() => SolutionSet::homogeneous(Vec::new(), 0),
        Bound::NoNonzeroSolution => SolutionSet::inhomogeneous(None, Vec::new(), 0),
    };
    let denom = d.shift_up(n);
    let solutions = z.map(
        |f| f / &RationalFunction::from_poly(denom.clone()),
        n,
    );
    check_solutions(sys, &solutions)?;
    Ok(RationalSolveReport {
        tail_system,
        tail_trace,
        denominator,
        substituted,
        head_system,
        head_trace,
        degree,
        solutions,
    })
}

/// Verifies every vector of `set` against `sys`; a failure is an internal
/// error.
pub fn check_solutions(sys: &QRecSystem, set: &SolutionSet) -> Result<()> {
    let homogeneous = QRecSystem::homogeneous(sys.matrix().clone())?;
    for y in &set.homogeneous_basis {
        if !verify_solution(&homogeneous, y)? {
            return Err(Error::Internal("basis vector fails the homogeneous system".into()));
        }
    }
    if let Some(y) = &set.particular {
        if !verify_solution(sys, y)? {
            return Err(Error::Internal("particular solution fails the system".into()));
        }
    }
    Ok(())
}
