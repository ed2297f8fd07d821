use std::fmt;

use crate::arith::SigmaMatrix;
use crate::error::{Error, Result};
use crate::ore::QRecSystem;

use super::elimination_matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Works on the t-trailing matrix.
    Tail,
    /// Works on the t-leading matrix.
    Head,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScaleDirection {
    DivideByT,
    MultiplyByT,
}

/// One elementary transformation. Matrices are stored exactly as they were
/// applied to the system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Left multiplication by a unimodular matrix over `K[σ]` that brings
    /// the focus matrix to Popov form `basis` (with `rank` rows).
    Popov { transform: SigmaMatrix, rank: usize, basis: SigmaMatrix },
    /// Rows `from..m` multiplied or divided by `t`.
    ScaleRows { from: usize, direction: ScaleDirection },
    /// Left multiplication by `[[I, 0], [-x, I]]` with `x` of size
    /// `(m - rank) × rank`.
    Eliminate { rank: usize, x: SigmaMatrix },
}

impl Step {
    pub fn apply(&self, sys: &QRecSystem) -> Result<QRecSystem> {
        let m = sys.dimension();
        match self {
            Step::Popov { transform, .. } => sys.premultiply_sigma(transform),
            Step::ScaleRows { from, direction } => {
                if *from > m {
                    return Err(Error::dims(format!("at most {m} rows"), format!("row {from}")));
                }
                match direction {
                    ScaleDirection::MultiplyByT => Ok(sys.mul_rows_by_t(*from..m)),
                    ScaleDirection::DivideByT => sys
                        .div_rows_by_t(*from..m)
                        .ok_or_else(|| Error::Semantic("rows are not divisible by t".into())),
                }
            }
            Step::Eliminate { rank, x } => {
                if *rank > m || x.rows() != m - rank || x.cols() != *rank {
                    return Err(Error::dims(
                        format!("a {}x{} block", m.saturating_sub(*rank), rank),
                        format!("{}x{}", x.rows(), x.cols()),
                    ));
                }
                sys.premultiply_sigma(&elimination_matrix(m, *rank, x))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularizationTrace {
    pub side: Side,
    pub steps: Vec<Step>,
}

impl RegularizationTrace {
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn popov_steps(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::Popov { .. })).count()
    }

    pub fn eliminations(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::Eliminate { .. })).count()
    }

    pub fn scalings(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s, Step::ScaleRows { .. })).count()
    }
}

/// Applies the steps of `trace` to `sys` in order.
pub fn replay_trace(trace: &RegularizationTrace, sys: &QRecSystem) -> Result<QRecSystem> {
    trace.steps.iter().try_fold(sys.clone(), |acc, step| step.apply(&acc))
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Popov { transform, rank, .. } => {
                write!(f, "popov rank={rank} transform={transform}")
            }
            Step::ScaleRows { from, direction } => {
                let how = match direction {
                    ScaleDirection::DivideByT => "divide",
                    ScaleDirection::MultiplyByT => "multiply",
                };
                write!(f, "scale rows {from}.. {how} by t")
            }
            Step::Eliminate { rank, x } => write!(f, "eliminate rank={rank} x={x}"),
        }
    }
}
