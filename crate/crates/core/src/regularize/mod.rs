//! Transformations that make the t-trailing or t-leading matrix of a
//! system regular while keeping its solution set.

mod trace;

pub use trace::{replay_trace, RegularizationTrace, ScaleDirection, Side, Step};

use crate::arith::SigmaMatrix;
use crate::error::{Error, Result};
use crate::ore::QRecSystem;
use crate::popov::{ore_row_rank, popov_form, reduce_rows, sigma_det};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RegularizeConfig {
    /// Maximum number of recorded steps. `None` selects
    /// `10 · m · (ℓ + 1) · (s + 1)` for the input system.
    pub max_steps: Option<usize>,
}

impl RegularizeConfig {
    pub fn step_limit(&self, sys: &QRecSystem) -> usize {
        self.max_steps.unwrap_or_else(|| {
            let ell = sys.matrix().t_degree().unwrap_or(0);
            10 * sys.dimension().max(1) * (ell + 1) * (sys.order() + 1)
        })
    }
}

/// Fails with [`Error::NotRegular`] unless the operator matrix has full row
/// rank over `K(t)[σ]`.
pub fn check_regular(sys: &QRecSystem) -> Result<()> {
    let rank = ore_row_rank(sys.matrix());
    if rank < sys.dimension() {
        return Err(Error::NotRegular { rank, dimension: sys.dimension() });
    }
    Ok(())
}

pub fn tail_regularize(sys: &QRecSystem) -> Result<(QRecSystem, RegularizationTrace)> {
    regularize(sys, Side::Tail, &RegularizeConfig::default())
}

pub fn head_regularize(sys: &QRecSystem) -> Result<(QRecSystem, RegularizationTrace)> {
    regularize(sys, Side::Head, &RegularizeConfig::default())
}

pub fn tail_regularize_with(
    sys: &QRecSystem,
    config: &RegularizeConfig,
) -> Result<(QRecSystem, RegularizationTrace)> {
    regularize(sys, Side::Tail, config)
}

pub fn head_regularize_with(
    sys: &QRecSystem,
    config: &RegularizeConfig,
) -> Result<(QRecSystem, RegularizationTrace)> {
    regularize(sys, Side::Head, config)
}

fn focus(sys: &QRecSystem, side: Side) -> Result<SigmaMatrix> {
    match side {
        Side::Tail => Ok(sys.matrix().t_trailing()),
        Side::Head => sys.matrix().t_leading(),
    }
}

struct Runner {
    side: Side,
    ell: Option<usize>,
    limit: usize,
    trace: RegularizationTrace,
}

impl Runner {
    fn record(&mut self, sys: QRecSystem, step: Step) -> Result<QRecSystem> {
        if self.trace.steps.len() >= self.limit {
            return Err(Error::IterationLimit(self.limit));
        }
        if self.side == Side::Head && sys.matrix().t_degree() != self.ell {
            return Err(Error::Internal(format!(
                "t-degree changed from {:?} to {:?} during head regularization",
                self.ell,
                sys.matrix().t_degree()
            )));
        }
        self.trace.steps.push(step);
        Ok(sys)
    }

    /// `σ -> q^{-ℓ} σ` for head transforms so that the product acts on the
    /// t-leading matrix as the untwisted matrix does.
    fn adapt(&self, sys: &QRecSystem, x: &SigmaMatrix) -> SigmaMatrix {
        match (self.side, self.ell) {
            (Side::Head, Some(ell)) if ell > 0 => x.scale_var(&sys.q().pow(-(ell as i64))),
            _ => x.clone(),
        }
    }

    fn scale(&mut self, sys: QRecSystem, from: usize) -> Result<QRecSystem> {
        let m = sys.dimension();
        let (next, direction) = match self.side {
            Side::Tail => {
                let next = sys.div_rows_by_t(from..m).ok_or_else(|| {
                    Error::Internal("lower rows are not divisible by t".into())
                })?;
                (next, ScaleDirection::DivideByT)
            }
            Side::Head => (sys.mul_rows_by_t(from..m), ScaleDirection::MultiplyByT),
        };
        self.record(next, Step::ScaleRows { from, direction })
    }
}

fn regularize(
    sys: &QRecSystem,
    side: Side,
    config: &RegularizeConfig,
) -> Result<(QRecSystem, RegularizationTrace)> {
    check_regular(sys)?;
    let m = sys.dimension();
    let mut run = Runner {
        side,
        ell: sys.matrix().t_degree(),
        limit: config.step_limit(sys),
        trace: RegularizationTrace { side, steps: Vec::new() },
    };
    let mut cur = sys.clone();
    if m == 0 {
        return Ok((cur, run.trace));
    }
    loop {
        let f = focus(&cur, side)?;
        if !sigma_det(&f)?.is_zero() {
            return Ok((cur, run.trace));
        }
        let popov = popov_form(&f);
        let r = popov.rank;
        let transform = run.adapt(&cur, &popov.transform);
        let next = cur.premultiply_sigma(&transform)?;
        cur = run.record(next, Step::Popov { transform, rank: r, basis: popov.popov.clone() })?;
        loop {
            cur = run.scale(cur, r)?;
            let f = focus(&cur, side)?;
            let lower = f.row_block(r..m);
            let div = reduce_rows(&lower, &popov.popov)?;
            if !div.is_exact() {
                break;
            }
            if !div.quotient.is_zero() {
                let x = run.adapt(&cur, &div.quotient);
                let next = cur.premultiply_sigma(&elimination_matrix(m, r, &x))?;
                cur = run.record(next, Step::Eliminate { rank: r, x })?;
            }
        }
    }
}

/// `[[I_r, 0], [-x, I_{m-r}]]`.
pub(crate) fn elimination_matrix(m: usize, r: usize, x: &SigmaMatrix) -> SigmaMatrix {
    let mut e = SigmaMatrix::identity(m);
    for i in 0..m - r {
        for j in 0..r {
            e[(r + i, j)] = -&x[(i, j)];
        }
    }
    e
}
