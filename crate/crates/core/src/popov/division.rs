use super::{check_popov, LeadingTerm};
use crate::arith::{SigmaMatrix, SigmaPoly};
use crate::error::{Error, Result};

/// `C = quotient · P + remainder` where no term of any remainder row is
/// divisible by a pivot of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: SigmaMatrix,
    pub remainder: SigmaMatrix,
}

impl DivisionResult {
    /// True when every row of `C` lies in the row module of `P`.
    pub fn is_exact(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// Gröbner division of every row of `c` by the rows of `p`, which must be in
/// Popov form.
pub fn reduce_rows(c: &SigmaMatrix, p: &SigmaMatrix) -> Result<DivisionResult> {
    if c.cols() != p.cols() {
        return Err(Error::dims(format!("{} columns", p.cols()), format!("{} columns", c.cols())));
    }
    let pivots = check_popov(p)?;
    let mut quotient = SigmaMatrix::zeros(c.rows(), p.rows());
    let mut remainder = c.clone();
    for i in 0..c.rows() {
        let (q, r) = reduce_row(c.row(i), p, &pivots);
        quotient.set_row(i, &q);
        remainder.set_row(i, &r);
    }
    Ok(DivisionResult { quotient, remainder })
}

/// Repeatedly cancels the TOP-largest divisible term. Each step replaces
/// that term by strictly smaller ones, so the loop terminates.
pub(crate) fn reduce_row(
    row: &[SigmaPoly],
    p: &SigmaMatrix,
    pivots: &[LeadingTerm],
) -> (Vec<SigmaPoly>, Vec<SigmaPoly>) {
    let mut rem = row.to_vec();
    let mut quot = vec![SigmaPoly::zero(); p.rows()];
    loop {
        let target = pivots
            .iter()
            .enumerate()
            .filter_map(|(j, lj)| {
                let e = rem[lj.position].degree()?;
                (e >= lj.degree).then_some((LeadingTerm { position: lj.position, degree: e }, j))
            })
            .max_by_key(|(term, _)| *term);
        let Some((term, j)) = target else { break };
        let lj = pivots[j];
        // pivots are monic
        let c = rem[term.position].coeff(term.degree);
        let shift = term.degree - lj.degree;
        let factor = SigmaPoly::monomial(c, shift);
        for (a, b) in rem.iter_mut().zip(p.row(j)) {
            if !b.is_zero() {
                *a -= &(&factor * b);
            }
        }
        quot[j] += &factor;
    }
    (quot, rem)
}
