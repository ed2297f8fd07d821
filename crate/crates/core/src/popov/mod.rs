//! Popov normal forms over `K[σ]`.
//!
//! Rows of a matrix over `K[σ]` are elements of the free module `K[σ]^n`.
//! Module monomials `e_i σ^a` are ordered term-over-position: higher σ-degree
//! wins, and at equal degree the smaller position index wins. A matrix is in
//! Popov form when its rows are a reduced Gröbner basis for that order: the
//! leading terms sit in distinct positions, are monic, and no term of any row
//! is divisible by the leading term of another row.

mod division;
mod rank;

pub use division::{reduce_rows, DivisionResult};
pub use rank::ore_row_rank;

use num_traits::One;

use crate::arith::{Rational, SigmaMatrix, SigmaPoly};
use crate::error::{Error, Result};

/// Position and σ-degree of a module monomial `e_position σ^degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LeadingTerm {
    pub position: usize,
    pub degree: usize,
}

impl LeadingTerm {
    /// Term-over-position comparison key: larger is bigger.
    fn key(self) -> (usize, std::cmp::Reverse<usize>) {
        (self.degree, std::cmp::Reverse(self.position))
    }
}

impl PartialOrd for LeadingTerm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LeadingTerm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// The TOP-maximal module monomial of a nonzero row. Positions are 0-based.
pub fn top_leading_term(row: &[SigmaPoly]) -> Result<LeadingTerm> {
    leading_term(row).ok_or(Error::ZeroPolynomial)
}

pub(crate) fn leading_term(row: &[SigmaPoly]) -> Option<LeadingTerm> {
    row.iter()
        .enumerate()
        .filter_map(|(position, p)| p.degree().map(|degree| LeadingTerm { position, degree }))
        .max()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PopovResult {
    /// `rank × n` matrix in Popov form, rows sorted by pivot position.
    pub popov: SigmaMatrix,
    /// Unimodular `m × m` transform with `transform · M = [popov; 0]`.
    pub transform: SigmaMatrix,
    pub rank: usize,
}

/// `row_i -= c σ^shift row_j` on both the matrix rows and the transform rows.
fn sub_shifted(
    target: &mut [SigmaPoly],
    source: &[SigmaPoly],
    c: &Rational,
    shift: usize,
) {
    for (a, b) in target.iter_mut().zip(source) {
        if !b.is_zero() {
            *a -= &b.shift_up(shift).scale(c);
        }
    }
}

pub fn popov_form(m: &SigmaMatrix) -> PopovResult {
    let nrows = m.rows();
    let mut rows = m.to_rows();
    let mut trans = SigmaMatrix::identity(nrows).to_rows();

    // Weak Popov form: cancel leading terms until all pivots are distinct.
    loop {
        let lts: Vec<Option<LeadingTerm>> = rows.iter().map(|r| leading_term(r)).collect();
        let clash = (0..nrows).find_map(|i| {
            let li = lts[i]?;
            (0..nrows).find_map(|j| {
                let lj = lts[j]?;
                (j != i && lj.position == li.position && li.degree >= lj.degree).then_some((i, j))
            })
        });
        let Some((i, j)) = clash else { break };
        let (li, lj) = (lts[i].unwrap(), lts[j].unwrap());
        let c = rows[i][li.position].leading_coeff().unwrap()
            / rows[j][lj.position].leading_coeff().unwrap();
        let shift = li.degree - lj.degree;
        let (src_row, src_trans) = (rows[j].clone(), trans[j].clone());
        sub_shifted(&mut rows[i], &src_row, &c, shift);
        sub_shifted(&mut trans[i], &src_trans, &c, shift);
    }

    // Monic pivots.
    for i in 0..nrows {
        if let Some(lt) = leading_term(&rows[i]) {
            let inv = rows[i][lt.position].leading_coeff().unwrap().recip();
            if !inv.is_one() {
                rows[i].iter_mut().for_each(|p| *p = p.scale(&inv));
                trans[i].iter_mut().for_each(|p| *p = p.scale(&inv));
            }
        }
    }

    // Interreduce so that no row has a term divisible by another pivot.
    let nonzero: Vec<usize> = (0..nrows).filter(|&i| leading_term(&rows[i]).is_some()).collect();
    for &i in &nonzero {
        loop {
            let target = nonzero
                .iter()
                .filter(|&&j| j != i)
                .filter_map(|&j| {
                    let lj = leading_term(&rows[j]).unwrap();
                    let e = rows[i][lj.position].degree()?;
                    (e >= lj.degree).then_some((LeadingTerm { position: lj.position, degree: e }, j, lj))
                })
                .max_by_key(|(term, _, _)| *term);
            let Some((term, j, lj)) = target else { break };
            let c = rows[i][term.position].coeff(term.degree);
            let shift = term.degree - lj.degree;
            let (src_row, src_trans) = (rows[j].clone(), trans[j].clone());
            sub_shifted(&mut rows[i], &src_row, &c, shift);
            sub_shifted(&mut trans[i], &src_trans, &c, shift);
        }
    }

    let mut order: Vec<usize> = nonzero.clone();
    order.sort_by_key(|&i| leading_term(&rows[i]).unwrap().position);
    let rank = order.len();
    order.extend((0..nrows).filter(|i| !nonzero.contains(i)));

    let popov_rows: Vec<Vec<SigmaPoly>> = order[..rank].iter().map(|&i| rows[i].clone()).collect();
    let popov = if rank == 0 {
        SigmaMatrix::zeros(0, m.cols())
    } else {
        SigmaMatrix::from_rows(popov_rows)
    };
    let transform = if nrows == 0 {
        SigmaMatrix::zeros(0, 0)
    } else {
        SigmaMatrix::from_rows(order.iter().map(|&i| trans[i].clone()).collect())
    };
    PopovResult { popov, transform, rank }
}

/// Checks the Popov conditions and returns the pivots on success.
pub fn check_popov(p: &SigmaMatrix) -> Result<Vec<LeadingTerm>> {
    let mut pivots = Vec::with_capacity(p.rows());
    for i in 0..p.rows() {
        let lt = leading_term(p.row(i)).ok_or_else(|| Error::NotPopov(format!("row {i} is zero")))?;
        if !p[(i, lt.position)].leading_coeff().unwrap().is_one() {
            return Err(Error::NotPopov(format!("pivot of row {i} is not monic")));
        }
        if pivots.iter().any(|l: &LeadingTerm| l.position == lt.position) {
            return Err(Error::NotPopov(format!("pivot position {} repeats", lt.position)));
        }
        pivots.push(lt);
    }
    for i in 0..p.rows() {
        for (j, lj) in pivots.iter().enumerate() {
            if i != j && p[(i, lj.position)].degree().is_some_and(|d| d >= lj.degree) {
                return Err(Error::NotPopov(format!(
                    "row {i} is reducible by the pivot of row {j}"
                )));
            }
        }
    }
    Ok(pivots)
}

pub fn is_popov(p: &SigmaMatrix) -> bool {
    check_popov(p).is_ok()
}

/// Exact determinant over `K[σ]`.
pub fn sigma_det(m: &SigmaMatrix) -> Result<SigmaPoly> {
    let det = m.determinant()?;
    if m.rows() <= 4 {
        debug_assert_eq!(det, m.cofactor_determinant()?, "Bareiss and cofactor expansion disagree");
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn sp(c: &[i64]) -> SigmaPoly {
        SigmaPoly::from_ints(c)
    }

    #[test]
    fn leading_terms() {
        let lt = |row: &[SigmaPoly]| top_leading_term(row).unwrap();
        assert_eq!(lt(&[sp(&[0, 0, 1]), sp(&[0, 0, 1])]), LeadingTerm { position: 0, degree: 2 });
        assert_eq!(lt(&[sp(&[0, 0, 0, 1]), sp(&[0, 1])]), LeadingTerm { position: 0, degree: 3 });
        assert_eq!(lt(&[sp(&[]), sp(&[5])]), LeadingTerm { position: 1, degree: 0 });
        assert!(top_leading_term(&[sp(&[]), sp(&[])]).is_err());
    }

    #[test]
    fn popov_of_singular_leading_matrix() {
        let m = SigmaMatrix::from_int_rows(&[&[&[], &[]], &[&[], &[-64]]]);
        let res = popov_form(&m);
        assert_eq!(res.rank, 1);
        assert_eq!(res.popov, SigmaMatrix::from_int_rows(&[&[&[], &[1]]]));
        let prod = &res.transform * &m;
        assert_eq!(prod.row_block(0..1), res.popov);
        assert!(prod.row_block(1..2).is_zero());
        assert!(res.transform.determinant().unwrap().is_constant());
        assert!(!res.transform.determinant().unwrap().is_zero());
    }

    #[test]
    fn popov_of_identity() {
        let id = SigmaMatrix::identity(3);
        let res = popov_form(&id);
        assert_eq!(res.rank, 3);
        assert_eq!(res.popov, id);
    }

    #[test]
    fn popov_of_zero() {
        let res = popov_form(&SigmaMatrix::zeros(2, 2));
        assert_eq!(res.rank, 0);
        assert_eq!(res.popov.rows(), 0);
    }

    #[test]
    fn popov_cancels_clashing_pivots() {
        // (x, 1) and (x^2, 2x^2) share pivot position 0
        let m = SigmaMatrix::from_int_rows(&[&[&[0, 1], &[1]], &[&[0, 0, 1], &[0, 0, 2]]]);
        let res = popov_form(&m);
        assert_eq!(res.rank, 2);
        let expected = SigmaMatrix::from_rows(vec![
            vec![sp(&[0, 1]), sp(&[1])],
            vec![sp(&[]), SigmaPoly::from_coeffs(vec![int(0), crate::arith::rat(-1, 2), int(1)])],
        ]);
        assert_eq!(res.popov, expected);
        assert_eq!(&res.transform * &m, res.popov);
        let det = res.transform.determinant().unwrap();
        assert!(det.is_constant() && !det.is_zero());
    }

    #[test]
    fn det_examples() {
        let lead = SigmaMatrix::from_int_rows(&[&[&[], &[64]], &[&[32, -12, 1], &[-8, 8]]]);
        assert_eq!(sigma_det(&lead).unwrap(), sp(&[-2048, 768, -64]));
        assert!(sigma_det(&SigmaMatrix::zeros(2, 3)).is_err());
    }
}
