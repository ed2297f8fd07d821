use crate::arith::{QParam, RationalFunction};
use crate::arith::linalg::left_kernel_vector;
use crate::ore::OreMatrix;

/// An entry over `K(t)[σ]`: `coeffs[j]` multiplies `σ^j` from the left.
type Entry = Vec<RationalFunction>;
type Row = Vec<Entry>;

fn row_degree(row: &Row) -> Option<usize> {
    row.iter()
        .filter_map(|e| e.iter().rposition(|c| !c.is_zero()))
        .max()
}

fn shift_coeff(c: &RationalFunction, q: &QParam, e: i64) -> RationalFunction {
    if e == 0 {
        c.clone()
    } else {
        c.substitute_qt(&q.pow(e)).expect("q is nonzero")
    }
}

/// `c · σ^e · row`.
fn scaled_shift(row: &Row, c: &RationalFunction, e: usize, q: &QParam) -> Row {
    row.iter()
        .map(|entry| {
            let mut out = vec![RationalFunction::zero(); e];
            out.extend(entry.iter().map(|a| c * &shift_coeff(a, q, e as i64)));
            out
        })
        .collect()
}

fn add_into(acc: &mut Row, other: &Row) {
    for (a, b) in acc.iter_mut().zip(other) {
        if a.len() < b.len() {
            a.resize(b.len(), RationalFunction::zero());
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x = &*x + y;
        }
    }
}

/// Rank of the row module of `A` over the skew field of fractions of
/// `K(t)[σ]`, computed by repeatedly cancelling dependent leading row
/// coefficients.
pub fn ore_row_rank(a: &OreMatrix) -> usize {
    let q = a.q().clone();
    let n = a.cols();
    let mut rows: Vec<Row> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|e| e.coeffs().iter().cloned().map(RationalFunction::from_poly).collect())
                .collect()
        })
        .collect();
    loop {
        rows.retain(|r| row_degree(r).is_some());
        if rows.is_empty() {
            return 0;
        }
        let degs: Vec<usize> = rows.iter().map(|r| row_degree(r).unwrap()).collect();
        let top = *degs.iter().max().unwrap();
        let lcs: Vec<Vec<RationalFunction>> = rows
            .iter()
            .zip(&degs)
            .map(|(r, &d)| {
                r.iter()
                    .map(|e| {
                        let c = e.get(d).cloned().unwrap_or_default();
                        shift_coeff(&c, &q, (top - d) as i64)
                    })
                    .collect()
            })
            .collect();
        let Some(c) = left_kernel_vector(&lcs, n) else {
            return rows.len();
        };
        let k = (0..rows.len())
            .filter(|&i| !c[i].is_zero())
            .max_by_key(|&i| degs[i])
            .expect("kernel vector is nonzero");
        let back = -((top - degs[k]) as i64);
        let mut replacement: Row = vec![Vec::new(); n];
        for i in 0..rows.len() {
            if c[i].is_zero() {
                continue;
            }
            let ci = shift_coeff(&c[i], &q, back);
            add_into(&mut replacement, &scaled_shift(&rows[i], &ci, degs[k] - degs[i], &q));
        }
        debug_assert!(row_degree(&replacement).map_or(true, |d| d < degs[k]));
        rows[k] = replacement;
    }
}
