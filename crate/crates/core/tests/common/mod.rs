//! Random generators and independent oracles shared by the integration
//! tests.

#![allow(dead_code)]

use std::path::PathBuf;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qrec_core::arith::linalg;
use qrec_core::arith::{int, rat, QParam, Rational, RationalFunction, SigmaMatrix, SigmaPoly, TPoly};
use qrec_core::ore::{OreMatrix, OrePoly, QRecSystem};
use qrec_core::popov::ore_row_rank;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn ex_bound() -> QRecSystem {
    qrec_core::parse_system(&fixture("ex_bound.json")).unwrap()
}

pub fn ex_deg() -> QRecSystem {
    qrec_core::parse_system(&fixture("ex_deg.json")).unwrap()
}

pub const Q_VALUES: [(i64, i64); 5] = [(2, 1), (3, 1), (1, 2), (-2, 1), (5, 3)];

pub fn qparam(num: i64, den: i64) -> QParam {
    QParam::new(rat(num, den)).unwrap()
}

pub fn random_q(rng: &mut impl Rng) -> QParam {
    let (n, d) = *Q_VALUES.choose(rng).unwrap();
    qparam(n, d)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num = rng.gen_range(-6..=6);
    if rng.gen_bool(0.2) {
        rat(num, rng.gen_range(1..=4))
    } else {
        int(num)
    }
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_coeffs(rng: &mut impl Rng, max_degree: usize) -> Vec<Rational> {
    let d = rng.gen_range(0..=max_degree);
    (0..=d).map(|_| random_rational(rng)).collect()
}

pub fn random_tpoly(rng: &mut impl Rng, max_degree: usize) -> TPoly {
    TPoly::from_coeffs(random_coeffs(rng, max_degree))
}

pub fn random_sigma_poly(rng: &mut impl Rng, max_degree: usize) -> SigmaPoly {
    SigmaPoly::from_coeffs(random_coeffs(rng, max_degree))
}

/// A sparse-ish random polynomial: each coefficient is zero with
/// probability `zero_prob`.
pub fn sparse_sigma_poly(rng: &mut impl Rng, max_degree: usize, zero_prob: f64) -> SigmaPoly {
    let coeffs = (0..=max_degree)
        .map(|_| if rng.gen_bool(zero_prob) { Rational::zero() } else { random_nonzero_rational(rng) })
        .collect();
    SigmaPoly::from_coeffs(coeffs)
}

pub fn random_sigma_matrix(rng: &mut impl Rng, rows: usize, cols: usize, max_degree: usize) -> SigmaMatrix {
    SigmaMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| sparse_sigma_poly(rng, max_degree, 0.4)).collect())
            .collect(),
    )
}

/// Random matrix of rank below `n`: the last row is a `K[σ]`-combination of
/// the others.
pub fn random_deficient_sigma_matrix(rng: &mut impl Rng, n: usize, max_degree: usize) -> SigmaMatrix {
    let mut rows = random_sigma_matrix(rng, n, n, max_degree).to_rows();
    let mut last = vec![SigmaPoly::zero(); n];
    for row in rows.iter().take(n - 1) {
        let c = sparse_sigma_poly(rng, 1, 0.5);
        for (acc, e) in last.iter_mut().zip(row) {
            *acc += &(&c * e);
        }
    }
    rows[n - 1] = last;
    SigmaMatrix::from_rows(rows)
}

/// Product of random elementary row operations over `K[σ]`: swaps, nonzero
/// constant scalings and additions of `c σ^k` times another row.
pub fn random_unimodular(rng: &mut impl Rng, n: usize, ops: usize) -> SigmaMatrix {
    let mut u = SigmaMatrix::identity(n);
    for _ in 0..ops {
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
                u.swap_rows(a, b);
            }
            1 => {
                let i = rng.gen_range(0..n);
                let c = random_nonzero_rational(rng);
                let row: Vec<SigmaPoly> = u.row(i).iter().map(|p| p.scale(&c)).collect();
                u.set_row(i, &row);
            }
            _ if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                let f = SigmaPoly::monomial(random_nonzero_rational(rng), rng.gen_range(0..=1));
                let src = u.row(j).to_vec();
                let row: Vec<SigmaPoly> = u.row(i).iter().zip(&src).map(|(a, b)| a + &(&f * b)).collect();
                u.set_row(i, &row);
            }
            _ => {}
        }
    }
    u
}

pub fn random_ore(r: &mut impl Rng, q: &QParam, s: usize, ell: usize) -> OrePoly {
    let k = r.gen_range(0..=s);
    OrePoly::new((0..=k).map(|_| random_tpoly(r, ell)).collect(), q.clone())
}

pub fn random_ore_matrix(r: &mut impl Rng, q: &QParam, m: usize, s: usize, ell: usize) -> OreMatrix {
    let rows = (0..m).map(|_| (0..m).map(|_| random_ore(r, q, s, ell)).collect()).collect();
    OreMatrix::from_entries(rows, q.clone()).unwrap()
}

pub fn random_ratfunc(r: &mut impl Rng) -> RationalFunction {
    loop {
        let d = random_tpoly(r, 2);
        if !d.is_zero() {
            return RationalFunction::new(random_tpoly(r, 3), d).unwrap();
        }
    }
}

/// Determinant by the Leibniz formula over all permutations.
pub fn leibniz_det(m: &SigmaMatrix) -> SigmaPoly {
    let n = m.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = SigmaPoly::zero();
    permute(&mut perm, 0, &mut |p| {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut term = SigmaPoly::one();
        for (i, &j) in p.iter().enumerate() {
            term = &term * &m[(i, j)];
        }
        if inversions % 2 == 1 {
            term = -term;
        }
        total += &term;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn lead_pos(row: &[SigmaPoly]) -> Option<(usize, usize)> {
    // (degree, position) maximal for degree, minimal for position on ties
    let mut best: Option<(usize, usize)> = None;
    for (pos, p) in row.iter().enumerate() {
        if let Some(d) = p.degree() {
            if best.map_or(true, |(bd, _)| d > bd) {
                best = Some((d, pos));
            }
        }
    }
    best
}

/// Reduces `row` by the rows of `basis`, cancelling any divisible term in
/// the first position found, until nothing is divisible. Independent of the
/// library's TOP-maximal strategy; the fixpoint is the same for a reduced
/// Gröbner basis.
pub fn naive_reduce(row: &[SigmaPoly], basis: &SigmaMatrix) -> Vec<SigmaPoly> {
    let pivots: Vec<(usize, usize, Rational)> = (0..basis.rows())
        .map(|i| {
            let (d, pos) = lead_pos(basis.row(i)).expect("basis rows are nonzero");
            (d, pos, basis[(i, pos)].leading_coeff().unwrap().clone())
        })
        .collect();
    let mut cur = row.to_vec();
    'outer: loop {
        for (i, (d, pos, lc)) in pivots.iter().enumerate() {
            let p = &cur[*pos];
            for e in (*d..=p.degree().unwrap_or(0)).rev() {
                let c = p.coeff(e);
                if c.is_zero() || p.degree().is_none() {
                    continue;
                }
                let f = SigmaPoly::monomial(&c / lc, e - d);
                for (a, b) in cur.iter_mut().zip(basis.row(i)) {
                    *a = &*a - &(&f * b);
                }
                continue 'outer;
            }
        }
        return cur;
    }
}

pub fn in_row_module(row: &[SigmaPoly], basis: &SigmaMatrix) -> bool {
    if basis.rows() == 0 {
        return row.iter().all(SigmaPoly::is_zero);
    }
    naive_reduce(row, basis).iter().all(SigmaPoly::is_zero)
}

/// A vector of Laurent polynomials `t^{-a_i} p_i(t)` with `p_i(0) ≠ 0`.
pub fn laurent(p: TPoly, a: usize) -> RationalFunction {
    RationalFunction::from_laurent(p, a)
}

pub fn random_laurent(rng: &mut impl Rng, max_exp: usize, max_degree: usize) -> (RationalFunction, usize) {
    let a = rng.gen_range(0..=max_exp);
    loop {
        let p = random_tpoly(rng, max_degree);
        if !p.coeff(0).is_zero() {
            return (laurent(p, a), a);
        }
    }
}

/// Flattens vectors with `t`-power denominators into coefficient vectors
/// over `K` after multiplying by `t^shift`.
fn flatten(v: &[RationalFunction], shift: usize, width: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(v.len() * width);
    for f in v {
        let k = f.t_power_denominator().expect("t-power denominator");
        let num = f.num().shift_up(shift - k);
        assert!(num.degree().map_or(true, |d| d < width));
        out.extend((0..width).map(|e| num.coeff(e)));
    }
    out
}

fn shape(vs: &[&[RationalFunction]]) -> (usize, usize) {
    let shift = vs
        .iter()
        .flat_map(|v| v.iter())
        .map(|f| f.t_power_denominator().expect("t-power denominator"))
        .max()
        .unwrap_or(0);
    let width = vs
        .iter()
        .flat_map(|v| v.iter())
        .map(|f| f.num().degree().unwrap_or(0) + shift + 1)
        .max()
        .unwrap_or(1);
    (shift, width)
}

/// Dimension over `K` of the span of the given vectors.
pub fn span_rank(vs: &[Vec<RationalFunction>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    let refs: Vec<&[RationalFunction]> = vs.iter().map(|v| v.as_slice()).collect();
    let (shift, width) = shape(&refs);
    let rows: Vec<Vec<Rational>> = vs.iter().map(|v| flatten(v, shift, width)).collect();
    let cols = rows[0].len();
    linalg::rank(&rows, cols)
}

pub fn in_span(v: &[RationalFunction], basis: &[Vec<RationalFunction>]) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span_rank(&all) == span_rank(basis)
}

pub fn same_span(a: &[Vec<RationalFunction>], b: &[Vec<RationalFunction>]) -> bool {
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    let r = span_rank(&all);
    r == span_rank(a) && r == span_rank(b)
}

/// A regular system with known solutions. `homogeneous` solve the
/// associated homogeneous system; `particular` solves the full one.
#[derive(Clone, Debug)]
pub struct PlantedCase {
    pub sys: QRecSystem,
    pub homogeneous: Vec<Vec<RationalFunction>>,
    pub particular: Option<Vec<RationalFunction>>,
    /// Largest `t`-power in any planted denominator.
    pub max_exponent: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Singularity {
    None,
    Tail,
    Head,
    Both,
}

fn ore_entry(rng: &mut impl Rng, s: usize, max_t: usize, q: &QParam) -> OrePoly {
    let coeffs = (0..=s)
        .map(|_| if rng.gen_bool(0.3) { TPoly::zero() } else { random_tpoly(rng, max_t) })
        .collect();
    OrePoly::new(coeffs, q.clone())
}

/// Builds a random regular system of size `m` with order at most `s` and
/// t-degree at most `max_ell`, a planted homogeneous solution whose last
/// component is `t^{-a}`, and a planted particular solution.
pub fn planted_case(rng: &mut impl Rng, m: usize, s: usize, max_ell: usize, singular: Singularity) -> PlantedCase {
    loop {
        if let Some(case) = try_planted_case(rng, m, s, max_ell, singular) {
            return case;
        }
    }
}

fn try_planted_case(
    rng: &mut impl Rng,
    m: usize,
    s: usize,
    max_ell: usize,
    singular: Singularity,
) -> Option<PlantedCase> {
    let q = random_q(rng);
    let k = m - 1;
    let a_max = rng.gen_range(0..=2usize);
    // homogeneous planted solution y with y_k = t^{-a_max}
    let mut y = Vec::with_capacity(m);
    for i in 0..m {
        if i == k {
            y.push(laurent(TPoly::one(), a_max));
        } else {
            let (f, _) = random_laurent(rng, a_max, 1);
            y.push(f);
        }
    }
    let mut rows: Vec<Vec<OrePoly>> = (0..m)
        .map(|_| (0..m).map(|_| ore_entry(rng, s, 1, &q)).collect())
        .collect();
    // make A • y = 0 by adjusting the σ^0 coefficient of column k
    for row in rows.iter_mut() {
        let r = row
            .iter()
            .zip(&y)
            .fold(RationalFunction::zero(), |acc, (e, f)| acc + e.apply(f));
        let c = &r * &RationalFunction::from_poly(TPoly::monomial(int(1), a_max));
        if !c.is_polynomial() {
            return None;
        }
        let mut coeffs = row[k].coeffs().to_vec();
        if coeffs.is_empty() {
            coeffs.push(TPoly::zero());
        }
        coeffs[0] = &coeffs[0] - c.num();
        row[k] = OrePoly::new(coeffs, q.clone());
    }
    let mut a = OreMatrix::from_entries(rows, q.clone()).ok()?;

    // engineered singularities
    if matches!(singular, Singularity::Tail | Singularity::Head | Singularity::Both) {
        let r = rng.gen_range(0..m);
        a = a.mul_rows_by_t(r..r + 1);
    }
    if singular == Singularity::Both && m > 1 {
        // lift all rows but one to the top t-degree so the leading matrix
        // loses that row
        let ell = a.t_degree()?;
        let keep = rng.gen_range(0..m);
        let mut lifted = a.clone();
        for i in 0..m {
            if i == keep {
                continue;
            }
            let row_deg = (0..m).filter_map(|j| a.get(i, j).t_degree()).max().unwrap_or(0);
            for _ in row_deg..ell.max(row_deg + 1) {
                lifted = lifted.mul_rows_by_t(i..i + 1);
            }
        }
        a = lifted;
    }
    // constant mixing keeps order and t-degree
    if m > 1 && rng.gen_bool(0.7) {
        let mix = random_unimodular(rng, m, 4).map(|p| SigmaPoly::constant(p.coeff(0)));
        if mix.determinant().ok()?.is_zero() {
            return None;
        }
        a = a.left_mul_sigma(&mix).ok()?;
    }
    // a tail singular system mirrored under t -> 1/t is head singular
    if singular == Singularity::Head {
        a = mirror(&a)?;
        y = y.iter().map(invert_variable).collect();
    }

    if a.sigma_order()? > s || a.t_degree()? > max_ell {
        return None;
    }
    if ore_row_rank(&a) < m {
        return None;
    }
    let hom = QRecSystem::homogeneous(a.clone()).ok()?;
    let lambda = qrec_core::lambda_poly(&hom);
    let rho = qrec_core::rho_poly(&hom);
    let (want_tail, want_head) = match singular {
        Singularity::None => (false, false),
        Singularity::Tail => (true, false),
        Singularity::Head => (false, true),
        Singularity::Both => (true, true),
    };
    if lambda.is_zero() != want_tail || rho.is_zero() != want_head {
        return None;
    }

    // particular solution w and the matching right side
    let w: Vec<RationalFunction> = (0..m).map(|_| random_laurent(rng, 2, 2).0).collect();
    let rhs = a.apply_matrix(&w).ok()?;
    let nu = rhs.iter().filter_map(RationalFunction::t_power_denominator).max().unwrap_or(0);
    let mut b = Vec::with_capacity(m);
    for f in &rhs {
        let shifted = f * &RationalFunction::from_poly(TPoly::monomial(int(1), nu));
        if !shifted.is_polynomial() {
            return None;
        }
        b.push(shifted.num().clone());
    }
    let sys = QRecSystem::new(a, b, nu).ok()?;
    let max_exponent = y.iter().chain(&w).filter_map(RationalFunction::t_power_denominator).max().unwrap_or(0);
    Some(PlantedCase {
        sys,
        homogeneous: vec![y],
        particular: Some(w),
        max_exponent,
    })
}

/// `t^ℓ A(1/t)` over `1/q`. If `A • y = 0` then the mirrored operator
/// annihilates `y(1/t)`; trailing and leading matrices trade places.
pub fn mirror(a: &OreMatrix) -> Option<OreMatrix> {
    let ell = a.t_degree()?;
    let q = QParam::new(a.q().value().recip()).ok()?;
    let rows = (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| {
                    let coeffs = a
                        .get(i, j)
                        .coeffs()
                        .iter()
                        .map(|p| TPoly::from_coeffs((0..=ell).rev().map(|k| p.coeff(k)).collect()))
                        .collect();
                    OrePoly::new(coeffs, q.clone())
                })
                .collect()
        })
        .collect();
    OreMatrix::from_entries(rows, q).ok()
}

/// `f(1/t)`.
pub fn invert_variable(f: &RationalFunction) -> RationalFunction {
    let flip = |p: &TPoly, d: usize| TPoly::from_coeffs((0..=d).rev().map(|k| p.coeff(k)).collect());
    let (dn, dd) = (f.num().degree().unwrap_or(0), f.den().degree().unwrap_or(0));
    let d = dn.max(dd);
    RationalFunction::new(flip(f.num(), d), flip(f.den(), d)).expect("nonzero denominator")
}

/// The corpus used by the property suites: a mix of regular, t-tail
/// singular, t-head singular and doubly singular systems.
pub fn corpus(seed: u64, count: usize) -> Vec<PlantedCase> {
    let mut r = rng(seed);
    let kinds = [Singularity::None, Singularity::Tail, Singularity::Head, Singularity::Both];
    (0..count)
        .map(|i| {
            let singular = kinds[i % kinds.len()];
            let m = if singular == Singularity::None || singular == Singularity::Tail {
                r.gen_range(1..=3)
            } else {
                r.gen_range(2..=3)
            };
            let s = r.gen_range(1..=2);
            planted_case(&mut r, m, s, 3, singular)
        })
        .collect()
}

/// All polynomial solutions of degree `≤ n` computed by applying the
/// operator to each monomial unknown, independently of the library's ansatz
/// construction. Returns (particular, homogeneous basis) as coefficient
/// solutions of the linear system.
pub fn brute_force_polynomial_solutions(
    sys: &QRecSystem,
    n: usize,
) -> (Option<Vec<TPoly>>, Vec<Vec<TPoly>>) {
    let m = sys.dimension();
    let width = n + 1;
    let mut columns: Vec<Vec<TPoly>> = Vec::new();
    for i in 0..m {
        for k in 0..width {
            let mut unit = vec![RationalFunction::zero(); m];
            unit[i] = RationalFunction::from_poly(TPoly::monomial(int(1), k));
            let image = sys.matrix().apply_matrix(&unit).unwrap();
            columns.push(image.iter().map(|f| f.num().clone()).collect());
        }
    }
    // t^ν A y = b, compared coefficientwise up to a safe height
    let height = columns
        .iter()
        .flatten()
        .chain(sys.rhs_poly())
        .filter_map(TPoly::degree)
        .max()
        .unwrap_or(0)
        + sys.nu()
        + 1;
    let mut matrix = Vec::new();
    let mut rhs = Vec::new();
    for r in 0..m {
        for e in 0..height {
            matrix.push(columns.iter().map(|c| c[r].shift_up(sys.nu()).coeff(e)).collect::<Vec<Rational>>());
            rhs.push(sys.rhs_poly()[r].coeff(e));
        }
    }
    let unknowns = m * width;
    let to_vec = |x: &[Rational]| -> Vec<TPoly> { x.chunks(width).map(|c| TPoly::from_coeffs(c.to_vec())).collect() };
    let basis = linalg::nullspace(&matrix, unknowns).iter().map(|v| to_vec(v)).collect();
    let particular = linalg::solve(&matrix, &rhs, unknowns).map(|(x, _)| to_vec(&x));
    (particular, basis)
}

pub fn to_rational_vec(v: &[TPoly]) -> Vec<RationalFunction> {
    v.iter().cloned().map(RationalFunction::from_poly).collect()
}
