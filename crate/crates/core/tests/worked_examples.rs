//! Golden values from the worked examples.

mod common;

use common::{ex_bound, ex_deg, laurent, same_span};
use qrec_core::arith::{int, RationalFunction, SigmaMatrix, SigmaPoly, TPoly};
use qrec_core::bounds::{degree_bound, denominator_t_bound, lambda_poly, q_power_roots, rho_poly, Bound, Direction};
use qrec_core::ore::OreMatrix;
use qrec_core::popov::{ore_row_rank, popov_form, reduce_rows, sigma_det};
use qrec_core::regularize::{head_regularize, replay_trace, tail_regularize, ScaleDirection, Step};
use qrec_core::solve::{polynomial_solutions, rational_t_solutions, substitute_t_power, verify_solution};
use qrec_core::Error;

fn sp(c: &[i64]) -> SigmaPoly {
    SigmaPoly::from_ints(c)
}

fn ex_bound_solutions() -> Vec<Vec<RationalFunction>> {
    vec![
        vec![RationalFunction::one(), laurent(TPoly::one(), 3)],
        vec![laurent(TPoly::one(), 1), laurent(TPoly::one(), 3)],
    ]
}

#[test]
fn ex_bound_trailing_matrix_and_lambda() {
    let sys = ex_bound();
    let trailing = sys.matrix().t_trailing();
    let expected = SigmaMatrix::from_int_rows(&[&[&[-4, 4, 8], &[-1, 8]], &[&[4, -12, 8], &[-1, 8]]]);
    assert_eq!(trailing, expected);
    assert_eq!(lambda_poly(&sys), sp(&[8, -80, 128]));
    assert_eq!(q_power_roots(&lambda_poly(&sys), sys.q(), Direction::Negative).unwrap(), [1, 3].into());
    let report = denominator_t_bound(&sys).unwrap();
    assert_eq!(report.bound, Bound::Value(3));
    assert_eq!(report.structural_bound, Some(0));
}

#[test]
fn ex_bound_solutions_verify() {
    let sys = ex_bound();
    for y in ex_bound_solutions() {
        assert!(verify_solution(&sys, &y).unwrap());
        // the first row alone also annihilates (1, t^-3)
    }
    let first_row = sys.matrix().row(0);
    let y = &ex_bound_solutions()[0];
    let image = first_row[0].apply(&y[0]) + first_row[1].apply(&y[1]);
    assert!(image.is_zero());
    let wrong = vec![RationalFunction::one(), laurent(TPoly::one(), 2)];
    assert!(!verify_solution(&sys, &wrong).unwrap());
}

#[test]
fn ex_bound_is_full_rank() {
    assert_eq!(ore_row_rank(ex_bound().matrix()), 2);
}

#[test]
fn ex_bound_substitution_gives_ex_deg() {
    let sub = substitute_t_power(&ex_bound(), 3);
    assert_eq!(sub, ex_deg());
}

#[test]
fn ex_deg_is_head_singular() {
    let sys = ex_deg();
    assert_eq!(sys.matrix().t_degree(), Some(4));
    assert_eq!(sys.matrix().t_leading().unwrap(), SigmaMatrix::from_int_rows(&[&[&[], &[]], &[&[], &[-64]]]));
    assert!(rho_poly(&sys).is_zero());
    assert_eq!(degree_bound(&sys), Err(Error::HeadSingular));
}

#[test]
fn popov_of_ex_deg_leading_matrix() {
    let lead = ex_deg().matrix().t_leading().unwrap();
    let res = popov_form(&lead);
    assert_eq!(res.rank, 1);
    assert_eq!(res.popov, SigmaMatrix::from_int_rows(&[&[&[], &[1]]]));
}

#[test]
fn reduction_adds_upper_row_to_lower() {
    // after the Popov step and one shift the leading rows are (0, 64) and
    // (0, -64) in the unnormalized form
    let upper = SigmaMatrix::from_int_rows(&[&[&[], &[1]]]);
    let lower = SigmaMatrix::from_int_rows(&[&[&[], &[-64]]]);
    let div = reduce_rows(&lower, &upper).unwrap();
    assert!(div.is_exact());
    assert_eq!(div.quotient, SigmaMatrix::from_int_rows(&[&[&[-64]]]));
}

#[test]
fn ex_deg_head_regularization() {
    let sys = ex_deg();
    let (out, trace) = head_regularize(&sys).unwrap();
    let kinds: Vec<&str> = trace
        .steps
        .iter()
        .map(|s| match s {
            Step::Popov { .. } => "popov",
            Step::ScaleRows { direction: ScaleDirection::MultiplyByT, from: 1 } => "shift-lower",
            Step::ScaleRows { .. } => "other-scale",
            Step::Eliminate { .. } => "eliminate",
        })
        .collect();
    assert_eq!(kinds, ["popov", "shift-lower", "eliminate", "shift-lower", "shift-lower", "shift-lower"]);

    let lead = out.matrix().t_leading().unwrap();
    assert_eq!(lead, SigmaMatrix::from_int_rows(&[&[&[], &[1]], &[&[32, -12, 1], &[-8, 8]]]));
    assert_eq!(out.matrix().t_degree(), Some(4));

    // the lower row is exactly the displayed one
    let lower = OreMatrix::from_coefficient_matrices(
        &[
            vec![vec![TPoly::from_ints(&[0, 0, 0, -32, 32]), TPoly::from_ints(&[0, 0, 0, 8, -8])]],
            vec![vec![TPoly::from_ints(&[0, 0, 0, 12, -12]), TPoly::from_ints(&[0, 0, 0, -8, 8])]],
            vec![vec![TPoly::from_ints(&[0, 0, 0, -1, 1]), TPoly::zero()]],
        ],
        sys.q().clone(),
    )
    .unwrap();
    assert_eq!(out.matrix().row(1), lower.row(0));

    let rho = rho_poly(&out);
    assert_eq!(rho.monic(), sp(&[32, -12, 1]));
    assert_eq!(sigma_det(&SigmaMatrix::from_int_rows(&[&[&[], &[64]], &[&[32, -12, 1], &[-8, 8]]])).unwrap(), sp(&[-2048, 768, -64]));
    assert_eq!(q_power_roots(&rho, out.q(), Direction::Positive).unwrap(), [2, 3].into());
    assert_eq!(degree_bound(&out).unwrap().bound, Bound::Value(3));
    assert_eq!(replay_trace(&trace, &sys).unwrap(), out);
}

#[test]
fn ex_deg_polynomial_solutions() {
    let sols = polynomial_solutions(&ex_deg(), 3);
    assert!(sols.particular.is_none());
    let expected = vec![
        vec![RationalFunction::from_poly(TPoly::monomial(int(1), 3)), RationalFunction::one()],
        vec![RationalFunction::from_poly(TPoly::monomial(int(1), 2)), RationalFunction::one()],
    ];
    assert_eq!(sols.dimension(), 2);
    assert!(same_span(&sols.homogeneous_basis, &expected));
}

#[test]
fn ex_bound_full_pipeline() {
    let sols = rational_t_solutions(&ex_bound()).unwrap();
    assert_eq!(sols.denominator_exponent, 3);
    assert!(sols.particular.is_none());
    assert_eq!(sols.dimension(), 2);
    assert!(same_span(&sols.homogeneous_basis, &ex_bound_solutions()));
}

#[test]
fn ex_bound_needs_no_tail_regularization() {
    let sys = ex_bound();
    let (out, trace) = tail_regularize(&sys).unwrap();
    assert!(trace.is_empty());
    assert_eq!(out, sys);
}
