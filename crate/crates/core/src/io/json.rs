//! Stable JSON encodings. Rationals are `"p/q"` strings, polynomials are
//! ascending coefficient arrays, and objects have sorted keys.

use serde_json::{json, Value};

use super::document::SystemDocument;
use crate::arith::{PolyMatrix, Poly, Rational, RationalFunction, Variable};
use crate::bounds::{Bound, BoundKind, BoundReport};
use crate::ore::QRecSystem;
use crate::regularize::{RegularizationTrace, ScaleDirection, Side, Step};
use crate::solve::SolutionSet;

pub fn rational(r: &Rational) -> Value {
    Value::String(format!("{}/{}", r.numer(), r.denom()))
}

pub fn poly<V: Variable>(p: &Poly<V>) -> Value {
    Value::Array(p.coeffs().iter().map(rational).collect())
}

pub fn rational_function(f: &RationalFunction) -> Value {
    json!({ "num": poly(f.num()), "den": poly(f.den()) })
}

pub fn vector(v: &[RationalFunction]) -> Value {
    Value::Array(v.iter().map(rational_function).collect())
}

pub fn matrix<V: Variable>(m: &PolyMatrix<V>) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(poly).collect()))
            .collect(),
    )
}

pub fn system(sys: &QRecSystem) -> Value {
    serde_json::to_value(SystemDocument::from_system(sys)).expect("documents serialize")
}

pub fn bound(b: Bound) -> Value {
    match b {
        Bound::Value(n) => json!(n),
        Bound::NoNonzeroSolution => json!("no nonzero solution"),
    }
}

pub fn bound_report(r: &BoundReport) -> Value {
    let kind = match r.kind {
        BoundKind::Denominator => "denominator",
        BoundKind::Degree => "degree",
    };
    json!({
        "kind": kind,
        "det_poly": poly(&r.det_poly),
        "candidates": r.candidates.iter().collect::<Vec<_>>(),
        "structural_bound": r.structural_bound,
        "bound": bound(r.bound),
    })
}

pub fn step(s: &Step) -> Value {
    match s {
        Step::Popov { transform, rank, basis } => json!({
            "kind": "popov",
            "rank": rank,
            "transform": matrix(transform),
            "basis": matrix(basis),
        }),
        Step::ScaleRows { from, direction } => json!({
            "kind": "scale",
            "from_row": from,
            "direction": match direction {
                ScaleDirection::DivideByT => "divide",
                ScaleDirection::MultiplyByT => "multiply",
            },
        }),
        Step::Eliminate { rank, x } => json!({
            "kind": "eliminate",
            "rank": rank,
            "x": matrix(x),
        }),
    }
}

pub fn trace(t: &RegularizationTrace) -> Value {
    json!({
        "side": match t.side {
            Side::Tail => "tail",
            Side::Head => "head",
        },
        "steps": t.steps.iter().map(step).collect::<Vec<_>>(),
    })
}

pub fn solution_set(s: &SolutionSet) -> Value {
    json!({
        "particular": s.particular.as_deref().map(vector),
        "homogeneous_basis": s.homogeneous_basis.iter().map(|v| vector(v)).collect::<Vec<_>>(),
        "denominator_exponent": s.denominator_exponent,
        "feasible": s.feasible,
    })
}
