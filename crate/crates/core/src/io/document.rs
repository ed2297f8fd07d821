use serde::{Deserialize, Serialize};

use super::expr::parse_poly;
use crate::arith::{parse_rational, QParam, TPoly};
use crate::error::{Error, Result};
use crate::ore::{OreMatrix, QRecSystem};

/// A JSON scalar that may be written either as a number or as a string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn text(&self) -> String {
        match self {
            Literal::Int(n) => n.to_string(),
            Literal::Text(s) => s.clone(),
        }
    }
}

/// On-disk form of `Σ_j A_j σ^j y = t^{-nu} b`. `order` and `dimension`
/// may be omitted on input and are inferred from `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDocument {
    pub q: Literal,
    #[serde(default)]
    pub nu: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    /// `A[j][row][col]` is the entry of `A_j`.
    #[serde(rename = "A")]
    pub a: Vec<Vec<Vec<String>>>,
    pub b: Vec<String>,
}

fn json_error(e: serde_json::Error) -> Error {
    match e.classify() {
        serde_json::error::Category::Syntax | serde_json::error::Category::Eof => {
            Error::Syntax { line: e.line(), column: e.column(), message: e.to_string() }
        }
        _ => Error::Semantic(e.to_string()),
    }
}

fn located(e: Error, field: &str) -> Error {
    match e {
        Error::Syntax { line, column, message } => {
            Error::Syntax { line, column, message: format!("in {field}: {message}") }
        }
        other => other,
    }
}

impl SystemDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_system(&self) -> Result<QRecSystem> {
        let q_text = self.q.text();
        let q = parse_rational(&q_text)
            .ok_or_else(|| Error::Syntax { line: 1, column: 1, message: format!("in q: '{q_text}' is not a rational literal") })?;
        let q = QParam::new(q)?;
        if self.a.is_empty() {
            return Err(Error::Semantic("A must contain at least one matrix".into()));
        }
        if let Some(order) = self.order {
            if order + 1 != self.a.len() {
                return Err(Error::Semantic(format!(
                    "order {order} needs {} coefficient matrices, found {}",
                    order + 1,
                    self.a.len()
                )));
            }
        }
        let m = self.dimension.unwrap_or(self.a[0].len());
        let mut mats = Vec::with_capacity(self.a.len());
        for (j, mat) in self.a.iter().enumerate() {
            if mat.len() != m || mat.iter().any(|row| row.len() != m) {
                return Err(Error::Semantic(format!("A[{j}] is not {m}x{m}")));
            }
            let mut parsed = Vec::with_capacity(m);
            for (r, row) in mat.iter().enumerate() {
                let entries = row
                    .iter()
                    .enumerate()
                    .map(|(c, s)| parse_poly(s).map_err(|e| located(e, &format!("A[{j}][{r}][{c}]"))))
                    .collect::<Result<Vec<TPoly>>>()?;
                parsed.push(entries);
            }
            mats.push(parsed);
        }
        if self.b.len() != m {
            return Err(Error::Semantic(format!("b has {} entries, expected {m}", self.b.len())));
        }
        let b = self
            .b
            .iter()
            .enumerate()
            .map(|(i, s)| parse_poly(s).map_err(|e| located(e, &format!("b[{i}]"))))
            .collect::<Result<Vec<TPoly>>>()?;
        let a = if m == 0 {
            OreMatrix::zeros(0, 0, q)
        } else {
            OreMatrix::from_coefficient_matrices(&mats, q)?
        };
        QRecSystem::new(a, b, self.nu)
    }

    /// Canonical document for `sys`; every coefficient matrix up to the order
    /// is listed.
    pub fn from_system(sys: &QRecSystem) -> Self {
        let m = sys.dimension();
        let s = sys.order();
        let a = (0..=s)
            .map(|j| {
                sys.matrix()
                    .coefficient_matrix(j)
                    .iter()
                    .map(|row| row.iter().map(TPoly::to_string).collect())
                    .collect()
            })
            .collect();
        SystemDocument {
            q: Literal::Text(sys.q().to_string()),
            nu: sys.nu(),
            order: Some(s),
            dimension: Some(m),
            a,
            b: sys.rhs_poly().iter().map(TPoly::to_string).collect(),
        }
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        serde_json::to_string_pretty(&value).expect("values serialize")
    }
}

pub fn parse_system(text: &str) -> Result<QRecSystem> {
    SystemDocument::from_json(text)?.to_system()
}

pub fn render_system(sys: &QRecSystem) -> String {
    SystemDocument::from_system(sys).to_json()
}
