use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::{QParam, RationalFunction, Rational, SigmaPoly, TPoly};
use crate::error::{Error, Result};

/// Skew polynomial `Σ a_j(t) σ^j` with `σ t = q t σ`.
#[derive(Clone, PartialEq, Eq)]
pub struct OrePoly {
    coeffs: Vec<TPoly>,
    q: QParam,
}

impl OrePoly {
    /// `coeffs[j]` is the coefficient of `σ^j`.
    pub fn new(mut coeffs: Vec<TPoly>, q: QParam) -> Self {
        while coeffs.last().is_some_and(TPoly::is_zero) {
            coeffs.pop();
        }
        OrePoly { coeffs, q }
    }

    pub fn zero(q: QParam) -> Self {
        OrePoly { coeffs: Vec::new(), q }
    }

    pub fn one(q: QParam) -> Self {
        Self::from_tpoly(TPoly::one(), q)
    }

    pub fn from_tpoly(p: TPoly, q: QParam) -> Self {
        Self::new(vec![p], q)
    }

    /// `c(t) σ^k`.
    pub fn monomial(c: TPoly, k: usize, q: QParam) -> Self {
        let mut coeffs = vec![TPoly::zero(); k];
        coeffs.push(c);
        Self::new(coeffs, q)
    }

    /// A polynomial in σ alone, viewed as an operator.
    pub fn from_sigma_poly(p: &SigmaPoly, q: QParam) -> Self {
        Self::new(p.coeffs().iter().cloned().map(TPoly::constant).collect(), q)
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> TPoly {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sigma_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(TPoly::degree).max()
    }

    fn check_q(&self, other: &OrePoly) -> Result<()> {
        if self.q != other.q {
            return Err(Error::QMismatch(self.q.value().clone(), other.q.value().clone()));
        }
        Ok(())
    }

    /// Product using `σ^a t^k = q^{ak} t^k σ^a`.
    pub fn mul(&self, rhs: &OrePoly) -> Result<OrePoly> {
        self.check_q(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(OrePoly::zero(self.q.clone()));
        }
        let mut out = vec![TPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, left) in self.coeffs.iter().enumerate() {
            if left.is_zero() {
                continue;
            }
            let qa = self.q.pow(a as i64);
            for (b, right) in rhs.coeffs.iter().enumerate() {
                if right.is_zero() {
                    continue;
                }
                out[a + b] += &(left * &right.scale_var(&qa));
            }
        }
        Ok(OrePoly::new(out, self.q.clone()))
    }

    /// `Σ a_j(t) f(q^j t)`.
    pub fn apply(&self, f: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let shifted = f
                .substitute_qt(&self.q.pow(j as i64))
                .expect("q is nonzero");
            acc = acc + &RationalFunction::from_poly(a.clone()) * &shifted;
        }
        acc
    }

    /// Action on `t^{-nu} p`: returns the polynomial `r` with
    /// `self • (t^{-nu} p) = t^{-nu} r`.
    pub fn apply_laurent(&self, p: &TPoly, nu: usize) -> TPoly {
        let mut acc = TPoly::zero();
        for (j, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc += &(a * &p.q_shift_laurent(self.q.value(), j, nu));
            }
        }
        acc
    }

    /// The coefficient of `t^i` in the t-major expansion: `Σ_j a_{j,i} σ^j`.
    pub fn t_coefficient(&self, i: usize) -> SigmaPoly {
        SigmaPoly::from_coeffs(self.coeffs.iter().map(|a| a.coeff(i)).collect())
    }

    /// Left multiplication by a polynomial in `t`.
    pub fn left_mul_tpoly(&self, p: &TPoly) -> OrePoly {
        OrePoly::new(self.coeffs.iter().map(|a| p * a).collect(), self.q.clone())
    }

    pub fn scale(&self, c: &Rational) -> OrePoly {
        OrePoly::new(self.coeffs.iter().map(|a| a.scale(c)).collect(), self.q.clone())
    }

    /// `t · self`.
    pub fn mul_t(&self) -> OrePoly {
        OrePoly::new(self.coeffs.iter().map(|a| a.shift_up(1)).collect(), self.q.clone())
    }

    /// `t^{-1} · self`, if every coefficient is divisible by `t`.
    pub fn div_t(&self) -> Option<OrePoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.shift_down(1))
            .collect::<Option<Vec<_>>>()?;
        Some(OrePoly::new(coeffs, self.q.clone()))
    }

    /// Substitutes `σ -> c σ` (multiplies the coefficient of `σ^j` by `c^j`).
    pub fn twist(&self, c: &Rational) -> OrePoly {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&power));
            power *= c;
        }
        OrePoly::new(coeffs, self.q.clone())
    }

    fn zip_with(&self, rhs: &OrePoly, f: impl Fn(&TPoly, &TPoly) -> TPoly) -> OrePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = TPoly::zero();
        let coeffs = (0..n)
            .map(|j| {
                f(
                    self.coeffs.get(j).unwrap_or(&zero),
                    rhs.coeffs.get(j).unwrap_or(&zero),
                )
            })
            .collect();
        OrePoly::new(coeffs, self.q.clone())
    }

    pub fn checked_add(&self, rhs: &OrePoly) -> Result<OrePoly> {
        self.check_q(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a + b))
    }

    pub fn checked_sub(&self, rhs: &OrePoly) -> Result<OrePoly> {
        self.check_q(rhs)?;
        Ok(self.zip_with(rhs, |a, b| a - b))
    }
}

/// Panics on mismatched `q`; see [`OrePoly::checked_add`].
impl Add<&OrePoly> for &OrePoly {
    type Output = OrePoly;
    fn add(self, rhs: &OrePoly) -> OrePoly {
        self.checked_add(rhs).expect("operands share q")
    }
}

impl Sub<&OrePoly> for &OrePoly {
    type Output = OrePoly;
    fn sub(self, rhs: &OrePoly) -> OrePoly {
        self.checked_sub(rhs).expect("operands share q")
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        OrePoly::new(self.coeffs.iter().map(|a| -a).collect(), self.q.clone())
    }
}

fn write_sigma_power(f: &mut fmt::Formatter<'_>, j: usize) -> fmt::Result {
    match j {
        0 => Ok(()),
        1 => write!(f, "σ"),
        _ => write!(f, "σ^{j}"),
    }
}

impl fmt::Display for OrePoly {
    /// Descending powers of σ, e.g. `(t - 1)σ^2 + (12 - 12t)σ + 8`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if j == 0 {
                let text = a.to_string();
                match (first, text.strip_prefix('-')) {
                    (false, Some(rest)) => write!(f, " - {rest}")?,
                    (false, None) => write!(f, " + {text}")?,
                    (true, _) => write!(f, "{text}")?,
                }
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if a.is_one() {
                write_sigma_power(f, j)?;
            } else if a.term_count() == 1 && a.coeffs().iter().all(|c| c.is_zero() || c.is_integer()) {
                write!(f, "{a}")?;
                write_sigma_power(f, j)?;
            } else {
                write!(f, "({a})")?;
                write_sigma_power(f, j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrePoly({self}; q = {})", self.q)
    }
}
