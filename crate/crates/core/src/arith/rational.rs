//! Exact rational scalars and the validated shift parameter `q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from machine integers.
///
/// Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `base^exp` for a possibly negative exponent. `base` must be nonzero when
/// `exp < 0`.
pub fn pow_i(base: &Rational, exp: i64) -> Rational {
    let mut result = Rational::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

/// Parses `p` or `p/q` with optional leading sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// The q of the q-shift `t -> q t`. Over the rationals, `q` is a root of
/// unity exactly when it is `1` or `-1`; those and `0` are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QParam(Rational);

impl QParam {
    pub fn new(q: Rational) -> Result<Self> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::InvalidQ(q));
        }
        Ok(QParam(q))
    }

    pub fn from_i64(n: i64) -> Result<Self> {
        Self::new(int(n))
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// `q^exp`; negative exponents are fine since `q != 0`.
    pub fn pow(&self, exp: i64) -> Rational {
        pow_i(&self.0, exp)
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
