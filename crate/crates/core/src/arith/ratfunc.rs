//! Rational functions in `t` over the rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::TPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `num / den` in lowest terms with a monic denominator. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: TPoly,
    den: TPoly,
}

impl RationalFunction {
    pub fn new(num: TPoly, den: TPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: TPoly, den: TPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.recip();
            RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: TPoly::zero(),
            den: TPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(TPoly::one())
    }

    pub fn from_poly(p: TPoly) -> Self {
        RationalFunction {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(TPoly::constant(c))
    }

    /// `p / t^k`.
    pub fn from_laurent(p: TPoly, k: usize) -> Self {
        Self::normalized(p, TPoly::monomial(Rational::one(), k))
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// If the denominator is a pure power `t^k`, returns `k`.
    pub fn t_power_denominator(&self) -> Option<usize> {
        let k = self.den.degree().expect("denominator is nonzero");
        (self.den.term_count() == 1).then_some(k)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    /// `f(q t)`.
    pub fn substitute_qt(&self, q: &Rational) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::InvalidQ(q.clone()));
        }
        Ok(Self::normalized(self.num.scale_var(q), self.den.scale_var(q)))
    }

    /// Value at a point; `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<TPoly> for RationalFunction {
    fn from(p: TPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RationalFunction::recip`] to get an error instead.
impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::normalized(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

fn needs_parens(p: &TPoly) -> bool {
    p.term_count() > 1 || p.coeffs().last().is_some_and(|c| !c.is_integer())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn tp(c: &[i64]) -> TPoly {
        TPoly::from_ints(c)
    }

    #[test]
    fn normalizes_on_construction() {
        // (2t^2 - 2) / (4t - 4) = (t + 1)/2
        let f = RationalFunction::new(tp(&[-2, 0, 2]), tp(&[-4, 4])).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &TPoly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
        assert!(RationalFunction::new(tp(&[1]), TPoly::zero()).is_err());
    }

    #[test]
    fn substitute_examples() {
        let q = int(2);
        let t2 = RationalFunction::from_poly(tp(&[0, 0, 1]));
        assert_eq!(t2.substitute_qt(&q).unwrap(), RationalFunction::from_poly(tp(&[0, 0, 4])));

        let inv_t3 = RationalFunction::from_laurent(tp(&[1]), 3);
        let shifted = inv_t3.substitute_qt(&q).unwrap();
        assert_eq!(shifted.num(), &TPoly::constant(rat(1, 8)));
        assert_eq!(shifted.den(), &tp(&[0, 0, 0, 1]));

        // (t+1)/(t-1) at q = 3 is (3t+1)/(3t-1); compare values at t = 5.
        let f = RationalFunction::new(tp(&[1, 1]), tp(&[-1, 1])).unwrap();
        let g = f.substitute_qt(&int(3)).unwrap();
        assert_eq!(g.eval(&int(5)), Some(rat(16, 14)));
        assert_eq!(g, RationalFunction::new(tp(&[1, 3]), tp(&[-1, 3])).unwrap());
    }

    #[test]
    fn t_power_denominators() {
        assert_eq!(RationalFunction::from_laurent(tp(&[1, 1]), 3).t_power_denominator(), Some(3));
        assert_eq!(RationalFunction::from_laurent(tp(&[0, 0, 1]), 1).t_power_denominator(), Some(0));
        let f = RationalFunction::new(tp(&[1]), tp(&[-1, 1])).unwrap();
        assert_eq!(f.t_power_denominator(), None);
    }

    #[test]
    fn display() {
        assert_eq!(RationalFunction::from_laurent(tp(&[1]), 3).to_string(), "1/t^3");
        let f = RationalFunction::new(tp(&[1, 1]), tp(&[-1, 1])).unwrap();
        assert_eq!(f.to_string(), "(t + 1)/(t - 1)");
        let g = RationalFunction::from_laurent(TPoly::constant(rat(1, 8)), 3);
        assert_eq!(g.to_string(), "(1/8)/t^3");
    }
}
