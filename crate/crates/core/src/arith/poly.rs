//! Dense univariate polynomials over the rationals.
//!
//! The same representation serves both distinguished variables: `t` (the
//! independent variable of the recurrence) and `σ` (the shift, which
//! commutes with constants and can therefore be treated as a commutative
//! indeterminate when coefficients are constant). The variable is a type
//! parameter so that t-polynomials and σ-polynomials cannot be mixed by
//! accident.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{int, pow_i, Rational};
use crate::error::{Error, Result};

pub trait Variable: Copy + fmt::Debug + Default + PartialEq + Eq + 'static {
    const SYMBOL: &'static str;
}

/// Marker for the independent variable `t`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct T;

/// Marker for the shift `σ`. Rendered as `x`, which is how determinants such
/// as λ and ρ are usually written.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Sigma;

impl Variable for T {
    const SYMBOL: &'static str = "t";
}

impl Variable for Sigma {
    const SYMBOL: &'static str = "x";
}

/// Coefficients are stored by ascending power with no trailing zeros; the
/// zero polynomial is the empty vector and has no degree.
pub struct Poly<V> {
    coeffs: Vec<Rational>,
    _var: PhantomData<V>,
}

pub type TPoly = Poly<T>;
pub type SigmaPoly = Poly<Sigma>;

impl<V> Clone for Poly<V> {
    fn clone(&self) -> Self {
        Poly {
            coeffs: self.coeffs.clone(),
            _var: PhantomData,
        }
    }
}

impl<V> PartialEq for Poly<V> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<V> Eq for Poly<V> {}

impl<V> Hash for Poly<V> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl<V> Default for Poly<V> {
    fn default() -> Self {
        Poly::zero()
    }
}

impl<V> Poly<V> {
    pub fn zero() -> Self {
        Poly {
            coeffs: Vec::new(),
            _var: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · v^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly {
            coeffs,
            _var: PhantomData,
        }
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            _var: PhantomData,
        }
    }

    /// Integer coefficients by ascending power.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `v^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            _var: PhantomData,
        }
    }

    /// `p(c·v)`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power *= c;
        }
        Self::from_coeffs(coeffs)
    }

    /// `v^k · p`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            coeffs,
            _var: PhantomData,
        }
    }

    /// `p / v^k`, or `None` if `v^k` does not divide `p`.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || k > self.coeffs.len() {
            return None;
        }
        Some(Poly {
            coeffs: self.coeffs[k..].to_vec(),
            _var: PhantomData,
        })
    }

    /// Largest `k` with `v^k | p`. `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Splits off the largest power of the variable: `p = v^k · g` with
    /// `g(0) != 0`.
    pub fn split_var_power(&self) -> Result<(usize, Self)> {
        let k = self.valuation().ok_or(Error::ZeroPolynomial)?;
        Ok((k, self.shift_down(k).expect("valuation divides")))
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division: `self = quotient · divisor + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Division that is known to be exact; errors otherwise.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    /// Monic gcd, computed with a primitive remainder sequence over the
    /// integers to keep coefficient growth in check.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = primitive_part(self.integer_coeffs());
        let mut b = primitive_part(other.integer_coeffs());
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive_part(pseudo_rem(a, &b));
            a = b;
            b = r;
        }
        Self::from_coeffs(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    /// Integer coefficients proportional to this polynomial: multiplied by
    /// the lcm of all denominators.
    pub fn integer_coeffs(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect()
    }

    /// Reinterprets the coefficient sequence in another variable.
    pub fn rename<W>(&self) -> Poly<W> {
        Poly {
            coeffs: self.coeffs.clone(),
            _var: PhantomData,
        }
    }

    pub fn map_coeffs(&self, f: impl FnMut(&Rational) -> Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn primitive_part(v: Vec<BigInt>) -> Vec<BigInt> {
    let v = trim(v);
    let content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() || content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of `a` by nonzero `b`, both trimmed.
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor").clone();
    while a.len() >= b.len() {
        let la = a.last().expect("nonempty").clone();
        let shift = a.len() - b.len();
        for c in a.iter_mut() {
            *c *= &lb;
        }
        for (k, bk) in b.iter().enumerate() {
            a[shift + k] -= &la * bk;
        }
        a = trim(a);
    }
    a
}

impl TPoly {
    /// `t^{-k} p(t)` scaled under `t -> q^j t`, i.e. the polynomial part of
    /// `σ^j (t^{-k} p) = q^{-kj} t^{-k} p(q^j t)`.
    pub fn q_shift_laurent(&self, q: &Rational, j: usize, k: usize) -> Self {
        let qj = pow_i(q, j as i64);
        self.scale_var(&qj).scale(&pow_i(&qj, -(k as i64)))
    }
}

/// `f = t^k · g` with `g(0) != 0`; errors on the zero polynomial.
pub fn t_power_split(f: &TPoly) -> Result<(usize, TPoly)> {
    f.split_var_power()
}

/// Schoolbook product of coefficient vectors.
fn mul_coeffs(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect()
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<V> $trait<&Poly<V>> for &Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: &Poly<V>) -> Poly<V> {
                Poly::from_coeffs($body(&self.coeffs, &rhs.coeffs))
            }
        }
        impl<V> $trait<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$method(&rhs)
            }
        }
        impl<V> $trait<&Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: &Poly<V>) -> Poly<V> {
                (&self).$method(rhs)
            }
        }
        impl<V> $trait<Poly<V>> for &Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: Poly<V>) -> Poly<V> {
                self.$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, |a, b| add_coeffs(a, b, false));
impl_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
impl_binop!(Mul, mul, mul_coeffs);

impl<V> AddAssign<&Poly<V>> for Poly<V> {
    fn add_assign(&mut self, rhs: &Poly<V>) {
        *self = &*self + rhs;
    }
}

impl<V> SubAssign<&Poly<V>> for Poly<V> {
    fn sub_assign(&mut self, rhs: &Poly<V>) {
        *self = &*self - rhs;
    }
}

impl<V> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            _var: PhantomData,
        }
    }
}

impl<V> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

impl<V> From<Rational> for Poly<V> {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

/// Writes a nonnegative coefficient in front of a variable power:
/// `1` disappears, integers are bare, fractions are parenthesised.
fn write_coeff(f: &mut fmt::Formatter<'_>, c: &Rational, with_var: bool) -> fmt::Result {
    if !with_var {
        write!(f, "{c}")
    } else if c.is_one() {
        Ok(())
    } else if c.is_integer() {
        write!(f, "{c}")
    } else {
        write!(f, "({c})")
    }
}

impl<V: Variable> fmt::Display for Poly<V> {
    /// Descending powers with explicit signs, e.g. `-8t^3 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            write_coeff(f, &c.abs(), k > 0)?;
            match k {
                0 => {}
                1 => write!(f, "{}", V::SYMBOL)?,
                _ => write!(f, "{}^{}", V::SYMBOL, k)?,
            }
        }
        Ok(())
    }
}

impl<V: Variable> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
