use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::Coeff;

/// Dense univariate polynomial; `coeffs[k]` is the coefficient of `t^k`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is
/// the empty vector and has no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum DivisionError<C: fmt::Debug> {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    /// The dividend is not a multiple of the divisor in this coefficient ring.
    /// `remainder` is what was left when the long division stopped.
    #[error("not exactly divisible (remainder {remainder:?})")]
    NotDivisible { remainder: UniPoly<C> },
}

impl<C: Coeff> UniPoly<C> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself, `t`.
    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `c * t^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from_bigint(BigInt::from(c))).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// `q(t) = p(offset + t)`, by Horner composition with `(offset + t)`.
    pub fn substitute_shift(&self, offset: &C) -> Self {
        let linear = Self::from_coeffs(vec![offset.clone(), C::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * &linear) + &Self::constant(c.clone()))
    }

    /// Quotient `q` with `self = q * divisor`, computed by long division.
    ///
    /// Over the integers a non-integral quotient coefficient is a failure,
    /// so success means divisibility in `Z[t]`, not merely in `Q[t]`.
    pub fn exact_divide(&self, divisor: &Self) -> Result<Self, DivisionError<C>> {
        let dd = divisor.degree().ok_or(DivisionError::ZeroDivisor)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(pd) = self.degree() else {
            return Ok(Self::zero());
        };
        if pd < dd {
            return Err(DivisionError::NotDivisible { remainder: self.clone() });
        }
        let mut quot = vec![C::zero(); pd - dd + 1];
        for k in (0..=pd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let Some(qk) = top.checked_exact_div(&lead) else {
                return Err(DivisionError::NotDivisible { remainder: Self::from_coeffs(rem) });
            };
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - qk.clone() * d.clone();
            }
            quot[k] = qk;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(DivisionError::NotDivisible { remainder: Self::from_coeffs(rem) });
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Render with the given variable name, ascending powers: `2+3q+2q^2+q^3`.
    pub fn display<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        UniDisplay { poly: self, var }
    }
}

impl UniPoly<BigInt> {
    pub fn to_rational(&self) -> UniPoly<BigRational> {
        UniPoly { coeffs: self.coeffs.iter().cloned().map(BigRational::from_integer).collect() }
    }
}

impl UniPoly<BigRational> {
    /// `Some` iff every coefficient is an integer.
    pub fn to_integer(&self) -> Option<UniPoly<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect::<Option<Vec<_>>>()
            .map(|coeffs| UniPoly { coeffs })
    }
}

struct UniDisplay<'a, C> {
    poly: &'a UniPoly<C>,
    var: &'a str,
}

impl<C: Coeff> fmt::Display for UniDisplay<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            write_term(f, c, &mono, &mut first)?;
        }
        Ok(())
    }
}

/// Writes `c * mono` with sign handling; a unit coefficient is elided
/// unless the monomial is empty.
pub(super) fn write_term<C: Coeff>(
    f: &mut fmt::Formatter<'_>,
    c: &C,
    mono: &str,
    first: &mut bool,
) -> fmt::Result {
    let s = c.to_decimal();
    let (neg, abs) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    };
    if neg {
        f.write_str("-")?;
    } else if !*first {
        f.write_str("+")?;
    }
    *first = false;
    if mono.is_empty() {
        f.write_str(&abs)
    } else if abs == "1" {
        f.write_str(mono)
    } else if abs.contains('/') {
        write!(f, "({abs}){mono}")
    } else {
        write!(f, "{abs}{mono}")
    }
}

impl<C: Coeff> Add for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn add(self, rhs: Self) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn sub(self, rhs: Self) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<C: Coeff> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn mul(self, rhs: Self) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl<C: Coeff> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn neg(self) -> UniPoly<C> {
        UniPoly { coeffs: self.coeffs.iter().cloned().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for UniPoly<C> {
            type Output = UniPoly<C>;
            fn $m(self, rhs: Self) -> UniPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> std::iter::Sum for UniPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl<C: Coeff> Zero for UniPoly<C> {
    fn zero() -> Self {
        UniPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coeff> One for UniPoly<C> {
    fn one() -> Self {
        UniPoly::one()
    }
}
