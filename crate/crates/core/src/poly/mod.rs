//! Exact dense polynomial arithmetic.
//!
//! [`UniPoly`] is a dense univariate polynomial over any [`Coeff`] ring
//! (arbitrary-precision integers or rationals). [`BiPoly`] is a sparse
//! bivariate polynomial in `x`, `y` over the integers. Every operation
//! returns a fresh value; nothing is mutated in place once built.

mod bi;
mod json;
mod uni;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use bi::BiPoly;
pub use json::{PolyJson, PolyJsonError, TermJson};
pub use uni::{DivisionError, UniPoly};

use crate::error::Error;

/// Integer-coefficient univariate polynomial.
pub type IntPoly = UniPoly<BigInt>;
/// Rational-coefficient univariate polynomial.
pub type RatPoly = UniPoly<BigRational>;

/// Coefficient ring for [`UniPoly`].
pub trait Coeff:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// `self / divisor` if the quotient exists in this ring.
    fn checked_exact_div(&self, divisor: &Self) -> Option<Self>;

    fn from_bigint(value: BigInt) -> Self;

    /// Canonical decimal rendering: `"-12"` for integers, `"7/5"` for
    /// non-integral rationals.
    fn to_decimal(&self) -> String;

    fn parse_decimal(s: &str) -> Option<Self>;

    fn is_positive(&self) -> bool;
}

impl Coeff for BigInt {
    fn checked_exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn from_bigint(value: BigInt) -> Self {
        value
    }

    fn to_decimal(&self) -> String {
        self.to_string()
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        s.parse().ok()
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}

impl Coeff for BigRational {
    fn checked_exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            None
        } else {
            Some(self / divisor)
        }
    }

    fn from_bigint(value: BigInt) -> Self {
        BigRational::from_integer(value)
    }

    fn to_decimal(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn parse_decimal(s: &str) -> Option<Self> {
        match s.split_once('/') {
            None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
            Some((n, d)) => {
                let n: BigInt = n.parse().ok()?;
                let d: BigInt = d.parse().ok()?;
                (!d.is_zero()).then(|| BigRational::new(n, d))
            }
        }
    }

    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the product is always divisible by i + 1.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `C(s, 2)` as a machine integer, used for exponents.
pub(crate) fn choose2(s: usize) -> usize {
    s * s.saturating_sub(1) / 2
}

/// The q-analogue `[r] = 1 + y + ... + y^(r-1)`.
pub fn q_analogue(r: usize) -> Result<IntPoly, Error> {
    if r == 0 {
        return Err(Error::InvalidArgument("q-analogue [r] requires r >= 1".into()));
    }
    Ok(UniPoly::from_coeffs(vec![BigInt::one(); r]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 2), BigInt::from(3));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigInt::one()];
        for n in 1..40u64 {
            let mut next = vec![BigInt::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as u64), v);
            }
        }
    }

    #[test]
    fn q_analogue_values() {
        assert_eq!(q_analogue(1).unwrap(), IntPoly::one());
        assert_eq!(q_analogue(2).unwrap(), IntPoly::from_i64(&[1, 1]));
        assert_eq!(q_analogue(3).unwrap(), IntPoly::from_i64(&[1, 1, 1]));
        assert!(q_analogue(0).is_err());
        for r in 1..10 {
            assert_eq!(q_analogue(r).unwrap().eval(&BigInt::one()), BigInt::from(r));
        }
    }

    #[test]
    fn rational_decimal_round_trip() {
        let x = BigRational::new(BigInt::from(-88), BigInt::from(5));
        assert_eq!(x.to_decimal(), "-88/5");
        assert_eq!(BigRational::parse_decimal("-88/5"), Some(x));
        assert_eq!(BigRational::parse_decimal("10/5").unwrap().to_decimal(), "2");
        assert_eq!(BigRational::parse_decimal("1/0"), None);
    }
}
