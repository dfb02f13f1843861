use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::uni::write_term;
use super::IntPoly;

/// Sparse bivariate integer polynomial in `x` and `y`.
///
/// Keys are `(deg_x, deg_y)`; only nonzero coefficients are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn monomial(c: BigInt, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// Lift a univariate polynomial in `y`.
    pub fn from_y_poly(p: &IntPoly) -> Self {
        let mut out = Self::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, j as u32, c.clone());
        }
        out
    }

    /// Build from `(i, j, c)` triples; repeated exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, BigInt)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in terms {
            out.add_term(i, j, c);
        }
        out
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
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

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
            })
            .sum()
    }

    /// Substitute `x = x0`, leaving a polynomial in `y`.
    pub fn specialize_x(&self, x0: &BigInt) -> IntPoly {
        let deg_y = self.terms.keys().map(|&(_, j)| j as usize).max();
        let Some(deg_y) = deg_y else {
            return IntPoly::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg_y + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[j as usize] += c * num_traits::pow(x0.clone(), i as usize);
        }
        IntPoly::from_coeffs(coeffs)
    }
}

/// Graded order, then descending power of `x`: `2x+2y+3x^2+4xy+3y^2+x^3+y^3`.
impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
        let mut first = true;
        for (i, j) in keys {
            let mut mono = String::new();
            for (var, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => mono.push_str(var),
                    _ => mono.push_str(&format!("{var}^{e}")),
                }
            }
            write_term(f, &self.terms[&(i, j)], &mono, &mut first)?;
        }
        Ok(())
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: Self) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: Self) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: Self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Add for BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: Self) -> BiPoly {
        &self + &rhs
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, p| &acc + &p)
    }
}
