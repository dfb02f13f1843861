//! The triangular array `T_n^(r)(x, y)` and the polynomial families derived
//! from it.
//!
//! Row `n` is filled from row `n - r` only:
//!
//! ```text
//! T_n^(r) = Σ_{s=1}^{n-r} C(n-r, s) [r]_y^s y^C(s,2) T_{n-r}^(s) + (x-1) T_{n-r}^(1)
//! T_n^(n) = 1
//! ```
//!
//! From the table: `J_n^(r)(q) = T_n^(r)(1, q)`,
//! `C_n^(r)(t) = t^(n-r) J_n^(r)(1+t)` and
//! `P_n^(s)(t) = t^n C(n, s) (1+t)^C(s,2) J_n^(s)(1+t)`.

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::Partition;
use crate::poly::{binomial, choose2, factorial, q_analogue, BiPoly, DivisionError, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteTable {
    /// `rows[n-1][r-1] = T_n^(r)`
    rows: Vec<Vec<BiPoly>>,
}

fn check_nr(n: usize, r: usize, n_max: usize, what: &str) -> Result<(), Error> {
    if r < 1 || r > n {
        return Err(Error::InvalidArgument(format!("{what} needs 1 <= r <= n, got n={n}, r={r}")));
    }
    if n > n_max {
        return Err(Error::InvalidArgument(format!("n={n} is beyond the table (n_max={n_max})")));
    }
    Ok(())
}

fn one_plus_t() -> IntPoly {
    IntPoly::from_i64(&[1, 1])
}

impl TutteTable {
    pub fn new(n_max: usize) -> Result<Self, Error> {
        if n_max < 1 {
            return Err(Error::InvalidArgument("n_max must be at least 1".into()));
        }
        let x_minus_one = &BiPoly::x() - &BiPoly::one();
        let mut rows: Vec<Vec<BiPoly>> = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let mut row = Vec::with_capacity(n);
            for r in 1..n {
                let m = n - r;
                let prev = &rows[m - 1];
                let qr = q_analogue(r)?;
                let mut acc = &x_minus_one * &prev[0];
                let mut qr_pow = IntPoly::one();
                for s in 1..=m {
                    qr_pow = &qr_pow * &qr;
                    let factor = qr_pow.shift_up(choose2(s)).scale(&binomial(m as u64, s as u64));
                    acc = &acc + &(&BiPoly::from_y_poly(&factor) * &prev[s - 1]);
                }
                row.push(acc);
            }
            row.push(BiPoly::one());
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, n: usize, r: usize) -> Result<&BiPoly, Error> {
        check_nr(n, r, self.n_max(), "T_n^(r)")?;
        Ok(&self.rows[n - 1][r - 1])
    }

    /// `J_n^(r)(q) = T_n^(r)(1, q)`.
    pub fn j_poly(&self, n: usize, r: usize) -> Result<IntPoly, Error> {
        Ok(self.get(n, r)?.specialize_x(&BigInt::one()))
    }

    /// `C_n^(r)(t) = t^(n-r) J_n^(r)(1+t)`.
    pub fn c_poly(&self, n: usize, r: usize) -> Result<IntPoly, Error> {
        Ok(self.j_poly(n, r)?.substitute_shift(&BigInt::one()).shift_up(n - r))
    }

    /// `P_n^(s)(t) = t^n C(n,s) (1+t)^C(s,2) J_n^(s)(1+t)`.
    pub fn p_poly_ns(&self, n: usize, s: usize) -> Result<IntPoly, Error> {
        let shifted = self.j_poly(n, s)?.substitute_shift(&BigInt::one());
        Ok((&one_plus_t().pow(choose2(s) as u32) * &shifted).scale(&binomial(n as u64, s as u64)).shift_up(n))
    }

    /// Row-major entries `(n, r, T_n^(r))`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BiPoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, p)| (i + 1, j + 1, p)))
    }
}

/// `J_n^(r)` directly from the `x = 1` recurrence, without the bivariate
/// table. `out[n-1][r-1] = J_n^(r)`.
pub fn j_recurrence(n_max: usize) -> Vec<Vec<IntPoly>> {
    let mut rows: Vec<Vec<IntPoly>> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n);
        for r in 1..n {
            let m = n - r;
            let qr = IntPoly::from_coeffs(vec![BigInt::one(); r]);
            let acc: IntPoly = (1..=m)
                .map(|s| {
                    (&qr.pow(s as u32) * &rows[m - 1][s - 1])
                        .shift_up(choose2(s))
                        .scale(&binomial(m as u64, s as u64))
                })
                .sum();
            row.push(acc);
        }
        row.push(IntPoly::one());
        rows.push(row);
    }
    rows
}

/// `P_λ(t) = n t^n (1+t)^n(λ) J_λ(1+t) / m(λ)!` for a given `J_λ`.
///
/// Fails when `m(λ)!` does not divide the product exactly, which means the
/// supplied `J_λ` cannot be right.
pub fn p_lambda_from_j(lambda: &Partition, j_lambda: &IntPoly) -> Result<IntPoly, Error> {
    let n = lambda.size();
    let numer = (&one_plus_t().pow(lambda.n_stat() as u32) * &j_lambda.substitute_shift(&BigInt::one()))
        .scale(&BigInt::from(n))
        .shift_up(n);
    let mf = IntPoly::constant(lambda.multiplicity_factorial());
    numer.exact_divide(&mf).map_err(|e| match e {
        DivisionError::NotDivisible { .. } => Error::Inconsistent(format!(
            "m({lambda})! = {} does not divide n t^n (1+t)^n(λ) J_λ(1+t)",
            lambda.multiplicity_factorial()
        )),
        DivisionError::ZeroDivisor => unreachable!("m(λ)! is positive"),
    })
}

/// Where a closed-form `J_λ` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnownSource {
    /// `J_(n) = J_n^(1)`
    SinglePart,
    /// `J_{1^n} = (n-1)! J_n^(n)`
    AllOnes,
    /// `J_{1^(n-2) 2} = (n-2)! J_n^(n-1)`
    OnesAndTwo,
    /// Tabulated values for `(3,1)` and `(2,2)`.
    Tabulated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnownJ {
    pub poly: IntPoly,
    pub source: KnownSource,
}

impl KnownSource {
    /// Caveat attached to this source in reports, if any.
    pub fn note(self) -> Option<&'static str> {
        match self {
            // The superscript is forced by the length-(n-1) aggregation identity.
            KnownSource::OnesAndTwo => {
                Some("taken as (n-2)! J_n^(n-1); superscript n-2 would break the length-(n-1) identity")
            }
            _ => None,
        }
    }
}

/// Closed-form `J_λ` for `(n)`, `1^n`, `1^(n-2) 2`, `(3,1)` and `(2,2)`;
/// `None` for every other partition.
pub fn j_lambda_known(lambda: &Partition, table: &TutteTable) -> Result<Option<KnownJ>, Error> {
    let n = lambda.size();
    let parts = lambda.parts();
    let known = if parts.len() == 1 {
        Some((table.j_poly(n, 1)?, KnownSource::SinglePart))
    } else if parts.iter().all(|&p| p == 1) {
        Some((table.j_poly(n, n)?.scale(&factorial(n as u64 - 1)), KnownSource::AllOnes))
    } else if parts[0] == 2 && parts[1..].iter().all(|&p| p == 1) {
        Some((table.j_poly(n, n - 1)?.scale(&factorial(n as u64 - 2)), KnownSource::OnesAndTwo))
    } else if parts == [3, 1] {
        Some((IntPoly::from_i64(&[3, 3, 2, 1]), KnownSource::Tabulated))
    } else if parts == [2, 2] {
        Some((IntPoly::from_i64(&[3, 2, 1]), KnownSource::Tabulated))
    } else {
        None
    };
    Ok(known.map(|(poly, source)| KnownJ { poly, source }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(terms: &[(u32, u32, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))))
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn table_entries() {
        let t = TutteTable::new(5).unwrap();
        assert_eq!(t.get(3, 1).unwrap(), &bp(&[(1, 0, 1), (0, 1, 1), (2, 0, 1)]));
        assert_eq!(
            t.get(4, 2).unwrap(),
            &bp(&[(1, 0, 1), (0, 1, 1), (2, 0, 1), (1, 1, 2), (0, 2, 2), (0, 3, 1)])
        );
        assert_eq!(t.get(5, 4).unwrap(), &bp(&[(1, 0, 1), (0, 1, 1), (0, 2, 1), (0, 3, 1)]));
        for n in 1..=5 {
            assert_eq!(t.get(n, n).unwrap(), &BiPoly::one());
        }
        assert!(t.get(6, 1).is_err());
        assert!(t.get(3, 4).is_err());
        assert!(TutteTable::new(0).is_err());
    }

    #[test]
    fn j_examples_and_both_routes_agree() {
        let t = TutteTable::new(10).unwrap();
        assert_eq!(t.j_poly(4, 2).unwrap(), IntPoly::from_i64(&[2, 3, 2, 1]));
        assert_eq!(t.j_poly(3, 1).unwrap(), IntPoly::from_i64(&[2, 1]));
        assert_eq!(t.j_poly(6, 6).unwrap(), IntPoly::one());
        let direct = j_recurrence(10);
        for n in 1..=10 {
            for r in 1..=n {
                assert_eq!(t.j_poly(n, r).unwrap(), direct[n - 1][r - 1], "n={n} r={r}");
            }
        }
    }

    #[test]
    fn inversion_enumerator_degree() {
        let t = TutteTable::new(10).unwrap();
        for n in 2..=10 {
            let expected = n * (n - 1) / 2 - (n - 1);
            assert_eq!(t.j_poly(n, 1).unwrap().degree(), Some(expected));
        }
    }

    #[test]
    fn c_and_p_examples() {
        let t = TutteTable::new(6).unwrap();
        assert_eq!(t.c_poly(2, 1).unwrap(), IntPoly::from_i64(&[0, 1]));
        assert_eq!(t.c_poly(3, 1).unwrap(), IntPoly::from_i64(&[0, 0, 3, 1]));
        assert_eq!(t.c_poly(4, 4).unwrap(), IntPoly::one());
        let p42 = t.p_poly_ns(4, 2).unwrap();
        assert_eq!(p42, IntPoly::from_i64(&[0, 0, 0, 0, 48, 108, 90, 36, 6]));
        assert_eq!(p42.eval(&BigInt::one()), BigInt::from(288));
        assert_eq!(t.p_poly_ns(1, 1).unwrap(), IntPoly::from_i64(&[0, 1]));
        for n in 1..=6 {
            let expected = one_plus_t().pow(choose2(n) as u32).shift_up(n);
            assert_eq!(t.p_poly_ns(n, n).unwrap(), expected);
        }
    }

    #[test]
    fn p_sum_over_root_degree_is_c_next() {
        let t = TutteTable::new(9).unwrap();
        for n in 1..=8 {
            let total: IntPoly = (1..=n).map(|s| t.p_poly_ns(n, s).unwrap()).sum();
            assert_eq!(total, t.c_poly(n + 1, 1).unwrap(), "n={n}");
        }
    }

    #[test]
    fn p_lambda_examples() {
        let p31 = p_lambda_from_j(&part(&[3, 1]), &IntPoly::from_i64(&[3, 3, 2, 1])).unwrap();
        assert_eq!(p31, IntPoly::from_i64(&[0, 0, 0, 0, 36, 76, 60, 24, 4]));
        let p22 = p_lambda_from_j(&part(&[2, 2]), &IntPoly::from_i64(&[3, 2, 1])).unwrap();
        assert_eq!(p22, IntPoly::from_i64(&[0, 0, 0, 0, 12, 32, 30, 12, 2]));
        let t = TutteTable::new(7).unwrap();
        for n in 1..=7 {
            let pn = p_lambda_from_j(&Partition::single(n), &t.j_poly(n, 1).unwrap()).unwrap();
            assert_eq!(pn, t.p_poly_ns(n, 1).unwrap());
        }
        // 1^3 needs 3! to divide 3 t^3
        assert!(p_lambda_from_j(&Partition::ones(3), &IntPoly::one()).is_err());
    }

    #[test]
    fn closed_families_reproduce_p_ns() {
        let t = TutteTable::new(8).unwrap();
        for n in 2..=8 {
            let ones = Partition::ones(n);
            let k = j_lambda_known(&ones, &t).unwrap().unwrap();
            assert_eq!(k.source, KnownSource::AllOnes);
            assert_eq!(p_lambda_from_j(&ones, &k.poly).unwrap(), t.p_poly_ns(n, n).unwrap());
            let mut parts = vec![2];
            parts.extend(vec![1; n - 2]);
            let lam = part(&parts);
            let k = j_lambda_known(&lam, &t).unwrap().unwrap();
            assert_eq!(p_lambda_from_j(&lam, &k.poly).unwrap(), t.p_poly_ns(n, n - 1).unwrap());
        }
    }

    #[test]
    fn known_values() {
        let t = TutteTable::new(5).unwrap();
        let k = j_lambda_known(&part(&[3, 1]), &t).unwrap().unwrap();
        assert_eq!(k.poly, IntPoly::from_i64(&[3, 3, 2, 1]));
        let k = j_lambda_known(&Partition::ones(3), &t).unwrap().unwrap();
        assert_eq!(k.poly, IntPoly::constant(BigInt::from(2)));
        let k = j_lambda_known(&Partition::single(5), &t).unwrap().unwrap();
        assert_eq!(k.poly, t.j_poly(5, 1).unwrap());
        assert!(j_lambda_known(&part(&[3, 2]), &t).unwrap().is_none());
    }

    #[test]
    fn twelve_rows() {
        let t = TutteTable::new(12).unwrap();
        // Cayley's formula at (1,1).
        let one = BigInt::one();
        for n in 1..=12usize {
            let trees = BigInt::from(n).pow((n as u32).saturating_sub(2));
            assert_eq!(t.get(n, 1).unwrap().eval(&one, &one), trees, "n={n}");
        }
    }
}
