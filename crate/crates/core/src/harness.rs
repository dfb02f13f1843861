//! Checks a DFS classification against the partition-indexed polynomials.
//!
//! For each class `λ ⊢ n` the harness inverts
//! `P_λ(t) = n t^n (1+t)^n(λ) J_λ(1+t) / m(λ)!` on the enumerated class
//! polynomial to get a candidate `J_λ(q)`, then checks:
//!
//! * agreement with the closed-form `J_λ` where one is known;
//! * integrality, order zero and degree `C(n-1,2) + l(λ) - 1 - n(λ)`;
//! * strict positivity and log-concavity of the coefficients;
//! * the aggregation identities tying `J_λ` back to `J_n^(r)` and `J_{n+1}`.
//!
//! A candidate that does not come out integral is reported as a finding,
//! never as an error: it is exactly what a counterexample looks like.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::dfs::{classify_all, Classification};
use crate::error::Error;
use crate::parallel::EnumConfig;
use crate::partition::Partition;
use crate::poly::{choose2, factorial, Coeff, DivisionError, IntPoly, PolyJson, RatPoly};
use crate::recurrence::{j_lambda_known, p_lambda_from_j, KnownSource, TutteTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Finding,
}

impl Verdict {
    /// Process exit status: 0 verified, 1 finding.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Finding => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DerivationStatus {
    /// Exact quotient with integer coefficients.
    Integral,
    /// Exact over the rationals but some coefficient is not an integer.
    NonIntegral,
    /// The class polynomial is not a multiple of `n (q-1)^n q^n(λ)`.
    NotDivisible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedJ {
    pub status: DerivationStatus,
    /// Candidate `J_λ(q)`; absent when the division failed.
    pub poly: Option<PolyJson>,
    /// Remainder of the failed division.
    pub remainder: Option<PolyJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaRecord {
    pub lambda: Partition,
    pub reduced: String,
    pub dfs_poly: PolyJson,
    pub count: String,
    /// `P_λ` from a closed-form `J_λ`, when one is known.
    pub expected_poly: Option<PolyJson>,
    pub expected_source: Option<KnownSource>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    /// `"known"` when a closed form exists, `"candidate"` otherwise.
    pub label: String,
    pub derived_j: DerivedJ,
    pub expected_degree: usize,
    pub order_ok: bool,
    pub degree_ok: bool,
    pub positive: bool,
    pub log_concave: bool,
}

impl LambdaRecord {
    pub fn passed(&self) -> bool {
        self.matches != Some(false)
            && self.derived_j.status == DerivationStatus::Integral
            && self.order_ok
            && self.degree_ok
            && self.positive
            && self.log_concave
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateRecord {
    pub name: String,
    pub holds: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub tool_version: String,
    pub edge_bits: u32,
    pub classes: Vec<LambdaRecord>,
    pub aggregates: Vec<AggregateRecord>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn aggregate(&self, name: &str) -> Option<&AggregateRecord> {
        self.aggregates.iter().find(|a| a.name == name)
    }

    pub fn record(&self, lambda: &Partition) -> Option<&LambdaRecord> {
        self.classes.iter().find(|r| &r.lambda == lambda)
    }
}

/// `c_k^2 >= c_{k-1} c_{k+1}` for every interior `k`.
pub fn log_concavity<C: Coeff + PartialOrd>(coeffs: &[C]) -> bool {
    coeffs.windows(3).all(|w| w[1].clone() * w[1].clone() >= w[0].clone() * w[2].clone())
}

/// Every coefficient from index 0 through the last is strictly positive.
/// An empty sequence (the zero polynomial) is not positive.
pub fn positivity<C: Coeff>(coeffs: &[C]) -> bool {
    !coeffs.is_empty() && coeffs.iter().all(Coeff::is_positive)
}

/// Degree every `J_λ` with `|λ| = n` must have.
pub fn expected_j_degree(lambda: &Partition) -> usize {
    let n = lambda.size();
    // C(n-1,2) + l - 1 >= n(λ) always holds; compute in signed space anyway.
    (choose2(n - 1) + lambda.len() - 1).checked_sub(lambda.n_stat()).expect("degree formula is non-negative")
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// Invert the class polynomial: `m! P(q-1) / (n (q-1)^n q^n(λ))`.
fn derive_j(lambda: &Partition, class_poly: &IntPoly) -> Result<RatPoly, RatPoly> {
    let n = lambda.size();
    let shifted =
        class_poly.substitute_shift(&-BigInt::one()).scale(&lambda.multiplicity_factorial()).to_rational();
    let q_minus_one = IntPoly::from_i64(&[-1, 1]);
    let divisor = q_minus_one.pow(n as u32).shift_up(lambda.n_stat()).scale(&BigInt::from(n)).to_rational();
    shifted.exact_divide(&divisor).map_err(|e| match e {
        DivisionError::NotDivisible { remainder } => remainder,
        DivisionError::ZeroDivisor => unreachable!("divisor is nonzero"),
    })
}

/// Run the classification and check it.
pub fn verify(n: usize, cfg: &EnumConfig) -> Result<VerificationReport, Error> {
    let classification = classify_all(n, cfg)?;
    verify_classification(&classification)
}

pub fn verify_classification(cls: &Classification) -> Result<VerificationReport, Error> {
    let n = cls.n;
    let table = TutteTable::new(n + 1)?;
    let one = BigInt::one();
    let mut notes = Vec::new();
    let mut records = Vec::with_capacity(cls.classes.len());
    let mut derived: Vec<Option<RatPoly>> = Vec::with_capacity(cls.classes.len());

    for (lambda, poly) in &cls.classes {
        let known = j_lambda_known(lambda, &table)?;
        let (expected_poly, expected_source, matches) = match &known {
            Some(k) => {
                if let Some(note) = k.source.note() {
                    notes.push(format!("{}: {note}", lambda));
                }
                match p_lambda_from_j(lambda, &k.poly) {
                    Ok(p) => {
                        let ok = &p == poly;
                        (Some(p.to_json("t")), Some(k.source), Some(ok))
                    }
                    Err(e) => {
                        notes.push(format!("{lambda}: closed form rejected: {e}"));
                        (None, Some(k.source), Some(false))
                    }
                }
            }
            None => (None, None, None),
        };

        let expected_degree = expected_j_degree(lambda);
        let (derived_j, cand) = match derive_j(lambda, poly) {
            Ok(j) => {
                let status = if j.to_integer().is_some() {
                    DerivationStatus::Integral
                } else {
                    notes.push(format!(
                        "{lambda}: candidate J has non-integer coefficients (inconsistent with an integral J_λ)"
                    ));
                    DerivationStatus::NonIntegral
                };
                (DerivedJ { status, poly: Some(j.to_json("q")), remainder: None }, Some(j))
            }
            Err(rem) => {
                notes.push(format!("{lambda}: class polynomial is not divisible by n (q-1)^n q^n(λ)"));
                (
                    DerivedJ {
                        status: DerivationStatus::NotDivisible,
                        poly: None,
                        remainder: Some(rem.to_json("q")),
                    },
                    None,
                )
            }
        };
        let (order_ok, degree_ok, positive, log_concave) = match &cand {
            Some(j) => (
                j.order() == Some(0),
                j.degree() == Some(expected_degree),
                positivity(j.coeffs()),
                log_concavity(j.coeffs()),
            ),
            None => (false, false, false, false),
        };
        if let (Some(j), Some(k)) = (&cand, &known) {
            if j != &k.poly.to_rational() {
                notes.push(format!("{lambda}: candidate J differs from the closed form"));
            }
        }
        records.push(LambdaRecord {
            lambda: lambda.clone(),
            reduced: lambda.format_reduced(),
            dfs_poly: poly.to_json("t"),
            count: poly.eval(&one).to_string(),
            expected_poly,
            expected_source,
            matches,
            label: if known.is_some() { "known" } else { "candidate" }.to_string(),
            derived_j,
            expected_degree,
            order_ok,
            degree_ok,
            positive,
            log_concave,
        });
        derived.push(cand);
    }

    let mut aggregates = Vec::new();
    let mut push = |name: String, holds: bool, detail: Option<String>| {
        aggregates.push(AggregateRecord { name, holds, detail });
    };

    // Enumerators grouped by number of parts, and by root degree.
    for s in 1..=n {
        let expected = table.p_poly_ns(n, s)?;
        let by_length: IntPoly =
            cls.classes.iter().filter(|(l, _)| l.len() == s).map(|(_, p)| p.clone()).sum();
        push(format!("length_sum[s={s}]"), by_length == expected, None);
        push(format!("root_degree[s={s}]"), cls.by_degree[s - 1] == expected, None);
    }
    let total: IntPoly = cls.classes.iter().map(|(_, p)| p.clone()).sum();
    push("grand_total".into(), total == table.c_poly(n + 1, 1)?, None);

    let mut families = vec![(Partition::single(n), 1), (Partition::ones(n), n)];
    if n >= 3 {
        let mut parts = vec![2];
        parts.extend(vec![1; n - 2]);
        families.push((Partition::new(parts)?, n - 1));
    }
    for (lambda, s) in families {
        let holds = cls.class(&lambda) == Some(&table.p_poly_ns(n, s)?);
        push(format!("closed_family[{}]", lambda.format_reduced()), holds, None);
    }

    // Σ_{l(λ)=r} q^n(λ)/m(λ)! J_λ = (n-1)!/(r!(n-r)!) q^C(r,2) J_n^(r)
    //
    // Both sides are multiplied by D = n (q-1)^n so the identity can be
    // checked in Q(q) even when some candidate J_λ is not a polynomial: the
    // cleared term of such a λ is m(λ)! P_λ(q-1) / m(λ)! = P_λ(q-1).
    let denom = IntPoly::from_i64(&[-1, 1]).pow(n as u32).scale(&BigInt::from(n)).to_rational();
    let cleared: Vec<RatPoly> = cls
        .classes
        .iter()
        .zip(&derived)
        .map(|((lambda, poly), j)| match j {
            Some(j) => {
                &(j.shift_up(lambda.n_stat())
                    .scale(&BigRational::new(BigInt::one(), lambda.multiplicity_factorial())))
                    * &denom
            }
            None => poly.substitute_shift(&-BigInt::one()).to_rational(),
        })
        .collect();
    let rational_only = |r: Option<usize>| {
        let names: Vec<String> = cls
            .classes
            .iter()
            .zip(&derived)
            .filter(|((l, _), j)| j.is_none() && r.is_none_or(|r| l.len() == r))
            .map(|((l, _), _)| l.to_string())
            .collect();
        (!names.is_empty()).then(|| format!("checked in Q(q); not a polynomial for {}", names.join(", ")))
    };
    for r in 1..=n {
        let lhs: RatPoly =
            cls.classes.iter().zip(&cleared).filter(|((l, _), _)| l.len() == r).map(|(_, c)| c.clone()).sum();
        let coef = BigRational::new(factorial(n as u64 - 1), factorial(r as u64) * factorial((n - r) as u64));
        let rhs = &table.j_poly(n, r)?.to_rational().shift_up(choose2(r)).scale(&coef) * &denom;
        push(format!("j_length_identity[r={r}]"), lhs == rhs, rational_only(Some(r)));
    }
    // n Σ_λ q^n(λ)/m(λ)! J_λ = J_{n+1}
    let lhs = cleared.iter().cloned().sum::<RatPoly>().scale(&rat(BigInt::from(n)));
    let rhs = &table.j_poly(n + 1, 1)?.to_rational() * &denom;
    push("j_total_identity".into(), lhs == rhs, rational_only(None));

    let verdict = if records.iter().all(LambdaRecord::passed) && aggregates.iter().all(|a| a.holds) {
        Verdict::Verified
    } else {
        Verdict::Finding
    };
    Ok(VerificationReport {
        n,
        tool_version: crate::VERSION.to_string(),
        edge_bits: ((n + 1) * n / 2) as u32,
        classes: records,
        aggregates,
        notes,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn log_concavity_examples() {
        assert!(log_concavity(&ints(&[3, 3, 2, 1])));
        assert!(log_concavity(&ints(&[3, 2, 1])));
        assert!(!log_concavity(&ints(&[1, 0, 1])));
        assert!(log_concavity(&ints(&[5])));
        assert!(log_concavity::<BigInt>(&[]));
    }

    #[test]
    fn positivity_examples() {
        assert!(positivity(&ints(&[2, 3, 2, 1])));
        assert!(positivity(&ints(&[1])));
        assert!(!positivity(&ints(&[0, 1])));
        assert!(!positivity::<BigInt>(&[]));
    }

    #[test]
    fn degree_formula() {
        assert_eq!(expected_j_degree(&part(&[3, 1])), 3);
        assert_eq!(expected_j_degree(&part(&[2, 2])), 2);
        assert_eq!(expected_j_degree(&Partition::single(4)), 3);
        assert_eq!(expected_j_degree(&Partition::ones(4)), 0);
    }

    #[test]
    fn derivation_inverts_p_lambda() {
        let lam = part(&[3, 1]);
        let p = p_lambda_from_j(&lam, &IntPoly::from_i64(&[3, 3, 2, 1])).unwrap();
        assert_eq!(derive_j(&lam, &p).unwrap(), IntPoly::from_i64(&[3, 3, 2, 1]).to_rational());
        assert!(derive_j(&lam, &IntPoly::from_i64(&[0, 0, 0, 0, 1])).is_err());
    }

    #[test]
    fn verify_four() {
        let rep = verify(4, &EnumConfig::with_workers(2)).unwrap();
        assert_eq!(rep.verdict, Verdict::Verified, "{:#?}", rep.notes);
        let r22 = rep.record(&part(&[2, 2])).unwrap();
        assert_eq!(r22.matches, Some(true));
        assert_eq!(
            RatPoly::from_json(r22.derived_j.poly.as_ref().unwrap()).unwrap(),
            IntPoly::from_i64(&[3, 2, 1]).to_rational()
        );
        let r31 = rep.record(&part(&[3, 1])).unwrap();
        assert_eq!(
            RatPoly::from_json(r31.derived_j.poly.as_ref().unwrap()).unwrap(),
            IntPoly::from_i64(&[3, 3, 2, 1]).to_rational()
        );
        assert!(rep.aggregates.iter().all(|a| a.holds));
    }

    #[test]
    fn all_ones_candidate_is_factorial() {
        for n in 1..=5 {
            let rep = verify(n, &EnumConfig::with_workers(2)).unwrap();
            let rec = rep.record(&Partition::ones(n)).unwrap();
            let j = RatPoly::from_json(rec.derived_j.poly.as_ref().unwrap()).unwrap();
            assert_eq!(j, RatPoly::constant(rat(factorial(n as u64 - 1))));
        }
    }

    #[test]
    fn small_n_verified() {
        for n in 1..=4 {
            let rep = verify(n, &EnumConfig::with_workers(1)).unwrap();
            assert_eq!(rep.verdict, Verdict::Verified, "n={n}: {:?}", rep.notes);
        }
    }

    #[test]
    fn tampered_class_is_a_finding() {
        let mut cls = classify_all(4, &EnumConfig::with_workers(1)).unwrap();
        // move one graph with 5 edges from (3,1) to (2,2)
        let t5 = IntPoly::monomial(BigInt::one(), 5);
        for (l, p) in cls.classes.iter_mut() {
            if l.parts() == [3, 1] {
                *p = &*p - &t5;
            } else if l.parts() == [2, 2] {
                *p = &*p + &t5;
            }
        }
        let rep = verify_classification(&cls).unwrap();
        assert_eq!(rep.verdict, Verdict::Finding);
        assert_eq!(rep.record(&part(&[3, 1])).unwrap().matches, Some(false));
        // the per-length sums are unaffected by moving between equal-length classes
        assert!(rep.aggregate("length_sum[s=2]").unwrap().holds);
    }
}
