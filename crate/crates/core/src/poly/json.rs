//! Canonical JSON form shared by every polynomial in reports and caches:
//!
//! ```json
//! {"vars":["x","y"],"terms":[{"e":[1,0],"c":"1"},{"e":[2,0],"c":"1"}]}
//! ```
//!
//! Terms are sorted lexicographically by exponent and coefficients are
//! decimal strings (`"-3"`, or `"7/5"` for rationals).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use num_bigint::BigInt;

use super::{BiPoly, Coeff, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<u32>,
    pub c: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyJsonError {
    #[error("expected {expected} variable(s), found {found}")]
    Arity { expected: usize, found: usize },
    #[error("exponent vector {0:?} does not match the variable count")]
    Exponent(Vec<u32>),
    #[error("bad coefficient {0:?}")]
    Coefficient(String),
    #[error("terms are not strictly sorted by exponent")]
    Order,
}

fn check_sorted(terms: &[TermJson]) -> Result<(), PolyJsonError> {
    if terms.windows(2).all(|w| w[0].e < w[1].e) {
        Ok(())
    } else {
        Err(PolyJsonError::Order)
    }
}

impl<C: Coeff> UniPoly<C> {
    pub fn to_json(&self, var: &str) -> PolyJson {
        let terms = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| TermJson { e: vec![k as u32], c: c.to_decimal() })
            .collect();
        PolyJson { vars: vec![var.to_string()], terms }
    }

    pub fn from_json(doc: &PolyJson) -> Result<Self, PolyJsonError> {
        if doc.vars.len() != 1 {
            return Err(PolyJsonError::Arity { expected: 1, found: doc.vars.len() });
        }
        check_sorted(&doc.terms)?;
        let mut coeffs: Vec<C> = Vec::new();
        for term in &doc.terms {
            let [k] = term.e[..] else {
                return Err(PolyJsonError::Exponent(term.e.clone()));
            };
            let c = C::parse_decimal(&term.c).ok_or_else(|| PolyJsonError::Coefficient(term.c.clone()))?;
            let k = k as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, C::zero());
            }
            coeffs[k] = c;
        }
        Ok(Self::from_coeffs(coeffs))
    }
}

impl BiPoly {
    pub fn to_json(&self) -> PolyJson {
        let terms = self.terms().map(|((i, j), c)| TermJson { e: vec![i, j], c: c.to_string() }).collect();
        PolyJson { vars: vec!["x".into(), "y".into()], terms }
    }

    pub fn from_json(doc: &PolyJson) -> Result<Self, PolyJsonError> {
        if doc.vars.len() != 2 {
            return Err(PolyJsonError::Arity { expected: 2, found: doc.vars.len() });
        }
        check_sorted(&doc.terms)?;
        let mut triples = Vec::with_capacity(doc.terms.len());
        for term in &doc.terms {
            let [i, j] = term.e[..] else {
                return Err(PolyJsonError::Exponent(term.e.clone()));
            };
            let c: BigInt = term.c.parse().map_err(|_| PolyJsonError::Coefficient(term.c.clone()))?;
            triples.push((i, j, c));
        }
        Ok(Self::from_terms(triples))
    }
}
