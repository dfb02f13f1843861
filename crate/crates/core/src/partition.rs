//! Integer partitions and the statistics `|λ|`, `l(λ)`, `n(λ)` and `m(λ)!`.
//!
//! Generation order is reverse-lexicographic on the part sequence, e.g.
//! `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. Reports rely on that order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::poly::factorial;

/// Non-increasing sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.is_empty() {
            return Err(Error::InvalidArgument("a partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("parts {parts:?} are not non-increasing")));
        }
        Ok(Self { parts })
    }

    /// Sorts the given lengths into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, Error> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// `(n)`.
    pub fn single(n: usize) -> Self {
        Self { parts: vec![n] }
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// `(part, multiplicity)` pairs in ascending part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `m(λ)! = r_1! r_2! ...`.
    pub fn multiplicity_factorial(&self) -> BigInt {
        self.multiplicities().into_iter().fold(BigInt::one(), |acc, (_, m)| acc * factorial(m as u64))
    }

    /// Reduced notation, ascending parts: `(3,2,2)` becomes `"2^2 3"`.
    pub fn format_reduced(&self) -> String {
        self.multiplicities()
            .into_iter()
            .map(|(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Accepts part lists `"(3,1)"` / `"[3,1]"` and reduced forms `"1^2 2"`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |token: &str| Error::PartitionParse { input: s.to_string(), token: token.to_string() };
        let trimmed = s.trim();
        let list = trimmed
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| trimmed.strip_prefix('[').and_then(|r| r.strip_suffix(']')));
        if let Some(body) = list {
            let mut parts = Vec::new();
            for tok in body.split(',') {
                let tok = tok.trim();
                match tok.parse::<usize>() {
                    Ok(p) if p > 0 => parts.push(p),
                    _ => return Err(bad(tok)),
                }
            }
            if parts.windows(2).any(|w| w[0] < w[1]) {
                return Err(bad(body));
            }
            return Self::new(parts);
        }
        let mut parts = Vec::new();
        for tok in trimmed.split_whitespace() {
            let (part, mult) = match tok.split_once('^') {
                Some((p, m)) => (p, m),
                None => (tok, "1"),
            };
            let part: usize = part.parse().ok().filter(|&p| p > 0).ok_or_else(|| bad(tok))?;
            let mult: usize = mult.parse().ok().filter(|&m| m > 0).ok_or_else(|| bad(tok))?;
            parts.extend(std::iter::repeat_n(part, mult));
        }
        if parts.is_empty() {
            return Err(bad(trimmed));
        }
        Self::from_unsorted(parts)
    }
}

/// Every partition of `n` exactly once, reverse-lexicographic.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut prefix = Vec::with_capacity(n);
    extend_partitions(n, n, None, &mut prefix, &mut out);
    out
}

/// Partitions of `n` with exactly `r` parts; empty when `r` is out of range.
pub fn partitions_with_length(n: usize, r: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if r == 0 || r > n {
        return out;
    }
    let mut prefix = Vec::with_capacity(r);
    extend_partitions(n, n, Some(r), &mut prefix, &mut out);
    out
}

fn extend_partitions(
    remaining: usize,
    max_part: usize,
    parts_left: Option<usize>,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    match parts_left {
        Some(0) => {
            if remaining == 0 {
                out.push(Partition { parts: prefix.clone() });
            }
            return;
        }
        None if remaining == 0 => {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        _ => {}
    }
    // With k parts still to place, each part is at least 1.
    let reserve = parts_left.map_or(0, |k| k - 1);
    if remaining < reserve + 1 {
        return;
    }
    let hi = max_part.min(remaining - reserve);
    for p in (1..=hi).rev() {
        if let Some(k) = parts_left {
            // k parts of size at most p cannot exceed k * p.
            if k * p < remaining {
                break;
            }
        }
        prefix.push(p);
        extend_partitions(remaining - p, p, parts_left.map(|k| k - 1), prefix, out);
        prefix.pop();
    }
}
