//! Depth-first search on spanning connected subgraphs of `K_m` rooted at
//! vertex 1, and the classification of those subgraphs by the partition
//! `Λ(C)`.
//!
//! The search always moves to the greatest unvisited neighbour of the
//! current vertex and backtracks when there is none. The word `w(C)` lists
//! the vertices other than 1 in first-visit order. Cutting `w(C)` in front
//! of every neighbour of the root gives `deg(1)` subwords whose lengths,
//! sorted, form `Λ(C)`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::parallel::{sweep_masks, EnumConfig};
use crate::partition::{all_partitions, Partition};
use crate::poly::{IntPoly, PolyJson};

/// Largest vertex count the adjacency words can hold.
const MAX_VERTICES: usize = 16;

/// A simple graph on vertices `1..=m`, root 1, as a mask over the edges of
/// `K_m` in lexicographic order `(1,2), (1,3), .., (1,m), (2,3), ..`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootedSimpleGraph {
    m: usize,
    mask: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfsResult {
    /// Current vertex after every move, backtracks included; starts and ends at 1.
    pub tau: Vec<usize>,
    pub word: Vec<usize>,
    pub lambda: Partition,
}

/// Index of edge `{a, b}` (1-based, `a < b`) in the lexicographic order of `K_m`.
pub fn edge_index(m: usize, a: usize, b: usize) -> usize {
    debug_assert!(1 <= a && a < b && b <= m);
    // edges before row a: Σ_{i<a} (m - i)
    (a - 1) * m - (a - 1) * a / 2 + (b - a - 1)
}

impl RootedSimpleGraph {
    pub fn new(m: usize, mask: u64) -> Result<Self, Error> {
        if !(1..=MAX_VERTICES).contains(&m) {
            return Err(Error::InvalidArgument(format!("vertex count {m} outside 1..={MAX_VERTICES}")));
        }
        let bits = m * (m - 1) / 2;
        if bits < 64 && mask >> bits != 0 {
            return Err(Error::InvalidArgument(format!("mask {mask:#x} exceeds the {bits} edges of K_{m}")));
        }
        Ok(Self { m, mask })
    }

    pub fn from_edges(m: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut mask = 0u64;
        for &(a, b) in edges {
            let (a, b) = (a.min(b), a.max(b));
            if a < 1 || a == b || b > m {
                return Err(Error::InvalidArgument(format!("edge ({a},{b}) is not an edge of K_{m}")));
            }
            mask |= 1 << edge_index(m, a, b);
        }
        Self::new(m, mask)
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn edge_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Neighbour bitsets, bit `i` for vertex `i + 1`.
    fn adjacency(&self) -> [u16; MAX_VERTICES] {
        adjacency(&Edges::new(self.m), self.mask)
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let adj = self.adjacency()[v - 1];
        (0..self.m).filter(|i| adj >> i & 1 == 1).map(|i| i + 1).collect()
    }

    pub fn root_degree(&self) -> usize {
        self.adjacency()[0].count_ones() as usize
    }
}

/// Endpoint table for the edges of `K_m`, 0-based.
struct Edges {
    m: usize,
    ends: Vec<(u8, u8)>,
}

impl Edges {
    fn new(m: usize) -> Self {
        let mut ends = Vec::with_capacity(m * m.saturating_sub(1) / 2);
        for a in 0..m {
            for b in a + 1..m {
                ends.push((a as u8, b as u8));
            }
        }
        Self { m, ends }
    }
}

fn adjacency(edges: &Edges, mask: u64) -> [u16; MAX_VERTICES] {
    let mut adj = [0u16; MAX_VERTICES];
    let mut rest = mask;
    while rest != 0 {
        let bit = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let (a, b) = edges.ends[bit];
        adj[a as usize] |= 1 << b;
        adj[b as usize] |= 1 << a;
    }
    adj
}

/// Walk the search from vertex 0 (the root). Calls `on_visit(v)` for each
/// newly visited vertex and `on_move(v)` for every vertex the walk stands on
/// after a move. Returns the visited set.
fn walk(adj: &[u16; MAX_VERTICES], mut on_visit: impl FnMut(usize), mut on_move: impl FnMut(usize)) -> u16 {
    let mut stack = [0u8; MAX_VERTICES];
    let mut depth = 1;
    let mut visited: u16 = 1;
    while depth > 0 {
        let v = stack[depth - 1] as usize;
        let open = adj[v] & !visited;
        if open != 0 {
            let u = 15 - open.leading_zeros() as usize;
            visited |= 1 << u;
            stack[depth] = u as u8;
            depth += 1;
            on_visit(u);
            on_move(u);
        } else {
            depth -= 1;
            if depth > 0 {
                on_move(stack[depth - 1] as usize);
            }
        }
    }
    visited
}

fn full_set(m: usize) -> u16 {
    ((1u32 << m) - 1) as u16
}

/// The vertex sequence `τ(C)`, backtracks included.
pub fn dfs_traverse(g: &RootedSimpleGraph) -> Result<Vec<usize>, Error> {
    let adj = g.adjacency();
    let mut tau = vec![1];
    let visited = walk(&adj, |_| {}, |v| tau.push(v + 1));
    if visited != full_set(g.m) {
        return Err(Error::Disconnected);
    }
    Ok(tau)
}

/// `w(C)`: first visits of vertices other than 1, in search order.
pub fn word_from_tau(tau: &[usize]) -> Vec<usize> {
    let mut seen = std::collections::HashSet::new();
    tau.iter().copied().filter(|&v| v != 1 && seen.insert(v)).collect()
}

pub fn dfs_word(g: &RootedSimpleGraph) -> Result<Vec<usize>, Error> {
    let adj = g.adjacency();
    let mut word = Vec::with_capacity(g.m - 1);
    let visited = walk(&adj, |v| word.push(v + 1), |_| {});
    if visited != full_set(g.m) {
        return Err(Error::Disconnected);
    }
    Ok(word)
}

/// `Λ` from a word and the set of root neighbours.
pub fn lambda_from_word(word: &[usize], root_neighbors: &[usize]) -> Result<Partition, Error> {
    let mut lengths: Vec<usize> = Vec::new();
    for v in word {
        if root_neighbors.contains(v) {
            lengths.push(1);
        } else if let Some(last) = lengths.last_mut() {
            *last += 1;
        } else {
            return Err(Error::InvalidArgument(format!(
                "word {word:?} does not start with a root neighbour"
            )));
        }
    }
    Partition::from_unsorted(lengths)
}

pub fn lambda_of(g: &RootedSimpleGraph) -> Result<Partition, Error> {
    lambda_from_word(&dfs_word(g)?, &g.neighbors(1))
}

pub fn dfs(g: &RootedSimpleGraph) -> Result<DfsResult, Error> {
    let tau = dfs_traverse(g)?;
    let word = word_from_tau(&tau);
    let lambda = lambda_from_word(&word, &g.neighbors(1))?;
    Ok(DfsResult { tau, word, lambda })
}

/// Reference word by plain recursion, used to spot-check the iterative walk.
fn recursive_word(adj: &[u16; MAX_VERTICES], m: usize) -> Vec<usize> {
    fn go(v: usize, adj: &[u16; MAX_VERTICES], m: usize, visited: &mut u16, word: &mut Vec<usize>) {
        for u in (0..m).rev() {
            if adj[v] >> u & 1 == 1 && *visited >> u & 1 == 0 {
                *visited |= 1 << u;
                word.push(u + 1);
                go(u, adj, m, visited, word);
            }
        }
    }
    let mut visited = 1u16;
    let mut word = Vec::new();
    go(0, adj, m, &mut visited, &mut word);
    word
}

/// Pack non-increasing part lengths into a sortable key, 4 bits per part.
fn pack_parts(parts: &[usize]) -> u64 {
    parts.iter().fold(0u64, |acc, &p| (acc << 4) | p as u64)
}

/// Edge enumerators `Σ t^e(C)` per class `Λ(C) = λ` and per root degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub n: usize,
    /// Every partition of `n`, canonical order, with its class enumerator.
    pub classes: Vec<(Partition, IntPoly)>,
    /// `by_degree[s-1]`: enumerator of graphs whose root has degree `s`,
    /// counted independently of the word.
    pub by_degree: Vec<IntPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub tool_version: String,
    pub edge_bits: u32,
    pub classes: Vec<ClassRecord>,
    pub by_degree: Vec<DegreeRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub lambda: Partition,
    pub poly: PolyJson,
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub s: usize,
    pub poly: PolyJson,
}

impl Classification {
    pub fn class(&self, lambda: &Partition) -> Option<&IntPoly> {
        self.classes.iter().find(|(l, _)| l == lambda).map(|(_, p)| p)
    }

    pub fn to_report(&self) -> ClassificationReport {
        let one = BigInt::from(1);
        ClassificationReport {
            n: self.n,
            tool_version: crate::VERSION.to_string(),
            edge_bits: ((self.n + 1) * self.n / 2) as u32,
            classes: self
                .classes
                .iter()
                .map(|(lambda, poly)| ClassRecord {
                    lambda: lambda.clone(),
                    poly: poly.to_json("t"),
                    count: poly.eval(&one).to_string(),
                })
                .collect(),
            by_degree: self
                .by_degree
                .iter()
                .enumerate()
                .map(|(i, poly)| DegreeRecord { s: i + 1, poly: poly.to_json("t") })
                .collect(),
        }
    }

    /// Rebuild from a report, checking that it is well formed for its `n`.
    pub fn from_report(report: &ClassificationReport) -> Result<Self, Error> {
        let bad = |what: String| Error::Inconsistent(format!("classification report: {what}"));
        let n = report.n;
        let expected = all_partitions(n);
        if report.classes.len() != expected.len()
            || report.classes.iter().zip(&expected).any(|(c, l)| &c.lambda != l)
        {
            return Err(bad("class list does not match the partitions of n".into()));
        }
        if report.by_degree.len() != n || report.by_degree.iter().enumerate().any(|(i, d)| d.s != i + 1) {
            return Err(bad("degree list does not cover 1..=n".into()));
        }
        let one = BigInt::from(1);
        let mut classes = Vec::with_capacity(expected.len());
        for rec in &report.classes {
            let poly = IntPoly::from_json(&rec.poly).map_err(|e| bad(e.to_string()))?;
            if poly.eval(&one).to_string() != rec.count {
                return Err(bad(format!("count for {} does not match its polynomial", rec.lambda)));
            }
            classes.push((rec.lambda.clone(), poly));
        }
        let by_degree = report
            .by_degree
            .iter()
            .map(|d| IntPoly::from_json(&d.poly).map_err(|e| bad(e.to_string())))
            .collect::<Result<_, _>>()?;
        Ok(Self { n, classes, by_degree })
    }
}

/// Sample rate of the recursive cross-check inside [`classify_all`].
const CROSS_CHECK_MASK: u64 = (1 << 12) - 1;

/// Classify every spanning connected subgraph of `K_{n+1}` by `Λ(C)`.
pub fn classify_all(n: usize, cfg: &EnumConfig) -> Result<Classification, Error> {
    if n < 1 {
        return Err(Error::InvalidArgument("classification needs n >= 1".into()));
    }
    let m = n + 1;
    let bits = (m * n / 2) as u32;
    cfg.check_bits(bits)?;
    if m > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!("K_{m} is too large")));
    }
    let partitions = all_partitions(n);
    let mut keys: Vec<(u64, usize)> =
        partitions.iter().enumerate().map(|(i, p)| (pack_parts(p.parts()), i)).collect();
    keys.sort_unstable();
    let width = bits as usize + 1;
    let degree_base = partitions.len() * width;
    let edges = Edges::new(m);
    let all = full_set(m);
    debug_assert_eq!(edges.m, m);

    let hist = sweep_masks(
        cfg,
        bits,
        degree_base + n * width,
        || Vec::<usize>::with_capacity(n),
        |lengths, mask, hist| {
            let adj = adjacency(&edges, mask);
            let root = adj[0];
            if root == 0 {
                return;
            }
            lengths.clear();
            let visited = walk(
                &adj,
                |v| {
                    if root >> v & 1 == 1 {
                        lengths.push(1);
                    } else {
                        *lengths.last_mut().expect("first visit is a root neighbour") += 1;
                    }
                },
                |_| {},
            );
            if visited != all {
                return;
            }
            if mask & CROSS_CHECK_MASK == CROSS_CHECK_MASK >> 1 {
                cross_check(&adj, m, lengths);
            }
            lengths.sort_unstable_by(|a, b| b.cmp(a));
            let key = pack_parts(lengths);
            let idx = keys[keys.binary_search_by_key(&key, |&(k, _)| k).expect("Λ is a partition of n")].1;
            let e = mask.count_ones() as usize;
            hist[idx * width + e] += 1;
            let s = root.count_ones() as usize;
            hist[degree_base + (s - 1) * width + e] += 1;
        },
    )?;

    let to_poly = |row: &[u64]| IntPoly::from_coeffs(row.iter().map(|&k| BigInt::from(k)).collect());
    let classes = partitions
        .into_iter()
        .zip(hist[..degree_base].chunks(width))
        .map(|(p, row)| (p, to_poly(row)))
        .collect();
    let by_degree = hist[degree_base..].chunks(width).map(to_poly).collect();
    Ok(Classification { n, classes, by_degree })
}

fn cross_check(adj: &[u16; MAX_VERTICES], m: usize, lengths: &[usize]) {
    let word = recursive_word(adj, m);
    let root: Vec<usize> = (1..m).filter(|&i| adj[0] >> i & 1 == 1).map(|i| i + 1).collect();
    assert_eq!(word.len(), m - 1, "recursive walk missed vertices");
    assert_eq!(word[0], *root.last().unwrap(), "first letter is not the largest root neighbour");
    let mut fast = lengths.to_vec();
    fast.sort_unstable_by(|a, b| b.cmp(a));
    let reference = lambda_from_word(&word, &root).expect("recursive word starts at a root neighbour");
    assert_eq!(reference.parts(), &fast[..], "iterative and recursive searches disagree");
}
