//! The multigraph `K_{n/r}`: `K_n` with every edge inside an `r`-subset `R`
//! contracted into a single vertex `0_R`.
//!
//! Vertex 0 is `0_R`; vertices `1..=n-r` are the outer vertices `w_1..`.
//! Edge indices are fixed:
//!
//! * the parallel edge `(u_i, w_k)` has index `(k-1)*r + (i-1)`;
//! * then the simple edges `{w_j, w_k}`, `j < k`, lexicographically, from
//!   offset `r*(n-r)`.
//!
//! A spanning subgraph is an edge mask over these indices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::Error;
use crate::parallel::{sweep_masks, EnumConfig};
use crate::poly::{BiPoly, IntPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedGraph {
    n: usize,
    r: usize,
    edges: Vec<(u8, u8)>,
}

/// A spanning subgraph, as a mask over the owning graph's edge indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    mask: u64,
    len: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgraphStats {
    /// Connected components, isolated vertices included.
    pub c: usize,
    /// Edges, counted with multiplicity.
    pub e: usize,
    pub v: usize,
}

impl ContractedGraph {
    /// Build `K_{n/r}`; `n == r` gives the single vertex `0_R` with no edges.
    pub fn build(n: usize, r: usize) -> Result<Self, Error> {
        if r < 1 || n < r {
            return Err(Error::InvalidArgument(format!("K_{{n/r}} needs n >= r >= 1, got n={n}, r={r}")));
        }
        let outer = n - r;
        if outer + 1 > u8::MAX as usize {
            return Err(Error::InvalidArgument(format!("n - r = {outer} is too large")));
        }
        let mut edges = Vec::with_capacity(r * outer + outer * outer.saturating_sub(1) / 2);
        for k in 1..=outer {
            for _ in 0..r {
                edges.push((0, k as u8));
            }
        }
        for j in 1..=outer {
            for k in j + 1..=outer {
                edges.push((j as u8, k as u8));
            }
        }
        Ok(Self { n, r, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `r(n-r) + C(n-r, 2)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `n - r + 1`.
    pub fn vertex_count(&self) -> usize {
        self.n - self.r + 1
    }

    pub fn outer_count(&self) -> usize {
        self.n - self.r
    }

    /// Endpoints of edge `index` (vertex 0 is `0_R`).
    pub fn endpoints(&self, index: usize) -> (usize, usize) {
        let (a, b) = self.edges[index];
        (a as usize, b as usize)
    }

    /// Index of the parallel edge `(u_i, w_k)`, both 1-based.
    pub fn contracted_edge_index(&self, i: usize, k: usize) -> usize {
        (k - 1) * self.r + (i - 1)
    }

    pub fn subset(&self, mask: u64) -> Result<EdgeSubset, Error> {
        EdgeSubset::new(mask, self.edge_count() as u32)
    }

    pub fn stats(&self, h: &EdgeSubset) -> Result<SubgraphStats, Error> {
        if h.len as usize != self.edge_count() {
            return Err(Error::InvalidArgument(format!(
                "mask covers {} edges but the graph has {}",
                h.len,
                self.edge_count()
            )));
        }
        let mut parent = vec![0u8; self.vertex_count()];
        Ok(SubgraphStats {
            c: self.components(h.mask, &mut parent),
            e: h.mask.count_ones() as usize,
            v: self.vertex_count(),
        })
    }

    /// Components of the spanning subgraph `mask`, via union-find in `parent`.
    fn components(&self, mask: u64, parent: &mut [u8]) -> usize {
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        let mut comps = parent.len();
        let mut rest = mask;
        while rest != 0 {
            let bit = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let (a, b) = self.edges[bit];
            let ra = find(parent, a);
            let rb = find(parent, b);
            if ra != rb {
                parent[ra as usize] = rb;
                comps -= 1;
            }
        }
        comps
    }

    /// Bit `k-1` set iff `w_k` is joined to `0_R` by at least one edge of `mask`.
    fn neighbor_set(&self, mask: u64) -> u32 {
        let block = (1u64 << self.r) - 1;
        let mut s = 0u32;
        for k in 0..self.outer_count() {
            if (mask >> (k * self.r)) & block != 0 {
                s |= 1 << k;
            }
        }
        s
    }
}

fn find(parent: &mut [u8], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        let grand = parent[parent[x as usize] as usize];
        parent[x as usize] = grand;
        x = grand;
    }
    x
}

impl EdgeSubset {
    pub fn new(mask: u64, len: u32) -> Result<Self, Error> {
        if len > 64 || (len < 64 && mask >> len != 0) {
            return Err(Error::InvalidArgument(format!("mask {mask:#x} does not fit in {len} edge bits")));
        }
        Ok(Self { mask, len })
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        self.mask >> index & 1 == 1
    }

    /// Lowercase hex, bit `b` of the number is edge `b`, zero-padded to
    /// `ceil(len/4)` digits.
    pub fn to_hex(&self) -> String {
        let width = (self.len as usize).div_ceil(4).max(1);
        format!("{:0width$x}", self.mask)
    }

    pub fn from_hex(s: &str, len: u32) -> Result<Self, Error> {
        let mask = u64::from_str_radix(s, 16)
            .map_err(|e| Error::InvalidArgument(format!("bad hex mask {s:?}: {e}")))?;
        Self::new(mask, len)
    }
}

impl fmt::Display for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Counts of spanning subgraphs by `(components, edges)`, from one pass over
/// all `2^E` masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphCensus {
    vertices: usize,
    edges: usize,
    /// `counts[c][e]`
    counts: Vec<Vec<u64>>,
    spanning_trees: u64,
}

impl SubgraphCensus {
    pub fn count(&self, c: usize, e: usize) -> u64 {
        self.counts.get(c).and_then(|row| row.get(e)).copied().unwrap_or(0)
    }

    /// Spanning trees, counted directly during the sweep.
    pub fn spanning_trees(&self) -> u64 {
        self.spanning_trees
    }

    /// `Σ_H (x-1)^(c-1) (y-1)^(e+c-v)`.
    pub fn tutte(&self) -> BiPoly {
        tutte_from_counts(&self.counts, self.vertices)
    }

    /// `Σ t^e` over connected spanning subgraphs.
    pub fn connected_enumerator(&self) -> IntPoly {
        let row = self.counts.get(1).cloned().unwrap_or_default();
        IntPoly::from_coeffs(row.into_iter().map(BigInt::from).collect())
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn edge_bits(&self) -> usize {
        self.edges
    }
}

fn tutte_from_counts(counts: &[Vec<u64>], v: usize) -> BiPoly {
    let xm1 = &BiPoly::x() - &BiPoly::one();
    let ym1 = &BiPoly::y() - &BiPoly::one();
    let max_c = counts.len();
    let max_y = counts.iter().map(Vec::len).max().unwrap_or(0) + max_c;
    let xp: Vec<BiPoly> = powers(&xm1, max_c);
    let yp: Vec<BiPoly> = powers(&ym1, max_y);
    let mut out = BiPoly::zero();
    for (c, row) in counts.iter().enumerate() {
        for (e, &k) in row.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let term = &xp[c - 1] * &yp[e + c - v];
            out = &out + &term.scale(&BigInt::from(k));
        }
    }
    out
}

fn powers(p: &BiPoly, n: usize) -> Vec<BiPoly> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BiPoly::one();
    for _ in 0..=n {
        out.push(acc.clone());
        acc = &acc * p;
    }
    out
}

/// One sweep over all spanning subgraphs of `g`.
pub fn census(g: &ContractedGraph, cfg: &EnumConfig) -> Result<SubgraphCensus, Error> {
    let e_max = g.edge_count();
    let v = g.vertex_count();
    let width = e_max + 1;
    let tree_slot = (v + 1) * width;
    let hist = sweep_masks(
        cfg,
        e_max as u32,
        tree_slot + 1,
        || vec![0u8; v],
        |parent, mask, hist| {
            let c = g.components(mask, parent);
            let e = mask.count_ones() as usize;
            assert!(e + c >= v, "negative (y-1) exponent at mask {mask:#x}");
            hist[c * width + e] += 1;
            if c == 1 && e + 1 == v {
                hist[tree_slot] += 1;
            }
        },
    )?;
    let counts = hist[..tree_slot].chunks(width).map(<[u64]>::to_vec).collect();
    Ok(SubgraphCensus { vertices: v, edges: e_max, counts, spanning_trees: hist[tree_slot] })
}

/// Tutte polynomial of `K_{n/r}` from the spanning-subgraph expansion.
pub fn brute_tutte(g: &ContractedGraph, cfg: &EnumConfig) -> Result<BiPoly, Error> {
    Ok(census(g, cfg)?.tutte())
}

/// `Σ t^e(C)` over spanning connected subgraphs `C` of `K_{n/r}`.
pub fn brute_connected_enumerator(g: &ContractedGraph, cfg: &EnumConfig) -> Result<IntPoly, Error> {
    Ok(census(g, cfg)?.connected_enumerator())
}

/// The subgraph expansion split by the exact set `S` of outer vertices
/// adjacent to `0_R`. Keys are bitmasks with bit `k-1` standing for `w_k`.
pub fn brute_tutte_by_neighbor_set(
    g: &ContractedGraph,
    cfg: &EnumConfig,
) -> Result<BTreeMap<u32, BiPoly>, Error> {
    let e_max = g.edge_count();
    let v = g.vertex_count();
    let width = e_max + 1;
    let per_set = (v + 1) * width;
    let n_sets = 1usize << g.outer_count();
    let hist = sweep_masks(
        cfg,
        e_max as u32,
        n_sets * per_set,
        || vec![0u8; v],
        |parent, mask, hist| {
            let c = g.components(mask, parent);
            let e = mask.count_ones() as usize;
            let s = g.neighbor_set(mask) as usize;
            hist[s * per_set + c * width + e] += 1;
        },
    )?;
    let mut out = BTreeMap::new();
    for (s, block) in hist.chunks(per_set).enumerate() {
        if block.iter().all(|&k| k == 0) {
            continue;
        }
        let counts: Vec<Vec<u64>> = block.chunks(width).map(<[u64]>::to_vec).collect();
        out.insert(s as u32, tutte_from_counts(&counts, v));
    }
    Ok(out)
}
