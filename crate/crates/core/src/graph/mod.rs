//! Dense simple undirected graphs over vertices `0..n`.
//!
//! Adjacency is a row-major bit matrix; each row is `words` 64-bit blocks.
//! Graphs are immutable once built; constructors go through [`GraphBuilder`]
//! or the helpers in [`construct`].

pub mod construct;
pub mod enumerate;
pub mod io;
pub mod weighted;

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub use weighted::WeightedCompleteGraph;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A subset of `0..n` stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, vs: I) -> Self {
        let mut s = Self::empty(n);
        for v in vs {
            s.insert(v);
        }
        s
    }

    /// Universe size (the host graph's vertex count).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.bits[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits[v / 64] &= !(1 << (v % 64));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Simple undirected graph with symmetric, loop-free bit-matrix adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone)]
pub struct GraphBuilder {
    g: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        GraphBuilder {
            g: Graph {
                n,
                words,
                rows: vec![0; n * words],
            },
        }
    }

    /// Adds the edge `{u, v}`. Self-loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        if u >= self.g.n || v >= self.g.n {
            return Err(Error::precondition(format!(
                "edge ({u},{v}) outside 0..{}",
                self.g.n
            )));
        }
        if u == v {
            return Err(Error::precondition(format!("self-loop at {u}")));
        }
        self.g.set(u, v, true);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> &mut Self {
        if u < self.g.n && v < self.g.n && u != v {
            self.g.set(u, v, false);
        }
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.g.has_edge(u, v)
    }

    pub fn build(self) -> Graph {
        self.g
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds a graph on `n ≤ 64` vertices from neighbor masks.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= 64);
        let mut b = GraphBuilder::new(n);
        for (u, &m) in masks.iter().enumerate() {
            let mut m = m;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                if v != u && v < n {
                    b.g.set(u, v, true);
                }
            }
        }
        b.build()
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / 64, v % 64);
        let (wv, bv) = (v * self.words + u / 64, u % 64);
        if on {
            self.rows[wu] |= 1 << bu;
            self.rows[wv] |= 1 << bv;
        } else {
            self.rows[wu] &= !(1 << bu);
            self.rows[wv] &= !(1 << bv);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    /// Neighbor mask of `u` when `n ≤ 64`.
    #[inline]
    pub fn mask(&self, u: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[u * self.words]
    }

    /// All neighbor masks; only valid for `n ≤ 64`.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask view needs n <= 64, got {}", self.n);
        (0..self.n).map(|u| self.mask(u)).collect()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn neighbor_set(&self, u: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: self.row(u).to_vec(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of neighbors of `u` inside `set`.
    pub fn degree_into(&self, u: usize, set: &VertexSet) -> usize {
        self.row(u)
            .iter()
            .zip(set.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `e(A, B)`: edges with one end in `A` and the other in `B`, counted as
    /// ordered incidences `Σ_{a∈A} |N(a) ∩ B|`. For disjoint sets this is the
    /// crossing edge count.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter().map(|u| self.degree_into(u, b)).sum()
    }

    /// Edges with both ends in `set`.
    pub fn edges_within(&self, set: &VertexSet) -> usize {
        self.edges_between(set, set) / 2
    }

    /// `d(A,B) = e(A,B) / (|A||B|)` for nonempty disjoint `A`, `B`.
    pub fn edge_density(&self, a: &VertexSet, b: &VertexSet) -> Result<Rational> {
        if a.universe() != self.n || b.universe() != self.n {
            return Err(Error::precondition(
                "vertex set universe differs from graph",
            ));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::precondition("edge density of an empty set"));
        }
        if !a.is_disjoint(b) {
            return Err(Error::precondition("edge density of overlapping sets"));
        }
        let e = self.edges_between(a, b) as i128;
        Ok(Rational::new(e, (a.len() * b.len()) as i128))
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.g.set(i, j, true);
                }
            }
        }
        b.build()
    }

    /// Copy of the graph with the listed edges removed.
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            if u != v && u < self.n && v < self.n {
                g.set(u, v, false);
            }
        }
        g
    }

    /// Copy with vertex `v` removed; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn complement(&self) -> Graph {
        let mut b = GraphBuilder::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    b.g.set(u, v, true);
                }
            }
        }
        b.build()
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.g.set(perm[u], perm[v], true);
        }
        b.build()
    }

    /// Connected components as vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Proper 2-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        stack.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of the shortest odd cycle, if any.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    } else if dist[v] == dist[u] {
                        // closed walk through s of odd length 2*dist+1
                        let len = 2 * dist[u] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Canonical form for graphs on at most 12 vertices: the lexicographically
    /// largest upper-triangle bit string over all relabelings, packed into a
    /// `u128` with the vertex count.
    ///
    /// Exhaustive over `n!` permutations with degree-sequence pruning; intended
    /// for the small graphs used by the enumeration oracles.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        if self.n > 12 {
            return Err(Error::size("canonical form vertex count", self.n, 12));
        }
        Ok(CanonicalForm {
            n: self.n as u8,
            code: canonical_code(&self.masks()),
        })
    }

    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return Ok(false);
        }
        Ok(self.canonical_form()? == other.canonical_form()?)
    }

    /// Checks the structural invariants: symmetric, loop-free, no stray bits.
    pub fn check_invariants(&self) -> bool {
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return false;
            }
            for v in 0..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return false;
                }
            }
            let tail = self.words * 64 - self.n;
            if tail > 0 {
                let last = self.rows[u * self.words + self.words - 1];
                if last >> (64 - tail) != 0 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Isomorphism-invariant code of a graph on at most 12 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub code: u128,
}

// The code reads the relabelled upper triangle column by column
// ((0,1), (0,2), (1,2), (0,3), ...), so placing the first k vertices fixes a
// prefix of the code. Only orders with non-increasing degree are tried; that
// set is itself isomorphism invariant. Swapping two unplaced twins (equal
// neighbourhoods apart from each other) fixes the prefix, so only one vertex
// per twin class is tried at each step.
fn canonical_code(masks: &[u64]) -> u128 {
    let n = masks.len();
    if n <= 1 {
        return 0;
    }
    let deg: Vec<u32> = masks.iter().map(|m| m.count_ones()).collect();
    let twin: Vec<usize> = (0..n)
        .map(|v| {
            (0..n)
                .find(|&u| masks[u] & !(1 << v) == masks[v] & !(1 << u))
                .unwrap()
        })
        .collect();
    let mut search = Canon {
        masks,
        deg: &deg,
        twin: &twin,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.extend(0, 0);
    search.best.unwrap_or(0)
}

struct Canon<'a> {
    masks: &'a [u64],
    deg: &'a [u32],
    twin: &'a [usize],
    order: Vec<usize>,
    best: Option<u128>,
}

impl Canon<'_> {
    fn extend(&mut self, used: u64, prefix: u128) {
        let n = self.masks.len();
        let k = self.order.len();
        if k == n {
            if self.best.is_none_or(|b| prefix > b) {
                self.best = Some(prefix);
            }
            return;
        }
        let target = (0..n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| self.deg[v])
            .max()
            .unwrap();
        let total = n * (n - 1) / 2;
        let mut tried = 0u64;
        for v in 0..n {
            if used >> v & 1 == 1 || self.deg[v] != target || tried >> self.twin[v] & 1 == 1 {
                continue;
            }
            tried |= 1 << self.twin[v];
            let mut code = prefix;
            for &u in &self.order {
                code = code << 1 | (self.masks[u] >> v & 1) as u128;
            }
            if let Some(best) = self.best {
                let placed = (k + 1) * k / 2;
                let best_prefix = best >> (total - placed);
                if code < best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.extend(used | 1 << v, code);
            self.order.pop();
        }
    }
}
