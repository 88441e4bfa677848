//! Named graphs and the graph operations used by the hardness reduction.

use rand::Rng;

use super::{Graph, GraphBuilder};
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.g.set(u, v, true);
        }
    }
    b.build()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        b.g.set(u, (u + 1) % n, true);
    }
    b.build()
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 1..n {
        b.g.set(u - 1, u, true);
    }
    b.build()
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    complete_multipartite(&[a, b])
}

/// Complete multipartite graph with the given part sizes; parts occupy
/// consecutive vertex ranges.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                b.g.set(u, v, true);
            }
        }
    }
    b.build()
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("valid petersen edges")
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                b.g.set(u, v, true);
            }
        }
    }
    b.build()
}

/// The `b`-blowup: vertex `v` becomes the independent set `{v·b, …, v·b + b − 1}`
/// and every edge becomes a complete bipartite `b × b` graph.
pub fn blowup(f: &Graph, b: usize) -> Result<Graph> {
    if b == 0 {
        return Err(Error::precondition("blow-up size must be at least 1"));
    }
    let mut out = GraphBuilder::new(f.n() * b);
    for (u, v) in f.edges() {
        for i in 0..b {
            for j in 0..b {
                out.g.set(u * b + i, v * b + j, true);
            }
        }
    }
    Ok(out.build())
}

/// Edge-set union on a shared vertex set.
pub fn boolean_or(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.n() != g2.n() {
        return Err(Error::precondition(format!(
            "boolean or of graphs on {} and {} vertices",
            g1.n(),
            g2.n()
        )));
    }
    let mut out = g1.clone();
    for (a, b) in out.rows.iter_mut().zip(&g2.rows) {
        *a |= *b;
    }
    Ok(out)
}

/// Vertex-disjoint union of `r` copies; copy `c` occupies `c·n .. (c+1)·n`.
pub fn disjoint_copies(f: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::precondition("number of copies must be at least 1"));
    }
    let n = f.n();
    let mut out = GraphBuilder::new(n * r);
    let edges = f.edges();
    for c in 0..r {
        for &(u, v) in &edges {
            out.g.set(c * n + u, c * n + v, true);
        }
    }
    Ok(out.build())
}

/// Places `inner` on the first `inner.n()` vertices of an edgeless graph on `n`.
pub fn pad(inner: &Graph, n: usize) -> Result<Graph> {
    if inner.n() > n {
        return Err(Error::precondition(format!(
            "cannot pad a graph on {} vertices into {n}",
            inner.n()
        )));
    }
    let mut out = GraphBuilder::new(n);
    for (u, v) in inner.edges() {
        out.g.set(u, v, true);
    }
    Ok(out.build())
}
