//! Strongly regular graphs on the plane `GF(q)²`: `x ~ y` when `x − y` is
//! parallel to one of `k` fixed directions.
//!
//! Directions are taken in slope order `(1, 0), (1, 1), …, (1, q−1)` and
//! then the vertical `(0, 1)`. The graph is `k(q−1)`-regular and every
//! eigenvalue apart from the top one is `−k` or `q − k`.

use nalgebra::DMatrix;

use super::field::FiniteField;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};

#[derive(Clone, Debug)]
pub struct DgtGraph {
    pub q: usize,
    pub k: usize,
    /// Direction vectors `(a, b)` over the field.
    pub directions: Vec<(usize, usize)>,
    /// Vertex `x·q + y` is the point `(x, y)`.
    pub graph: Graph,
}

impl DgtGraph {
    pub fn degree(&self) -> usize {
        self.k * (self.q - 1)
    }
}

pub fn dgt_graph(q: usize, k: usize) -> Result<DgtGraph> {
    let f = FiniteField::new(q)?;
    if k == 0 || k > q + 1 {
        return Err(Error::precondition(format!(
            "need 1 ≤ k ≤ q + 1 = {}, got {k}",
            q + 1
        )));
    }
    let directions: Vec<(usize, usize)> = (0..q).map(|s| (1, s)).chain([(0, 1)]).take(k).collect();
    let mut b = GraphBuilder::new(q * q);
    for x in 0..q {
        for y in 0..q {
            for &(dx, dy) in &directions {
                for t in 1..q {
                    let u = f.add(x, f.mul(t, dx));
                    let v = f.add(y, f.mul(t, dy));
                    b.add_edge(x * q + y, u * q + v)?;
                }
            }
        }
    }
    Ok(DgtGraph {
        q,
        k,
        directions,
        graph: b.build(),
    })
}

/// Largest graph the dense eigensolver accepts.
pub const SPECTRUM_CAP: usize = 2500;

/// Numerical tolerance for eigenvalue comparisons.
pub const TOLERANCE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct SpectrumReport {
    /// All eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    pub degree: usize,
    /// Largest absolute value among all eigenvalues but the top one.
    pub lambda: f64,
    pub sqrt_n: f64,
    /// Top eigenvalue equals the degree.
    pub top_ok: bool,
    /// Every other eigenvalue is `−k` or `q − k`.
    pub two_valued: bool,
    pub lambda_le_sqrt_n: bool,
}

impl SpectrumReport {
    pub fn passes(&self) -> bool {
        self.top_ok && self.two_valued
    }
}

/// Descending adjacency eigenvalues of a graph.
pub fn adjacency_spectrum(g: &Graph) -> Result<Vec<f64>> {
    let n = g.n();
    if n > SPECTRUM_CAP {
        return Err(Error::size("vertex count", n, SPECTRUM_CAP));
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    Ok(ev)
}

pub fn spectrum_check(d: &DgtGraph) -> Result<SpectrumReport> {
    let ev = adjacency_spectrum(&d.graph)?;
    let degree = d.degree();
    let (q, k) = (d.q as f64, d.k as f64);
    let top_ok = (ev[0] - degree as f64).abs() <= TOLERANCE;
    let two_valued = ev[1..]
        .iter()
        .all(|&x| (x + k).abs() <= TOLERANCE || (x - (q - k)).abs() <= TOLERANCE);
    let lambda = ev[1..].iter().fold(0.0f64, |m, &x| m.max(x.abs()));
    let sqrt_n = (d.graph.n() as f64).sqrt();
    Ok(SpectrumReport {
        eigenvalues: ev,
        degree,
        lambda,
        sqrt_n,
        top_ok,
        two_valued,
        lambda_le_sqrt_n: lambda <= sqrt_n + TOLERANCE,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct MixingBound {
    /// Edges counted by the bound (ordered pairs for the two-set form).
    pub edges: usize,
    pub expected: f64,
    pub bound: f64,
    /// `bound − |edges − expected|`.
    pub slack: f64,
    pub holds: bool,
}

fn mixing(edges: usize, expected: f64, bound: f64) -> MixingBound {
    let slack = bound - (edges as f64 - expected).abs();
    MixingBound {
        edges,
        expected,
        bound,
        slack,
        holds: slack >= -TOLERANCE,
    }
}

/// `|e(X,Y) − |X||Y|d/n| ≤ λ·sqrt(|X||Y|)` for a `d`-regular graph, with
/// `e(X,Y)` counting pairs `(x, y) ∈ X × Y` that are adjacent.
pub fn edge_distribution_check(
    g: &Graph,
    d: usize,
    lambda: f64,
    x: &VertexSet,
    y: &VertexSet,
) -> MixingBound {
    let n = g.n() as f64;
    let (a, b) = (x.len() as f64, y.len() as f64);
    let e: usize = x.iter().map(|v| g.degree_into(v, y)).sum();
    mixing(e, a * b * d as f64 / n, lambda * (a * b).sqrt())
}

/// `|e(X) − d|X|²/(2n)| ≤ λ|X|`.
pub fn edge_distribution_check_single(
    g: &Graph,
    d: usize,
    lambda: f64,
    x: &VertexSet,
) -> MixingBound {
    let a = x.len() as f64;
    mixing(
        g.edges_within(x),
        d as f64 * a * a / (2.0 * g.n() as f64),
        lambda * a,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::complete;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_cases() {
        let full = dgt_graph(3, 4).unwrap();
        assert_eq!(full.graph, complete(9));
        let g = dgt_graph(3, 2).unwrap();
        assert_eq!(g.graph.n(), 9);
        assert!((0..9).all(|v| g.graph.degree(v) == 4));
        let g = dgt_graph(5, 3).unwrap();
        assert!((0..25).all(|v| g.graph.degree(v) == 12));
        assert!(dgt_graph(6, 2).is_err());
        assert!(dgt_graph(5, 7).is_err());
        assert!(dgt_graph(5, 0).is_err());
    }

    #[test]
    fn regular_with_exact_edge_count() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            for k in 1..=q + 1 {
                let d = dgt_graph(q, k).unwrap();
                let n = q * q;
                assert!((0..n).all(|v| d.graph.degree(v) == d.degree()));
                assert_eq!(d.graph.edge_count() * 2, n * d.degree());
            }
        }
    }

    #[test]
    fn spectra() {
        let r = spectrum_check(&dgt_graph(3, 2).unwrap()).unwrap();
        assert!(r.passes());
        assert!((r.eigenvalues[0] - 4.0).abs() < 1e-6);
        let r = spectrum_check(&dgt_graph(5, 3).unwrap()).unwrap();
        assert!(r.passes());
        assert!((r.lambda - 3.0).abs() < 1e-6);
        let r = spectrum_check(&dgt_graph(3, 4).unwrap()).unwrap();
        assert!(r.passes());
        assert!((r.lambda - 1.0).abs() < 1e-6);
    }

    #[test]
    fn mixing_bounds_hold() {
        let d = dgt_graph(5, 3).unwrap();
        let lambda = spectrum_check(&d).unwrap().lambda;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut vs: Vec<usize> = (0..25).collect();
        for _ in 0..50 {
            vs.shuffle(&mut rng);
            let x = VertexSet::from_iter(25, vs[..12].iter().copied());
            let y = VertexSet::from_iter(25, vs[12..].iter().copied());
            assert!(edge_distribution_check(&d.graph, d.degree(), lambda, &x, &y).holds);
            assert!(edge_distribution_check_single(&d.graph, d.degree(), lambda, &x).holds);
        }
        let v = VertexSet::from_iter(25, [0]);
        let nb = d.graph.neighbor_set(0);
        let r = edge_distribution_check(&d.graph, d.degree(), lambda, &v, &nb);
        assert_eq!(r.edges, 12);
        assert!(r.holds);
    }
}
