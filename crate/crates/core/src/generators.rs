//! Random instances with controlled structure.

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::construct::gnp;
use crate::graph::{Graph, GraphBuilder, WeightedCompleteGraph};
use crate::rational::Rational;

/// A graph with known vertex classes.
#[derive(Clone, Debug)]
pub struct Planted {
    pub graph: Graph,
    /// `class[v]` is the planted class of vertex `v`.
    pub class: Vec<usize>,
}

/// Blow-up of a weighted pattern: class `i` is `size` consecutive vertices,
/// each class is independent, and classes `i ≠ j` span exactly
/// `w(i,j)·size²` edges chosen uniformly.
pub fn planted_blowup<R: Rng + ?Sized>(
    pattern: &WeightedCompleteGraph,
    size: usize,
    rng: &mut R,
) -> Result<Planted> {
    let k = pattern.k();
    let n = k * size;
    let cells = (size * size) as i128;
    let mut b = GraphBuilder::new(n);
    for (i, j, w) in pattern.pairs() {
        let count = w * Rational::from_integer(cells);
        if !count.is_integer() {
            return Err(Error::precondition(format!(
                "density {w} times {cells} is not an integer"
            )));
        }
        for cell in sample(rng, size * size, *count.numer() as usize) {
            b.add_edge(i * size + cell / size, j * size + cell % size)?;
        }
    }
    Ok(Planted {
        graph: b.build(),
        class: (0..n).map(|v| v / size).collect(),
    })
}

/// Random graph on `n` vertices with minimum degree at least `floor`: the
/// complement of `G(n, p_missing)`, resampled until the floor holds.
pub fn min_degree_sample<R: Rng + ?Sized>(
    n: usize,
    p_missing: f64,
    floor: usize,
    max_attempts: usize,
    rng: &mut R,
) -> Result<Graph> {
    if n > 0 && floor >= n {
        return Err(Error::precondition(format!(
            "minimum degree {floor} is impossible on {n} vertices"
        )));
    }
    for _ in 0..max_attempts {
        let g = gnp(n, p_missing, rng).complement();
        if n == 0 || g.min_degree() >= floor {
            return Ok(g);
        }
    }
    Err(Error::Contract(format!(
        "no sample met minimum degree {floor} in {max_attempts} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;
    use crate::rational::ratio;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn planted_counts_are_exact() {
        let w = WeightedCompleteGraph::from_weights(3, vec![ratio(1, 2), ratio(1, 4), ratio(1, 1)])
            .unwrap();
        let p = planted_blowup(&w, 8, &mut ChaCha8Rng::seed_from_u64(5)).unwrap();
        let class = |i: usize| VertexSet::from_iter(24, (0..24).filter(|&v| p.class[v] == i));
        for (i, j, x) in w.pairs() {
            assert_eq!(p.graph.edge_density(&class(i), &class(j)).unwrap(), x);
        }
        for i in 0..3 {
            assert_eq!(p.graph.edges_within(&class(i)), 0);
        }
        let bad = WeightedCompleteGraph::from_weights(2, vec![ratio(1, 3)]).unwrap();
        assert!(planted_blowup(&bad, 4, &mut ChaCha8Rng::seed_from_u64(5)).is_err());
    }

    #[test]
    fn min_degree_floor_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let g = min_degree_sample(12, 0.1, 9, 10_000, &mut rng).unwrap();
        assert!(g.min_degree() >= 9);
        assert!(min_degree_sample(8, 0.1, 8, 10, &mut rng).is_err());
    }
}
