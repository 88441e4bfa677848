//! The reduced weighted graph of a partition and class-constrained embedding.

use super::partition::Equipartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, WeightedCompleteGraph};
use crate::oracles::find_embedding_in_classes;

/// `w(i, j) = d(V_i, V_j)`, exactly.
pub fn reduced_weighted_graph(g: &Graph, a: &Equipartition) -> Result<WeightedCompleteGraph> {
    if a.order() < 2 {
        return Err(Error::precondition(
            "the partition needs at least two classes",
        ));
    }
    if a.n() != g.n() {
        return Err(Error::precondition("partition and graph disagree on n"));
    }
    let sets = a.class_sets();
    WeightedCompleteGraph::from_fn(a.order(), |i, j| {
        g.edge_density(&sets[i], &sets[j])
            .expect("classes are nonempty and disjoint")
    })
}

/// A copy of `f` in `g` with vertex `v` of `f` placed in `classes[phi[v]]`.
pub fn embedding_search(
    g: &Graph,
    classes: &[VertexSet],
    f: &Graph,
    phi: &[usize],
) -> Result<Option<Vec<usize>>> {
    const PATTERN_CAP: usize = 8;
    if f.n() > PATTERN_CAP {
        return Err(Error::size("pattern order", f.n(), PATTERN_CAP));
    }
    if phi.len() != f.n() || phi.iter().any(|&c| c >= classes.len()) {
        return Err(Error::precondition(
            "φ must send every pattern vertex to a class",
        ));
    }
    let masks: Vec<Vec<u64>> = classes.iter().map(|c| c.words().to_vec()).collect();
    Ok(find_embedding_in_classes(g, f, &masks, phi))
}
