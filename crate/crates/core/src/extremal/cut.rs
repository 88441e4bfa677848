//! Large `r`-cuts: greedy extension of a partial partition and single-vertex
//! local search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, Rational};

/// Edges whose endpoints sit in different parts.
pub fn crossing_edges(g: &Graph, part: &[usize]) -> usize {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| part[u] != part[v])
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedCut {
    pub part: Vec<usize>,
    pub crossing: usize,
    /// Crossing edges among the initially placed vertices.
    pub partial_crossing: usize,
    /// Edges with at least one initially unplaced endpoint.
    pub free_edges: usize,
    /// `partial_crossing + (r−1)/r · free_edges`.
    pub guarantee: Rational,
}

/// Extends the partial parts to a partition of all vertices.
///
/// Unplaced vertices are taken by descending degree and each goes to the
/// part holding the fewest of its already placed neighbours, lowest index on
/// ties. Every free edge is decided when its later endpoint is placed, and
/// that choice cuts at least a `(r−1)/r` share of them, which is the
/// conditional-expectation bound.
pub fn augment_cut(g: &Graph, partial: &[Vec<usize>]) -> Result<AugmentedCut> {
    let r = partial.len();
    if r < 2 {
        return Err(Error::precondition("need at least two parts"));
    }
    let n = g.n();
    let mut part = vec![usize::MAX; n];
    for (i, p) in partial.iter().enumerate() {
        for &v in p {
            if v >= n {
                return Err(Error::precondition(format!("vertex {v} outside 0..{n}")));
            }
            if part[v] != usize::MAX {
                return Err(Error::precondition(format!("vertex {v} is in two parts")));
            }
            part[v] = i;
        }
    }
    let placed = |v: usize, part: &[usize]| part[v] != usize::MAX;
    let edges = g.edges();
    let partial_crossing = edges
        .iter()
        .filter(|&&(u, v)| placed(u, &part) && placed(v, &part) && part[u] != part[v])
        .count();
    let free_edges = edges
        .iter()
        .filter(|&&(u, v)| !placed(u, &part) || !placed(v, &part))
        .count();
    let mut todo: Vec<usize> = (0..n).filter(|&v| !placed(v, &part)).collect();
    todo.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut counts = vec![0usize; r];
    for v in todo {
        counts.iter_mut().for_each(|c| *c = 0);
        for u in g.neighbors(v) {
            if part[u] != usize::MAX {
                counts[part[u]] += 1;
            }
        }
        let best = (0..r).min_by_key(|&i| (counts[i], i)).expect("r ≥ 2");
        part[v] = best;
    }
    Ok(AugmentedCut {
        crossing: crossing_edges(g, &part),
        part,
        partial_crossing,
        free_edges,
        guarantee: ratio(partial_crossing as i128, 1)
            + ratio(((r - 1) * free_edges) as i128, r as i128),
    })
}

/// Independent random starts taken by [`local_search_r_cut`].
pub const RESTARTS: u64 = 16;

/// Best of [`RESTARTS`] local searches. Each starts from a random partition
/// and moves any vertex with more neighbours in its own part than in some
/// other part to the part where it has the fewest. A move cuts strictly more
/// edges, so every search ends at a local optimum.
pub fn local_search_r_cut(g: &Graph, r: usize, seed: u64) -> Result<Vec<usize>> {
    if r < 2 {
        return Err(Error::precondition("need r ≥ 2"));
    }
    let best = (0..RESTARTS)
        .map(|s| descend(g, r, seed, s))
        .max_by_key(|p| (crossing_edges(g, p), std::cmp::Reverse(p.clone())))
        .expect("at least one restart");
    Ok(best)
}

fn descend(g: &Graph, r: usize, seed: u64, stream: u64) -> Vec<usize> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut part: Vec<usize> = (0..n).map(|_| rng.gen_range(0..r)).collect();
    let mut counts = vec![0usize; r];
    loop {
        let mut moved = false;
        for v in 0..n {
            counts.iter_mut().for_each(|c| *c = 0);
            for u in g.neighbors(v) {
                counts[part[u]] += 1;
            }
            let best = (0..r).min_by_key(|&i| (counts[i], i)).expect("r ≥ 2");
            if counts[best] < counts[part[v]] {
                part[v] = best;
                moved = true;
            }
        }
        if !moved {
            return part;
        }
    }
}

/// No vertex has more neighbours in its own part than in any other part.
pub fn is_local_optimum(g: &Graph, part: &[usize], r: usize) -> bool {
    (0..g.n()).all(|v| {
        let mut counts = vec![0usize; r];
        for u in g.neighbors(v) {
            counts[part[u]] += 1;
        }
        counts.iter().all(|&c| counts[part[v]] <= c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use crate::oracles::r_partite_distance_exact;
    use proptest::prelude::*;

    #[test]
    fn complete_graph_from_scratch() {
        let cut = augment_cut(&complete(4), &[vec![], vec![]]).unwrap();
        assert!(cut.crossing >= 3);
        assert_eq!(cut.guarantee, ratio(3, 1));
    }

    #[test]
    fn own_bipartition_cuts_everything() {
        let g = complete_bipartite(3, 4);
        let cut = augment_cut(&g, &[vec![0, 1, 2], vec![3, 4, 5, 6]]).unwrap();
        assert_eq!(cut.crossing, 12);
        assert_eq!(cut.free_edges, 0);
    }

    #[test]
    fn five_cycle() {
        let cut = augment_cut(&cycle(5), &[vec![], vec![]]).unwrap();
        assert!(cut.crossing >= 3);
        assert_eq!(cut.crossing, 4);
    }

    #[test]
    fn overlapping_parts_are_rejected() {
        assert!(augment_cut(&complete(4), &[vec![0], vec![0]]).is_err());
        assert!(augment_cut(&complete(4), &[vec![0]]).is_err());
        assert!(augment_cut(&complete(4), &[vec![9], vec![]]).is_err());
    }

    #[test]
    fn local_search_on_bipartite_and_triangle() {
        for seed in 0..20 {
            let g = cycle(8);
            let p = local_search_r_cut(&g, 2, seed).unwrap();
            assert!(is_local_optimum(&g, &p, 2));
            let p = local_search_r_cut(&complete(3), 2, seed).unwrap();
            assert_eq!(crossing_edges(&complete(3), &p), 2);
        }
    }

    #[test]
    fn local_search_is_close_to_exact() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for i in 0..50 {
            let n = 6 + i % 7;
            let g = gnp(n, 0.5, &mut rng);
            let r = 2 + i % 2;
            let exact = r_partite_distance_exact(&g, r).unwrap().raw;
            let p = local_search_r_cut(&g, r, i as u64).unwrap();
            let uncut = g.edge_count() - crossing_edges(&g, &p);
            assert!(
                uncut >= exact && uncut <= exact + 2,
                "n={n} r={r} {uncut} vs {exact}"
            );
        }
    }

    proptest! {
        #[test]
        fn augment_meets_its_guarantee(seed in 0u64..500, n in 2usize..14, r in 2usize..4, placed in 0usize..6) {
            let g = gnp(n, 0.5, &mut ChaCha8Rng::seed_from_u64(seed));
            let mut parts = vec![vec![]; r];
            for v in 0..placed.min(n) {
                parts[(v * 7 + seed as usize) % r].push(v);
            }
            let cut = augment_cut(&g, &parts).unwrap();
            prop_assert!(ratio(cut.crossing as i128, 1) >= cut.guarantee);
        }

        #[test]
        fn local_search_ends_at_a_local_optimum(seed in 0u64..500, n in 1usize..16, r in 2usize..4) {
            let g = gnp(n, 0.5, &mut ChaCha8Rng::seed_from_u64(seed));
            let p = local_search_r_cut(&g, r, seed).unwrap();
            prop_assert!(is_local_optimum(&g, &p, r));
        }
    }
}
