//! Exact ground truth: edit distance, homomorphism edit distance, `F_r`,
//! `Ψ_F`, `r`-partite distance, minimal forbidden families and packings.
//!
//! Everything here is exponential by design and guarded by [`Caps`].

pub mod coloring;
pub mod distance;
pub mod embed;
pub mod family;
pub mod hitting;
pub mod hom_distance;
pub mod packing;
pub mod partite;
pub mod restriction;

pub use coloring::{chromatic_number, is_colorable, is_edge_critical};
pub use distance::{
    edit_distance_bruteforce, edit_distance_exact, edit_distance_exact_with, DistanceResult,
};
pub use embed::{find_embedding, find_embedding_in_classes, find_homomorphism};
pub use family::{ForbiddenFamily, NamedFamily};
pub use hom_distance::{
    hom_edit_distance_bruteforce, hom_edit_distance_exact, hom_edit_distance_exact_with,
    HomDistance,
};
pub use packing::packing_number_exact;
pub use partite::{r_partite_distance_bruteforce, r_partite_distance_exact};
pub use restriction::{family_restriction, minimal_forbidden_family, psi};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size limits for the exponential oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest pattern order for subgraph and homomorphism searches.
    pub pattern: usize,
    /// Host order for families with several members.
    pub exact_n: usize,
    /// Host order when the family has a single minimal member.
    pub single_pattern_n: usize,
    /// Host order for the bipartition sweep used with odd cycles.
    pub odd_cycle_n: usize,
    /// Order of the weighted complete graph in the homomorphism distance.
    pub hom_k: usize,
    /// Distinct forbidden copies collected before giving up.
    pub copy_limit: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            pattern: 8,
            exact_n: 10,
            single_pattern_n: 16,
            odd_cycle_n: 22,
            hom_k: 8,
            copy_limit: 200_000,
        }
    }
}

/// Subgraph search with the pattern-order cap enforced.
pub fn contains_copy(g: &Graph, f: &Graph, caps: &Caps) -> Result<Option<Vec<usize>>> {
    if f.n() > caps.pattern {
        return Err(Error::size("pattern vertex count", f.n(), caps.pattern));
    }
    Ok(find_embedding(g, f))
}

/// Homomorphism search with the pattern-order cap enforced.
pub fn hom_exists(f: &Graph, k: &Graph, caps: &Caps) -> Result<Option<Vec<usize>>> {
    if f.n() > caps.pattern {
        return Err(Error::size("pattern vertex count", f.n(), caps.pattern));
    }
    Ok(find_homomorphism(f, k))
}

/// Edge index over the lexicographic edge list of `g` (at most 128 edges).
pub(crate) struct EdgeIndex {
    n: usize,
    pub(crate) edges: Vec<(usize, usize)>,
    slot: Vec<u8>,
}

impl EdgeIndex {
    pub(crate) fn new(g: &Graph) -> Result<Self> {
        let edges = g.edges();
        if edges.len() > 128 {
            return Err(Error::size("edge count", edges.len(), 128));
        }
        let n = g.n();
        let mut slot = vec![u8::MAX; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            slot[u * n + v] = i as u8;
            slot[v * n + u] = i as u8;
        }
        Ok(EdgeIndex { n, edges, slot })
    }

    pub(crate) fn get(&self, u: usize, v: usize) -> Option<usize> {
        let s = self.slot[u * self.n + v];
        (s != u8::MAX).then_some(s as usize)
    }

    pub(crate) fn edges_of(&self, mask: u128) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            out.push(self.edges[m.trailing_zeros() as usize]);
            m &= m - 1;
        }
        out
    }

    /// Union of copy masks of every pattern in `g`.
    pub(crate) fn copy_sets(
        &self,
        g: &Graph,
        patterns: &[Graph],
        caps: &Caps,
    ) -> Result<Vec<u128>> {
        let mut sets = Vec::new();
        for p in patterns {
            if p.n() > caps.pattern {
                return Err(Error::size("pattern vertex count", p.n(), caps.pattern));
            }
            let idx = |u: usize, v: usize| self.get(u, v);
            let found =
                embed::copy_masks(g, p, &idx, caps.copy_limit.saturating_sub(sets.len())).ok_or(
                    Error::size("forbidden copy count", caps.copy_limit + 1, caps.copy_limit),
                )?;
            sets.extend(found);
        }
        Ok(sets)
    }
}
