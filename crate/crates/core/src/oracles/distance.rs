//! Minimum number of edge deletions that make a graph free of a family.

use super::coloring::chromatic_number;
use super::family::{ForbiddenFamily, NamedFamily};
use super::hitting::HittingInstance;
use super::partite::r_partite_distance_exact;
use super::{Caps, EdgeIndex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub n: usize,
    /// Number of deleted edges.
    pub raw: usize,
    /// `raw / n²` (0 for the empty vertex set).
    pub normalized: Rational,
    /// Deleted edges, lexicographically smallest among optimal sets.
    pub witness: Vec<(usize, usize)>,
    /// A vertex partition certifying the optimum, when the route has one.
    pub partition: Option<Vec<usize>>,
}

impl DistanceResult {
    pub(crate) fn new(
        n: usize,
        witness: Vec<(usize, usize)>,
        partition: Option<Vec<usize>>,
    ) -> Self {
        let raw = witness.len();
        let normalized = if n == 0 {
            ratio(0, 1)
        } else {
            ratio(raw as i128, (n * n) as i128)
        };
        DistanceResult {
            n,
            raw,
            normalized,
            witness,
            partition,
        }
    }
}

pub fn edit_distance_exact(g: &Graph, fam: &ForbiddenFamily) -> Result<DistanceResult> {
    edit_distance_exact_with(g, fam, &Caps::default())
}

pub fn edit_distance_exact_with(
    g: &Graph,
    fam: &ForbiddenFamily,
    caps: &Caps,
) -> Result<DistanceResult> {
    let n = g.n();
    if fam.forbids_edgeless(n) {
        return Err(Error::Infeasible(
            "every graph on this vertex set contains a forbidden member".into(),
        ));
    }
    if g.edge_count() == 0 {
        return Ok(DistanceResult::new(n, vec![], None));
    }
    if fam.forbids_single_edge() {
        return Ok(DistanceResult::new(n, g.edges(), None));
    }
    match fam {
        ForbiddenFamily::Named(NamedFamily::OddCycles) => {
            if n > caps.odd_cycle_n {
                return Err(Error::size("vertex count", n, caps.odd_cycle_n));
            }
            Ok(bipartization(g))
        }
        _ => {
            let members = fam.finite_members().expect("finite family");
            let cap = if members.len() == 1 {
                caps.single_pattern_n
            } else {
                caps.exact_n
            };
            if n > cap {
                return Err(Error::size("vertex count", n, cap));
            }
            let index = EdgeIndex::new(g)?;
            let sets = index.copy_sets(g, &members, caps)?;
            let inst = HittingInstance::new(vec![1; index.edges.len()], sets);
            let sol = inst
                .solve_lex_min_below(partite_upper_bound(g, &members))
                .expect("deleting every edge is feasible");
            Ok(DistanceResult::new(n, index.edges_of(sol.chosen), None))
        }
    }
}

/// Exclusive upper bound from `E'_{c-1}(G)` when every member has chromatic
/// number at least `c ≥ 3`: an `(c-1)`-partite graph contains no member.
fn partite_upper_bound(g: &Graph, members: &[Graph]) -> u64 {
    let c = members.iter().map(chromatic_number).min().unwrap_or(0);
    if c < 3 {
        return u64::MAX;
    }
    match r_partite_distance_exact(g, c - 1) {
        Ok(d) => d.raw as u64 + 1,
        Err(_) => u64::MAX,
    }
}

/// Sweeps all bipartitions with vertex 0 on side 0. Every optimal deletion
/// set is the set of edges inside the sides of some bipartition, so the
/// lexicographic tie-break can be taken over this sweep.
fn bipartization(g: &Graph) -> DistanceResult {
    let n = g.n();
    let masks: Vec<u64> = g.masks();
    let mut best_cost = usize::MAX;
    let mut best: Option<(Vec<(usize, usize)>, u64)> = None;
    for side in 0u64..(1u64 << (n - 1)) {
        let side = side << 1;
        let mut inside2 = 0usize;
        for (v, &m) in masks.iter().enumerate() {
            let same = if side >> v & 1 == 1 {
                m & side
            } else {
                m & !side
            };
            inside2 += same.count_ones() as usize;
        }
        let cost = inside2 / 2;
        if cost > best_cost {
            continue;
        }
        let edges = inside_edges(g, side);
        if cost < best_cost || best.as_ref().is_some_and(|(b, _)| edges < *b) {
            best_cost = cost;
            best = Some((edges, side));
        }
    }
    let (witness, side) = best.expect("at least one bipartition");
    let partition = (0..n).map(|v| (side >> v & 1) as usize).collect();
    DistanceResult::new(n, witness, Some(partition))
}

fn inside_edges(g: &Graph, side: u64) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| (side >> u & 1) == (side >> v & 1))
        .collect()
}

/// Full enumeration of edge subsets, smallest first; the verification oracle
/// for the branch-and-bound. At most 20 edges.
pub fn edit_distance_bruteforce(g: &Graph, fam: &ForbiddenFamily) -> Result<DistanceResult> {
    let edges = g.edges();
    if edges.len() > 20 {
        return Err(Error::size("edge count", edges.len(), 20));
    }
    if fam.forbids_edgeless(g.n()) {
        return Err(Error::Infeasible(
            "every graph on this vertex set contains a forbidden member".into(),
        ));
    }
    let m = edges.len();
    let mut subsets: Vec<u32> = (0..1u32 << m).collect();
    subsets.sort_by_key(|&s| s.count_ones());
    let mut best: Option<Vec<(usize, usize)>> = None;
    for s in subsets {
        if best
            .as_ref()
            .is_some_and(|b| (s.count_ones() as usize) > b.len())
        {
            break;
        }
        let del: Vec<(usize, usize)> = (0..m)
            .filter(|&i| s >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        if fam.is_free(&g.without_edges(&del))? && best.as_ref().is_none_or(|b| del < *b) {
            best = Some(del);
        }
    }
    Ok(DistanceResult::new(
        g.n(),
        best.expect("deleting every edge is feasible"),
        None,
    ))
}
