//! Minimum-weight deletion from a weighted complete graph so that no family
//! member maps homomorphically into what is left.
//!
//! `F → R` exactly when some quotient of `F` (identify pairwise non-adjacent
//! vertex classes) is a subgraph of `R`, so the problem is a weighted hitting
//! set over copies of the minimal quotients. Pairs of weight zero are deleted
//! for free and always belong to the witness.

use std::collections::HashSet;

use num_integer::Integer;

use super::family::{ForbiddenFamily, NamedFamily};
use super::hitting::HittingInstance;
use super::{embed, Caps, EdgeIndex};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, WeightedCompleteGraph};
use crate::rational::{ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDistance {
    pub k: usize,
    /// Total deleted weight.
    pub raw: Rational,
    /// `raw / k²`.
    pub normalized: Rational,
    /// Deleted pairs `(i, j)` with `i < j`.
    pub witness: Vec<(usize, usize)>,
}

impl HomDistance {
    fn new(w: &WeightedCompleteGraph, mut witness: Vec<(usize, usize)>) -> Self {
        witness.sort_unstable();
        let raw: Rational = witness.iter().map(|&(i, j)| w.weight(i, j)).sum();
        let k = w.k();
        let normalized = if k == 0 {
            ratio(0, 1)
        } else {
            raw / ratio((k * k) as i128, 1)
        };
        HomDistance {
            k,
            raw,
            normalized,
            witness,
        }
    }
}

pub fn hom_edit_distance_exact(
    w: &WeightedCompleteGraph,
    fam: &ForbiddenFamily,
) -> Result<HomDistance> {
    hom_edit_distance_exact_with(w, fam, &Caps::default())
}

pub fn hom_edit_distance_exact_with(
    w: &WeightedCompleteGraph,
    fam: &ForbiddenFamily,
    caps: &Caps,
) -> Result<HomDistance> {
    let k = w.k();
    let zero: Vec<(usize, usize)> = w
        .pairs()
        .filter(|(_, _, x)| *x == ratio(0, 1))
        .map(|(i, j, _)| (i, j))
        .collect();
    let support = {
        let mut b = GraphBuilder::new(k);
        for (i, j, x) in w.pairs() {
            if x > ratio(0, 1) {
                b.add_edge(i, j)?;
            }
        }
        b.build()
    };
    if fam.forbids_edgeless(k) {
        return Err(Error::Infeasible(
            "every graph on this vertex set admits a homomorphism from a member".into(),
        ));
    }
    if let ForbiddenFamily::Named(NamedFamily::OddCycles) = fam {
        if k > caps.odd_cycle_n {
            return Err(Error::size("weighted graph order", k, caps.odd_cycle_n));
        }
        let mut witness = zero;
        witness.extend(weighted_bipartization(w, &support));
        return Ok(HomDistance::new(w, witness));
    }
    if k > caps.hom_k {
        return Err(Error::size("weighted graph order", k, caps.hom_k));
    }
    let index = EdgeIndex::new(&support)?;
    let patterns = minimal_quotients(fam, caps)?;
    let sets = index.copy_sets(&support, &patterns, caps)?;
    let weights = integer_weights(w, &index.edges)?;
    let inst = HittingInstance::new(weights, sets);
    let sol = inst
        .solve_lex_min()
        .expect("deleting every pair is feasible");
    let mut witness = zero;
    witness.extend(index.edges_of(sol.chosen));
    Ok(HomDistance::new(w, witness))
}

/// Scales the listed pair weights to integers by the common denominator.
fn integer_weights(w: &WeightedCompleteGraph, pairs: &[(usize, usize)]) -> Result<Vec<u64>> {
    let lcm = pairs
        .iter()
        .fold(1i128, |acc, &(i, j)| acc.lcm(w.weight(i, j).denom()));
    pairs
        .iter()
        .map(|&(i, j)| {
            let x = w.weight(i, j);
            u64::try_from(x.numer() * (lcm / x.denom()))
                .map_err(|_| Error::precondition("weights need a common denominator below 2^64"))
        })
        .collect()
}

/// Minimum-weight bipartization of the support; ties broken by the
/// lexicographically smallest deleted pair list.
fn weighted_bipartization(w: &WeightedCompleteGraph, support: &Graph) -> Vec<(usize, usize)> {
    let k = w.k();
    if k < 2 {
        return vec![];
    }
    let pairs = support.edges();
    let weights = integer_weights(w, &pairs).expect("weights in [0,1]");
    let mut best: Option<(u64, Vec<(usize, usize)>)> = None;
    for side in 0u64..(1u64 << (k - 1)) {
        let side = side << 1;
        let mut cost = 0u64;
        for (p, &(i, j)) in pairs.iter().enumerate() {
            if (side >> i & 1) == (side >> j & 1) {
                cost += weights[p];
            }
        }
        if best.as_ref().is_some_and(|(c, _)| cost > *c) {
            continue;
        }
        let del: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(i, j)| (side >> i & 1) == (side >> j & 1))
            .collect();
        if best.as_ref().is_none_or(|(c, b)| cost < *c || del < *b) {
            best = Some((cost, del));
        }
    }
    best.expect("at least one bipartition").1
}

/// All quotients of `f` by partitions into independent sets, deduplicated.
pub fn quotients(f: &Graph) -> Result<Vec<Graph>> {
    let n = f.n();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut class = vec![0usize; n];
    fn rec(
        f: &Graph,
        v: usize,
        used: usize,
        class: &mut Vec<usize>,
        out: &mut Vec<Graph>,
        seen: &mut HashSet<crate::graph::CanonicalForm>,
    ) -> Result<()> {
        if v == f.n() {
            let mut b = GraphBuilder::new(used);
            for (a, c) in f.edges() {
                b.add_edge(class[a], class[c])?;
            }
            let q = b.build();
            if seen.insert(q.canonical_form()?) {
                out.push(q);
            }
            return Ok(());
        }
        for c in 0..=used {
            if (0..v).any(|u| class[u] == c && f.has_edge(u, v)) {
                continue;
            }
            class[v] = c;
            rec(f, v + 1, used.max(c + 1), class, out, seen)?;
        }
        Ok(())
    }
    rec(f, 0, 0, &mut class, &mut out, &mut seen)?;
    Ok(out)
}

/// Quotients of all members, keeping only those that contain no other.
fn minimal_quotients(fam: &ForbiddenFamily, caps: &Caps) -> Result<Vec<Graph>> {
    let members = fam.finite_members().expect("finite family");
    let mut all = Vec::new();
    for f in &members {
        if f.n() > caps.pattern {
            return Err(Error::size("pattern vertex count", f.n(), caps.pattern));
        }
        if matches!(fam, ForbiddenFamily::Named(NamedFamily::CliqueAtLeast(_))) {
            all.push(f.clone());
        } else {
            all.extend(quotients(f)?);
        }
    }
    let all = crate::graph::enumerate::dedup_isomorphic(all)?;
    let mut sorted = all;
    sorted.sort_by_key(|g| (g.edge_count(), g.n()));
    let mut kept: Vec<Graph> = Vec::new();
    for q in sorted {
        if kept.iter().any(|p| embed::find_embedding(&q, p).is_some()) {
            continue;
        }
        kept.push(q);
    }
    Ok(kept)
}

/// Enumerates every deletion set of the complete graph; `k ≤ 5`.
pub fn hom_edit_distance_bruteforce(
    w: &WeightedCompleteGraph,
    fam: &ForbiddenFamily,
) -> Result<Rational> {
    let k = w.k();
    if k > 5 {
        return Err(Error::size("weighted graph order", k, 5));
    }
    let pairs: Vec<(usize, usize, Rational)> = w.pairs().collect();
    let mut best: Option<Rational> = None;
    for s in 0u32..(1 << pairs.len()) {
        let cost: Rational = (0..pairs.len())
            .filter(|&p| s >> p & 1 == 1)
            .map(|p| pairs[p].2)
            .sum();
        if best.is_some_and(|b| cost >= b) {
            continue;
        }
        let kept: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&p| s >> p & 1 == 0)
            .map(|p| (pairs[p].0, pairs[p].1))
            .collect();
        if fam.is_hom_free(&Graph::from_edges(k, &kept)?)? {
            best = Some(cost);
        }
    }
    best.ok_or_else(|| Error::Infeasible("no deletion set is homomorphism-free".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use crate::oracles::distance::edit_distance_exact;
    use proptest::prelude::*;

    fn k3() -> ForbiddenFamily {
        ForbiddenFamily::explicit(vec![complete(3)]).unwrap()
    }

    fn is_hom_free_after(
        w: &WeightedCompleteGraph,
        fam: &ForbiddenFamily,
        d: &HomDistance,
    ) -> bool {
        let kept: Vec<(usize, usize)> = w
            .pairs()
            .map(|(i, j, _)| (i, j))
            .filter(|p| !d.witness.contains(p))
            .collect();
        fam.is_hom_free(&Graph::from_edges(w.k(), &kept).unwrap())
            .unwrap()
    }

    #[test]
    fn triangle_examples() {
        let ones = WeightedCompleteGraph::uniform(3, ratio(1, 1)).unwrap();
        let d = hom_edit_distance_exact(&ones, &k3()).unwrap();
        assert_eq!((d.raw, d.normalized), (ratio(1, 1), ratio(1, 9)));
        let zeros = WeightedCompleteGraph::uniform(3, ratio(0, 1)).unwrap();
        assert_eq!(
            hom_edit_distance_exact(&zeros, &k3()).unwrap().raw,
            ratio(0, 1)
        );
        let halves = WeightedCompleteGraph::uniform(3, ratio(1, 2)).unwrap();
        let d = hom_edit_distance_exact(&halves, &ForbiddenFamily::odd_cycles()).unwrap();
        assert_eq!(d.raw, ratio(1, 2));
    }

    #[test]
    fn quotient_counts() {
        // C5 collapses to C5 itself or to K3 with a pendant path folded in
        let qs = quotients(&cycle(5)).unwrap();
        assert!(qs.iter().any(|q| q.is_isomorphic(&complete(3)).unwrap()));
        assert!(qs.iter().all(|q| !q.is_bipartite()));
        assert_eq!(quotients(&complete(4)).unwrap().len(), 1);
        // P3 quotients: P3 itself and the single edge
        assert_eq!(quotients(&path(3)).unwrap().len(), 2);
    }

    #[test]
    fn unit_weights_match_unweighted_distance() {
        for k in 3..=8 {
            let ones = WeightedCompleteGraph::uniform(k, ratio(1, 1)).unwrap();
            let h = hom_edit_distance_exact(&ones, &k3()).unwrap();
            let e = edit_distance_exact(&complete(k), &k3()).unwrap();
            assert_eq!(h.raw, ratio(e.raw as i128, 1));
        }
    }

    #[test]
    fn homomorphism_free_is_stronger_than_subgraph_free() {
        // C5 is C5-subgraph-free after one deletion, but K3 receives C5,
        // so on unit weights the triangle must be broken too.
        let fam = ForbiddenFamily::single(cycle(5)).unwrap();
        let ones = WeightedCompleteGraph::uniform(3, ratio(1, 1)).unwrap();
        assert_eq!(
            hom_edit_distance_exact(&ones, &fam).unwrap().raw,
            ratio(1, 1)
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn agrees_with_enumeration(
            k in 2usize..=5,
            raw in proptest::collection::vec(0i128..=4, 10),
            which in 0usize..4,
        ) {
            let m = k * (k - 1) / 2;
            let w = WeightedCompleteGraph::from_weights(k, raw[..m].iter().map(|&x| ratio(x, 4)).collect()).unwrap();
            let fam = match which {
                0 => k3(),
                1 => ForbiddenFamily::single(cycle(5)).unwrap(),
                2 => ForbiddenFamily::explicit(vec![path(3)]).unwrap(),
                _ => ForbiddenFamily::odd_cycles(),
            };
            let d = hom_edit_distance_exact(&w, &fam).unwrap();
            prop_assert_eq!(d.raw, hom_edit_distance_bruteforce(&w, &fam).unwrap());
            prop_assert!(is_hom_free_after(&w, &fam, &d));
        }
    }
}
