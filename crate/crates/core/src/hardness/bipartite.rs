//! Edit distance estimate for families with a bipartite member.
//!
//! Every graph with more than `ex(n; H)` edges contains `H`, so making `G`
//! free of the family keeps at most `ex(n; H)` edges. Reporting `e(G)` is
//! therefore off by at most the Kővári–Sós–Turán bound for the smallest
//! complete bipartite graph containing `H`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::ForbiddenFamily;
use crate::rational::{int, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteEstimate {
    /// `e(G)`, the estimate for the number of deletions.
    pub edges: usize,
    /// `e(G) / n²`.
    pub normalized: Rational,
    /// Upper bound on `e(G) − E'_F(G)`: `min(e(G), ⌊KST bound⌋)`.
    pub error: usize,
    /// The raw KST bound before clamping.
    pub kst: f64,
    /// Sides `(s, t)`, `s ≤ t`, of the complete bipartite graph used.
    pub sides: (usize, usize),
    /// Index of the family member that gave the best bound.
    pub member: usize,
    /// The bound is no better than deleting nothing.
    pub vacuous: bool,
    /// `n^{2−δ}`, the error scale the asymptotic argument works with.
    pub n_pow: f64,
}

/// `ex(n; K_{s,t}) ≤ ½(t−1)^{1/s} n^{2−1/s} + ½(s−1)n` for `1 ≤ s ≤ t`.
pub fn kst_bound(n: usize, s: usize, t: usize) -> f64 {
    let (s, t) = (s.min(t), s.max(t));
    assert!(s >= 1, "the bound needs both sides nonempty");
    let n = n as f64;
    let sf = s as f64;
    0.5 * ((t - 1) as f64).powf(1.0 / sf) * n.powf(2.0 - 1.0 / sf) + 0.5 * (sf - 1.0) * n
}

/// Side sizes of every proper 2-colouring of a bipartite `h`, as `(s, t)`
/// with `s ≤ t`.
fn side_options(h: &Graph) -> Vec<(usize, usize)> {
    let colours = h.bipartition().expect("bipartite member");
    let comps = h.components();
    let counts: Vec<(usize, usize)> = comps
        .iter()
        .map(|c| {
            let zeros = c.iter().filter(|&&v| colours[v] == 0).count();
            (zeros, c.len() - zeros)
        })
        .collect();
    let mut out = Vec::new();
    for flips in 0u64..1 << counts.len() {
        let (mut a, mut b) = (0, 0);
        for (i, &(x, y)) in counts.iter().enumerate() {
            if flips >> i & 1 == 0 {
                (a, b) = (a + x, b + y);
            } else {
                (a, b) = (a + y, b + x);
            }
        }
        out.push((a.min(b), a.max(b)));
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub fn bipartite_estimate(
    g: &Graph,
    fam: &ForbiddenFamily,
    delta: Rational,
) -> Result<BipartiteEstimate> {
    let members = fam.finite_members().unwrap_or_default();
    let n = g.n();
    let mut best: Option<(f64, (usize, usize), usize)> = None;
    for (i, h) in members.iter().enumerate() {
        if h.edge_count() == 0 || !h.is_bipartite() {
            continue;
        }
        for sides in side_options(h) {
            if sides.0 == 0 {
                continue;
            }
            let b = kst_bound(n, sides.0, sides.1);
            if best.is_none_or(|(x, _, _)| b < x) {
                best = Some((b, sides, i));
            }
        }
    }
    let (kst, sides, member) = best
        .ok_or_else(|| Error::Contract("the family has no bipartite member with an edge".into()))?;
    let edges = g.edge_count();
    let floor = kst.floor() as usize;
    let n2 = (n * n).max(1) as i128;
    Ok(BipartiteEstimate {
        edges,
        normalized: int(edges as i128) / int(n2),
        error: floor.min(edges),
        kst,
        sides,
        member,
        vacuous: floor >= edges,
        n_pow: (n as f64).powf(2.0 - crate::rational::to_f64(&delta)),
    })
}
