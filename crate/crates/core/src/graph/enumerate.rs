//! Exhaustive enumeration of small graphs up to isomorphism.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::{CanonicalForm, Graph};
use crate::error::{Error, Result};

/// Largest vertex count the enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 6;

static CLASSES: [OnceLock<Vec<Graph>>; MAX_ENUMERATION_ORDER + 1] =
    [const { OnceLock::new() }; MAX_ENUMERATION_ORDER + 1];

/// One representative per isomorphism class of graphs on exactly `n` vertices,
/// ordered by canonical code.
pub fn graphs_on(n: usize) -> Result<&'static [Graph]> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::size("enumeration order", n, MAX_ENUMERATION_ORDER));
    }
    Ok(CLASSES[n].get_or_init(|| enumerate_exact(n)))
}

/// Representatives of all graphs with at most `r` vertices (including the
/// empty graph on zero vertices), smallest orders first.
pub fn graphs_up_to(r: usize) -> Result<Vec<&'static Graph>> {
    let mut out = Vec::new();
    for n in 0..=r {
        out.extend(graphs_on(n)?.iter());
    }
    Ok(out)
}

fn enumerate_exact(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut classes: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        let mut masks = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
            }
        }
        let g = Graph::from_masks(&masks);
        let cf = g.canonical_form().expect("n <= 6");
        classes.entry(cf).or_insert(g);
    }
    classes.into_values().collect()
}

/// Deduplicates graphs up to isomorphism, keeping the first representative.
pub fn dedup_isomorphic(graphs: Vec<Graph>) -> Result<Vec<Graph>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert(g.canonical_form()?) {
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=6).map(|n| graphs_on(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(graphs_on(7).is_err());
    }

    #[test]
    fn up_to_four_has_eighteen() {
        assert_eq!(graphs_up_to(4).unwrap().len(), 1 + 1 + 2 + 4 + 11);
    }
}
