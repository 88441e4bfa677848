//! Largest collection of pairwise edge-disjoint forbidden copies.

use super::family::{ForbiddenFamily, NamedFamily};
use super::{Caps, EdgeIndex};
use crate::error::{Error, Result};
use crate::graph::construct::cycle;
use crate::graph::Graph;

pub const PACKING_CAP: usize = 8;

pub fn packing_number_exact(g: &Graph, fam: &ForbiddenFamily) -> Result<usize> {
    if g.n() > PACKING_CAP {
        return Err(Error::size("vertex count", g.n(), PACKING_CAP));
    }
    let patterns = match fam {
        ForbiddenFamily::Named(NamedFamily::OddCycles) => {
            (3..=g.n()).step_by(2).map(cycle).collect()
        }
        _ => fam.finite_members().expect("finite family"),
    };
    let index = EdgeIndex::new(g)?;
    let mut sets = index.copy_sets(g, &patterns, &Caps::default())?;
    // a copy containing another copy can always be swapped for the smaller one
    sets.sort_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    let mut minimal: Vec<u128> = Vec::new();
    for s in sets {
        if !minimal.iter().any(|&m| m & !s == 0) {
            minimal.push(s);
        }
    }
    let mut best = 0;
    pack(&minimal, 0, 0, &mut best);
    Ok(best)
}

fn pack(sets: &[u128], used: u128, count: usize, best: &mut usize) {
    *best = (*best).max(count);
    let live: Vec<u128> = sets.iter().copied().filter(|&s| s & used == 0).collect();
    let Some(&first) = live.first() else { return };
    // every packed set needs at least `min_size` of the remaining edges
    let free = live.iter().fold(0u128, |a, &s| a | s);
    let min_size = live.iter().map(|s| s.count_ones()).min().unwrap();
    if count + (free.count_ones() / min_size) as usize <= *best {
        return;
    }
    // branch on the lowest free edge e of `first`: some set through e is
    // used, or e is never used
    let e = first.trailing_zeros();
    let bit = 1u128 << e;
    for &s in live.iter().filter(|&&s| s & bit != 0) {
        pack(&live, used | s, count + 1, best);
    }
    let rest: Vec<u128> = live.into_iter().filter(|&s| s & bit == 0).collect();
    pack(&rest, used, count, best);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use crate::oracles::distance::edit_distance_exact;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_values() {
        let tri = ForbiddenFamily::explicit(vec![complete(3)]).unwrap();
        assert_eq!(packing_number_exact(&complete(4), &tri).unwrap(), 1);
        let two = disjoint_copies(&complete(3), 2).unwrap();
        assert_eq!(packing_number_exact(&two, &tri).unwrap(), 2);
        // K7 decomposes into 7 edge-disjoint triangles (Fano plane)
        assert_eq!(packing_number_exact(&complete(7), &tri).unwrap(), 7);
        assert_eq!(
            packing_number_exact(&complete(5), &ForbiddenFamily::odd_cycles()).unwrap(),
            2
        );
        assert!(packing_number_exact(&complete(9), &tri).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn packing_below_distance(n in 3usize..=8, seed in any::<u64>(), which in 0usize..3) {
            let g = gnp(n, 0.6, &mut ChaCha8Rng::seed_from_u64(seed));
            let fam = match which {
                0 => ForbiddenFamily::explicit(vec![complete(3)]).unwrap(),
                1 => ForbiddenFamily::explicit(vec![cycle(4), complete(4)]).unwrap(),
                _ => ForbiddenFamily::odd_cycles(),
            };
            prop_assert!(packing_number_exact(&g, &fam).unwrap() <= edit_distance_exact(&g, &fam).unwrap().raw);
        }
    }
}
