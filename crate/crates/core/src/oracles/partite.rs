//! Minimum deletions to make a graph `r`-partite, i.e. `e(G)` minus the
//! maximum `r`-cut.

use super::distance::DistanceResult;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest host order for `r = 2` and for `r ≥ 3`.
pub const BIPARTITE_CAP: usize = 24;
pub const MULTIPARTITE_CAP: usize = 16;

pub fn r_partite_distance_exact(g: &Graph, r: usize) -> Result<DistanceResult> {
    let n = g.n();
    if r == 0 {
        return Err(Error::precondition("r must be at least 1"));
    }
    if r >= n {
        return Ok(DistanceResult::new(n, vec![], Some((0..n).collect())));
    }
    let cap = if r == 2 {
        BIPARTITE_CAP
    } else {
        MULTIPARTITE_CAP
    };
    if n > cap {
        return Err(Error::size("vertex count", n, cap));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut s = PartSearch {
        g,
        r,
        order,
        part: vec![usize::MAX; n],
        // to_part[v * r + p]: neighbours of v already placed in part p
        to_part: vec![0; n * r],
        best_cost: g.edge_count() + 1,
        best: vec![],
    };
    s.go(0, 0, 0);
    let part = s.best;
    Ok(DistanceResult::new(n, inside(g, &part), Some(part)))
}

struct PartSearch<'a> {
    g: &'a Graph,
    r: usize,
    order: Vec<usize>,
    part: Vec<usize>,
    to_part: Vec<usize>,
    best_cost: usize,
    best: Vec<usize>,
}

impl PartSearch<'_> {
    fn go(&mut self, pos: usize, used: usize, cost: usize) {
        let n = self.order.len();
        if pos == n {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best = self.part.clone();
            }
            return;
        }
        let r = self.r;
        let bound: usize = self.order[pos..]
            .iter()
            .map(|&v| (0..r).map(|p| self.to_part[v * r + p]).min().unwrap())
            .sum();
        if cost + bound >= self.best_cost {
            return;
        }
        let v = self.order[pos];
        // new parts are interchangeable, so only the first unused one is tried
        let mut choices: Vec<usize> = (0..r.min(used + 1)).collect();
        choices.sort_by_key(|&p| (self.to_part[v * r + p], p));
        for p in choices {
            let add = self.to_part[v * r + p];
            self.part[v] = p;
            for u in self.g.neighbors(v) {
                self.to_part[u * r + p] += 1;
            }
            self.go(pos + 1, used.max(p + 1), cost + add);
            for u in self.g.neighbors(v) {
                self.to_part[u * r + p] -= 1;
            }
        }
        self.part[v] = usize::MAX;
    }
}

fn inside(g: &Graph, part: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .filter(|&(u, v)| part[u] == part[v])
        .collect()
}

/// Plain `r^n` enumeration; verification oracle for small inputs.
pub fn r_partite_distance_bruteforce(g: &Graph, r: usize) -> Result<usize> {
    let n = g.n();
    let states = (r as u64).checked_pow(n as u32).filter(|&s| s <= 1 << 22);
    let states = states.ok_or(Error::size("partition count exponent", n, 22))?;
    let edges = g.edges();
    let mut part = vec![0usize; n];
    let mut best = usize::MAX;
    for code in 0..states {
        let mut c = code;
        for p in part.iter_mut() {
            *p = (c % r as u64) as usize;
            c /= r as u64;
        }
        best = best.min(edges.iter().filter(|&&(u, v)| part[u] == part[v]).count());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_values() {
        assert_eq!(r_partite_distance_exact(&cycle(5), 2).unwrap().raw, 1);
        assert_eq!(r_partite_distance_exact(&complete(4), 2).unwrap().raw, 2);
        assert_eq!(r_partite_distance_exact(&complete(4), 3).unwrap().raw, 1);
        assert_eq!(r_partite_distance_exact(&complete(4), 1).unwrap().raw, 6);
        assert_eq!(r_partite_distance_exact(&petersen(), 3).unwrap().raw, 0);
        assert!(r_partite_distance_exact(&complete(17), 3).is_err());
    }

    #[test]
    fn partition_certifies_value() {
        let g = gnp(14, 0.5, &mut ChaCha8Rng::seed_from_u64(3));
        let d = r_partite_distance_exact(&g, 3).unwrap();
        let part = d.partition.unwrap();
        assert_eq!(inside(&g, &part), d.witness);
        assert!(part.iter().all(|&p| p < 3));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn agrees_with_enumeration(n in 1usize..=8, p in 0.1f64..0.95, seed in any::<u64>(), r in 2usize..=3) {
            let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(r_partite_distance_exact(&g, r).unwrap().raw, r_partite_distance_bruteforce(&g, r).unwrap());
        }
    }
}
