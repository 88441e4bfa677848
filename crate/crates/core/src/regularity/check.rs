//! Verifier for pairs of partitions, kept independent of the construction:
//! densities come from a direct pair loop rather than row popcounts, and
//! nothing here reads the construction's diagnostics.
//!
//! For outer order `k` and `l` inner classes per outer class it checks
//! 1. for every outer pair, at most `E(k)·l²` inner pairs fail to be
//!    `E(k)`-regular;
//! 2. at most `E(0)·C(k,2)` outer pairs are bad, where a pair is bad when
//!    more than `E(0)·l²` of its inner pairs have density at distance at
//!    least `E(0)` from the outer density.

use num_traits::Signed;

use super::pair::is_regular;
use super::partition::RefinedPartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;
use crate::rational::{ratio, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub k: usize,
    pub l: usize,
    /// Outer pairs `(i, i')` with too many irregular inner pairs, and the count.
    pub regularity_failures: Vec<(usize, usize, usize)>,
    pub bad_outer_pairs: Vec<(usize, usize)>,
    pub allowed_bad: Rational,
    pub passes: bool,
}

pub fn check_pair_of_partitions(
    g: &Graph,
    p: &RefinedPartition,
    e0: Rational,
    ek: Rational,
) -> Result<CheckReport> {
    let n = g.n();
    if p.outer.n() != n {
        return Err(Error::precondition("partition and graph disagree on n"));
    }
    let (k, l) = (p.outer.order(), p.l);
    let cell = |v: usize| p.outer.class_of(v) * l + p.inner[v];
    let kl = k * l;
    let mut size = vec![0i128; kl];
    for v in 0..n {
        size[cell(v)] += 1;
    }
    let mut count = vec![vec![0i128; kl]; kl];
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                let (x, y) = (cell(u), cell(v));
                count[x][y] += 1;
                if x != y {
                    count[y][x] += 1;
                }
            }
        }
    }
    let inner_density = |x: usize, y: usize| ratio(count[x][y], size[x] * size[y]);
    let outer_density = |i: usize, j: usize| {
        let (mut e, mut s) = (0i128, 0i128);
        for a in 0..l {
            for b in 0..l {
                e += count[i * l + a][j * l + b];
                s += size[i * l + a] * size[j * l + b];
            }
        }
        ratio(e, s)
    };

    let mut sets = vec![VertexSet::empty(n); kl];
    for v in 0..n {
        sets[cell(v)].insert(v);
    }
    let outer_pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .collect();
    let l2 = ratio((l * l) as i128, 1);

    let irregular = par::map(&outer_pairs, |&(i, j)| -> Result<usize> {
        let mut bad = 0;
        for a in 0..l {
            for b in 0..l {
                if !is_regular(g, &sets[i * l + a], &sets[j * l + b], ek)? {
                    bad += 1;
                }
            }
        }
        Ok(bad)
    });
    let mut regularity_failures = Vec::new();
    for (&(i, j), bad) in outer_pairs.iter().zip(irregular) {
        let bad = bad?;
        if ratio(bad as i128, 1) > ek * l2 {
            regularity_failures.push((i, j, bad));
        }
    }

    let mut bad_outer_pairs = Vec::new();
    for &(i, j) in &outer_pairs {
        let d = outer_density(i, j);
        let far = (0..l)
            .flat_map(|a| (0..l).map(move |b| (a, b)))
            .filter(|&(a, b)| (inner_density(i * l + a, j * l + b) - d).abs() >= e0)
            .count();
        if ratio(far as i128, 1) > e0 * l2 {
            bad_outer_pairs.push((i, j));
        }
    }
    let allowed_bad = e0 * ratio((k * k.saturating_sub(1) / 2) as i128, 1);
    let passes =
        regularity_failures.is_empty() && ratio(bad_outer_pairs.len() as i128, 1) <= allowed_bad;
    Ok(CheckReport {
        k,
        l,
        regularity_failures,
        bad_outer_pairs,
        allowed_bad,
        passes,
    })
}
