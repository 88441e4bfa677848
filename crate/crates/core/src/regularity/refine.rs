//! Witness-guided refinement of an equipartition.
//!
//! Each round certifies every pair of current classes. If too many pairs are
//! irregular, every class is halved by degree into the far side of its
//! strongest irregularity witness. Halving keeps class sizes within one of
//! each other, so the result is always an equipartition.

use super::pair::{certify_or_witness, Verdict};
use super::partition::{Equipartition, RefinedPartition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::par;
use crate::rational::{ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RefineStop {
    /// At most `γ·C(k', 2)` class pairs failed certification.
    Certified,
    /// Halving again would push classes below the size floor.
    Floor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    pub classes: usize,
    pub irregular: usize,
    pub allowed: Rational,
}

#[derive(Clone, Debug)]
pub struct RefineOutcome {
    pub partition: RefinedPartition,
    pub rounds: Vec<Round>,
    pub stop: RefineStop,
}

pub fn refine_partition(
    g: &Graph,
    a: &Equipartition,
    gamma: Rational,
    floor: usize,
) -> Result<RefineOutcome> {
    if gamma <= ratio(0, 1) || gamma >= ratio(1, 1) {
        return Err(Error::precondition("γ must lie in (0, 1)"));
    }
    if a.n() != g.n() {
        return Err(Error::precondition("partition and graph disagree on n"));
    }
    let k = a.order();
    let mut inner = vec![0usize; g.n()];
    let mut l = 1usize;
    let mut rounds = Vec::new();
    loop {
        let mut members = vec![Vec::new(); k * l];
        for v in 0..g.n() {
            members[a.class_of(v) * l + inner[v]].push(v);
        }
        let sets: Vec<VertexSet> = members
            .iter()
            .map(|m| VertexSet::from_iter(g.n(), m.iter().copied()))
            .collect();
        let kk = sets.len();
        let pairs: Vec<(usize, usize)> = (0..kk)
            .flat_map(|x| (x + 1..kk).map(move |y| (x, y)))
            .collect();
        let verdicts = par::map(&pairs, |&(x, y)| {
            certify_or_witness(g, &sets[x], &sets[y], gamma)
        });
        let verdicts: Vec<Verdict> = verdicts.into_iter().collect::<Result<_>>()?;

        // for each class, the far side of its strongest witness
        let mut guide: Vec<Option<(Rational, VertexSet)>> = vec![None; kk];
        let mut irregular = 0;
        for (&(x, y), v) in pairs.iter().zip(&verdicts) {
            if let Verdict::Irregular(w) = v {
                irregular += 1;
                for (c, side) in [(x, &w.b), (y, &w.a)] {
                    if guide[c].as_ref().is_none_or(|(d, _)| w.deviation > *d) {
                        guide[c] = Some((w.deviation, side.clone()));
                    }
                }
            }
        }
        let allowed = gamma * ratio((kk * (kk - 1) / 2) as i128, 1);
        rounds.push(Round {
            classes: kk,
            irregular,
            allowed,
        });
        let partition = || RefinedPartition::new(a.clone(), inner.clone(), l);
        if ratio(irregular as i128, 1) <= allowed {
            return Ok(RefineOutcome {
                partition: partition()?,
                rounds,
                stop: RefineStop::Certified,
            });
        }
        let smallest = members.iter().map(Vec::len).min().unwrap_or(0);
        if smallest / 2 < floor {
            return Ok(RefineOutcome {
                partition: partition()?,
                rounds,
                stop: RefineStop::Floor,
            });
        }
        for (c, m) in members.iter().enumerate() {
            let mut order = m.clone();
            if let Some((_, far)) = &guide[c] {
                order.sort_by_key(|&v| std::cmp::Reverse(g.degree_into(v, far)));
            }
            let half = order.len().div_ceil(2);
            for (pos, &v) in order.iter().enumerate() {
                inner[v] = 2 * inner[v] + usize::from(pos >= half);
            }
        }
        l *= 2;
    }
}
