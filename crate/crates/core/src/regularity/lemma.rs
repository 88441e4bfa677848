//! Iterative construction of a regular pair of partitions.
//!
//! Start from the contiguous equipartition of order `m`. Each iteration
//! refines the current partition `A` at level `γ = E(M)/M²`, where `M` is the
//! order of `A`, and checks whether `A` together with its refinement passes
//! [`check_pair_of_partitions`] with `E(0)` and `E(|A|)`. If not, the
//! refinement becomes the next `A`.

use std::fmt::Write as _;

use super::check::{check_pair_of_partitions, CheckReport};
use super::partition::{Equipartition, RefinedPartition};
use super::refine::{refine_partition, RefineStop};
use super::schedule::ParameterSchedule;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{format_rational, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// The last pair passed the checker.
    Regular,
    IterationCap,
    /// The refinement could not split further without breaking the floor.
    Floor,
    /// The next outer order would exceed the schedule's `max_order`.
    OrderCap,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::Regular => "regular",
            StopReason::IterationCap => "iteration-cap",
            StopReason::Floor => "floor",
            StopReason::OrderCap => "order-cap",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Iteration {
    pub outer_order: usize,
    pub inner_order: usize,
    pub gamma: Rational,
    /// Irregular class pairs in the refinement's last round.
    pub irregular_pairs: usize,
    pub refine_stop: RefineStop,
    pub check: CheckReport,
}

#[derive(Clone, Debug)]
pub struct RegularityRun {
    /// The last pair examined; it passed the checker iff `certified`.
    pub pair: RefinedPartition,
    pub certified: bool,
    pub stop: StopReason,
    pub iterations: Vec<Iteration>,
}

impl RegularityRun {
    /// One line per iteration followed by the stopping reason.
    pub fn diagnostics(&self) -> String {
        let mut s = String::new();
        for (i, it) in self.iterations.iter().enumerate() {
            let _ = writeln!(
                s,
                "iteration={} outer={} inner={} gamma={} irregular={} bad_outer={} passes={}",
                i + 1,
                it.outer_order,
                it.inner_order,
                format_rational(&it.gamma),
                it.irregular_pairs,
                it.check.bad_outer_pairs.len(),
                it.check.passes
            );
        }
        let _ = writeln!(
            s,
            "stop={} certified={}",
            self.stop.as_str(),
            self.certified
        );
        s
    }
}

pub fn e_regular_pair_of_partitions(
    g: &Graph,
    schedule: &ParameterSchedule,
) -> Result<RegularityRun> {
    schedule.validate()?;
    let n = g.n();
    if n < schedule.m * schedule.floor {
        return Err(Error::precondition(format!(
            "{n} vertices cannot form {} classes of at least {}",
            schedule.m, schedule.floor
        )));
    }
    let mut a = Equipartition::contiguous(n, schedule.m)?;
    let mut iterations = Vec::new();
    let finish = |pair, certified, stop, iterations| {
        Ok(RegularityRun {
            pair,
            certified,
            stop,
            iterations,
        })
    };
    for i in 0..schedule.iterations() {
        let order = a.order();
        let gamma = schedule.e(order) / ratio((order * order) as i128, 1);
        let out = refine_partition(g, &a, gamma, schedule.floor)?;
        let check = check_pair_of_partitions(g, &out.partition, schedule.e(0), schedule.e(order))?;
        let passes = check.passes;
        iterations.push(Iteration {
            outer_order: order,
            inner_order: order * out.partition.l,
            gamma,
            irregular_pairs: out.rounds.last().map_or(0, |r| r.irregular),
            refine_stop: out.stop,
            check,
        });
        if passes {
            return finish(out.partition, true, StopReason::Regular, iterations);
        }
        let next = out.partition.flattened()?;
        if next.order() == order {
            return finish(out.partition, false, StopReason::Floor, iterations);
        }
        let last = i + 1 == schedule.iterations();
        if !last && schedule.max_order.is_some_and(|cap| next.order() > cap) {
            return finish(out.partition, false, StopReason::OrderCap, iterations);
        }
        if last {
            return finish(out.partition, false, StopReason::IterationCap, iterations);
        }
        a = next;
    }
    unreachable!("the schedule allows at least one iteration")
}
