//! Exact minimum-weight hitting set over at most 128 elements.
//!
//! Elements are edges; sets are the edge sets of forbidden copies (or
//! homomorphic images). A deletion set is feasible when it meets every set.
//!
//! The search branches on a live set with the fewest free elements: in branch
//! `i` it deletes the `i`-th free element and marks the earlier ones as kept,
//! so branches are disjoint. The lower bound is a local-ratio packing over the
//! live sets.

/// A hitting-set instance. `weights[e]` is the cost of element `e`.
#[derive(Clone, Debug)]
pub struct HittingInstance {
    pub weights: Vec<u64>,
    pub sets: Vec<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HittingSolution {
    pub cost: u64,
    pub chosen: u128,
}

impl HittingInstance {
    /// Drops sets that are supersets of other sets; they are hit automatically.
    pub fn new(weights: Vec<u64>, mut sets: Vec<u128>) -> Self {
        assert!(weights.len() <= 128);
        sets.sort_by_key(|s| (s.count_ones(), *s));
        sets.dedup();
        let mut minimal: Vec<u128> = Vec::with_capacity(sets.len());
        for s in sets {
            if !minimal.iter().any(|&m| m & !s == 0) {
                minimal.push(s);
            }
        }
        HittingInstance {
            weights,
            sets: minimal,
        }
    }

    pub fn cost_of(&self, chosen: u128) -> u64 {
        let mut c = 0;
        let mut m = chosen;
        while m != 0 {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            c += self.weights[e];
        }
        c
    }

    pub fn is_feasible(&self, chosen: u128) -> bool {
        self.sets.iter().all(|&s| s & chosen != 0)
    }

    /// Minimum-cost hitting set.
    pub fn solve(&self) -> Option<HittingSolution> {
        self.solve_constrained(0, 0, u64::MAX, false)
    }

    /// Minimum-cost hitting set containing `forced_in`, avoiding `forced_out`,
    /// with cost strictly below `bound`. With `first` set the search returns
    /// the first such solution instead of the best.
    pub fn solve_constrained(
        &self,
        forced_in: u128,
        forced_out: u128,
        bound: u64,
        first: bool,
    ) -> Option<HittingSolution> {
        if forced_in & forced_out != 0 {
            return None;
        }
        let mut search = Search {
            inst: self,
            best: None,
            bound,
            first,
            done: false,
        };
        let cost = self.cost_of(forced_in);
        if cost >= bound {
            return None;
        }
        search.node(forced_in, forced_out, cost);
        search.best
    }

    /// Minimum-cost solution whose sorted element list is lexicographically
    /// smallest among all minimum-cost solutions.
    pub fn solve_lex_min(&self) -> Option<HittingSolution> {
        self.solve_lex_min_below(u64::MAX)
    }

    /// [`solve_lex_min`](Self::solve_lex_min) given that some solution costs
    /// less than `bound`.
    pub fn solve_lex_min_below(&self, bound: u64) -> Option<HittingSolution> {
        let opt = self.solve_constrained(0, 0, bound, false)?;
        let mut incumbent = opt.chosen;
        let mut forced_in = 0u128;
        let mut forced_out = 0u128;
        let universe = self.weights.len();
        for e in 0..universe {
            // stopping here gives a prefix of every extension, hence smaller
            if self.cost_of(forced_in) == opt.cost && self.is_feasible(forced_in) {
                break;
            }
            let bit = 1u128 << e;
            if incumbent & bit != 0 {
                forced_in |= bit;
                continue;
            }
            match self.solve_constrained(forced_in | bit, forced_out, opt.cost + 1, true) {
                Some(sol) => {
                    forced_in |= bit;
                    incumbent = sol.chosen;
                }
                None => forced_out |= bit,
            }
        }
        debug_assert!(self.is_feasible(forced_in));
        debug_assert_eq!(self.cost_of(forced_in), opt.cost);
        Some(HittingSolution {
            cost: opt.cost,
            chosen: forced_in,
        })
    }
}

struct Search<'a> {
    inst: &'a HittingInstance,
    best: Option<HittingSolution>,
    /// Exclusive upper bound on useful solution cost.
    bound: u64,
    first: bool,
    done: bool,
}

impl Search<'_> {
    fn node(&mut self, chosen: u128, kept: u128, cost: u64) {
        if self.done {
            return;
        }
        // Branch set: live set with the fewest free elements.
        let mut branch: Option<u128> = None;
        let mut branch_free = u32::MAX;
        let mut live: Vec<u128> = Vec::new();
        for &s in &self.inst.sets {
            if s & chosen != 0 {
                continue;
            }
            let free = s & !kept;
            if free == 0 {
                return;
            }
            let c = free.count_ones();
            if c < branch_free {
                branch_free = c;
                branch = Some(free);
            }
            live.push(free);
        }
        let Some(free) = branch else {
            self.best = Some(HittingSolution { cost, chosen });
            self.bound = cost;
            if self.first {
                self.done = true;
            }
            return;
        };
        if cost + self.lower_bound(&mut live) >= self.bound {
            return;
        }
        // Cheapest elements first, index order among ties.
        let mut elems: Vec<usize> = Vec::with_capacity(free.count_ones() as usize);
        let mut m = free;
        while m != 0 {
            elems.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        elems.sort_by_key(|&e| (self.inst.weights[e], e));
        let mut kept = kept;
        for e in elems {
            let c = cost + self.inst.weights[e];
            if c < self.bound {
                self.node(chosen | 1u128 << e, kept, c);
                if self.done {
                    return;
                }
            }
            kept |= 1u128 << e;
        }
    }

    /// Local-ratio packing bound over the free parts of the live sets.
    fn lower_bound(&self, live: &mut [u128]) -> u64 {
        live.sort_unstable_by_key(|s| s.count_ones());
        let mut residual: Vec<u64> = self.inst.weights.clone();
        let mut lb = 0u64;
        for &s in live.iter() {
            let mut m = s;
            let mut least = u64::MAX;
            while m != 0 {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                least = least.min(residual[e]);
            }
            if least == 0 {
                continue;
            }
            lb += least;
            let mut m = s;
            while m != 0 {
                let e = m.trailing_zeros() as usize;
                m &= m - 1;
                residual[e] -= least;
            }
        }
        lb
    }
}
