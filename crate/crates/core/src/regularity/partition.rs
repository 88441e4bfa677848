//! Equipartitions and two-level refinements.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Vertex `v` lies in class `class[v]`; class sizes differ by at most one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equipartition {
    class: Vec<usize>,
    order: usize,
}

impl Equipartition {
    /// Contiguous classes; the first `n mod k` classes get one extra vertex.
    pub fn contiguous(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::precondition(format!(
                "cannot split {n} vertices into {k} nonempty classes"
            )));
        }
        let (q, r) = (n / k, n % k);
        let mut class = Vec::with_capacity(n);
        for c in 0..k {
            class.extend(std::iter::repeat_n(c, q + usize::from(c < r)));
        }
        Ok(Equipartition { class, order: k })
    }

    pub fn from_classes(class: Vec<usize>) -> Result<Self> {
        let order = class.iter().max().map_or(0, |&m| m + 1);
        let p = Equipartition { class, order };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let sizes = self.sizes();
        if sizes.contains(&0) {
            return Err(Error::precondition("equipartition has an empty class"));
        }
        let (lo, hi) = (sizes.iter().min(), sizes.iter().max());
        if let (Some(lo), Some(hi)) = (lo, hi) {
            if hi - lo > 1 {
                return Err(Error::precondition(format!(
                    "class sizes {lo} and {hi} differ by more than one"
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.class.len()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.class
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.order];
        for &c in &self.class {
            s[c] += 1;
        }
        s
    }

    /// Members of each class in increasing vertex order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.order];
        for (v, &c) in self.class.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn class_sets(&self) -> Vec<VertexSet> {
        self.classes()
            .into_iter()
            .map(|c| VertexSet::from_iter(self.n(), c))
            .collect()
    }
}

/// An outer equipartition of order `k` together with a split of every outer
/// class into `l` inner classes; all inner classes together form an
/// equipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedPartition {
    pub outer: Equipartition,
    /// Index `0..l` of each vertex's inner class inside its outer class.
    pub inner: Vec<usize>,
    pub l: usize,
}

impl RefinedPartition {
    /// The trivial refinement with `l = 1`.
    pub fn trivial(outer: Equipartition) -> Self {
        let inner = vec![0; outer.n()];
        RefinedPartition { outer, inner, l: 1 }
    }

    pub fn new(outer: Equipartition, inner: Vec<usize>, l: usize) -> Result<Self> {
        if inner.len() != outer.n() || inner.iter().any(|&j| j >= l) {
            return Err(Error::precondition(
                "inner labels do not match the outer partition",
            ));
        }
        let p = RefinedPartition { outer, inner, l };
        p.flattened()?;
        Ok(p)
    }

    /// Inner class `(i, j)` is numbered `i·l + j`.
    pub fn flattened(&self) -> Result<Equipartition> {
        Equipartition::from_classes(
            (0..self.outer.n())
                .map(|v| self.outer.class_of(v) * self.l + self.inner[v])
                .collect(),
        )
    }

    /// `sets[i][j]` is `V_{i,j}`.
    pub fn inner_sets(&self) -> Vec<Vec<VertexSet>> {
        let n = self.outer.n();
        let mut out = vec![vec![VertexSet::empty(n); self.l]; self.outer.order()];
        for v in 0..n {
            out[self.outer.class_of(v)][self.inner[v]].insert(v);
        }
        out
    }

    /// One line `v outer inner` per vertex.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for v in 0..self.outer.n() {
            let _ = writeln!(s, "{v} {} {}", self.outer.class_of(v), self.inner[v]);
        }
        s
    }

    pub fn parse_dump(text: &str) -> Result<Self> {
        let mut rows: Vec<(usize, usize, usize)> = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::parse(format!("line {}: bad number", ln + 1)))
                })
                .collect::<Result<_>>()?;
            if nums.len() != 3 {
                return Err(Error::parse(format!(
                    "line {}: expected `v outer inner`",
                    ln + 1
                )));
            }
            rows.push((nums[0], nums[1], nums[2]));
        }
        rows.sort_unstable();
        if rows.iter().enumerate().any(|(i, r)| r.0 != i) {
            return Err(Error::parse("vertices must be 0..n-1, each once"));
        }
        let outer = Equipartition::from_classes(rows.iter().map(|r| r.1).collect())?;
        let l = rows.iter().map(|r| r.2 + 1).max().unwrap_or(1);
        RefinedPartition::new(outer, rows.iter().map(|r| r.2).collect(), l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contiguous_remainder_goes_to_first_classes() {
        let p = Equipartition::contiguous(10, 3).unwrap();
        assert_eq!(p.sizes(), vec![4, 3, 3]);
        assert_eq!(p.assignment(), &[0, 0, 0, 0, 1, 1, 1, 2, 2, 2]);
        assert!(Equipartition::contiguous(2, 3).is_err());
        assert!(Equipartition::from_classes(vec![0, 0, 0, 1]).is_err());
    }

    #[test]
    fn dump_round_trips() {
        let outer = Equipartition::contiguous(8, 2).unwrap();
        let r = RefinedPartition::new(outer, vec![0, 1, 0, 1, 1, 0, 1, 0], 2).unwrap();
        assert_eq!(RefinedPartition::parse_dump(&r.dump()).unwrap(), r);
        assert_eq!(r.flattened().unwrap().order(), 4);
        // inner classes of sizes 3 and 1 break the equipartition
        let outer = Equipartition::contiguous(8, 2).unwrap();
        assert!(RefinedPartition::new(outer, vec![0, 0, 0, 1, 0, 0, 1, 1], 2).is_err());
    }
}
