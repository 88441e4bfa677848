use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Complete graph on `k` vertices with a weight in `[0, 1]` on every pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCompleteGraph {
    k: usize,
    weights: Vec<Rational>,
}

#[inline]
pub(crate) fn pair_index(k: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

impl WeightedCompleteGraph {
    /// All pairs weighted `w`.
    pub fn uniform(k: usize, w: Rational) -> Result<Self> {
        Self::from_weights(k, vec![w; k * k.saturating_sub(1) / 2])
    }

    /// Weights listed in pair order `(0,1), (0,2), …, (0,k−1), (1,2), …`.
    pub fn from_weights(k: usize, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != k * k.saturating_sub(1) / 2 {
            return Err(Error::precondition(format!(
                "{} weights given for {} pairs",
                weights.len(),
                k * k.saturating_sub(1) / 2
            )));
        }
        if let Some(w) = weights
            .iter()
            .find(|w| **w < Rational::zero() || **w > Rational::one())
        {
            return Err(Error::precondition(format!("weight {w} outside [0,1]")));
        }
        Ok(WeightedCompleteGraph { k, weights })
    }

    pub fn from_fn(k: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        let mut w = Vec::with_capacity(k * k.saturating_sub(1) / 2);
        for i in 0..k {
            for j in i + 1..k {
                w.push(f(i, j));
            }
        }
        Self::from_weights(k, w)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn weight(&self, i: usize, j: usize) -> Rational {
        assert!(i != j && i < self.k && j < self.k);
        self.weights[pair_index(self.k, i, j)]
    }

    /// `(i, j, w)` for all pairs in pair order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Rational)> + '_ {
        let k = self.k;
        (0..k).flat_map(move |i| (i + 1..k).map(move |j| (i, j, self.weight(i, j))))
    }

    /// Snaps every weight down to the grid `{0, ε, 2ε, …}` (capped at 1).
    pub fn snap_to_grid(&self, eps: Rational) -> Result<Self> {
        if eps <= Rational::zero() || eps > Rational::one() {
            return Err(Error::precondition("grid step must lie in (0, 1]"));
        }
        let weights = self
            .weights
            .iter()
            .map(|w| {
                let steps = (w / eps).floor();
                (steps * eps).min(Rational::one())
            })
            .collect();
        Self::from_weights(self.k, weights)
    }
}
