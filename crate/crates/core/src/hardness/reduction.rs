//! Reduction instances: a pseudo-random graph `G'` OR-ed with `r` disjoint
//! copies of the `b`-blowup of a source graph `F`.
//!
//! With `μ` the fraction of non-edges of `G'`, the number of deletions that
//! make `G` `r`-partite is close to `(1−μ)n²/(2r) + μ·r·ℓ·b²`, where
//! `ℓ = E'_r(F)`. Inverting that expression recovers `ℓ`.

use super::dgt::{dgt_graph, DgtGraph};
use super::field::{supported_orders, MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::construct::{blowup, boolean_or, disjoint_copies, pad};
use crate::graph::{Graph, VertexSet};
use crate::oracles::r_partite_distance_exact;
use crate::rational::{int, ratio, round_half_even, to_f64, Rational};

#[derive(Clone, Debug)]
pub struct HardnessInstance {
    pub graph: Graph,
    /// The source graph `F` on `m` vertices.
    pub source: Graph,
    pub r: usize,
    pub b: usize,
    pub q: usize,
    pub k: usize,
    /// Requested non-edge fraction.
    pub mu: Rational,
    /// `1 − k(q−1)/q²`, the fraction `G'` actually realises.
    pub mu_eff: Rational,
    /// `E'_r(F)` when the exact oracle could compute it.
    pub planted_ell: Option<usize>,
}

impl HardnessInstance {
    pub fn m(&self) -> usize {
        self.source.n()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Vertices occupied by the blown-up copies: `0 .. r·m·b`.
    pub fn planted_len(&self) -> usize {
        self.r * self.m() * self.b
    }

    /// The planted graph `F'` on all `n` vertices.
    pub fn planted(&self) -> Result<Graph> {
        pad(
            &disjoint_copies(&blowup(&self.source, self.b)?, self.r)?,
            self.n(),
        )
    }

    pub fn pseudo_random(&self) -> Result<DgtGraph> {
        dgt_graph(self.q, self.k)
    }
}

/// Smallest supported prime power `q` with `s ≤ q² ≤ 4s`.
pub fn choose_q(s: usize) -> Option<usize> {
    supported_orders()
        .into_iter()
        .find(|&q| s <= q * q && q * q <= 4 * s)
}

/// `round((1−μ)q²/(q−1))`, clamped to the available directions `1..=q+1`.
pub fn choose_k(q: usize, mu: Rational) -> usize {
    let target = (int(1) - mu) * int((q * q) as i128) / int(q as i128 - 1);
    let (k, _) = round_half_even(&target);
    k.clamp(1, q as i128 + 1) as usize
}

pub fn mu_eff(q: usize, k: usize) -> Rational {
    int(1) - ratio((k * (q - 1)) as i128, (q * q) as i128)
}

pub fn build_reduction(f: &Graph, r: usize, b: usize, mu: Rational) -> Result<HardnessInstance> {
    if r < 2 {
        return Err(Error::precondition("the reduction needs r ≥ 2"));
    }
    if b == 0 || f.n() == 0 {
        return Err(Error::precondition(
            "need b ≥ 1 and a nonempty source graph",
        ));
    }
    if mu <= int(0) || mu >= int(1) {
        return Err(Error::precondition("μ must lie in (0, 1)"));
    }
    let s = r * f.n() * b;
    let q = choose_q(s).ok_or(Error::SizeLimit {
        what: "r·m·b with no prime power q ≤ 49 such that r·m·b ≤ q² ≤ 4·r·m·b",
        got: s,
        cap: MAX_ORDER * MAX_ORDER,
    })?;
    let k = choose_k(q, mu);
    let g_prime = dgt_graph(q, k)?;
    let planted = pad(&disjoint_copies(&blowup(f, b)?, r)?, q * q)?;
    let graph = boolean_or(&g_prime.graph, &planted)?;
    // left unknown when the source is over the exact oracle's cap
    let planted_ell = r_partite_distance_exact(f, r).ok().map(|d| d.raw);
    Ok(HardnessInstance {
        graph,
        source: f.clone(),
        r,
        b,
        q,
        k,
        mu,
        mu_eff: mu_eff(q, k),
        planted_ell,
    })
}

/// `(1−μ)n²/(2r) + μ·r·ℓ·b²`.
pub fn predict_from(n: usize, r: usize, b: usize, mu: Rational, ell: usize) -> Rational {
    let base = (int(1) - mu) * int((n * n) as i128) / int(2 * r as i128);
    base + mu * int((r * ell * b * b) as i128)
}

pub fn predict_e_r(inst: &HardnessInstance, ell: usize) -> Rational {
    predict_from(inst.n(), inst.r, inst.b, inst.mu_eff, ell)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Recovered {
    pub ell: i128,
    /// The quotient was exactly half-way between two integers.
    pub tie: bool,
}

/// Nearest integer to `(L − (1−μ)n²/(2r)) / (μ·r·b²)`, ties to even.
pub fn recover_ell(l: Rational, inst: &HardnessInstance) -> Result<Recovered> {
    let unit = inst.mu_eff * int((inst.r * inst.b * inst.b) as i128);
    if unit <= int(0) {
        return Err(Error::precondition("μ·r·b² must be positive"));
    }
    let x = (l - predict_e_r(inst, 0)) / unit;
    let (ell, tie) = round_half_even(&x);
    Ok(Recovered { ell, tie })
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeCountReport {
    pub a: usize,
    /// Edges of `F'` inside `A`.
    pub t: usize,
    pub edges: usize,
    /// `e_G(A) − ((1−μ)a²/2 + μt)`.
    pub deviation: Rational,
    /// `λ·(a + Σ sqrt(|U_i||W_i|))` over the complete bipartite pieces of
    /// `F'` inside `A`: a rigorous bound on `|deviation|`.
    pub lambda_bound: f64,
    /// `|deviation| / (m² n^{3/2})`, the constant the asymptotic form hides.
    pub measured_constant: f64,
}

/// Compares `e_G(A)` with `(1−μ)a²/2 + μt` for a vertex set `A`.
pub fn edge_count_bounds(
    inst: &HardnessInstance,
    lambda: f64,
    a: &VertexSet,
) -> Result<EdgeCountReport> {
    if a.universe() != inst.n() {
        return Err(Error::precondition(
            "vertex set does not match the instance",
        ));
    }
    let (m, b) = (inst.m(), inst.b);
    let planted = inst.planted()?;
    let t = planted.edges_within(a);
    let edges = inst.graph.edges_within(a);
    let size = a.len();
    let predicted =
        (int(1) - inst.mu_eff) * ratio((size * size) as i128, 2) + inst.mu_eff * int(t as i128);
    let deviation = int(edges as i128) - predicted;
    let mut pieces = 0.0;
    for c in 0..inst.r {
        let class = |v: usize| VertexSet::from_iter(inst.n(), (0..b).map(|i| (c * m + v) * b + i));
        for (u, v) in inst.source.edges() {
            let (cu, cv) = (class(u), class(v));
            let inside = |s: &VertexSet| s.iter().filter(|&x| a.contains(x)).count() as f64;
            pieces += (inside(&cu) * inside(&cv)).sqrt();
        }
    }
    let envelope = (m * m) as f64 * (inst.n() as f64).powf(1.5);
    Ok(EdgeCountReport {
        a: size,
        t,
        edges,
        deviation,
        lambda_bound: lambda * (size as f64 + pieces),
        measured_constant: to_f64(&deviation).abs() / envelope,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Separation {
    /// `log_m b`, the exponent in `b = m^c`.
    pub c: f64,
    /// `n^{2−δ}`.
    pub n_pow: f64,
    pub b_squared: f64,
    /// `2/(c+1)`, to be compared with `δ`.
    pub exponent_gap: f64,
}

/// The scale quantities that separate the two regimes of the reduction; at
/// desk scale they are reported, not asserted.
pub fn separation(inst: &HardnessInstance, delta: f64) -> Separation {
    let m = inst.m().max(2) as f64;
    let c = (inst.b as f64).ln() / m.ln();
    Separation {
        c,
        n_pow: (inst.n() as f64).powf(2.0 - delta),
        b_squared: (inst.b * inst.b) as f64,
        exponent_gap: 2.0 / (c + 1.0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn five_cycle_instance() {
        let inst = build_reduction(&cycle(5), 2, 2, ratio(3, 20)).unwrap();
        assert_eq!((inst.q, inst.n(), inst.m()), (5, 25, 5));
        assert_eq!(inst.k, 5);
        assert_eq!(inst.mu_eff, ratio(1, 5));
        assert_eq!(inst.planted_ell, Some(1));
        let min_deg = (0..25).map(|v| inst.graph.degree(v)).min().unwrap();
        assert!(int(min_deg as i128) >= (int(1) - inst.mu_eff) * int(25));
    }

    #[test]
    fn graph_is_the_union_of_its_parts() {
        let inst = build_reduction(&path(3), 3, 2, ratio(1, 4)).unwrap();
        let union = boolean_or(
            &inst.pseudo_random().unwrap().graph,
            &inst.planted().unwrap(),
        )
        .unwrap();
        assert_eq!(union, inst.graph);
        for (u, v) in inst.planted().unwrap().edges() {
            assert!(inst.graph.has_edge(u, v));
        }
        assert!(inst.planted_len() <= inst.n() && inst.n() <= 4 * inst.planted_len());
    }

    #[test]
    fn edgeless_source_gives_the_pseudo_random_graph() {
        let inst = build_reduction(&Graph::empty(1), 2, 1, ratio(3, 20)).unwrap();
        assert_eq!(inst.graph, inst.pseudo_random().unwrap().graph);
    }

    #[test]
    fn unsatisfiable_sizes_are_reported() {
        assert!(matches!(
            build_reduction(&complete(8), 4, 100, ratio(1, 10)),
            Err(Error::SizeLimit { .. })
        ));
        assert!(build_reduction(&complete(3), 1, 2, ratio(1, 10)).is_err());
    }

    #[test]
    fn prediction_arithmetic() {
        let v = predict_from(100, 2, 4, ratio(3, 20), 3);
        assert_eq!(v, ratio(21394, 10));
        assert_eq!(
            predict_from(100, 2, 4, ratio(3, 20), 0),
            ratio(17, 20) * int(10_000) / int(4)
        );
    }

    #[test]
    fn recovery_inverts_prediction() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            let r = rng.gen_range(2..=3);
            let b = rng.gen_range(1..=3);
            let inst = build_reduction(&cycle(5), r, b, ratio(3, 20)).unwrap();
            let unit = inst.mu_eff * int((r * b * b) as i128);
            for ell in 0..=50 {
                let l = predict_e_r(&inst, ell);
                assert_eq!(
                    recover_ell(l, &inst).unwrap(),
                    Recovered {
                        ell: ell as i128,
                        tie: false
                    }
                );
                let nudge = unit / 2 - ratio(1, 1000);
                assert_eq!(recover_ell(l + nudge, &inst).unwrap().ell, ell as i128);
                assert_eq!(recover_ell(l - nudge, &inst).unwrap().ell, ell as i128);
                assert!(recover_ell(l + unit / 2, &inst).unwrap().tie);
            }
        }
    }

    #[test]
    fn edge_counts_track_the_prediction() {
        let inst = build_reduction(&cycle(5), 2, 2, ratio(3, 20)).unwrap();
        let lambda = crate::hardness::spectrum_check(&inst.pseudo_random().unwrap())
            .unwrap()
            .lambda;
        let empty = edge_count_bounds(&inst, lambda, &VertexSet::empty(25)).unwrap();
        assert_eq!((empty.a, empty.t, empty.edges), (0, 0, 0));
        assert_eq!(empty.deviation, int(0));
        // one blow-up class is independent in F'
        let class = VertexSet::from_iter(25, [0, 1]);
        let r = edge_count_bounds(&inst, lambda, &class).unwrap();
        assert_eq!(r.t, 0);
        assert!(to_f64(&r.deviation).abs() <= r.lambda_bound);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let a = VertexSet::from_iter(25, (0..25).filter(|_| rng.gen_bool(0.5)));
            let r = edge_count_bounds(&inst, lambda, &a).unwrap();
            assert!(to_f64(&r.deviation).abs() <= r.lambda_bound + 1e-9);
        }
    }
}
