//! Compares `E'_H(G)` with `E'_r(G)` on dense random graphs, where `H` has
//! chromatic number `r + 1`.
//!
//! For edge-critical `H` the two should agree once the minimum degree is
//! high enough; otherwise the harness just records the gaps.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generators::min_degree_sample;
use crate::graph::io::write_edge_list;
use crate::graph::Graph;
use crate::oracles::{
    chromatic_number, edit_distance_exact, is_edge_critical, r_partite_distance_exact,
    ForbiddenFamily,
};
use crate::par;
use crate::rational::{int, Rational};

#[derive(Clone, Debug)]
pub struct HarnessConfig {
    /// Host orders, used round-robin over the trials.
    pub orders: Vec<usize>,
    pub trials: usize,
    /// Minimum degree required of host `n`: `⌈(1−μ)n⌉ + extra`.
    pub mu: Rational,
    pub extra: usize,
    /// Probability of removing each edge before the degree check.
    pub p_missing: f64,
    pub max_attempts: usize,
    pub seed: u64,
    /// Insist on an edge-critical `H`, the regime where equality is expected.
    pub require_edge_critical: bool,
}

impl HarnessConfig {
    /// Missing-edge probability `μ/2`.
    pub fn new(orders: Vec<usize>, trials: usize, mu: Rational, extra: usize, seed: u64) -> Self {
        HarnessConfig {
            orders,
            trials,
            p_missing: crate::rational::to_f64(&mu) / 2.0,
            mu,
            extra,
            max_attempts: 100_000,
            seed,
            require_edge_critical: true,
        }
    }

    pub fn degree_floor(&self, n: usize) -> usize {
        let base = (int(1) - self.mu) * int(n as i128);
        base.ceil().to_integer() as usize + self.extra
    }
}

#[derive(Clone, Debug)]
pub struct MinDegreeRecord {
    pub trial: usize,
    pub n: usize,
    pub min_degree: usize,
    pub e_h: usize,
    pub e_r: usize,
    pub graph: Graph,
}

impl MinDegreeRecord {
    pub fn equal(&self) -> bool {
        self.e_h == self.e_r
    }
}

#[derive(Clone, Debug)]
pub struct MinDegreeReport {
    pub records: Vec<MinDegreeRecord>,
}

impl MinDegreeReport {
    pub fn equality_rate(&self) -> f64 {
        if self.records.is_empty() {
            return 0.0;
        }
        self.records.iter().filter(|r| r.equal()).count() as f64 / self.records.len() as f64
    }

    pub fn unequal(&self) -> impl Iterator<Item = &MinDegreeRecord> {
        self.records.iter().filter(|r| !r.equal())
    }

    /// `trial,n,min_degree,e_h,e_r,equal`, one line per record.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("trial,n,min_degree,e_h,e_r,equal\n");
        for r in &self.records {
            let _ = writeln!(
                s,
                "{},{},{},{},{},{}",
                r.trial,
                r.n,
                r.min_degree,
                r.e_h,
                r.e_r,
                r.equal()
            );
        }
        s
    }

    /// Edge lists of every instance where the two distances differ.
    pub fn dump_unequal(&self) -> String {
        let mut s = String::new();
        for r in self.unequal() {
            let _ = writeln!(s, "# trial {} e_h={} e_r={}", r.trial, r.e_h, r.e_r);
            s.push_str(&write_edge_list(&r.graph));
        }
        s
    }
}

pub fn min_degree_equality_harness(
    h: &Graph,
    r: usize,
    cfg: &HarnessConfig,
) -> Result<MinDegreeReport> {
    if chromatic_number(h) != r + 1 {
        return Err(Error::precondition(format!(
            "H must have chromatic number {}",
            r + 1
        )));
    }
    if cfg.require_edge_critical && !is_edge_critical(h) {
        return Err(Error::Contract("H is not edge-critical".into()));
    }
    if cfg.orders.is_empty() {
        return Err(Error::precondition("no host orders given"));
    }
    for &n in &cfg.orders {
        let floor = cfg.degree_floor(n);
        if floor >= n {
            return Err(Error::precondition(format!(
                "minimum degree {floor} is impossible on {n} vertices"
            )));
        }
    }
    let fam = ForbiddenFamily::single(h.clone())?;
    let trials: Vec<usize> = (0..cfg.trials).collect();
    let out = par::map(&trials, |&t| -> Result<MinDegreeRecord> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(t as u64);
        let n = cfg.orders[t % cfg.orders.len()];
        let g = min_degree_sample(
            n,
            cfg.p_missing,
            cfg.degree_floor(n),
            cfg.max_attempts,
            &mut rng,
        )?;
        let e_h = edit_distance_exact(&g, &fam)?.raw;
        let e_r = r_partite_distance_exact(&g, r)?.raw;
        if e_h > e_r {
            return Err(Error::Verification(format!(
                "trial {t}: E'_H = {e_h} exceeds E'_r = {e_r}"
            )));
        }
        Ok(MinDegreeRecord {
            trial: t,
            n,
            min_degree: g.min_degree(),
            e_h,
            e_r,
            graph: g,
        })
    });
    Ok(MinDegreeReport {
        records: out.into_iter().collect::<Result<_>>()?,
    })
}
