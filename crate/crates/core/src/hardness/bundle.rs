//! On-disk instance bundles and their independent verification.
//!
//! A bundle directory holds `graph.el` (the composite graph as an edge list)
//! and `meta.txt`: `key=value` lines followed by a `source` line and the
//! source graph's edge list.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::Path;

use super::dgt::{dgt_graph, spectrum_check, DgtGraph};
use super::field::prime_power;
use super::reduction::{choose_k, choose_q, mu_eff, predict_e_r, recover_ell, HardnessInstance};
use crate::error::{Error, Result};
use crate::graph::construct::boolean_or;
use crate::graph::io::{read_edge_list, write_edge_list};
use crate::oracles::r_partite_distance_exact;
use crate::rational::{format_rational, int, parse_rational, Rational};

pub const GRAPH_FILE: &str = "graph.el";
pub const META_FILE: &str = "meta.txt";

/// Largest instance whose spectrum `verify_bundle` recomputes.
pub const VERIFY_SPECTRUM_CAP: usize = 400;

pub fn meta_text(inst: &HardnessInstance) -> String {
    let mut s = String::new();
    let ell = inst
        .planted_ell
        .map_or("unknown".to_string(), |l| l.to_string());
    for (k, v) in [
        ("q", inst.q.to_string()),
        ("k", inst.k.to_string()),
        ("mu", format_rational(&inst.mu)),
        ("mu_eff", format_rational(&inst.mu_eff)),
        ("r", inst.r.to_string()),
        ("b", inst.b.to_string()),
        ("m", inst.m().to_string()),
        ("n", inst.n().to_string()),
        ("planted_ell", ell),
    ] {
        let _ = writeln!(s, "{k}={v}");
    }
    s.push_str("source\n");
    s.push_str(&write_edge_list(&inst.source));
    s
}

fn field<'a>(pairs: &'a [(&str, &str)], key: &str) -> Result<&'a str> {
    pairs
        .iter()
        .find(|(k, _)| *k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::parse(format!("metadata lacks `{key}`")))
}

fn number(pairs: &[(&str, &str)], key: &str) -> Result<usize> {
    field(pairs, key)?
        .parse()
        .map_err(|_| Error::parse(format!("metadata `{key}` is not a number")))
}

/// Rebuilds an instance from the two bundle files. Nothing is recomputed;
/// [`verify_bundle`] does that.
pub fn parse_bundle(graph_text: &str, meta: &str) -> Result<HardnessInstance> {
    let (head, source) = meta
        .split_once("\nsource\n")
        .ok_or_else(|| Error::parse("metadata lacks the `source` section"))?;
    let pairs: Vec<(&str, &str)> = head
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_once('=')
                .ok_or_else(|| Error::parse(format!("bad metadata line `{l}`")))
        })
        .collect::<Result<_>>()?;
    let source = read_edge_list(source)?;
    let graph = read_edge_list(graph_text)?;
    let planted_ell = match field(&pairs, "planted_ell")? {
        "unknown" => None,
        _ => Some(number(&pairs, "planted_ell")?),
    };
    let inst = HardnessInstance {
        graph,
        source,
        r: number(&pairs, "r")?,
        b: number(&pairs, "b")?,
        q: number(&pairs, "q")?,
        k: number(&pairs, "k")?,
        mu: parse_rational(field(&pairs, "mu")?)?,
        mu_eff: parse_rational(field(&pairs, "mu_eff")?)?,
        planted_ell,
    };
    if number(&pairs, "m")? != inst.m() || number(&pairs, "n")? != inst.n() {
        return Err(Error::parse("metadata sizes disagree with the edge lists"));
    }
    Ok(inst)
}

pub fn write_bundle(inst: &HardnessInstance, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(GRAPH_FILE), write_edge_list(&inst.graph))?;
    fs::write(dir.join(META_FILE), meta_text(inst))?;
    Ok(())
}

pub fn read_bundle(dir: &Path) -> Result<HardnessInstance> {
    let graph = fs::read_to_string(dir.join(GRAPH_FILE))?;
    let meta = fs::read_to_string(dir.join(META_FILE))?;
    parse_bundle(&graph, &meta)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BundleCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BundleReport {
    pub checks: Vec<BundleCheck>,
}

impl BundleReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    fn push(&mut self, name: &'static str, ok: bool, detail: impl Into<String>) {
        let status = if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.checks.push(BundleCheck {
            name,
            status,
            detail: detail.into(),
        });
    }

    fn skip(&mut self, name: &'static str, detail: impl Into<String>) {
        self.checks.push(BundleCheck {
            name,
            status: CheckStatus::Skipped,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for BundleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "ok",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skipped",
            };
            writeln!(f, "{tag:7} {:14} {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Re-derives every property of an instance from its stored parts.
pub fn verify_bundle(inst: &HardnessInstance) -> Result<BundleReport> {
    let mut rep = BundleReport::default();
    let (q, k, n) = (inst.q, inst.k, inst.n());
    let field_ok = prime_power(q).is_some() && (1..=q + 1).contains(&k) && n == q * q;
    rep.push("parameters", field_ok, format!("q={q} k={k} n={n}"));
    if !field_ok {
        return Ok(rep);
    }
    let s = inst.planted_len();
    rep.push(
        "size",
        choose_q(s) == Some(q),
        format!("r·m·b={s} ≤ q²={} ≤ {}", q * q, 4 * s),
    );
    rep.push(
        "mu_eff",
        inst.mu_eff == mu_eff(q, k) && choose_k(q, inst.mu) == k,
        format!(
            "mu={} mu_eff={}",
            format_rational(&inst.mu),
            format_rational(&inst.mu_eff)
        ),
    );
    let dgt = dgt_graph(q, k)?;
    let d = dgt.degree();
    let regular = (0..n).all(|v| dgt.graph.degree(v) == d) && 2 * dgt.graph.edge_count() == n * d;
    rep.push("regularity", regular, format!("degree {d}"));
    let planted = inst.planted()?;
    let union = boolean_or(&dgt.graph, &planted)?;
    rep.push(
        "union",
        union == inst.graph,
        format!(
            "{} edges, expected {}",
            inst.graph.edge_count(),
            union.edge_count()
        ),
    );
    let min_deg = inst.graph.min_degree();
    rep.push(
        "min_degree",
        int(min_deg as i128) >= (int(1) - inst.mu_eff) * int(n as i128),
        format!("{min_deg}"),
    );
    if n <= VERIFY_SPECTRUM_CAP {
        let spec = spectrum_check(&dgt)?;
        rep.push(
            "spectrum",
            spec.passes(),
            format!("lambda={:.6} sqrt_n={:.6}", spec.lambda, spec.sqrt_n),
        );
    } else {
        rep.skip("spectrum", format!("n={n} above {VERIFY_SPECTRUM_CAP}"));
    }
    match (
        inst.planted_ell,
        r_partite_distance_exact(&inst.source, inst.r),
    ) {
        (Some(l), Ok(d)) => rep.push(
            "planted_ell",
            d.raw == l,
            format!("stored {l}, recomputed {}", d.raw),
        ),
        (None, Ok(d)) => rep.push(
            "planted_ell",
            false,
            format!("missing, recomputed {}", d.raw),
        ),
        (_, Err(e)) => rep.skip("planted_ell", e.to_string()),
    }
    let upto = inst.planted_ell.unwrap_or(0).max(50);
    let round_trip = (0..=upto).all(|l| {
        let predicted: Rational = predict_e_r(inst, l);
        recover_ell(predicted, inst).is_ok_and(|r| r.ell == l as i128 && !r.tie)
    });
    rep.push("round_trip", round_trip, format!("ell in 0..={upto}"));
    Ok(rep)
}

/// Metadata for a bare pseudo-random graph bundle.
pub fn dgt_meta_text(d: &DgtGraph) -> String {
    format!(
        "kind=dgt\nq={}\nk={}\nn={}\ndegree={}\n",
        d.q,
        d.k,
        d.graph.n(),
        d.degree()
    )
}

pub fn write_dgt_bundle(d: &DgtGraph, dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(GRAPH_FILE), write_edge_list(&d.graph))?;
    fs::write(dir.join(META_FILE), dgt_meta_text(d))?;
    Ok(())
}

/// Whether the metadata describes a bare pseudo-random graph.
pub fn is_dgt_meta(meta: &str) -> bool {
    meta.lines().any(|l| l.trim() == "kind=dgt")
}

/// Checks a stored graph against a fresh construction with the recorded
/// `q` and `k`: identical edges, regularity and the two-valued spectrum.
pub fn verify_dgt_bundle(graph_text: &str, meta: &str) -> Result<BundleReport> {
    let pairs: Vec<(&str, &str)> = meta
        .lines()
        .filter_map(|l| l.trim().split_once('='))
        .collect();
    let (q, k) = (number(&pairs, "q")?, number(&pairs, "k")?);
    let g = read_edge_list(graph_text)?;
    let mut rep = BundleReport::default();
    let fresh = dgt_graph(q, k)?;
    rep.push("construction", fresh.graph == g, format!("q={q} k={k}"));
    let d = fresh.degree();
    let regular = (0..g.n()).all(|v| g.degree(v) == d);
    rep.push("regularity", regular, format!("degree {d}"));
    if g.n() <= VERIFY_SPECTRUM_CAP {
        let spec = spectrum_check(&fresh)?;
        rep.push(
            "spectrum",
            spec.passes(),
            format!("lambda={:.6} sqrt_n={:.6}", spec.lambda, spec.sqrt_n),
        );
    } else {
        rep.skip(
            "spectrum",
            format!("n={} above {VERIFY_SPECTRUM_CAP}", g.n()),
        );
    }
    Ok(rep)
}
