//! Browser bindings for three edlab operations. Every export takes plain
//! numbers and returns a JSON string for the page to render.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use edlab::approx::{approximate_edit_distance, sample_estimate, ApproxOptions};
use edlab::generators::planted_blowup;
use edlab::graph::construct::gnp;
use edlab::hardness::{dgt_graph, spectrum_check};
use edlab::oracles::{hom_edit_distance_exact, Caps, ForbiddenFamily};
use edlab::rational::{format_rational, ratio, to_f64};
use edlab::regularity::ParameterSchedule;
use edlab::WeightedCompleteGraph;

/// Largest field order the page offers; the dense eigensolve grows as q⁶.
const DEMO_MAX_Q: usize = 13;

fn fail(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Spectrum of the pseudo-random graph on GF(q)² with k directions, with
/// eigenvalues grouped by multiplicity.
pub fn spectrum_json(q: usize, k: usize) -> Result<Value, String> {
    if q > DEMO_MAX_Q {
        return Err(format!("q is limited to {DEMO_MAX_Q} in the browser"));
    }
    let d = dgt_graph(q, k).map_err(fail)?;
    let rep = spectrum_check(&d).map_err(fail)?;
    let mut groups: Vec<(f64, usize)> = Vec::new();
    for &x in &rep.eigenvalues {
        let x = (x * 1e6).round() / 1e6 + 0.0;
        match groups.last_mut() {
            Some((v, c)) if (*v - x).abs() < 1e-6 => *c += 1,
            _ => groups.push((x, 1)),
        }
    }
    Ok(json!({
        "n": d.graph.n(),
        "degree": rep.degree,
        "edges": d.graph.edge_count(),
        "lambda": rep.lambda,
        "sqrt_n": rep.sqrt_n,
        "two_valued": rep.two_valued,
        "eigenvalues": groups.iter().map(|(v, c)| json!({"value": v, "multiplicity": c})).collect::<Vec<_>>(),
    }))
}

/// Planted blow-up of a triangle whose three class pairs have densities
/// `a/4`, `b/4`, `c/4`, run through the approximation pipeline for
/// triangle-freeness and compared with the exact pattern-level value.
pub fn planted_json(quarters: [u32; 3], class_size: usize, seed: u64) -> Result<Value, String> {
    if quarters.iter().any(|&x| x > 4) {
        return Err("densities are given in quarters, 0 to 4".into());
    }
    if class_size == 0 || !class_size.is_multiple_of(4) || class_size > 32 {
        return Err("class size must be a multiple of 4, at most 32".into());
    }
    let w = WeightedCompleteGraph::from_weights(
        3,
        quarters.iter().map(|&x| ratio(x as i128, 4)).collect(),
    )
    .map_err(fail)?;
    let planted =
        planted_blowup(&w, class_size, &mut ChaCha8Rng::seed_from_u64(seed)).map_err(fail)?;
    let fam = ForbiddenFamily::clique_at_least(3);
    let exact = hom_edit_distance_exact(&w, &fam).map_err(fail)?;
    // twelve outer classes, four per planted class
    let mut schedule = ParameterSchedule::desk(12);
    schedule.floor = 2;
    let eps = ratio(1, 10);
    let report =
        approximate_edit_distance(&planted.graph, &fam, eps, &ApproxOptions::new(schedule))
            .map_err(fail)?;
    Ok(json!({
        "n": planted.graph.n(),
        "edges": planted.graph.edge_count(),
        "route": report.route.as_str(),
        "estimate": format_rational(&report.estimate),
        "estimate_decimal": to_f64(&report.estimate),
        "certified": report.certified,
        "pattern_value": format_rational(&exact.normalized),
        "pattern_decimal": to_f64(&exact.normalized),
        "error": (to_f64(&report.estimate) - to_f64(&exact.normalized)).abs(),
        "diagnostics": report.diagnostics.unwrap_or_default(),
    }))
}

/// Exact triangle-freeness distance of `trials` random `d`-vertex induced
/// subgraphs of `G(n, p)`, as a histogram over the distinct values.
pub fn sampling_json(
    n: usize,
    p: f64,
    d: usize,
    trials: usize,
    seed: u64,
) -> Result<Value, String> {
    if n > 200 || d > 10 || trials > 500 {
        return Err("limits: n ≤ 200, d ≤ 10, trials ≤ 500".into());
    }
    if !(0.0..=1.0).contains(&p) {
        return Err("p must lie in [0, 1]".into());
    }
    let g = gnp(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
    let fam = ForbiddenFamily::clique_at_least(3);
    let values = sample_estimate(&g, &fam, d, trials, seed, &Caps::default()).map_err(fail)?;
    let mut sorted = values.clone();
    sorted.sort();
    let mut bins: Vec<Value> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let j = sorted[i..].iter().take_while(|&&x| x == sorted[i]).count();
        bins.push(json!({"value": format_rational(&sorted[i]), "decimal": to_f64(&sorted[i]), "count": j}));
        i += j;
    }
    let mean = values.iter().map(to_f64).sum::<f64>() / values.len().max(1) as f64;
    Ok(
        json!({"n": n, "edges": g.edge_count(), "d": d, "trials": trials, "mean": mean, "histogram": bins}),
    )
}

fn to_js(r: Result<Value, String>) -> Result<String, JsError> {
    r.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn dgt_spectrum(q: usize, k: usize) -> Result<String, JsError> {
    to_js(spectrum_json(q, k))
}

#[wasm_bindgen]
pub fn planted_pipeline(
    a: u32,
    b: u32,
    c: u32,
    class_size: usize,
    seed: u32,
) -> Result<String, JsError> {
    to_js(planted_json([a, b, c], class_size, seed as u64))
}

#[wasm_bindgen]
pub fn sampling_histogram(
    n: usize,
    p: f64,
    d: usize,
    trials: usize,
    seed: u32,
) -> Result<String, JsError> {
    to_js(sampling_json(n, p, d, trials, seed as u64))
}
