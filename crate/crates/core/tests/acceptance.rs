//! Acceptance criteria 1-11. Each test writes one `criterion N: PASS|FAIL`
//! line to stderr (bypassing libtest's capture) and then asserts.
//!
//! Criterion 7 asks for a minimum degree above `n − 1`, which no simple graph
//! has; that test is ignored by default and fails when run.

use std::io::Write as _;
use std::time::{Duration, Instant};

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edlab::approx::{approximate_edit_distance, sample_estimate, ApproxOptions};
use edlab::extremal::{min_degree_equality_harness, HarnessConfig};
use edlab::generators::planted_blowup;
use edlab::graph::construct::{blowup, complete, cycle, gnp};
use edlab::graph::enumerate::graphs_on;
use edlab::hardness::{
    build_reduction, choose_k, dgt_graph, edge_distribution_check, predict_e_r, read_bundle,
    recover_ell, spectrum_check, supported_orders, write_bundle,
};
use edlab::oracles::{
    edit_distance_bruteforce, edit_distance_exact, hom_edit_distance_exact_with,
    packing_number_exact, r_partite_distance_exact, Caps, ForbiddenFamily,
};
use edlab::rational::{format_rational, int, ratio, to_f64};
use edlab::regularity::{
    check_pair_of_partitions, e_regular_pair_of_partitions, ParameterSchedule, Preset, StopReason,
};
use edlab::{Graph, VertexSet, WeightedCompleteGraph};

fn report(n: u32, ok: bool, detail: impl std::fmt::Display) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr(), "criterion {n}: {verdict} {detail}");
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn criterion_01_branch_and_bound_matches_enumeration() {
    let start = Instant::now();
    let fams = [
        ForbiddenFamily::clique_at_least(3),
        ForbiddenFamily::single(cycle(4)).unwrap(),
        ForbiddenFamily::odd_cycles(),
    ];
    let mut r = rng(1);
    let mut mismatches = Vec::new();
    for i in 0..200 {
        let n = r.gen_range(1..=6);
        let g = gnp(n, r.gen_range(0.2..0.9), &mut r);
        let fam = &fams[i % 3];
        let fast = edit_distance_exact(&g, fam).unwrap().raw;
        let slow = edit_distance_bruteforce(&g, fam).unwrap().raw;
        if fast != slow {
            mismatches.push((i, fast, slow));
        }
    }
    let elapsed = start.elapsed();
    let ok = mismatches.is_empty() && elapsed < Duration::from_secs(120);
    report(
        1,
        ok,
        format!("200 graphs, {} mismatches, {elapsed:.2?}", mismatches.len()),
    );
    assert!(ok, "{mismatches:?}");
}

#[test]
fn criterion_02_turan_identity() {
    let k3 = ForbiddenFamily::clique_at_least(3);
    let mut bad = Vec::new();
    for n in 3..=10 {
        let expected = n * (n - 1) / 2 - n * n / 4;
        let h = edit_distance_exact(&complete(n), &k3).unwrap().raw;
        let r = r_partite_distance_exact(&complete(n), 2).unwrap().raw;
        if h != expected || r != expected {
            bad.push((n, h, r, expected));
        }
    }
    report(
        2,
        bad.is_empty(),
        format!("n in 3..=10, {} mismatches", bad.len()),
    );
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn criterion_03_blowup_scales_by_b_squared() {
    let start = Instant::now();
    let mut sources: Vec<Graph> = graphs_on(4).unwrap().to_vec();
    assert_eq!(sources.len(), 11);
    sources.push(cycle(5));
    let mut bad = Vec::new();
    let mut cases = 0;
    for f in &sources {
        for r in [2, 3] {
            let base = r_partite_distance_exact(f, r).unwrap().raw;
            for b in [2, 3] {
                cases += 1;
                let blown = r_partite_distance_exact(&blowup(f, b).unwrap(), r)
                    .unwrap()
                    .raw;
                if blown != b * b * base {
                    bad.push((f.edges(), r, b, blown, base));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(300);
    report(
        3,
        ok,
        format!("{cases} cases, {} mismatches, {elapsed:.2?}", bad.len()),
    );
    assert!(ok, "{bad:?}");
}

#[test]
fn criterion_04_two_valued_spectra() {
    let mut bad = Vec::new();
    let mut cases = 0;
    for q in supported_orders().into_iter().filter(|&q| q <= 13) {
        for k in 1..=q + 1 {
            cases += 1;
            let rep = spectrum_check(&dgt_graph(q, k).unwrap()).unwrap();
            if !rep.passes() {
                bad.push(format!("q={q} k={k} spectrum"));
            }
        }
        let k = choose_k(q, ratio(3, 20));
        let rep = spectrum_check(&dgt_graph(q, k).unwrap()).unwrap();
        if !rep.lambda_le_sqrt_n {
            bad.push(format!("q={q} k={k} lambda={} > sqrt n", rep.lambda));
        }
    }
    report(
        4,
        bad.is_empty(),
        format!("{cases} (q,k) pairs, {} failures", bad.len()),
    );
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn criterion_05_edge_distribution_bound() {
    let mut r = rng(5);
    let mut violations = 0;
    let mut probes = 0;
    for q in [7, 9] {
        for k in 1..=q + 1 {
            let d = dgt_graph(q, k).unwrap();
            let lambda = spectrum_check(&d).unwrap().lambda;
            let n = q * q;
            let mut vs: Vec<usize> = (0..n).collect();
            let per_k = 250 / (q + 1) + 1;
            for _ in 0..per_k {
                vs.shuffle(&mut r);
                let a = r.gen_range(1..n);
                let b = r.gen_range(1..=n - a);
                let x = VertexSet::from_iter(n, vs[..a].iter().copied());
                let y = VertexSet::from_iter(n, vs[a..a + b].iter().copied());
                probes += 1;
                if !edge_distribution_check(&d.graph, d.degree(), lambda, &x, &y).holds {
                    violations += 1;
                }
            }
        }
    }
    let ok = violations == 0 && probes >= 500;
    report(5, ok, format!("{probes} probes, {violations} violations"));
    assert!(ok);
}

#[test]
fn criterion_06_recovery_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut r = rng(6);
    let sources = graphs_on(4).unwrap();
    let mut bad = Vec::new();
    for i in 0..20 {
        let f = if i % 4 == 0 {
            cycle(5)
        } else {
            sources[r.gen_range(0..sources.len())].clone()
        };
        let (rr, b) = (r.gen_range(2..=3), r.gen_range(1..=3));
        let path = dir.path().join(format!("bundle{i}"));
        write_bundle(&build_reduction(&f, rr, b, ratio(3, 20)).unwrap(), &path).unwrap();
        let inst = read_bundle(&path).unwrap();
        let unit = inst.mu_eff * int((inst.r * inst.b * inst.b) as i128);
        for ell in 0..=50usize {
            let l = predict_e_r(&inst, ell);
            let inside = unit / 2 - ratio(1, 1_000_000);
            let shifts = [
                int(0),
                inside,
                -inside,
                unit * ratio(r.gen_range(0..499), 1000),
                -unit * ratio(r.gen_range(0..499), 1000),
            ];
            for s in shifts {
                let got = recover_ell(l + s, &inst).unwrap();
                if got.ell != ell as i128 || got.tie {
                    bad.push((i, ell, format_rational(&s)));
                }
            }
        }
    }
    report(
        6,
        bad.is_empty(),
        format!("20 bundles x 51 values x 5 shifts, {} failures", bad.len()),
    );
    assert!(bad.is_empty(), "{:?}", &bad[..bad.len().min(5)]);
}

/// The requested floor `⌈17n/20⌉ + 1` is at least `n` for every `n` in
/// `8..=12`, so the harness refuses it. The same sweep at the feasible floor
/// `⌈17n/20⌉` is reported for information.
#[test]
#[ignore = "unattainable: the requested minimum degree exceeds n - 1 for every n in 8..=12"]
fn criterion_07_min_degree_equality() {
    let orders: Vec<usize> = (8..=12).collect();
    let requested = HarnessConfig::new(orders.clone(), 100, ratio(3, 20), 1, 7);
    let outcome = min_degree_equality_harness(&complete(3), 2, &requested);
    let feasible = HarnessConfig::new(orders, 100, ratio(3, 20), 0, 7);
    let info = match min_degree_equality_harness(&complete(3), 2, &feasible) {
        Ok(rep) => format!(
            "at floor ceil(17n/20): {} instances, equality rate {:.2}, {} unequal",
            rep.records.len(),
            rep.equality_rate(),
            rep.unequal().count()
        ),
        Err(e) => format!("feasible floor also failed: {e}"),
    };
    match outcome {
        Ok(rep) => {
            let ok = rep.equality_rate() >= 0.95;
            report(
                7,
                ok,
                format!("equality rate {:.2}; {info}", rep.equality_rate()),
            );
            assert!(ok, "{}", rep.dump_unequal());
        }
        Err(e) => {
            report(7, false, format!("{e}; {info}"));
            panic!("harness rejected the requested threshold: {e}");
        }
    }
}

/// Planted instance: `k_p` classes of `size` vertices, started from
/// `m = k_p·t` outer classes so every outer class sits inside one planted
/// class.
struct PlantedCase {
    pattern: WeightedCompleteGraph,
    size: usize,
    m: usize,
    fam: ForbiddenFamily,
    name: &'static str,
}

fn random_pattern(k: usize, r: &mut ChaCha8Rng) -> WeightedCompleteGraph {
    WeightedCompleteGraph::from_fn(k, |_, _| ratio(r.gen_range(0..=4), 4)).unwrap()
}

fn planted_cases() -> Vec<PlantedCase> {
    let mut r = rng(8);
    let families = [
        ("K3", ForbiddenFamily::clique_at_least(3)),
        ("odd cycles", ForbiddenFamily::odd_cycles()),
        ("K4", ForbiddenFamily::clique_at_least(4)),
    ];
    let shapes = [(2, 20, 10), (3, 16, 12), (4, 18, 12)];
    (0..30)
        .map(|i| {
            let (k, size, m) = shapes[i % 3];
            let (name, fam) = families[(i / 3) % 3].clone();
            PlantedCase {
                pattern: random_pattern(k, &mut r),
                size,
                m,
                fam,
                name,
            }
        })
        .collect()
}

#[test]
fn criterion_08_pipeline_planted_accuracy() {
    let eps = ratio(1, 10);
    let caps = Caps {
        hom_k: 12,
        ..Caps::default()
    };
    let mut failures = Vec::new();
    let mut uncertified = 0;
    let mut worst = 0.0f64;
    for (i, case) in planted_cases().iter().enumerate() {
        let g = planted_blowup(&case.pattern, case.size, &mut rng(800 + i as u64))
            .unwrap()
            .graph;
        let mut schedule = ParameterSchedule::desk(case.m);
        schedule.floor = 2;
        let rep =
            approximate_edit_distance(&g, &case.fam, eps, &ApproxOptions::new(schedule)).unwrap();
        let truth = hom_edit_distance_exact_with(&case.pattern, &case.fam, &caps)
            .unwrap()
            .normalized;
        let err = (rep.estimate - truth).abs();
        worst = worst.max(to_f64(&err));
        uncertified += usize::from(!rep.certified);
        if err > eps {
            failures.push(format!(
                "case {i} ({}, k={}): estimate {} vs {}",
                case.name,
                case.pattern.k(),
                format_rational(&rep.estimate),
                format_rational(&truth)
            ));
        }
    }
    // family-free inputs must come back as exactly zero
    let k3 = ForbiddenFamily::clique_at_least(3);
    let k4 = ForbiddenFamily::clique_at_least(4);
    let odd = ForbiddenFamily::odd_cycles();
    let free: Vec<(Graph, &ForbiddenFamily, usize)> = vec![
        (blowup(&complete(2), 20).unwrap(), &k3, 10),
        (blowup(&complete(3), 16).unwrap(), &k4, 12),
        (blowup(&cycle(4), 16).unwrap(), &odd, 12),
        (
            planted_blowup(
                &WeightedCompleteGraph::uniform(3, ratio(1, 2)).unwrap(),
                16,
                &mut rng(88),
            )
            .unwrap()
            .graph,
            &k4,
            12,
        ),
    ];
    for (j, (g, fam, m)) in free.iter().enumerate() {
        let mut schedule = ParameterSchedule::desk(*m);
        schedule.floor = 2;
        let rep = approximate_edit_distance(g, fam, eps, &ApproxOptions::new(schedule)).unwrap();
        if rep.estimate != int(0) {
            failures.push(format!(
                "free input {j}: estimate {} via {}",
                format_rational(&rep.estimate),
                rep.route.as_str()
            ));
        }
    }
    let ok = failures.is_empty();
    report(
        8,
        ok,
        format!(
            "30 planted + {} free inputs, worst error {worst:.4}, {uncertified} uncertified runs",
            free.len()
        ),
    );
    assert!(ok, "{failures:#?}");
}

#[test]
fn criterion_09_sampling_concentration() {
    let k3 = ForbiddenFamily::clique_at_least(3);
    let caps = Caps::default();
    let values = sample_estimate(&complete(64), &k3, 8, 50, 9, &caps).unwrap();
    let exact_k64 = values.iter().all(|&v| v == ratio(12, 64));

    let patterns = [
        WeightedCompleteGraph::uniform(3, ratio(1, 1)).unwrap(),
        WeightedCompleteGraph::from_weights(3, vec![ratio(1, 1), ratio(1, 2), ratio(1, 2)])
            .unwrap(),
    ];
    let mut rates = Vec::new();
    for (i, w) in patterns.iter().enumerate() {
        let g = planted_blowup(w, 32, &mut rng(90 + i as u64))
            .unwrap()
            .graph;
        assert_eq!(g.n(), 96);
        let truth = hom_edit_distance_exact_with(w, &k3, &caps)
            .unwrap()
            .normalized;
        let vals = sample_estimate(&g, &k3, 12, 100, 900 + i as u64, &caps).unwrap();
        let close = vals
            .iter()
            .filter(|&&v| (v - truth).abs() <= ratio(1, 5))
            .count();
        rates.push(close);
    }
    let ok = exact_k64 && rates.iter().all(|&c| c >= 80);
    report(
        9,
        ok,
        format!("K64 all 12/64: {exact_k64}; blow-ups within 1/5: {rates:?} of 100"),
    );
    assert!(ok);
}

#[test]
fn criterion_10_packing_below_distance() {
    let fams = [
        ForbiddenFamily::clique_at_least(3),
        ForbiddenFamily::single(cycle(4)).unwrap(),
        ForbiddenFamily::odd_cycles(),
        ForbiddenFamily::clique_at_least(4),
        ForbiddenFamily::explicit(vec![cycle(4), cycle(5)]).unwrap(),
    ];
    let mut r = rng(10);
    let mut bad = Vec::new();
    for i in 0..200 {
        let n = r.gen_range(1..=8);
        let g = gnp(n, r.gen_range(0.3..0.9), &mut r);
        let fam = &fams[i % fams.len()];
        let nu = packing_number_exact(&g, fam).unwrap();
        let e = edit_distance_exact(&g, fam).unwrap().raw;
        if nu > e {
            bad.push((i, nu, e));
        }
    }
    report(
        10,
        bad.is_empty(),
        format!("200 pairs, {} violations", bad.len()),
    );
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn criterion_11_regularity_outputs_are_checked() {
    let mut silent = Vec::new();
    let mut certified = 0;
    let mut capped = 0;
    for seed in 0..50u64 {
        let mut r = rng(1100 + seed);
        let (g, m, preset, floor) = match seed % 5 {
            0 => (gnp(256, r.gen_range(0.2..0.8), &mut r), 2, Preset::Desk, 64),
            1 => (blowup(&complete(3), 64).unwrap(), 3, Preset::Desk, 64),
            2 => {
                let w = random_pattern(4, &mut r);
                (
                    planted_blowup(&w, 48, &mut r).unwrap().graph,
                    4,
                    Preset::Desk,
                    24,
                )
            }
            3 => (gnp(192, 0.5, &mut r), 3, Preset::Constant(ratio(1, 8)), 16),
            _ => (gnp(128, 0.3, &mut r), 2, Preset::Constant(ratio(1, 50)), 8),
        };
        let mut s = ParameterSchedule::desk(m).with_preset(preset);
        s.floor = floor;
        s.cap = 8;
        let run = e_regular_pair_of_partitions(&g, &s).unwrap();
        let order = run.pair.outer.order();
        let check = check_pair_of_partitions(&g, &run.pair, s.e(0), s.e(order)).unwrap();
        let reported_cap = matches!(
            run.stop,
            StopReason::IterationCap | StopReason::Floor | StopReason::OrderCap
        );
        if run.certified {
            certified += 1;
            if !check.passes || run.stop != StopReason::Regular {
                silent.push((seed, "certified but the checker disagrees"));
            }
        } else if reported_cap {
            capped += 1;
        } else {
            silent.push((seed, "uncertified without a cap reason"));
        }
    }
    let ok = silent.is_empty();
    report(
        11,
        ok,
        format!(
            "50 runs: {certified} certified and re-checked, {capped} cap exhaustion, {} silent",
            silent.len()
        ),
    );
    assert!(ok, "{silent:?}");
}
