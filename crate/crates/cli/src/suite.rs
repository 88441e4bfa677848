//! `verify --suite invariants`: quick randomized checks of the identities
//! every build must satisfy. One `ok`/`FAIL` line per check.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use edlab::extremal::{augment_cut, is_local_optimum, local_search_r_cut, turan_count};
use edlab::graph::construct::{blowup, complete, cycle, gnp, path};
use edlab::graph::enumerate::graphs_up_to;
use edlab::hardness::{
    build_reduction, dgt_graph, predict_e_r, recover_ell, spectrum_check, supported_orders,
    verify_bundle,
};
use edlab::oracles::{
    edit_distance_bruteforce, edit_distance_exact, packing_number_exact, r_partite_distance_exact,
    ForbiddenFamily,
};
use edlab::rational::ratio;
use edlab::Result;

type Check = (&'static str, fn(u64) -> Result<bool>);

const CHECKS: &[Check] = &[
    ("dgt-regular", dgt_regular),
    ("dgt-spectrum", dgt_spectrum),
    ("reduction-bundle", reduction_bundles),
    ("recover-predict", recover_predict),
    ("blowup-scaling", blowup_scaling),
    ("turan", turan),
    ("packing", packing),
    ("oracle-agreement", oracle_agreement),
    ("cuts", cuts),
];

pub fn run(seed: u64) -> bool {
    let mut all = true;
    for (name, check) in CHECKS {
        let outcome = check(seed);
        let ok = matches!(outcome, Ok(true));
        all &= ok;
        match outcome {
            Ok(true) => println!("ok {name}"),
            Ok(false) => println!("FAIL {name}"),
            Err(e) => println!("FAIL {name} {e}"),
        }
    }
    all
}

fn dgt_regular(_: u64) -> Result<bool> {
    for q in supported_orders().into_iter().filter(|&q| q <= 9) {
        for k in 1..=q + 1 {
            let d = dgt_graph(q, k)?;
            let n = q * q;
            if (0..n).any(|v| d.graph.degree(v) != d.degree())
                || 2 * d.graph.edge_count() != n * d.degree()
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn dgt_spectrum(_: u64) -> Result<bool> {
    for q in supported_orders().into_iter().filter(|&q| q <= 7) {
        for k in 1..=q + 1 {
            if !spectrum_check(&dgt_graph(q, k)?)?.passes() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn reduction_bundles(_: u64) -> Result<bool> {
    for (f, r, b) in [(cycle(5), 2, 2), (path(3), 3, 2), (complete(3), 2, 3)] {
        if !verify_bundle(&build_reduction(&f, r, b, ratio(3, 20))?)?.passes() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn recover_predict(_: u64) -> Result<bool> {
    for (r, b) in [(2, 1), (2, 2), (3, 2)] {
        let inst = build_reduction(&cycle(5), r, b, ratio(1, 4))?;
        for ell in 0..=50 {
            let rec = recover_ell(predict_e_r(&inst, ell), &inst)?;
            if rec.ell != ell as i128 || rec.tie {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn blowup_scaling(_: u64) -> Result<bool> {
    for f in graphs_up_to(4)? {
        for r in [2, 3] {
            let base = r_partite_distance_exact(f, r)?.raw;
            if r_partite_distance_exact(&blowup(f, 2)?, r)?.raw != 4 * base {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn turan(_: u64) -> Result<bool> {
    for n in 1..=8 {
        for r in 1..=3 {
            if turan_count(n, r) != n * (n - 1) / 2 - r_partite_distance_exact(&complete(n), r)?.raw
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn packing(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fam = ForbiddenFamily::clique_at_least(3);
    for _ in 0..20 {
        let g = gnp(7, 0.5, &mut rng);
        if packing_number_exact(&g, &fam)? > edit_distance_exact(&g, &fam)?.raw {
            return Ok(false);
        }
    }
    Ok(true)
}

fn oracle_agreement(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
    let fams = [
        ForbiddenFamily::clique_at_least(3),
        ForbiddenFamily::single(cycle(4))?,
        ForbiddenFamily::odd_cycles(),
    ];
    for i in 0..30 {
        let g = gnp(6, 0.5, &mut rng);
        let fam = &fams[i % fams.len()];
        if edit_distance_exact(&g, fam)?.raw != edit_distance_bruteforce(&g, fam)?.raw {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cuts(seed: u64) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
    for i in 0..20 {
        let g = gnp(12, 0.5, &mut rng);
        let cut = augment_cut(&g, &[vec![], vec![]])?;
        if ratio(cut.crossing as i128, 1) < cut.guarantee {
            return Ok(false);
        }
        if !is_local_optimum(&g, &local_search_r_cut(&g, 3, seed + i)?, 3) {
            return Ok(false);
        }
    }
    Ok(true)
}
