//! `bench`: wall-clock timings, one tab-separated row per run.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use edlab::graph::construct::gnp;
use edlab::hardness::{dgt_graph, spectrum_check};
use edlab::oracles::{
    edit_distance_exact, hom_edit_distance_exact_with, r_partite_distance_exact, Caps,
    ForbiddenFamily,
};
use edlab::rational::ratio;
use edlab::regularity::{e_regular_pair_of_partitions, ParameterSchedule};
use edlab::{Result, WeightedCompleteGraph};

fn time<T>(f: impl FnOnce() -> Result<T>) -> Result<f64> {
    let start = Instant::now();
    f()?;
    Ok(start.elapsed().as_secs_f64() * 1e3)
}

pub fn run(quick: bool, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |full: Vec<usize>, small: Vec<usize>| if quick { small } else { full };
    println!("operation\tsize\tmillis");
    let k3 = ForbiddenFamily::clique_at_least(3);
    for n in pick(vec![8, 9, 10], vec![6, 8]) {
        let g = gnp(n, 0.5, &mut rng);
        println!(
            "exact-k3\t{n}\t{:.3}",
            time(|| edit_distance_exact(&g, &k3))?
        );
    }
    for n in pick(vec![16, 20, 24], vec![10, 14]) {
        let g = gnp(n, 0.5, &mut rng);
        println!(
            "bipartite-distance\t{n}\t{:.3}",
            time(|| r_partite_distance_exact(&g, 2))?
        );
    }
    let caps = Caps {
        hom_k: 12,
        ..Caps::default()
    };
    for k in pick(vec![6, 9, 12], vec![4, 6]) {
        let w = WeightedCompleteGraph::from_fn(k, |_, _| ratio(rng.gen_range(0..=10), 10))?;
        println!(
            "hom-dist-k3\t{k}\t{:.3}",
            time(|| hom_edit_distance_exact_with(&w, &k3, &caps))?
        );
    }
    for q in pick(vec![7, 11, 13], vec![5, 7]) {
        println!(
            "dgt-spectrum\t{}\t{:.3}",
            q * q,
            time(|| spectrum_check(&dgt_graph(q, q.div_ceil(2))?))?
        );
    }
    for n in pick(vec![256, 512], vec![128]) {
        let g = gnp(n, 0.5, &mut rng);
        let s = ParameterSchedule::desk(2);
        println!(
            "regularity\t{n}\t{:.3}",
            time(|| e_regular_pair_of_partitions(&g, &s))?
        );
    }
    Ok(())
}
