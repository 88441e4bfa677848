use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{edit_distance_exact_with, Caps, ForbiddenFamily};
use crate::par;
use crate::rational::Rational;

/// For each trial, the exact normalized distance of the subgraph induced by
/// `d` distinct uniformly chosen vertices. Trial `t` draws from stream `t`
/// of a ChaCha generator seeded with `seed`, so results do not depend on
/// scheduling.
pub fn sample_estimate(
    g: &Graph,
    fam: &ForbiddenFamily,
    d: usize,
    trials: usize,
    seed: u64,
    caps: &Caps,
) -> Result<Vec<Rational>> {
    if d > g.n() {
        return Err(Error::precondition(format!(
            "cannot sample {d} of {} vertices",
            g.n()
        )));
    }
    let ids: Vec<u64> = (0..trials as u64).collect();
    let out = par::map(&ids, |&t| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t);
        let mut vs = sample(&mut rng, g.n(), d).into_vec();
        vs.sort_unstable();
        edit_distance_exact_with(&g.induced_subgraph(&vs), fam, caps).map(|r| r.normalized)
    });
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use crate::rational::ratio;

    #[test]
    fn complete_host_gives_turan_value() {
        let fam = ForbiddenFamily::explicit(vec![complete(3)]).unwrap();
        let v = sample_estimate(&complete(64), &fam, 8, 20, 1, &Caps::default()).unwrap();
        assert!(v.iter().all(|&x| x == ratio(12, 64)));
    }

    #[test]
    fn bipartite_host_gives_zero() {
        let v = sample_estimate(
            &complete_bipartite(20, 20),
            &ForbiddenFamily::odd_cycles(),
            12,
            30,
            5,
            &Caps::default(),
        )
        .unwrap();
        assert!(v.iter().all(|x| *x == ratio(0, 1)));
    }

    #[test]
    fn seeded_runs_repeat_and_caps_apply() {
        let g = gnp(40, 0.5, &mut <ChaCha8Rng as SeedableRng>::seed_from_u64(8));
        let fam = ForbiddenFamily::explicit(vec![complete(3)]).unwrap();
        let a = sample_estimate(&g, &fam, 8, 10, 42, &Caps::default()).unwrap();
        assert_eq!(
            a,
            sample_estimate(&g, &fam, 8, 10, 42, &Caps::default()).unwrap()
        );
        let two = ForbiddenFamily::explicit(vec![complete(3), cycle(4)]).unwrap();
        assert!(matches!(
            sample_estimate(&g, &two, 12, 1, 0, &Caps::default()),
            Err(Error::SizeLimit { .. })
        ));
        assert!(sample_estimate(&g, &fam, 41, 1, 0, &Caps::default()).is_err());
    }
}
