use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::io::write_weighted;
use crate::graph::{Graph, WeightedCompleteGraph};
use crate::oracles::{
    edit_distance_exact_with, hom_edit_distance_exact_with, Caps, ForbiddenFamily, NamedFamily,
};
use crate::rational::{format_rational, ratio, to_f64, Rational};
use crate::regularity::{
    e_regular_pair_of_partitions, reduced_weighted_graph, ParameterSchedule, RefinedPartition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Small enough for the exact oracle.
    ExactSmall,
    /// Fewer than `εn²` edges; the answer 0 is within `ε`.
    Sparse,
    /// Bipartite host and only non-bipartite members: already free.
    TrivialBipartite,
    Pipeline,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::ExactSmall => "exact-small",
            Route::Sparse => "sparse",
            Route::TrivialBipartite => "trivial-bipartite",
            Route::Pipeline => "pipeline",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ApproxOptions {
    pub schedule: ParameterSchedule,
    pub caps: Caps,
    /// Snap reduced weights down to the grid `{0, ε, 2ε, …, 1}`.
    pub snap: bool,
}

/// Default cap on the reduced graph's order. The pipeline needs at least
/// `1/ε` classes, so the oracle default of 8 would rule out `ε = 1/10`.
pub const PIPELINE_HOM_K: usize = 12;

impl ApproxOptions {
    pub fn new(schedule: ParameterSchedule) -> Self {
        ApproxOptions {
            schedule,
            caps: Caps {
                hom_k: PIPELINE_HOM_K,
                ..Caps::default()
            },
            snap: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ApproxReport {
    pub n: usize,
    pub eps: Rational,
    pub route: Route,
    pub estimate: Rational,
    /// False when the partition stage stopped on a cap without passing the
    /// regularity check; the estimate is then best effort.
    pub certified: bool,
    pub diagnostics: Option<String>,
    pub weights: Option<WeightedCompleteGraph>,
    pub partition: Option<RefinedPartition>,
}

impl ApproxReport {
    fn direct(n: usize, eps: Rational, route: Route, estimate: Rational) -> Self {
        ApproxReport {
            n,
            eps,
            route,
            estimate,
            certified: true,
            diagnostics: None,
            weights: None,
            partition: None,
        }
    }

    /// `key=value` lines; diagnostics lines are prefixed with `# `, and the
    /// reduced graph follows in the weighted-graph format after a `W` line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "route={}", self.route.as_str());
        let _ = writeln!(s, "n={}", self.n);
        let _ = writeln!(s, "eps={}", format_rational(&self.eps));
        let _ = writeln!(s, "estimate={}", format_rational(&self.estimate));
        let _ = writeln!(s, "decimal={:.6}", to_f64(&self.estimate));
        let _ = writeln!(s, "certified={}", self.certified);
        if let Some(d) = &self.diagnostics {
            for line in d.lines() {
                let _ = writeln!(s, "# {line}");
            }
        }
        if let Some(w) = &self.weights {
            s.push_str("W\n");
            s.push_str(&write_weighted(w));
        }
        s
    }
}

/// Largest host the exact route takes for this family.
fn exact_cap(fam: &ForbiddenFamily, caps: &Caps) -> usize {
    match fam {
        ForbiddenFamily::Named(NamedFamily::OddCycles) => caps.odd_cycle_n,
        _ => caps.exact_n,
    }
}

pub fn approximate_edit_distance(
    g: &Graph,
    fam: &ForbiddenFamily,
    eps: Rational,
    opts: &ApproxOptions,
) -> Result<ApproxReport> {
    if eps <= ratio(0, 1) || eps > ratio(1, 2) {
        return Err(Error::precondition("ε must lie in (0, 1/2]"));
    }
    let n = g.n();
    if n <= exact_cap(fam, &opts.caps) {
        let d = edit_distance_exact_with(g, fam, &opts.caps)?;
        return Ok(ApproxReport::direct(
            n,
            eps,
            Route::ExactSmall,
            d.normalized,
        ));
    }
    if ratio(g.edge_count() as i128, (n * n) as i128) < eps {
        return Ok(ApproxReport::direct(n, eps, Route::Sparse, ratio(0, 1)));
    }
    if g.is_bipartite() && fam.all_members_non_bipartite() {
        return Ok(ApproxReport::direct(
            n,
            eps,
            Route::TrivialBipartite,
            ratio(0, 1),
        ));
    }

    let mut schedule = opts.schedule.clone();
    let needed = (ratio(1, 1) / eps).ceil().to_integer() as usize;
    if schedule.m < needed {
        return Err(Error::precondition(format!(
            "initial order {} is below 1/ε = {needed}",
            schedule.m
        )));
    }
    if schedule.m > opts.caps.hom_k {
        return Err(Error::size("initial order", schedule.m, opts.caps.hom_k));
    }
    let limit = opts.caps.hom_k;
    schedule.max_order = Some(schedule.max_order.map_or(limit, |m| m.min(limit)));
    let run = e_regular_pair_of_partitions(g, &schedule)?;
    let mut w = reduced_weighted_graph(g, &run.pair.outer)?;
    if opts.snap {
        w = w.snap_to_grid(eps)?;
    }
    let h = hom_edit_distance_exact_with(&w, fam, &opts.caps)?;
    Ok(ApproxReport {
        n,
        eps,
        route: Route::Pipeline,
        estimate: h.normalized,
        certified: run.certified,
        diagnostics: Some(run.diagnostics()),
        weights: Some(w),
        partition: Some(run.pair),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::construct::*;
    use num_traits::Signed;

    fn k3() -> ForbiddenFamily {
        ForbiddenFamily::explicit(vec![complete(3)]).unwrap()
    }

    fn options(m: usize, floor: usize) -> ApproxOptions {
        let mut s = ParameterSchedule::desk(m);
        s.floor = floor;
        ApproxOptions::new(s)
    }

    #[test]
    fn routes() {
        let o = options(10, 4);
        let e = ratio(1, 10);
        let r = approximate_edit_distance(&complete(4), &k3(), e, &o).unwrap();
        assert_eq!((r.route, r.estimate), (Route::ExactSmall, ratio(2, 16)));
        let r = approximate_edit_distance(&complete_bipartite(20, 20), &k3(), e, &o).unwrap();
        assert_eq!(
            (r.route, r.estimate),
            (Route::TrivialBipartite, ratio(0, 1))
        );
        let sparse = pad(&complete(5), 40).unwrap();
        let r = approximate_edit_distance(&sparse, &k3(), e, &o).unwrap();
        assert_eq!((r.route, r.estimate), (Route::Sparse, ratio(0, 1)));
        assert!(approximate_edit_distance(&complete(4), &k3(), ratio(0, 1), &o).is_err());
    }

    #[test]
    fn tripartite_blowup_is_close_to_one_ninth() {
        // classes of 16 split into 4 outer classes each
        let g = blowup(&complete(3), 16).unwrap();
        let r = approximate_edit_distance(&g, &k3(), ratio(1, 10), &options(12, 2)).unwrap();
        assert_eq!(r.route, Route::Pipeline);
        assert!(
            (r.estimate - ratio(1, 9)).abs() <= ratio(1, 10),
            "{}",
            r.to_text()
        );
        assert!(r.to_text().starts_with("route=pipeline\n"));
        // the reduced graph of a blow-up aligned with its classes is itself a blow-up
        assert_eq!(r.estimate, ratio(1, 9));
    }

    #[test]
    fn pipeline_needs_order_at_least_one_over_eps() {
        let g = blowup(&complete(3), 16).unwrap();
        assert!(approximate_edit_distance(&g, &k3(), ratio(1, 10), &options(4, 2)).is_err());
        // 1/ε = 20 classes exceed the reduced-graph cap
        assert!(matches!(
            approximate_edit_distance(&g, &k3(), ratio(1, 20), &options(20, 2)),
            Err(Error::SizeLimit { .. })
        ));
    }
}
