//! Hardness instances for `r`-partite edit distance.
//!
//! A strongly regular graph on `GF(q)²` supplies the pseudo-random host; the
//! reduction ORs it with disjoint blow-ups of a source graph so that the
//! distance of the result encodes the source's own `r`-partite distance.

mod bipartite;
mod bundle;
mod dgt;
mod field;
mod reduction;

pub use bipartite::{bipartite_estimate, kst_bound, BipartiteEstimate};
pub use bundle::{
    dgt_meta_text, is_dgt_meta, meta_text, parse_bundle, read_bundle, verify_bundle,
    verify_dgt_bundle, write_bundle, write_dgt_bundle, BundleCheck, BundleReport, CheckStatus,
    GRAPH_FILE, META_FILE,
};
pub use dgt::{
    adjacency_spectrum, dgt_graph, edge_distribution_check, edge_distribution_check_single,
    spectrum_check, DgtGraph, MixingBound, SpectrumReport, SPECTRUM_CAP,
};
pub use field::{prime_power, supported_orders, FiniteField, MAX_ORDER};
pub use reduction::{
    build_reduction, choose_k, choose_q, edge_count_bounds, mu_eff, predict_e_r, predict_from,
    recover_ell, separation, EdgeCountReport, HardnessInstance, Recovered, Separation,
};
