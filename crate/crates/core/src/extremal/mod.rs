//! Turán counts, large `r`-cuts and the minimum-degree equality harness.

mod cut;
mod harness;
mod turan;

pub use cut::{augment_cut, crossing_edges, is_local_optimum, local_search_r_cut, AugmentedCut};
pub use harness::{min_degree_equality_harness, HarnessConfig, MinDegreeRecord, MinDegreeReport};
pub use turan::{above_colourability_threshold, turan_count};
