//! Regular pairs, partition refinement, and pairs of partitions whose inner
//! pairs are regular and whose inner densities track the outer ones.

pub mod check;
pub mod lemma;
pub mod pair;
pub mod partition;
pub mod reduced;
pub mod refine;
pub mod schedule;

pub use check::{check_pair_of_partitions, CheckReport};
pub use lemma::{e_regular_pair_of_partitions, Iteration, RegularityRun, StopReason};
pub use pair::{certify_or_witness, is_regular, min_irregularity, Certificate, Verdict, Witness};
pub use partition::{Equipartition, RefinedPartition};
pub use reduced::{embedding_search, reduced_weighted_graph};
pub use refine::{refine_partition, RefineOutcome, RefineStop, Round};
pub use schedule::{ParameterSchedule, Preset};
