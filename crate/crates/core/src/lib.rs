//! Recognition of equistable graphs with bounded weights or a prescribed
//! target.
//!
//! A graph is equistable when positive integer weights `w` and a target `t`
//! exist such that a vertex set is a maximal stable set exactly when its
//! weight is `t`. This crate decides, for a weight bound `k` or a target `t`,
//! whether such a structure exists and produces one:
//!
//! * [`twins`] computes the twin partition and quotient graph;
//! * [`recognizer`] searches candidate weight assignments over twin classes;
//! * [`kernel`] shrinks the input to a size bounded by the parameter and
//!   lifts structures back;
//! * [`oracle`] holds exhaustive reference procedures for small graphs.

pub mod graph;
pub mod kernel;
pub mod oracle;
pub mod recognizer;
pub mod twins;

pub use graph::{Graph, GraphError, ParseError, VertexSet};
pub use kernel::{
    kernel_k, kernel_target_t, lift_structure, normalize_and_lift, recognize_fpt,
    recognize_target_fpt, Kernel, KernelOutcome, LiftingRecipe, RejectReason,
};
pub use recognizer::{recognize, EquistableStructure, SearchOptions};
pub use twins::{quotient_graph, twin_partition, ClassKind, QuotientGraph, TwinPartition};
