//! Path-permutation groups of diamond-shaped graded graphs.
//!
//! A graded graph whose 2-intervals are all chains or rhombi carries one
//! involution per inner level, acting on its maximal paths by flipping the
//! path across a rhombus. This crate builds such graphs (Boolean lattices,
//! Pascal intervals, Young and skew Young intervals, ideal lattices),
//! computes the generated permutation groups exactly and classifies them,
//! and realizes Young's orthogonal form as a deformation of the same
//! involutions.

pub mod deform;
mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod involution;
pub mod limits;
pub mod paths;
pub mod perm;
pub mod survey;
pub mod young;

pub use error::Error;
pub use families::{boolean_lattice, ideal_lattice, pascal_interval, young_interval, FinitePoset};
pub use graph::{GradedGraph, GraphError, TwoIntervalKind};
pub use group::{classify_group, Classification, GroupTag, StrongGeneratingChain};
pub use involution::{all_generators, sigma};
pub use limits::Limits;
pub use paths::{count_paths, PathTable};
pub use perm::Permutation;
pub use young::{hook_length_dim, StandardTableau, YoungDiagram};
