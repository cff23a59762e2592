//! Rainbow vertex-disconnection colorings: verification, exact solving,
//! closed-form families, and extremal size formulas.
//!
//! A vertex coloring of a connected graph is accepted when every pair of
//! vertices has a *rainbow vertex cut*: a set of distinctly colored vertices
//! whose removal separates the pair (for adjacent pairs the shared edge is
//! removed first, and one endpoint may join the cut). The least number of
//! colors admitting such a coloring is the graph's rainbow
//! vertex-disconnection number, `rvd`.
//!
//! The crate provides:
//! - [`graph`]: small simple graphs with edge-list and graph6 input/output;
//! - [`rainbow`]: the cut checker and coloring verifier, with certificates;
//! - [`solver`]: exact values by block decomposition and a pruned
//!   partition search, plus lower/upper bounds;
//! - [`sparse`]: colorings within the `m − n + 2` budget built by cycle
//!   removal, degree-two reduction, and pendant-tree stripping;
//! - [`families`]: cycles, wheels, complete and complete multipartite
//!   graphs with closed-form values and verified colorings;
//! - [`extremal`]: minimum and maximum edge counts achievable at a given
//!   order and value, with witness constructions;
//! - [`enumerate`] and [`audit`]: exhaustive small-graph enumeration and a
//!   pass/fail report checking every implemented law against it.

pub mod audit;
pub mod blocks;
pub mod coloring;
pub mod connectivity;
pub mod cycles;
pub mod enumerate;
pub mod extremal;
pub mod families;
pub mod girth;
pub mod graph;
pub mod graph6;
pub mod rainbow;
pub mod solver;
pub mod sparse;

pub use audit::{audit, AuditError, AuditOptions, AuditReport, CheckResult, CheckStatus};
pub use blocks::{block_decomposition, BlockDecomposition};
pub use coloring::{ColoringError, VertexColoring};
pub use connectivity::{connectivity, local_connectivity, upper_connectivity};
pub use enumerate::{
    canonical_key, connected_representatives, for_each_connected_labeled, EnumerateError,
};
pub use extremal::{gen_gk, gen_h, max_size_bounds, min_size, size_bounds, ExtremalError, SizeBound};
pub use families::{family_coloring, family_value, FamilyError, FamilySpec};
pub use girth::girth;
pub use graph::{Graph, GraphError, GraphFormat, ParseError};
pub use rainbow::{find_rainbow_cut, verify_coloring, CutCertificate, Verification};
pub use solver::{
    lower_bound, rvd_exact, rvd_exact_flat, rvd_exact_flat_with, rvd_exact_with, upper_bound,
    BoundReason, LowerBound, RvdResult, SolverError, SolverOptions,
};
pub use sparse::{find_removable_cycle, sparse_coloring, SparseError};
