//! Maximal independent sets of a fixed size: counting, extremal constructions
//! and exhaustive verification of the sharp upper bound
//! `i_t(G) <= q^(t-r) (q+1)^r` where `n = q t + r`, `0 <= r < t`.
//!
//! The crate is `no_std` and only needs `alloc`. Graphs have at most 64
//! vertices so that every adjacency row is a single machine word; all set
//! algebra in the enumeration kernel is word-parallel.
//!
//! Module map:
//!
//! - [`graph`]: the immutable [`Graph`] value and its structural operations.
//! - [`enumerate`]: maximal independent set / maximal clique enumeration and
//!   per-size counting, plus a subset-scan oracle.
//! - [`extremal`]: the bound, the extremal graphs, proof-trace diagnostics and
//!   the scan accumulator behind exhaustive verification.
//! - [`canon`]: canonical forms and isomorphism for small graphs.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod canon;
pub mod enumerate;
mod error;
pub mod extremal;
pub mod graph;
mod vertex_set;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use enumerate::{
    enumerate_mis, maximal_clique_size_profile, maximal_independence_polynomial, mis_size_profile,
    SizeProfile,
};
pub use error::{Error, Result};
pub use extremal::{
    bound_f, build_h, build_turan, induction_split, labeled_graphs, moon_moser_total,
    no_t_clique_condition, verify_bound, BoundDecomposition, Coverage, ExtremalReport, Side,
    SplitReport, Subcase, VertexChoice,
};
pub use graph::{Graph, MAX_VERTICES};
pub use vertex_set::VertexSet;
