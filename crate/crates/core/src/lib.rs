//! Arc-disjoint out- and in-branchings in semicomplete digraphs.
//!
//! A *good `(u,v)`-pair* of a digraph is an out-branching rooted at `u` and an
//! in-branching rooted at `v` with no common arc. For semicomplete digraphs
//! the question "is there one?" has an exact structural answer, and this
//! crate both decides it and backs every answer with something checkable:
//! either the two branchings or a certificate of non-existence that a
//! separate verifier re-derives from scratch.
//!
//! Layout:
//! - [`digraph`], [`flow`], [`iso`], [`io`]: the substrate.
//! - [`hamiltonian`]: constructive hamiltonian cycles and paths.
//! - [`branchings`]: Edmonds-type checks and out-branching/path pairs.
//! - [`structure`]: layered obstructions and arc-disjoint path pairs.
//! - [`goodpair`]: decision, construction and certificates.
//! - [`oracle`]: brute force and instance generators for differential tests.
// Adjacency-matrix code reads best with index loops.
#![allow(clippy::needless_range_loop)]

pub mod branchings;
pub mod config;
pub mod digraph;
pub mod error;
pub mod fixtures;
pub mod flow;
pub mod goodpair;
pub mod hamiltonian;
pub mod io;
pub mod iso;
pub mod oracle;
pub mod structure;
pub mod verdict;

pub use digraph::{ArcPath, Digraph, PairState, StrongDecomposition};
pub use error::{Error, Result};
pub use goodpair::{
    construct_good_pair, decide_good_pair, verify_good_pair, GoodPair, NoPairCertificate,
};
