//! Derangement action digraphs.
//!
//! For a finite set `X = {0, .., n-1}` and a non-empty set `S` of fixed-point-free
//! permutations of `X`, the derangement action digraph `DA(X, S)` has vertex set `X`
//! and an arc `(x, x^s)` for every `x` and every `s` in `S`. This crate builds those
//! digraphs, decides when they are regular graphs, decomposes regular digraphs and
//! graphs back into derangement sets, and provides the product, isomorphism and
//! group-theoretic constructions that go with them.
//!
//! Permutations act on the right: `x^p` is `p.apply(x)` and `p.compose(&q)` is
//! "first `p`, then `q`".
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command-line
//! tool live in the companion `derange` crate.
#![no_std]

extern crate alloc;

mod error;

pub mod dad;
pub mod decompose;
pub mod digraph;
pub mod iso;
pub mod perm;
pub mod products;
pub mod twosided;

pub use dad::{AnalysisReport, Component, DerangementSet};
pub use decompose::{Matching, PerfectMatching, TwoFactor};
pub use digraph::{Connectivity, SimpleDigraph, ValencyProfile};
pub use error::Error;
pub use iso::AutGroup;
pub use perm::{CycleStructure, Permutation};
pub use products::{ProductKind, RegularSubgroup};
pub use twosided::{FiniteGroup, GeneratedGroup, TwoSided};

pub type Result<T, E = Error> = core::result::Result<T, E>;
