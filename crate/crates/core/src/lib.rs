#![forbid(unsafe_code)]

//! Local antimagic labelings of bridge (theta) graphs.
//!
//! A *local antimagic labeling* of a connected graph is a bijection from its
//! edges onto `1..=q` (where `q` is the number of edges) such that any two
//! adjacent vertices receive distinct *induced colors*, the induced color of a
//! vertex being the sum of the labels on its incident edges. The *local
//! antimagic chromatic number* of a graph is the least number of distinct
//! induced colors over all such labelings.
//!
//! This crate provides:
//!
//! - [`graphs`]: builders for theta (bridge) graphs, spiders and one-point
//!   unions of cycles, plus vertex-merging transformations;
//! - [`labeling`]: edge labelings, the ground-truth verifier and a plain-text
//!   serialization format;
//! - [`sequences`]: the interleaved arithmetic-progression toolkit used by the
//!   constructive labelings;
//! - [`constructions`]: constructive 2- and 3-colorings for several theta,
//!   spider-merge and cycle-union families;
//! - [`analysis`]: the complete classification of theta graphs with local
//!   antimagic chromatic number 2, counting-based lower bounds, and an exact
//!   classifier combining the constructions with the solver;
//! - [`solver`]: an exact backtracking solver for small graphs, together with
//!   an unpruned reference engine used to cross-check it;
//! - [`export`]: DOT output with vertices colored by induced-color class.
//!
//! All label and color arithmetic is exact `i64`; labels are at most `q` and
//! induced colors at most `q^2`, so this is safe for graphs with up to a
//! million edges, far beyond anything the solver or the constructions handle.

pub mod analysis;
pub mod constructions;
pub mod export;
pub mod graphs;
pub mod labeling;
pub mod sequences;
pub mod solver;

pub use graphs::{CycleUnionSpec, Graph, SpiderSpec, ThetaSpec};
pub use labeling::{verify, EdgeLabeling, VerificationReport};
