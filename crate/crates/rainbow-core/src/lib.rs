//! Core algorithms for rainbow connectivity on small graphs.
//!
//! A path in an edge-colored graph is a *rainbow path* if no two of its edges
//! share a color, and a coloring is *rainbow connected* if every vertex pair
//! is joined by a rainbow path. This crate computes the rainbow connection
//! number `rc(G)` exactly on desk-scale graphs (up to 32 vertices), streams
//! isomorph-free connected graph classes, builds the hub-glued cycle-bouquet
//! extremal family with its explicit coloring, evaluates the known
//! closed-form bounds on `t(n,d)` (minimum edges over order-`n` graphs with
//! `rc <= d`), and computes `t(n,d)` itself by exhaustive search.
//!
//! The crate is `no_std` (with `alloc`); all operations are pure and
//! deterministic. File formats, parallel drivers, and the CLI live in the
//! companion `rainbow-tools` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod coloring;
pub mod construct;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod solver;
pub mod verify;

pub use coloring::EdgeColoring;
pub use graph::{Graph, MAX_VERTICES};
