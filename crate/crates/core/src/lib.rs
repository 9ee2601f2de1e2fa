//! Exact Clar numbers and structural transformations for fullerene graphs.
//!
//! The crate is organized bottom-up:
//!
//! * [`embedding`] – rotation systems, faces, dual, truncation, leapfrog,
//!   bipartitions, face 3-colorings and canonical codes.
//! * [`fullerene`] – validation, face spirals, isomer enumeration and the
//!   cyclic edge-cut checker.
//! * [`clar`] – perfect matchings, the branch-and-bound Clar solver, the
//!   matching-enumeration oracle and Clar cover verification.
//! * [`transforms`] – expansion of a Clar cover, the associated graph of its
//!   matching, reverse leapfrog, parent graphs, generalized diagonalizations
//!   and contraction back to fullerenes.
//! * [`io`] – adjacency JSON, spiral text files and DOT export.

pub mod embedding;
pub mod fullerene;
pub mod clar;
pub mod transforms;
pub mod io;
