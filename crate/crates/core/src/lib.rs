//! Exact Roman domination on small graphs.
//!
//! This crate is `no_std` and only needs an allocator. It provides
//!
//! * [`Graph`], a dense simple undirected graph with graph6 encoding,
//!   neighbourhood primitives and small-order canonical forms,
//! * exact solvers for the domination number, the Roman domination number,
//!   the differential and efficient dominating sets ([`solvers`]),
//! * vertex-removal class predicates and the Roman bondage number
//!   ([`classifier`]),
//! * the labelled tree family built from `K_{1,2}` by four gadget operations,
//!   with a generator and two independent recognisers ([`labelled`]),
//! * lazy instance streams of free trees, connected graphs and unicyclic
//!   graphs ([`enumeration`]).
//!
//! File IO, the theorem-check harness and the command-line tool live in the
//! `roman-verify` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod canon;
pub mod classifier;
pub mod enumeration;
mod error;
pub mod families;
mod graph;
pub mod graph6;
pub mod labelled;
pub mod solvers;
mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Component, Edge, Graph, VertexDeletion};
pub use solvers::{DominationSummary, RomanFunction, Solver};
pub use vertex_set::VertexSet;
