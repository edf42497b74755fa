//! Balanced line separators for disk intersection graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It contains the geometric
//! kernel, the intersection-graph builder, an exact centerpoint construction,
//! all separator algorithms and the instance generators. File formats, the
//! experiment drivers and the command line live in the `disksever` crate.
#![cfg_attr(not(any(feature = "std", test)), no_std)]

extern crate alloc;

mod error;
mod math;

pub mod centerpoint;
pub mod generators;
pub mod geom;
pub mod graph;
pub mod instance;
pub mod rng;
pub mod separators;

pub use error::{Error, Result};
pub use geom::{classify, classify_all, signed_distance, Classification, Disk, Line, Point, SideClass};
pub use graph::{build_graph, is_connected, IntersectionGraph, UnionFind};
pub use instance::{Instance, Provenance};
pub use separators::{Algorithm, SeparatorResult};
