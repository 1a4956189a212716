//! Triangular closed-path structures and their vertex colorings, plus the
//! binary prefix-code tooling (exact Kraft sums, code tries, canonical
//! construction, depth-parity tree coloring).
//!
//! ```
//! use tripath::structure::{AdjacencyMode, TriangularStructure};
//! use tripath::coloring::{is_proper, periodic_coloring, row_periodicity};
//!
//! let s = TriangularStructure::build(4).unwrap();
//! assert_eq!(s.points().len(), 13);
//! let c = periodic_coloring(&s);
//! assert!(is_proper(&s.to_graph(AdjacencyMode::PathAlongLines), &c).unwrap());
//! assert!(row_periodicity(&s, &c).unwrap());
//! ```

pub mod cli;
pub mod coloring;
pub mod error;
pub mod prefixcode;
pub mod structure;

pub use error::{Error, Result};
