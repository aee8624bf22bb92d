//! Seifert-graph block structure, block Seifert matrices and knot
//! polynomials of oriented link diagrams.
//!
//! Everything here is pure computation over `alloc` collections; text
//! formats beyond the PD token syntax, JSON and the command line live in the
//! `seifert` companion crate.
#![no_std]

extern crate alloc;

pub mod block_matrix;
mod dsu;
pub mod circles;
pub mod conway;
pub mod diagram;
pub mod error;
pub mod generate;
pub mod graph;
pub mod jones;
pub mod laurent;
pub mod matrix;
pub mod theorem;

pub use block_matrix::{EdgeSideSets, PlaneBlock, RegionComplex};
pub use circles::{CircleNesting, DiagramStats};
pub use diagram::{Diagram, OuterFace};
pub use error::{Error, Result};
pub use graph::{BlockDecomposition, BlockSign, BlockType, SeifertGraph};
pub use laurent::{LaurentPoly, Var};
pub use matrix::IntMatrix;

/// Sign of a crossing, an edge of the Seifert graph, or a vertex colouring.
pub type Sign = i8;
