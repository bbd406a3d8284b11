//! Ribbon graphs as signed rotation systems, their partial duals and
//! Petrials, medial graphs, and checkerboard colourings of twisted duals.

pub mod algorithms;
pub mod arrow;
pub mod boundary;
pub mod error;
pub mod graph;
pub mod iso;
pub mod medial;
pub mod operators;
pub mod predicates;
pub mod text;
pub mod workbench;

pub use boundary::{euler_characteristic, trace_boundary, BoundaryDecomposition, HalfEdgeSegment, Side};
pub use error::{Error, Result};
pub use graph::{Edge, EdgeEnd, EdgeId, EdgeSet, End, RibbonGraph, Sign, Vertex, VertexId, Violation};
pub use iso::{are_isomorphic, canonical_code, canonical_form};
pub use predicates::{Colour, FaceColouring};
