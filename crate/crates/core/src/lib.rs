//! Planar (2,k)-sparsity toolkit: pebble-game sparsity testing, plane
//! multigraph duality, Henneberg-style construction moves, good
//! orientations, and contact representations with circular arcs and wedges.

pub mod error;
pub mod graph;
pub mod format;
pub mod fixtures;
pub mod par;
pub mod sparsity;
pub mod moves;
pub mod orient;
pub mod geom;
pub mod hardness;

pub use error::{Error, Result};
pub use graph::{Dart, EdgeId, Face, PlaneGraph, VertexId};
