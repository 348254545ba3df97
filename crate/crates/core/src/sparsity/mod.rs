//! Pebble-game engine for (2,k)-sparsity, orientations, tight components,
//! spanning-tree decomposition, and augmentation to tight graphs.

mod pebble;
mod orientation;
mod components;
mod trees;
mod augment;

pub use pebble::{is_sparse, is_sparse_edges, is_tight, is_tight_edges, PebbleGame};
pub use orientation::{two_orientation, Orientation, OrientationVariant, RootedOrientation};
pub use components::{is_tight_subset, tight_components};
pub use trees::spanning_tree_decomposition;
pub use augment::augment_to_tight;
