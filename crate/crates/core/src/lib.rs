pub mod adjacency_matroid;
pub mod binary_matroid;
pub mod delta_matroid;
pub mod error;
pub mod format;
pub mod four_regular;
pub mod gf2;
pub mod graph;
pub mod polynomials;
pub mod verify;

pub use binary_matroid::BinaryMatroid;
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector, Subspace};
pub use graph::{LoopedSimpleGraph, MultiGraph, VariantKind};
