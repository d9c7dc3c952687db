//! Homotopy types of independence complexes: the wedge-of-spheres algebra,
//! closed-form predictions and graph reductions.

mod predict;
mod reduce;
mod types;

pub use predict::*;
pub use reduce::*;
pub use types::HomotopyType;
