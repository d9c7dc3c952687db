//! Independence complexes of graphs: construction, discrete Morse matchings,
//! homology and homotopy-type prediction.

pub mod complex;
pub mod error;
pub mod family;
pub mod graph;
pub mod homology;
pub mod homotopy;
pub mod label;
pub mod morse;
pub mod verify;

pub use complex::{FaceSource, Limits, SimplicialComplex};
pub use error::{Error, Result};
pub use family::Family;
pub use graph::Graph;
pub use homotopy::HomotopyType;
pub use label::Label;
