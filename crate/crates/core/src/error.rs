use thiserror::Error;

use crate::label::Label;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(Label),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(Label),

    #[error("self-pair ({0}, {0}) is not an edge; set a loop explicitly")]
    SelfPair(Label),

    #[error("vertices {0} and {1} are already adjacent")]
    AlreadyAdjacent(Label, Label),

    #[error("required edge ({0}, {1}) is missing")]
    MissingEdge(Label, Label),

    #[error("vertex `{0}` is not simplicial or is isolated")]
    NotSimplicial(Label),

    #[error("not a face of the complex: {0}")]
    NotAFace(String),

    #[error("malformed matching: {0}")]
    InvalidMatching(String),

    #[error("matching is not acyclic")]
    CyclicMatching,

    #[error("malformed homotopy type: {0}")]
    InvalidHomotopyType(String),

    #[error("face limit exceeded: more than {limit} faces")]
    ResourceLimit { limit: usize },

    #[error("dimension {0} was not enumerated")]
    DimensionUnavailable(isize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}
