use thiserror::Error;

use crate::deform::DeformError;
use crate::graph::GraphError;
use crate::group::GroupError;
use crate::involution::InvolutionError;
use crate::paths::PathError;
use crate::young::DiagramError;

/// Any failure along the graph → paths → group pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Deform(#[from] DeformError),
    #[error("size limit exceeded: {0}")]
    Budget(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures caused by a configured size budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::Budget(_) | Error::Graph(GraphError::SizeLimit(_)) | Error::Path(PathError::SizeLimit { .. })
        )
    }
}
