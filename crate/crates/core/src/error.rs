use thiserror::Error;

use crate::facet::{FacetSet, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("facets have mixed cardinalities ({expected} and {found})")]
    NonUniform { expected: usize, found: usize },
    #[error("duplicate facet {0}")]
    DuplicateFacet(FacetSet),
    #[error("vertex {label} outside [1, {n}]")]
    VertexOutOfRange { label: Label, n: Label },
    #[error("vertex {0} lies in no facet")]
    IsolatedVertex(Label),
    #[error("{0} is not a face")]
    NotAFace(FacetSet),
    #[error("vertex sets overlap at {0}")]
    OverlappingVertexSets(Label),
    #[error("ridge {0} lies in three or more facets")]
    NotAPseudomanifold(FacetSet),
    #[error("shift by {0} sends a label below 1")]
    LabelUnderflow(i64),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("flip precondition failed: {0}")]
    FlipPreconditionFailed(String),
    #[error("not a flip configuration: {0}")]
    NotAFaceConfiguration(String),
    #[error("ball replacement guard failed: {0}")]
    ReplacementGuardFailed(String),
    #[error("boundaries of old and new ball differ")]
    BoundaryMismatch,
    #[error("boundary undefined: {0}")]
    BoundaryUndefined(String),
    #[error("label {0} is already in use")]
    StaleLabel(Label),
    #[error("order is not a permutation of the facets: {0}")]
    NotAPermutation(String),
    #[error("{0} is not a subcomplex of the host")]
    NotASubcomplex(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("search budget exhausted with {lower} <= T <= {upper}")]
    BudgetExhausted { lower: usize, upper: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}
