use thiserror::Error;

use crate::variants::DomVariant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge endpoint {vertex} out of range for graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("label count {found} does not match vertex count {n}")]
    LabelCount { found: usize, n: usize },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is not a member of the set")]
    VertexNotInSet(usize),
    #[error("graphs with {0} vertices are not supported (maximum {max})", max = crate::graph::MAX_VERTICES)]
    UnsupportedSize(usize),

    #[error("graph6: malformed size header")]
    MalformedHeader,
    #[error("graph6: body too short for {n} vertices")]
    TruncatedBody { n: usize },
    #[error("graph6: unexpected trailing characters after the body")]
    TrailingData,
    #[error("graph6: invalid character {0:?}")]
    InvalidCharacter(char),
    #[error("graph6: nonzero padding bits")]
    NonCanonicalPadding,
    #[error("edge list: {0}")]
    EdgeListSyntax(String),

    #[error("sets have different cardinalities ({0} vs {1})")]
    CardinalityMismatch(usize, usize),
    #[error("{variant} parameter is {value}; no variant graph exists")]
    ParameterUndefinedOrInfinite { variant: DomVariant, value: String },
    #[error("model {0} cannot be used here")]
    UnsupportedModel(crate::reconfig::AdjacencyModel),

    #[error("host graph must have at least one vertex")]
    EmptyHost,
    #[error("construction {0:?} cannot be multiplied")]
    UnsupportedKind(crate::constructions::ConstructionKind),
    #[error("extra copy count must be at least 1")]
    NoExtraCopies,
    #[error("no realizability construction exists for {0}")]
    NoConstructionForVariant(DomVariant),
    #[error("{variant}: computed parameter {found} differs from the closed form {expected}")]
    ParameterMismatch {
        variant: DomVariant,
        expected: usize,
        found: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
