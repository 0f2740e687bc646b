use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("node {node} out of range for a graph with {num_nodes} nodes")]
    NodeOutOfRange { node: u32, num_nodes: usize },
    #[error("self-loop on node {0}")]
    SelfLoop(u32),
    #[error("label {label} outside alphabet of size {alphabet_size}")]
    LabelOutOfRange { label: u16, alphabet_size: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("{edges} temporal edges exceed the brute-force guard of {guard}")]
    TooLarge { edges: usize, guard: usize },
    #[error("graph contains no pair of incident temporal edges")]
    NoWedges,
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
