use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidFamilyParams { family: &'static str, reason: String },
    #[error("edge list does not form a tree: {0}")]
    NotATree(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("labeling has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("label {0} is not one of -1, 1, 2")]
    InvalidLabel(i64),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("no construction for family {0}")]
    UnsupportedFamily(&'static str),
    #[error("graph has {n} vertices, limit for this operation is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("graph is not 3-regular")]
    NotCubic,
    #[error("exact 2-packing search supports at most {limit} vertices, graph has {n}")]
    TooLargeForExact { n: usize, limit: usize },
    #[error("minimum degree {0} is below 2")]
    MinDegreeTooLow(usize),
    #[error("vertex set is not a 2-packing: {0}")]
    NotAPacking(String),
    #[error("invalid solve options: {0}")]
    InvalidOptions(String),
    #[error("construction for {family} produced an invalid labeling ({violations} violations)")]
    ConstructionInvalid { family: &'static str, violations: usize },
}
