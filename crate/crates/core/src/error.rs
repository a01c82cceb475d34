use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid size for {family}: {detail}")]
    InvalidSize {
        family: &'static str,
        detail: String,
    },
    #[error("vertex {vertex} is not in a graph of order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("edge {{{0}, {1}}} is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge {{{0}, {1}}} appears twice")]
    DuplicateEdge(usize, usize),
    #[error("refusing to materialize {edges} edges (limit {limit})")]
    TooLarge { edges: u64, limit: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
