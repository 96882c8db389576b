use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graphs are limited to {max} vertices, got {requested}")]
    TooManyVertices { requested: usize, max: usize },

    #[error("a vertex cannot be joined to itself (vertex {0})")]
    Loop(usize),

    #[error("no edge between {0} and {1}")]
    NoEdge(usize, usize),

    #[error("pair ({u}, {v}) has multiplicity {mult}, above the cap {cap}")]
    MultiplicityAboveCap { u: usize, v: usize, mult: u32, cap: u32 },

    #[error("the degeneracy parameter t must be at least 1")]
    ZeroT,

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("graph of order {order} exceeds the canonical-form bound {bound}")]
    CanonicalBound { order: usize, bound: usize },

    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringSize { got: usize, expected: usize },

    #[error("vertex {0} is uncolored")]
    Uncolored(usize),

    #[error("vertex set is not closed under {0}")]
    NotClosed(&'static str),

    #[error("no optimal coloring isolates vertex {0}: deleting it does not lower chi_t")]
    NoExtremeColoring(usize),

    #[error("graph is not chi_t-critical")]
    NotCritical,

    #[error("search budget of {0} nodes exhausted; result unknown")]
    BudgetExceeded(u64),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
