use thiserror::Error;

/// Errors reported by the library operations.
///
/// Failures that carry a structural certificate (no good pair, a deficient
/// set, a path obstruction) are not errors; they are returned as ordinary
/// values. The variants here are precondition violations, resource limits,
/// and `InternalInconsistency`, which always indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel arc {0} -> {1}")]
    ParallelArc(usize, usize),
    #[error("vertices {a} and {b} are not adjacent")]
    NonAdjacentPair { a: usize, b: usize },
    #[error("digraph is not semicomplete: vertices {a} and {b} are not adjacent")]
    NotSemicomplete { a: usize, b: usize },
    #[error("digraph is not strong")]
    NotStrong,
    #[error("digraph is strong")]
    Strong,
    #[error("digraph is too small for this operation")]
    TooSmall,
    #[error("digraph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("digraphs have different orders ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("bad endpoints: {0}")]
    BadEndpoints(String),
    #[error("no path exists: {0}")]
    NoPath(String),
    #[error("no ({from},{to})-path in the digraph")]
    NoBasePath { from: usize, to: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("constraint could not be satisfied within {attempts} attempts")]
    ConstraintUnsatisfiable { attempts: usize },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
