use thiserror::Error;

/// Errors raised anywhere in the laboratory.
///
/// `Integrity` and `TheoremViolation` are hard failures: they can only come
/// from a bug or from a counterexample to a proven statement, and callers
/// should surface them rather than recover.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("unknown mark `{mark}` on fixture `{fixture}`")]
    UnknownMark { fixture: String, mark: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is not unicyclic and connected")]
    NotUnicyclic,
    #[error("permutation is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("automorphism has order {0}, expected 3")]
    AutomorphismOrder(usize),
    #[error("vertex {0} does not lie on the cycle")]
    VertexOffCycle(usize),
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    VertexDegree { vertex: usize, degree: usize },
    #[error("disconnected input: {0}")]
    Disconnected(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
