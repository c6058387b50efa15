use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what}: {n} vertices exceeds the cap of {cap}")]
    TooLarge { what: &'static str, n: usize, cap: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An input graph or argument does not satisfy an operation's precondition.
    /// `witness` carries the offending structure when one exists.
    #[error("precondition failed: {message}{}", witness.as_ref().map(|w| format!(" (witness {w})")).unwrap_or_default())]
    Precondition { message: String, witness: Option<String> },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    /// A constructed decomposition measured above the bound its construction guarantees.
    #[error("bound violated: {0}")]
    BoundViolated(String),

    #[error("sampling budget exhausted after {attempts} attempts")]
    BudgetExhausted { attempts: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn precondition(message: impl Into<String>, witness: Option<String>) -> Self {
        Error::Precondition { message: message.into(), witness }
    }
}
