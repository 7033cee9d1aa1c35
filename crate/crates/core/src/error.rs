use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("coefficient {coefficient} of `{word}` is odd; an exact half is required")]
    NonIntegral { word: String, coefficient: String },

    #[error("elements {0} and {1} are not comparable (expected {0} <= {1})")]
    IncomparablePair(usize, usize),

    #[error("invalid rank set: {0}")]
    InvalidRankSet(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("arrangement is not essential: normals span a {rank}-dimensional space in R^{n}; quotient by the common orthogonal complement first")]
    NotEssential { n: usize, rank: usize },

    #[error("arrangement is not central")]
    NotCentral,

    #[error("arrangement is central; the unbounded complex requires a non-central arrangement")]
    NotNonCentral,

    #[error("not a chain: {0}")]
    NotAChain(String),

    #[error("fiber variant does not match the arrangement: {0}")]
    VariantMismatch(String),

    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("orientation enumeration supports at most {max} edges, graph has {edges}")]
    TooManyEdges { edges: usize, max: usize },

    #[error("unsupported dimension {0}; only the 2-torus can be rendered")]
    UnsupportedDimension(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
