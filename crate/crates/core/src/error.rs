use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("{what}: {size} exceeds the enumeration cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("divisor has {got} entries but the graph has {expected} vertices")]
    DivisorLength { expected: usize, got: usize },
    #[error("edge index {0} is out of range")]
    EdgeOutOfRange(usize),
    #[error("subgraphs are not nested")]
    NotNested,
    #[error("divisor {0} is not an indegree divisor of its graph")]
    NotIndegree(String),
    #[error("graph has loops")]
    LoopsPresent,
    #[error("invalid curve shape: {0}")]
    InvalidShape(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("lines {0} and {1} have the same slope")]
    CoincidentSlopes(usize, usize),
    #[error("lines {0}, {1} and {2} pass through one point")]
    NonNodal(usize, usize, usize),
    #[error("characteristic polynomial does not match the line arrangement")]
    CharPolyMismatch,
    #[error("kernel of dimension {dim} at {place}")]
    KernelDimension { place: String, dim: usize },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("sample parameters rejected: {0}")]
    BadParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownVertex(_) => "unknown_vertex",
            Error::DuplicateVertex(_) => "duplicate_vertex",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::DivisorLength { .. } => "divisor_length",
            Error::EdgeOutOfRange(_) => "edge_out_of_range",
            Error::NotNested => "not_nested",
            Error::NotIndegree(_) => "not_indegree",
            Error::LoopsPresent => "loops_present",
            Error::InvalidShape(_) => "invalid_shape",
            Error::OutOfRange(_) => "out_of_range",
            Error::CoincidentSlopes(..) => "coincident_slopes",
            Error::NonNodal(..) => "non_nodal",
            Error::CharPolyMismatch => "char_poly_mismatch",
            Error::KernelDimension { .. } => "kernel_dimension",
            Error::Shape(_) => "shape",
            Error::Unsupported(_) => "unsupported",
            Error::BadParams(_) => "bad_params",
            Error::Parse(_) => "parse",
        }
    }
}
