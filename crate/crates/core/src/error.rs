use core::fmt;

/// Errors produced by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph must have at least one vertex.
    EmptyGraph,
    VertexOutOfRange { vertex: usize, n: usize },
    SelfLoop { vertex: usize },
    /// The operation is only defined for connected graphs.
    Disconnected,
    InvalidParameter(&'static str),
    /// The instance is larger than the configured cap of an exhaustive method.
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    NotSquare { rows: usize, cols: usize },
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGraph => write!(f, "graph has no vertices"),
            // vertices are reported 1-indexed, as in every user-facing format
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {} out of range 1..{}", vertex + 1, n)
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop on vertex {}", vertex + 1),
            Error::Disconnected => write!(f, "graph is disconnected"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {}", msg),
            Error::CapExceeded { what, size, cap } => {
                write!(f, "{} refused: size {} exceeds cap {}", what, size, cap)
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {}x{}, not square", rows, cols),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {}, found {}", expected, found)
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
