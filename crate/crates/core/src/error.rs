use rug::Integer;
use thiserror::Error;

use crate::parabolic::Enumeration;
use crate::polygon::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("map has beta = 0 and therefore no isometric circle")]
    BetaZero,

    /// The point sits within tolerance of an arc endpoint. `right_open` is the
    /// letter the right-open convention would pick if forced.
    #[error("point within tolerance of vertex {vertex} (distance {distance:e})")]
    NearBoundaryAmbiguity { vertex: usize, right_open: usize, distance: f64 },

    #[error("accumulated error exceeds arc size after {depth} letters at {bits} bits")]
    PrecisionExhausted { depth: usize, bits: u32 },

    #[error("word backtracks at position {position}")]
    BacktrackingWord { position: usize },

    #[error("cylinder diameter still above resolution after {n_max} letters")]
    ResolutionNotReached { n_max: usize },

    #[error("cuspidal run starting at letter {start} exceeds {limit} letters; point looks parabolic")]
    SuspectedParabolicPoint { start: usize, limit: usize },

    #[error("no ambient-lattice chart found for vertex {vertex}")]
    VertexNotResolved { vertex: usize },

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("group failed validation:\n{0}")]
    Validation(Box<ValidationReport>),

    #[error("enumeration budget of {budget} words exhausted; partial results kept")]
    BudgetExceeded { budget: usize, partial: Box<Enumeration> },

    #[error("only {found} points enumerated, at least {needed} required")]
    InsufficientData { found: usize, needed: usize },

    #[error("rational input: expansion terminated after {partial_quotients:?}")]
    RationalDetected { partial_quotients: Vec<Integer> },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { location: location.into(), message: message.into() }
    }
}
