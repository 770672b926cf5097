use crate::geom::GeneralPositionReport;

/// Errors shared across the solver modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A point lies in no available square, so no cover exists.
    #[error("point {point_id} is not covered by any square")]
    UncoveredPoint { point_id: usize },

    /// The exact oracle refuses universes above its cap.
    #[error("universe of {size} squares exceeds the oracle cap of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },

    /// The instance violates the general-position requirements.
    #[error("general position violated: {0}")]
    GeneralPosition(GeneralPositionReport),

    /// A square intersecting a grid cell contains zero or several of its
    /// corners, which cannot happen for unit squares in general position.
    #[error("square {square_id} contains {corners} corners of the cell")]
    DegenerateSquare { square_id: i64, corners: usize },

    /// A dynamic-programming region whose bounds are inconsistent.
    #[error("malformed region: {0}")]
    MalformedRegion(String),
}

pub type Result<T> = std::result::Result<T, Error>;
