use thiserror::Error;

/// Errors reported by lattice construction, enumeration and search.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension {dim} is outside the supported range {min}..={max}")]
    DimensionRange { dim: usize, min: usize, max: usize },

    #[error("failed to bracket a polynomial root in ({lo}, {hi})")]
    RootBracketing { lo: f64, hi: f64 },

    #[error("generator matrix is singular")]
    SingularGenerator,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("enumeration budget exceeded after {visited} candidates (budget {budget})")]
    EnumerationBudget { visited: u64, budget: u64 },

    #[error("window [-{0}, {0}]^d contains no nonzero lattice point")]
    EmptyWindow(f64),

    #[error("lattice carries no admissibility certificate (nm_certified = 0)")]
    NotAdmissible,

    #[error(
        "sweep coordinates tie at rank {rank} (gap {gap:e}); cannot separate N from N+1 points"
    )]
    SweepTies { rank: usize, gap: f64 },

    #[error("point-set construction produced {actual} points, expected {expected}")]
    CardinalityMismatch { expected: usize, actual: usize },

    #[error("point budget exceeded: {points} points (limit {limit})")]
    PointBudget { points: usize, limit: usize },

    #[error("grid oracle supports d <= {max_dim} and r in 1..={max_res}, got d = {dim}, r = {resolution}")]
    GridLimits {
        dim: usize,
        resolution: u32,
        max_dim: usize,
        max_res: u32,
    },

    #[error("partition cell {cell} contains {count} lattice points; a cell of volume below the certificate must hold at most one")]
    PartitionOccupancy { cell: usize, count: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code the CLI maps this error to: 2 for violations of a
    /// mathematical invariant (these indicate a bug or a bad certificate),
    /// 1 for budget and validation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::PartitionOccupancy { .. } | Error::InvariantViolation(_) => 2,
            _ => 1,
        }
    }
}
