//! Global numeric tolerances and search budgets.
//!
//! Every threshold the crate relies on is defined here once. Operations
//! never take ad-hoc tolerance arguments; tests and callers that need the
//! same numbers read them from these structures.

/// Numeric tolerances shared across the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Slack when comparing products of enumerated lattice points against a
    /// certified lower bound. Certification checks use `>= bound - cert_slack`.
    pub cert_slack: f64,
    /// Relative tolerance for linear-algebra identities: dual involution,
    /// determinant products, homogeneity of dispersion under dilation.
    pub linalg_rel: f64,
    /// Relative tolerance for stored determinant metadata against a direct
    /// determinant evaluation, and for serialization round-trips.
    pub det_rel: f64,
    /// Absolute per-coordinate tolerance for closed-box membership of
    /// enumerated points.
    pub membership: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            cert_slack: 1e-9,
            linalg_rel: 1e-10,
            det_rel: 1e-12,
            membership: 1e-12,
        }
    }
}

/// Hard limits that turn runaway computations into errors instead of hangs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budgets {
    /// Maximum number of integer candidates an enumeration may visit after
    /// per-axis early rejection.
    pub enumeration_visits: u64,
    /// Maximum point count accepted by the planar empty-box sweep.
    pub dispersion_points_2d: usize,
    /// Maximum point count accepted by the branching empty-box search
    /// (dimensions other than 2).
    pub dispersion_points_nd: usize,
    /// Maximum grid resolution accepted by the grid oracle.
    pub grid_max_resolution: u32,
    /// Maximum dimension accepted by the grid oracle.
    pub grid_max_dim: usize,
    /// Length multiplier of the sweep slab used when sizing dilations:
    /// the slab is `[0, slab_extension * lambda] x [0, lambda]^(d-1)`.
    pub slab_extension: f64,
    /// Maximum number of slab doublings before sizing gives up.
    pub max_doublings: u32,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            enumeration_visits: 100_000_000,
            dispersion_points_2d: 5_000,
            dispersion_points_nd: 300,
            grid_max_resolution: 1024,
            grid_max_dim: 3,
            slab_extension: 64.0,
            max_doublings: 60,
        }
    }
}

/// Seed used by studies when the caller does not provide one.
pub const DEFAULT_SEED: u64 = 42;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_the_documented_values() {
        let tol = Tolerances::default();
        assert_eq!(tol.cert_slack, 1e-9);
        assert_eq!(tol.linalg_rel, 1e-10);
        assert_eq!(tol.det_rel, 1e-12);
        assert_eq!(tol.membership, 1e-12);
        let b = Budgets::default();
        assert_eq!(b.enumeration_visits, 100_000_000);
        assert_eq!(b.dispersion_points_2d, 5_000);
        assert_eq!(b.dispersion_points_nd, 300);
        assert_eq!(b.grid_max_resolution, 1024);
    }
}
