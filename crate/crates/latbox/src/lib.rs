//! Admissible lattices, exact point enumeration, and dispersion.
//!
//! The crate builds lattices whose nonzero points all have coordinate
//! product bounded away from zero (the golden-ratio lattice, Vandermonde
//! lattices on the roots of shifted factorial polynomials, and the integer
//! lattice as a negative control), dilates them to produce point sets of
//! an exact target cardinality in the unit cube, and measures dispersion,
//! the volume of the largest empty axis-parallel box. For the admissible
//! constructions `N * dispersion` stays bounded as `N` grows.
//!
//! Every major capability has a runnable example:
//!
//! ```text
//! cargo run --release -p latbox --example construct_lattices
//! cargo run --release -p latbox --example box_counting
//! cargo run --release -p latbox --example exact_point_sets
//! cargo run --release -p latbox --example compute_dispersion
//! cargo run --release -p latbox --example windowed_dispersion
//! cargo run --release -p latbox --example scaling_study
//! cargo run --release -p latbox --example counting_discrepancy
//! ```
//!
//! The `latbox` binary exposes the same functionality as a small CLI; see
//! `latbox --help`.

pub mod config;
mod error;
pub mod geometry;
mod linalg;

pub mod lattice;

pub mod enumeration;

pub mod dilation;

pub mod dispersion;

pub mod studies;

pub mod selftest;

pub use dilation::{
    dilate, find_t_for_n, partition_bound_check, restrict_unit_cube, PartitionReport, PointSet,
    PointSetProvenance,
};
pub use dispersion::{
    dispersion, grid_oracle, largest_empty_box, windowed_lattice_dispersion,
    windowed_lattice_dispersion_in, BoxSearch, DispersionResult,
};
pub use enumeration::{count_in_box, counting_discrepancy, points_in_box, CountingReport};
pub use error::Error;
pub use geometry::AxisBox;
pub use lattice::{Lattice, Provenance};
pub use studies::{
    boundedness_study, discrepancy_study, scaling_study, BoundednessRow, DiscrepancyRow, ScalingRow,
};

/// 17 significant digits: enough to round-trip any f64 exactly, so emitted
/// CSV and point files are byte-reproducible across runs.
pub(crate) fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
