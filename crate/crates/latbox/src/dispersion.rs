//! Largest empty axis-parallel box.
//!
//! A box is *empty* when no point lies strictly inside it; points on the
//! boundary do not block. The dispersion of a point set is the volume of
//! the largest empty box contained in the domain.
//!
//! Two independent exact algorithms are provided and cross-checked against
//! each other: a two-dimensional corridor sweep and a general branch and
//! bound. A grid oracle gives a third, conservative answer with a known
//! one-sided error, useful as an oracle in tests precisely because it
//! shares no code with the exact searches.

mod branch;
mod grid;
mod sweep;

use serde::{Deserialize, Serialize};

use crate::config::{Budgets, Tolerances};
use crate::dilation::PointSet;
use crate::enumeration;
use crate::geometry::AxisBox;
use crate::lattice::Lattice;
use crate::{linalg, Error};

/// Which search produced a [`DispersionResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxSearch {
    Sweep2d,
    BranchNd,
    GridOracle,
}

/// Volume and witness of the largest empty box found by a search.
#[derive(Debug, Clone, Serialize)]
pub struct DispersionResult {
    pub volume: f64,
    pub witness: AxisBox,
    pub algorithm: BoxSearch,
    /// Exact searches certify the maximum; the grid oracle only certifies
    /// a lower bound (its witness box is genuinely empty).
    pub certified_exact: bool,
}

/// Largest empty box among all axis-parallel boxes inside `domain`.
///
/// Dispatches to the corridor sweep in dimension 2 and to branch and bound
/// otherwise. Points must lie inside the domain (up to the membership
/// tolerance; they are clamped onto it).
pub fn largest_empty_box(points: &[Vec<f64>], domain: &AxisBox) -> Result<DispersionResult, Error> {
    if domain.dim() == 2 {
        sweep2d(points, domain)
    } else {
        branch_nd(points, domain)
    }
}

/// Exact search in dimension 2 by anchored corridor sweeps.
pub fn sweep2d(points: &[Vec<f64>], domain: &AxisBox) -> Result<DispersionResult, Error> {
    if domain.dim() != 2 {
        return Err(Error::InvalidInput(format!(
            "the corridor sweep is specific to dimension 2, got {}",
            domain.dim()
        )));
    }
    let blockers = prepare(points, domain)?;
    let (volume, witness) = sweep::search(&blockers, domain);
    Ok(DispersionResult {
        volume,
        witness,
        algorithm: BoxSearch::Sweep2d,
        certified_exact: true,
    })
}

/// Exact search in any dimension by region splitting with volume pruning.
pub fn branch_nd(points: &[Vec<f64>], domain: &AxisBox) -> Result<DispersionResult, Error> {
    let blockers = prepare(points, domain)?;
    let (volume, witness) = branch::search(&blockers, domain);
    Ok(DispersionResult {
        volume,
        witness,
        algorithm: BoxSearch::BranchNd,
        certified_exact: true,
    })
}

/// Conservative grid search over boxes aligned to an `r^d` grid.
///
/// The returned witness is always a genuinely empty box, so the result
/// never exceeds the exact dispersion. In the other direction it misses at
/// most two cell layers per axis: for any empty box `B`,
/// `result >= vol(B) - 2 d vol(domain) / r`.
pub fn grid_oracle(
    points: &[Vec<f64>],
    domain: &AxisBox,
    resolution: u32,
) -> Result<DispersionResult, Error> {
    let budgets = Budgets::default();
    if domain.dim() > budgets.grid_max_dim
        || resolution == 0
        || resolution > budgets.grid_max_resolution
    {
        return Err(Error::GridLimits {
            dim: domain.dim(),
            resolution,
            max_dim: budgets.grid_max_dim,
            max_res: budgets.grid_max_resolution,
        });
    }
    let blockers = prepare(points, domain)?;
    let (volume, witness) = grid::search(&blockers, domain, resolution);
    Ok(DispersionResult {
        volume,
        witness,
        algorithm: BoxSearch::GridOracle,
        certified_exact: false,
    })
}

/// Dispersion of a point set over the unit cube.
pub fn dispersion(ps: &PointSet) -> Result<DispersionResult, Error> {
    largest_empty_box(&ps.points, &AxisBox::unit_cube(ps.dim))
}

/// Largest empty box among the lattice points inside the centered window
/// `[-half_width, half_width]^d`. For lattices with a positive certified
/// coordinate-product bound this stabilizes as the window grows; for the
/// integer lattice it grows linearly (empty slabs span the window).
pub fn windowed_lattice_dispersion(
    lattice: &Lattice,
    half_width: f64,
) -> Result<DispersionResult, Error> {
    let window = AxisBox::centered_cube(half_width, lattice.dim())?;
    windowed_lattice_dispersion_in(lattice, &window)
}

/// Same as [`windowed_lattice_dispersion`] for an arbitrary window box.
pub fn windowed_lattice_dispersion_in(
    lattice: &Lattice,
    window: &AxisBox,
) -> Result<DispersionResult, Error> {
    let points = enumeration::points_in_box(lattice, window)?;
    largest_empty_box(&points, window)
}

/// Validates points against the domain and clamps them onto it, then drops
/// everything on the domain boundary: only points strictly inside can
/// block a sub-box, so they are the only ones the searches need.
fn prepare(points: &[Vec<f64>], domain: &AxisBox) -> Result<Vec<Vec<f64>>, Error> {
    let budgets = Budgets::default();
    let limit = if domain.dim() == 2 {
        budgets.dispersion_points_2d
    } else {
        budgets.dispersion_points_nd
    };
    if points.len() > limit {
        return Err(Error::PointBudget {
            points: points.len(),
            limit,
        });
    }
    let tol = Tolerances::default().membership;
    let mut blockers = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != domain.dim() {
            return Err(Error::InvalidInput(format!(
                "point has {} coordinates, domain has {}",
                p.len(),
                domain.dim()
            )));
        }
        if !domain.contains_closed(p, tol) {
            return Err(Error::InvalidInput(format!(
                "point {p:?} lies outside the domain"
            )));
        }
        let clamped: Vec<f64> = p
            .iter()
            .enumerate()
            .map(|(j, &v)| v.clamp(domain.lower()[j], domain.upper()[j]))
            .collect();
        if domain.strictly_inside(&clamped) {
            blockers.push(clamped);
        }
    }
    Ok(blockers)
}

/// Running maximum under the shared tie-break: larger volume wins, and
/// among equal volumes the lexicographically smaller `(lower, upper)` pair
/// wins. Exact comparisons keep every search deterministic.
struct Best {
    any: bool,
    vol: f64,
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Best {
    fn new() -> Self {
        Best {
            any: false,
            vol: f64::NEG_INFINITY,
            lower: Vec::new(),
            upper: Vec::new(),
        }
    }

    fn offer(&mut self, vol: f64, lower: &[f64], upper: &[f64]) {
        use std::cmp::Ordering;
        let better = if !self.any {
            true
        } else if vol != self.vol {
            vol > self.vol
        } else {
            linalg::lex_cmp(lower, &self.lower).then_with(|| linalg::lex_cmp(upper, &self.upper))
                == Ordering::Less
        };
        if better {
            self.any = true;
            self.vol = vol;
            self.lower = lower.to_vec();
            self.upper = upper.to_vec();
        }
    }

    fn into_result(self) -> (f64, AxisBox) {
        debug_assert!(self.any, "every search offers at least one candidate");
        let witness = AxisBox::new(self.lower, self.upper)
            .expect("search candidates are valid boxes by construction");
        (self.vol, witness)
    }
}
