//! Exact enumeration of lattice points in axis-parallel boxes.
//!
//! The enumerator pulls the box back through the inverse generator, takes
//! the integer bounding ranges of the resulting parallelepiped, and walks
//! integer candidates axis by axis. At each level it intersects the box
//! constraints with interval bounds on the not-yet-fixed axes, so candidates
//! far outside the preimage are rejected before the inner loops run. Final
//! membership is a closed-box check with the global membership tolerance.

use serde::Serialize;

use crate::config::{Budgets, Tolerances};
use crate::geometry::AxisBox;
use crate::lattice::Lattice;
use crate::{fmt17, linalg, Error};

/// Count versus volume in a single box, with the log-normalized ratio used
/// by the discrepancy studies.
#[derive(Debug, Clone, Serialize)]
pub struct CountingReport {
    #[serde(rename = "box")]
    pub bounds: AxisBox,
    pub count: u64,
    /// `volume / det_abs`, the number of points a unit-density model predicts.
    pub expected: f64,
    /// `|count - expected|`.
    pub discrepancy: f64,
    /// `discrepancy / ln(2 + volume)^(d-1)`; for admissible lattices this
    /// stays bounded as boxes grow.
    pub log_bound_ratio: f64,
}

impl CountingReport {
    pub fn csv_header() -> &'static str {
        "vol,count,expected,discrepancy,log_bound_ratio"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            fmt17(self.bounds.volume()),
            self.count,
            fmt17(self.expected),
            fmt17(self.discrepancy),
            fmt17(self.log_bound_ratio)
        )
    }
}

/// All lattice points in the closed box, sorted lexicographically.
pub fn points_in_box(lattice: &Lattice, bounds: &AxisBox) -> Result<Vec<Vec<f64>>, Error> {
    let mut points = Vec::new();
    visit_points(
        lattice,
        bounds,
        Budgets::default().enumeration_visits,
        |x, _| points.push(x.to_vec()),
    )?;
    points.sort_by(|a, b| linalg::lex_cmp(a, b));
    Ok(points)
}

/// Number of lattice points in the closed box.
pub fn count_in_box(lattice: &Lattice, bounds: &AxisBox) -> Result<u64, Error> {
    let mut count = 0u64;
    visit_points(
        lattice,
        bounds,
        Budgets::default().enumeration_visits,
        |_, _| count += 1,
    )?;
    Ok(count)
}

/// Exact count, expected count and normalized discrepancy for one box.
pub fn counting_discrepancy(lattice: &Lattice, bounds: &AxisBox) -> Result<CountingReport, Error> {
    if bounds.dim() != lattice.dim() {
        return Err(Error::InvalidInput(format!(
            "box dimension {} does not match lattice dimension {}",
            bounds.dim(),
            lattice.dim()
        )));
    }
    let count = count_in_box(lattice, bounds)?;
    let volume = bounds.volume();
    let expected = volume / lattice.det_abs();
    let discrepancy = (count as f64 - expected).abs();
    let denom = (2.0 + volume).ln().powi(lattice.dim() as i32 - 1);
    Ok(CountingReport {
        bounds: bounds.clone(),
        count,
        expected,
        discrepancy,
        log_bound_ratio: discrepancy / denom,
    })
}

/// Calls `f(x, z)` for every lattice point `x = T z` in the closed box
/// (tolerance `membership` per coordinate). Returns the number of integer
/// candidates visited; exceeding `budget` is an error.
pub(crate) fn visit_points<F: FnMut(&[f64], &[i64])>(
    lattice: &Lattice,
    bounds: &AxisBox,
    budget: u64,
    f: F,
) -> Result<u64, Error> {
    let dim = lattice.dim();
    if bounds.dim() != dim {
        return Err(Error::InvalidInput(format!(
            "box dimension {} does not match lattice dimension {}",
            bounds.dim(),
            dim
        )));
    }
    let tol = Tolerances::default().membership;
    let inv = linalg::inverse(dim, lattice.generator()).ok_or(Error::SingularGenerator)?;

    // Integer bounding ranges of the preimage parallelepiped, from the
    // images of the box vertices under the inverse generator.
    let mut pre_lo = vec![f64::INFINITY; dim];
    let mut pre_hi = vec![f64::NEG_INFINITY; dim];
    let mut image = vec![0.0; dim];
    for vertex in bounds.vertices() {
        linalg::mat_vec(dim, &inv, &vertex, &mut image);
        for j in 0..dim {
            pre_lo[j] = pre_lo[j].min(image[j]);
            pre_hi[j] = pre_hi[j].max(image[j]);
        }
    }
    let glo: Vec<i64> = pre_lo.iter().map(|v| (v - 1e-9).ceil() as i64).collect();
    let ghi: Vec<i64> = pre_hi.iter().map(|v| (v + 1e-9).floor() as i64).collect();
    if (0..dim).any(|j| glo[j] > ghi[j]) {
        return Ok(0);
    }

    // rem_min/rem_max[k][i]: extreme contributions of axes k+1..d to output
    // coordinate i, over the integer bounding ranges.
    let gen = lattice.generator();
    let mut rem_min = vec![0.0; dim * dim];
    let mut rem_max = vec![0.0; dim * dim];
    for k in (0..dim.saturating_sub(1)).rev() {
        for i in 0..dim {
            let c = gen[i * dim + (k + 1)];
            let a = c * glo[k + 1] as f64;
            let b = c * ghi[k + 1] as f64;
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let next = if k + 1 < dim - 1 {
                (rem_min[(k + 1) * dim + i], rem_max[(k + 1) * dim + i])
            } else {
                (0.0, 0.0)
            };
            rem_min[k * dim + i] = lo + next.0;
            rem_max[k * dim + i] = hi + next.1;
        }
    }

    let mut state = Enumerator {
        dim,
        gen,
        lower: bounds.lower(),
        upper: bounds.upper(),
        glo: &glo,
        ghi: &ghi,
        rem_min: &rem_min,
        rem_max: &rem_max,
        tol,
        budget,
        visited: 0,
        partial: vec![0.0; (dim + 1) * dim],
        z: vec![0i64; dim],
        x: vec![0.0; dim],
        emit: f,
    };
    state.descend(0)?;
    Ok(state.visited)
}

struct Enumerator<'a, F: FnMut(&[f64], &[i64])> {
    dim: usize,
    gen: &'a [f64],
    lower: &'a [f64],
    upper: &'a [f64],
    glo: &'a [i64],
    ghi: &'a [i64],
    rem_min: &'a [f64],
    rem_max: &'a [f64],
    tol: f64,
    budget: u64,
    visited: u64,
    /// Partial sums S_i per recursion level, rows of size `dim`.
    partial: Vec<f64>,
    z: Vec<i64>,
    x: Vec<f64>,
    emit: F,
}

impl<F: FnMut(&[f64], &[i64])> Enumerator<'_, F> {
    fn descend(&mut self, level: usize) -> Result<(), Error> {
        let dim = self.dim;
        let last = level == dim - 1;

        // Feasible interval for z_level: intersect the per-output-axis
        // constraints, each relaxed by the extreme remaining contributions.
        let mut ival_lo = self.glo[level] as f64;
        let mut ival_hi = self.ghi[level] as f64;
        for i in 0..dim {
            let c = self.gen[i * dim + level];
            let s = self.partial[level * dim + i];
            let (rmin, rmax) = if last {
                (0.0, 0.0)
            } else {
                (self.rem_min[level * dim + i], self.rem_max[level * dim + i])
            };
            let lo_req = self.lower[i] - self.tol - s - rmax;
            let hi_req = self.upper[i] + self.tol - s - rmin;
            if c.abs() < 1e-300 {
                if lo_req > 0.0 || hi_req < 0.0 {
                    return Ok(());
                }
                continue;
            }
            let (a, b) = if c > 0.0 {
                (lo_req / c, hi_req / c)
            } else {
                (hi_req / c, lo_req / c)
            };
            ival_lo = ival_lo.max(a);
            ival_hi = ival_hi.min(b);
        }
        let zlo = ((ival_lo - 1e-9).ceil() as i64).max(self.glo[level]);
        let zhi = ((ival_hi + 1e-9).floor() as i64).min(self.ghi[level]);
        if zlo > zhi {
            return Ok(());
        }

        for z in zlo..=zhi {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(Error::EnumerationBudget {
                    visited: self.visited,
                    budget: self.budget,
                });
            }
            self.z[level] = z;
            if last {
                let mut inside = true;
                for i in 0..dim {
                    let xi = self.partial[level * dim + i] + self.gen[i * dim + level] * z as f64;
                    if xi < self.lower[i] - self.tol || xi > self.upper[i] + self.tol {
                        inside = false;
                        break;
                    }
                    self.x[i] = xi;
                }
                if inside {
                    (self.emit)(&self.x, &self.z);
                }
            } else {
                for i in 0..dim {
                    self.partial[(level + 1) * dim + i] =
                        self.partial[level * dim + i] + self.gen[i * dim + level] * z as f64;
                }
                self.descend(level + 1)?;
            }
        }
        Ok(())
    }
}
