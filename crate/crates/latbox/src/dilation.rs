//! Dilated lattices and exact-cardinality point sets in the unit cube.
//!
//! Scaling coordinate `j` of a lattice by `1/t_j` divides both the
//! determinant and the coordinate-product lower bound by `n(t) = prod t_j`,
//! and the anchored box `[0, t]` maps onto the unit cube. Choosing `t` so
//! that `[0, t]` holds exactly `N` lattice points therefore yields an
//! `N`-point set in `[0, 1]^d` whose empty-box volume inherits the lattice
//! scaling. `find_t_for_n` performs that calibration along the first axis.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::config::{Budgets, Tolerances};
use crate::enumeration;
use crate::geometry::AxisBox;
use crate::lattice::{Lattice, Provenance};
use crate::{fmt17, linalg, Error};

/// The lattice `t^{-1} Lambda`: output coordinate `i` scaled by `1/t_i`.
///
/// Requires strictly positive `t`. The certified coordinate-product bound
/// scales by `1/n(t)` along with the determinant.
pub fn dilate(lattice: &Lattice, t: &[f64]) -> Result<Lattice, Error> {
    let dim = lattice.dim();
    if t.len() != dim {
        return Err(Error::InvalidInput(format!(
            "dilation vector has length {}, lattice dimension is {}",
            t.len(),
            dim
        )));
    }
    if t.iter().any(|&v| !v.is_finite() || v <= 0.0) {
        return Err(Error::InvalidInput(
            "dilation vector must be finite and strictly positive".into(),
        ));
    }
    let nt: f64 = t.iter().product();
    let mut generator = lattice.generator().to_vec();
    for i in 0..dim {
        for j in 0..dim {
            generator[i * dim + j] /= t[i];
        }
    }
    Ok(Lattice::from_parts(
        dim,
        generator,
        lattice.det_abs() / nt,
        lattice.nm_certified() / nt,
        Provenance::Dilated {
            base: Box::new(lattice.provenance().clone()),
            t: t.to_vec(),
        },
    ))
}

/// A finite point set with the dilation that produced it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSet {
    pub dim: usize,
    pub points: Vec<Vec<f64>>,
    pub provenance: PointSetProvenance,
}

/// How a point set was constructed: which lattice, which dilation, and the
/// cardinality the calibration promised.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointSetProvenance {
    pub lattice: Provenance,
    pub t: Vec<f64>,
    pub n: usize,
}

impl PointSet {
    /// Text form: a `# d=.. n=.. t=..` header, then one point per line,
    /// coordinates space-separated with 17 significant digits. Points are
    /// emitted in lexicographic order, so equal inputs serialize equally.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let t: Vec<String> = self.provenance.t.iter().map(|&v| fmt17(v)).collect();
        let _ = writeln!(
            out,
            "# d={} n={} t={}",
            self.dim,
            self.points.len(),
            t.join(",")
        );
        let mut sorted = self.points.clone();
        sorted.sort_by(|a, b| linalg::lex_cmp(a, b));
        for p in &sorted {
            let coords: Vec<String> = p.iter().map(|&v| fmt17(v)).collect();
            let _ = writeln!(out, "{}", coords.join(" "));
        }
        out
    }

    /// Parses the text form produced by [`PointSet::to_text`]. The lattice
    /// provenance is not part of the text format and comes back as
    /// [`Provenance::Custom`].
    pub fn from_text(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty point set file".into()))?;
        let rest = header
            .strip_prefix("# d=")
            .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?;
        let (d_str, rest) = rest
            .split_once(" n=")
            .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?;
        let (n_str, t_str) = rest
            .split_once(" t=")
            .ok_or_else(|| Error::Parse(format!("bad header: {header:?}")))?;
        let dim: usize = d_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad dimension: {d_str:?}")))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad cardinality: {n_str:?}")))?;
        let t: Vec<f64> = t_str
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("bad dilation entry: {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        if dim == 0 || t.len() != dim {
            return Err(Error::Parse(format!(
                "dilation vector length {} does not match dimension {}",
                t.len(),
                dim
            )));
        }
        let mut points = Vec::with_capacity(n);
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let p: Vec<f64> = line
                .split_whitespace()
                .map(|s| {
                    s.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad coordinate: {s:?}")))
                })
                .collect::<Result<_, _>>()?;
            if p.len() != dim {
                return Err(Error::Parse(format!(
                    "point has {} coordinates, expected {}",
                    p.len(),
                    dim
                )));
            }
            points.push(p);
        }
        if points.len() != n {
            return Err(Error::Parse(format!(
                "header promises {} points, file has {}",
                n,
                points.len()
            )));
        }
        Ok(PointSet {
            dim,
            points,
            provenance: PointSetProvenance {
                lattice: Provenance::Custom,
                t,
                n,
            },
        })
    }

    pub fn write_to(&self, path: &std::path::Path) -> Result<(), Error> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    pub fn read_from(path: &std::path::Path) -> Result<Self, Error> {
        Self::from_text(&std::fs::read_to_string(path)?)
    }
}

/// Finds `t = (t_1, lambda, ..., lambda)` such that the anchored box
/// `[0, t]` contains exactly `n` lattice points, and returns the clamped
/// point set `{x / t} ∩ [0,1]^d` together with `t`.
///
/// Only makes sense for lattices with a certified coordinate-product bound:
/// that bound is what guarantees the count along the first axis increases
/// by steps of one, so an exact cut exists.
pub fn find_t_for_n(lattice: &Lattice, n: usize) -> Result<PointSet, Error> {
    if lattice.nm_certified() <= 0.0 {
        return Err(Error::NotAdmissible);
    }
    if n == 0 {
        return Err(Error::InvalidInput(
            "target cardinality must be >= 1".into(),
        ));
    }
    let dim = lattice.dim();
    let budgets = Budgets::default();

    // Grow the slab [0, ext * lambda] x [0, lambda]^(d-1) until it holds
    // more than n points. The origin alone guarantees at least one.
    let mut lambda = 1.0f64;
    let mut doublings = 0u32;
    let (first_coords, lambda) = loop {
        let mut upper = vec![lambda; dim];
        upper[0] = budgets.slab_extension * lambda;
        let slab = AxisBox::new(vec![0.0; dim], upper)?;
        let pts = enumeration::points_in_box(lattice, &slab)?;
        if pts.len() > n {
            let mut firsts: Vec<f64> = pts.iter().map(|p| p[0]).collect();
            firsts.sort_by(|a, b| a.partial_cmp(b).unwrap());
            break (firsts, lambda);
        }
        doublings += 1;
        if doublings > budgets.max_doublings {
            return Err(Error::InvalidInput(format!(
                "slab grew {doublings} times without reaching {n} points"
            )));
        }
        lambda *= 2.0;
    };

    // Cut between the n-th and (n+1)-th first coordinates. Distinct points
    // of an admissible lattice never share a coordinate, but verify the
    // gaps instead of trusting that: a degenerate tie would make the cut
    // ill-defined.
    for (rank, w) in first_coords[..=n].windows(2).enumerate() {
        let gap = w[1] - w[0];
        if gap <= 1e-9 {
            return Err(Error::SweepTies { rank, gap });
        }
    }
    let mut t = vec![lambda; dim];
    t[0] = 0.5 * (first_coords[n - 1] + first_coords[n]);

    let anchored = AxisBox::anchored(&t)?;
    let points = enumeration::points_in_box(lattice, &anchored)?;
    if points.len() != n {
        return Err(Error::CardinalityMismatch {
            expected: n,
            actual: points.len(),
        });
    }

    let dilated = dilate(lattice, &t)?;
    let scaled: Vec<Vec<f64>> = points
        .iter()
        .map(|p| p.iter().zip(&t).map(|(&x, &ti)| x / ti).collect())
        .collect();
    let ps = PointSet {
        dim,
        points: scaled,
        provenance: PointSetProvenance {
            lattice: lattice.provenance().clone(),
            t,
            n,
        },
    };
    debug_assert!(matches!(dilated.provenance(), Provenance::Dilated { .. }));
    Ok(restrict_unit_cube(ps))
}

/// Clamps every coordinate into `[0, 1]`. Membership in the anchored box is
/// tested with a small tolerance, so a coordinate can stick out by at most
/// that tolerance; clamping repairs it without moving any interior point.
pub fn restrict_unit_cube(mut ps: PointSet) -> PointSet {
    for p in &mut ps.points {
        for v in p.iter_mut() {
            *v = v.clamp(0.0, 1.0);
        }
    }
    ps
}

/// Occupancy audit for the partition argument behind the `O(1/N)` rate.
#[derive(Debug, Clone, Serialize)]
pub struct PartitionReport {
    /// Number of slices along axis 1.
    pub cells: usize,
    /// Volume of each slice, strictly below the certified bound.
    pub slice_volume: f64,
    pub total_points: usize,
    pub max_occupancy: usize,
}

/// Splits `[0, t]` into `K = floor(n(t)/Nm) + 1` equal slices along the
/// first axis and checks each holds at most one lattice point. Each slice
/// has volume `n(t)/K < Nm`, and a box with volume below the certified
/// coordinate-product bound can contain at most one point, so occupancy
/// above one disproves the certificate. In particular `N <= K <= n(t)/Nm + 1`,
/// which is the counting bound the scaling studies rely on.
pub fn partition_bound_check(
    lattice: &Lattice,
    t: &[f64],
    expected_n: usize,
) -> Result<PartitionReport, Error> {
    if lattice.nm_certified() <= 0.0 {
        return Err(Error::NotAdmissible);
    }
    let dim = lattice.dim();
    if t.len() != dim || t.iter().any(|&v| !v.is_finite() || v <= 0.0) {
        return Err(Error::InvalidInput(
            "dilation vector must be strictly positive with matching dimension".into(),
        ));
    }
    let nt: f64 = t.iter().product();
    let cells = (nt / lattice.nm_certified()).floor() as usize + 1;
    let anchored = AxisBox::anchored(t)?;
    let points = enumeration::points_in_box(lattice, &anchored)?;
    let n = points.len();

    let tol = Tolerances::default().membership;
    let width = t[0] / cells as f64;
    let mut occupancy = vec![0usize; cells];
    for p in &points {
        // A point within tolerance of a slice boundary is charged to both
        // sides; the at-most-one conclusion must survive the double count.
        let lo_idx = ((p[0] - tol) / width)
            .floor()
            .clamp(0.0, (cells - 1) as f64) as usize;
        let hi_idx = ((p[0] + tol) / width)
            .floor()
            .clamp(0.0, (cells - 1) as f64) as usize;
        occupancy[lo_idx] += 1;
        if hi_idx != lo_idx {
            occupancy[hi_idx] += 1;
        }
    }
    let mut max_occupancy = 0;
    for (cell, &count) in occupancy.iter().enumerate() {
        if count > 1 {
            return Err(Error::PartitionOccupancy { cell, count });
        }
        max_occupancy = max_occupancy.max(count);
    }

    if n != expected_n {
        return Err(Error::CardinalityMismatch {
            expected: expected_n,
            actual: n,
        });
    }
    if n >= 2 && (n as f64) > 2.0 * nt {
        return Err(Error::InvariantViolation(format!(
            "{n} points in a box of normalized volume {nt}, above twice the volume"
        )));
    }
    Ok(PartitionReport {
        cells,
        slice_volume: nt / cells as f64,
        total_points: n,
        max_occupancy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dilate_scales_det_and_certificate() {
        let lat = Lattice::golden();
        let d = dilate(&lat, &[2.0, 4.0]).unwrap();
        assert!((d.det_abs() - lat.det_abs() / 8.0).abs() < 1e-15);
        assert!((d.nm_certified() - 1.0 / 8.0).abs() < 1e-15);
        // Point images scale per coordinate.
        let p = lat.map_integer(&[1, 1]);
        let q = d.map_integer(&[1, 1]);
        assert!((q[0] - p[0] / 2.0).abs() < 1e-15);
        assert!((q[1] - p[1] / 4.0).abs() < 1e-15);
        match d.provenance() {
            Provenance::Dilated { base, t } => {
                assert_eq!(**base, Provenance::Golden);
                assert_eq!(t, &[2.0, 4.0]);
            }
            other => panic!("unexpected provenance {other:?}"),
        }
    }

    #[test]
    fn dilate_rejects_bad_vectors() {
        let lat = Lattice::golden();
        assert!(dilate(&lat, &[1.0]).is_err());
        assert!(dilate(&lat, &[1.0, 0.0]).is_err());
        assert!(dilate(&lat, &[1.0, -2.0]).is_err());
        assert!(dilate(&lat, &[1.0, f64::NAN]).is_err());
    }

    #[test]
    fn integer_line_calibration_is_exact() {
        // Z in [0, t] holds floor(t) + 1 points, so n = 7 needs t in (6, 7);
        // the midpoint rule lands exactly between the 7th point (6) and the
        // 8th (7).
        let lat = Lattice::integer(1).unwrap();
        let ps = find_t_for_n(&lat, 7).unwrap();
        assert_eq!(ps.points.len(), 7);
        assert_eq!(ps.provenance.t, vec![6.5]);
        for (k, p) in ps.points.iter().enumerate() {
            assert!((p[0] - k as f64 / 6.5).abs() < 1e-15);
            assert!((0.0..=1.0).contains(&p[0]));
        }
    }

    #[test]
    fn golden_calibration_hits_every_n() {
        let lat = Lattice::golden();
        for n in 1..=40 {
            let ps = find_t_for_n(&lat, n).unwrap();
            assert_eq!(ps.points.len(), n, "n = {n}");
            for p in &ps.points {
                assert!(p.iter().all(|&v| (0.0..=1.0).contains(&v)));
            }
            // Re-count in the reported box to confirm the cut is stable.
            let anchored = AxisBox::anchored(&ps.provenance.t).unwrap();
            assert_eq!(
                enumeration::count_in_box(&lat, &anchored).unwrap(),
                n as u64
            );
        }
    }

    #[test]
    fn golden_normalized_volume_exceeds_one_for_n_two() {
        let lat = Lattice::golden();
        let ps = find_t_for_n(&lat, 2).unwrap();
        let nt: f64 = ps.provenance.t.iter().product();
        // Two points in [0, t] force n(t) >= Nm = 1 by the partition bound.
        assert!(nt > 1.0, "n(t) = {nt}");
    }

    #[test]
    fn uncertified_lattice_is_rejected() {
        let lat = Lattice::integer(2).unwrap();
        assert!(matches!(find_t_for_n(&lat, 5), Err(Error::NotAdmissible)));
        assert!(matches!(
            partition_bound_check(&lat, &[3.0, 3.0], 16),
            Err(Error::NotAdmissible)
        ));
    }

    #[test]
    fn partition_check_accepts_golden_calibrations() {
        let lat = Lattice::golden();
        for n in [2usize, 5, 17, 60] {
            let ps = find_t_for_n(&lat, n).unwrap();
            let rep = partition_bound_check(&lat, &ps.provenance.t, n).unwrap();
            assert_eq!(rep.total_points, n);
            assert!(rep.max_occupancy <= 1);
            assert!(rep.slice_volume < lat.nm_certified());
            assert!(rep.cells >= n);
        }
    }

    #[test]
    fn partition_check_detects_cardinality_mismatch() {
        let lat = Lattice::golden();
        let ps = find_t_for_n(&lat, 9).unwrap();
        let err = partition_bound_check(&lat, &ps.provenance.t, 10);
        assert!(matches!(
            err,
            Err(Error::CardinalityMismatch {
                expected: 10,
                actual: 9
            })
        ));
    }

    #[test]
    fn point_set_text_round_trip() {
        let lat = Lattice::golden();
        let ps = find_t_for_n(&lat, 12).unwrap();
        let text = ps.to_text();
        let back = PointSet::from_text(&text).unwrap();
        assert_eq!(back.dim, 2);
        assert_eq!(back.points.len(), 12);
        assert_eq!(back.provenance.t, ps.provenance.t);
        // Coordinates survive byte-exactly thanks to the 17-digit format.
        let mut sorted = ps.points.clone();
        sorted.sort_by(|a, b| linalg::lex_cmp(a, b));
        assert_eq!(back.points, sorted);
        // And the serialization itself is deterministic.
        assert_eq!(text, back.to_text());
    }

    #[test]
    fn point_set_text_rejects_malformed_input() {
        assert!(PointSet::from_text("").is_err());
        assert!(PointSet::from_text("# d=2 n=1 t=1.0,1.0\n0.5\n").is_err());
        assert!(PointSet::from_text("# d=2 n=2 t=1.0,1.0\n0.5 0.5\n").is_err());
        assert!(PointSet::from_text("no header\n0.5 0.5\n").is_err());
        assert!(PointSet::from_text("# d=2 n=1 t=1.0\n0.5 0.5\n").is_err());
    }

    #[test]
    fn restrict_clamps_only_outliers() {
        let ps = PointSet {
            dim: 2,
            points: vec![vec![0.5, 1.0 + 1e-13], vec![0.25, 0.75]],
            provenance: PointSetProvenance {
                lattice: Provenance::Custom,
                t: vec![1.0, 1.0],
                n: 2,
            },
        };
        let r = restrict_unit_cube(ps);
        assert_eq!(r.points[0], vec![0.5, 1.0]);
        assert_eq!(r.points[1], vec![0.25, 0.75]);
    }
}
