//! Empirical studies: dispersion scaling, windowed boundedness, and
//! counting discrepancy. Each study returns typed rows and has a CSV
//! emitter with a fixed header; floats are printed with 17 significant
//! digits, so equal inputs produce byte-identical output.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dilation::find_t_for_n;
use crate::dispersion::dispersion;
use crate::enumeration::counting_discrepancy;
use crate::geometry::AxisBox;
use crate::lattice::Lattice;
use crate::{fmt17, Error};

/// One cardinality in a dispersion scaling run.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingRow {
    #[serde(rename = "N")]
    pub n: usize,
    /// Normalized volume of the calibrated box, `prod t_j`.
    pub n_t: f64,
    pub disp: f64,
    /// The quantity that stays bounded for admissible constructions.
    pub n_times_disp: f64,
}

/// Dispersion of exactly-`N`-point sets for each requested cardinality
/// (sorted, deduplicated). `N * disp` staying bounded as `N` grows is the
/// whole point of the construction.
pub fn scaling_study(lattice: &Lattice, ns: &[usize]) -> Result<Vec<ScalingRow>, Error> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    let mut rows = Vec::with_capacity(ns.len());
    for &n in &ns {
        let ps = find_t_for_n(lattice, n)?;
        let n_t: f64 = ps.provenance.t.iter().product();
        if n >= 2 && n as f64 > 2.0 * n_t {
            return Err(Error::InvariantViolation(format!(
                "{n} points in normalized volume {n_t}: above twice the volume"
            )));
        }
        let disp = dispersion(&ps)?.volume;
        rows.push(ScalingRow {
            n,
            n_t,
            disp,
            n_times_disp: n as f64 * disp,
        });
    }
    Ok(rows)
}

pub fn scaling_csv(rows: &[ScalingRow]) -> String {
    let mut out = String::from("N,n_t,disp,n_times_disp\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n,
            fmt17(r.n_t),
            fmt17(r.disp),
            fmt17(r.n_times_disp)
        ));
    }
    out
}

/// One window in a boundedness run.
#[derive(Debug, Clone, Serialize)]
pub struct BoundednessRow {
    #[serde(rename = "M")]
    pub m: f64,
    /// Largest empty box volume inside `[-M, M]^d`.
    pub disp_star_window: f64,
    /// Ratio to the previous row; `1.0` on the first row.
    pub growth_ratio: f64,
}

/// Windowed lattice dispersion across growing windows (sorted,
/// deduplicated). Stabilizing ratios separate admissible lattices from
/// ones with unbounded empty slabs.
pub fn boundedness_study(lattice: &Lattice, ms: &[f64]) -> Result<Vec<BoundednessRow>, Error> {
    if ms.iter().any(|&m| !m.is_finite() || m <= 0.0) {
        return Err(Error::InvalidInput(
            "window half-widths must be finite and positive".into(),
        ));
    }
    let mut ms = ms.to_vec();
    ms.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ms.dedup();
    let mut rows: Vec<BoundednessRow> = Vec::with_capacity(ms.len());
    for &m in &ms {
        let disp = crate::dispersion::windowed_lattice_dispersion(lattice, m)?.volume;
        let growth_ratio = match rows.last() {
            Some(prev) if prev.disp_star_window > 0.0 => disp / prev.disp_star_window,
            _ => 1.0,
        };
        rows.push(BoundednessRow {
            m,
            disp_star_window: disp,
            growth_ratio,
        });
    }
    Ok(rows)
}

pub fn boundedness_csv(rows: &[BoundednessRow]) -> String {
    let mut out = String::from("M,disp_star_window,growth_ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt17(r.m),
            fmt17(r.disp_star_window),
            fmt17(r.growth_ratio)
        ));
    }
    out
}

/// One target volume in a counting discrepancy run.
#[derive(Debug, Clone, Serialize)]
pub struct DiscrepancyRow {
    pub vol: f64,
    pub max_discrepancy: f64,
    pub max_log_bound_ratio: f64,
}

/// Worst-case counting discrepancy over randomly shifted cubes of each
/// target volume. Cube corners are drawn uniformly from `[-32, 32)^d` with
/// a seeded generator, so a `(volumes, shifts, seed)` triple always
/// reproduces the same boxes.
pub fn discrepancy_study(
    lattice: &Lattice,
    volumes: &[f64],
    shifts: usize,
    seed: u64,
) -> Result<Vec<DiscrepancyRow>, Error> {
    if volumes.iter().any(|&v| !v.is_finite() || v <= 0.0) {
        return Err(Error::InvalidInput(
            "target volumes must be finite and positive".into(),
        ));
    }
    if shifts == 0 {
        return Err(Error::InvalidInput("need at least one shift".into()));
    }
    let dim = lattice.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(volumes.len());
    for &vol in volumes {
        let side = vol.powf(1.0 / dim as f64);
        let mut max_discrepancy = 0.0f64;
        let mut max_log_bound_ratio = 0.0f64;
        for _ in 0..shifts {
            let corner: Vec<f64> = (0..dim).map(|_| rng.gen_range(-32.0..32.0)).collect();
            let upper: Vec<f64> = corner.iter().map(|&c| c + side).collect();
            let bounds = AxisBox::new(corner, upper)?;
            let rep = counting_discrepancy(lattice, &bounds)?;
            max_discrepancy = max_discrepancy.max(rep.discrepancy);
            max_log_bound_ratio = max_log_bound_ratio.max(rep.log_bound_ratio);
        }
        rows.push(DiscrepancyRow {
            vol,
            max_discrepancy,
            max_log_bound_ratio,
        });
    }
    Ok(rows)
}

pub fn discrepancy_csv(rows: &[DiscrepancyRow]) -> String {
    let mut out = String::from("vol,max_discrepancy,max_log_bound_ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt17(r.vol),
            fmt17(r.max_discrepancy),
            fmt17(r.max_log_bound_ratio)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_line_scaling_is_exact() {
        // Z dilated to hold N points has t = N - 1/2 and the largest empty
        // interval is one full gap, 1/(N - 1/2). Frozen closed forms.
        let lat = Lattice::integer(1).unwrap();
        let rows = scaling_study(&lat, &[4, 8, 16]).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            let expected_t = row.n as f64 - 0.5;
            assert!((row.n_t - expected_t).abs() < 1e-12, "N = {}", row.n);
            assert!(
                (row.disp - 1.0 / expected_t).abs() < 1e-12,
                "N = {}, disp = {}",
                row.n,
                row.disp
            );
            assert!((row.n_times_disp - row.n as f64 / expected_t).abs() < 1e-12);
        }
    }

    #[test]
    fn scaling_rows_are_sorted_and_deduplicated() {
        let lat = Lattice::golden();
        let rows = scaling_study(&lat, &[16, 4, 16, 8]).unwrap();
        let ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, vec![4, 8, 16]);
    }

    #[test]
    fn golden_scaling_stays_bounded() {
        let lat = Lattice::golden();
        let rows = scaling_study(&lat, &[8, 16, 32, 64]).unwrap();
        for row in &rows {
            assert!(row.n_times_disp > 0.2 && row.n_times_disp < 4.0, "{row:?}");
        }
    }

    #[test]
    fn boundedness_contrast_between_lattices() {
        let golden = boundedness_study(&Lattice::golden(), &[4.0, 8.0]).unwrap();
        assert_eq!(golden[0].growth_ratio, 1.0);
        assert!(golden[1].growth_ratio < 1.6, "{golden:?}");
        // The integer grid has empty slabs spanning the window: doubling
        // the window doubles the best volume.
        let grid = boundedness_study(&Lattice::integer(2).unwrap(), &[4.0, 8.0]).unwrap();
        assert!(grid[1].growth_ratio > 1.8, "{grid:?}");
    }

    #[test]
    fn discrepancy_study_is_deterministic() {
        let lat = Lattice::golden();
        let a = discrepancy_study(&lat, &[10.0, 100.0], 20, 42).unwrap();
        let b = discrepancy_study(&lat, &[10.0, 100.0], 20, 42).unwrap();
        assert_eq!(discrepancy_csv(&a), discrepancy_csv(&b));
        let c = discrepancy_study(&lat, &[10.0, 100.0], 20, 43).unwrap();
        assert_ne!(discrepancy_csv(&a), discrepancy_csv(&c));
    }

    #[test]
    fn csv_headers_are_pinned() {
        assert!(scaling_csv(&[]).starts_with("N,n_t,disp,n_times_disp\n"));
        assert!(boundedness_csv(&[]).starts_with("M,disp_star_window,growth_ratio\n"));
        assert!(discrepancy_csv(&[]).starts_with("vol,max_discrepancy,max_log_bound_ratio\n"));
    }

    #[test]
    fn study_input_validation() {
        let lat = Lattice::golden();
        assert!(boundedness_study(&lat, &[0.0]).is_err());
        assert!(discrepancy_study(&lat, &[-1.0], 5, 1).is_err());
        assert!(discrepancy_study(&lat, &[10.0], 0, 1).is_err());
    }
}
