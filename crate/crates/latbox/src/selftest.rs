//! Fast end-to-end invariant suite, exposed through the CLI.
//!
//! Each check exercises one algebraic or geometric identity the rest of
//! the crate leans on, on inputs small enough to finish in seconds. The
//! first failure aborts the run with an invariant-violation error, which
//! maps to the CLI's dedicated exit code.

use std::io::Write;

use crate::config::Tolerances;
use crate::dilation::{dilate, find_t_for_n, partition_bound_check};
use crate::dispersion::{
    branch_nd, grid_oracle, sweep2d, windowed_lattice_dispersion, windowed_lattice_dispersion_in,
};
use crate::enumeration::points_in_box;
use crate::geometry::AxisBox;
use crate::lattice::Lattice;
use crate::{linalg, Error};

/// A named invariant check: returns a human-readable failure description.
type Check = (&'static str, fn() -> Result<(), String>);

/// Runs the whole suite, printing one `ok` line per passed check.
pub fn run(out: &mut dyn Write) -> Result<(), Error> {
    let checks: &[Check] = &[
        ("coordinate product certificates", certificates),
        ("dual lattice identities", dual_identities),
        ("enumeration against direct images", enumeration_oracle),
        ("exact cardinality calibration", calibration),
        ("partition occupancy bound", partition),
        ("dispersion searches agree", searches_agree),
        ("windowed dispersion is monotone", windowed_monotone),
        ("dilation homogeneity", homogeneity),
        ("integer lattice control", integer_control),
    ];
    for (name, check) in checks {
        check()
            .map_err(|detail| Error::InvariantViolation(format!("selftest '{name}': {detail}")))?;
        writeln!(out, "ok - {name}").map_err(Error::Io)?;
    }
    Ok(())
}

fn certificates() -> Result<(), String> {
    let slack = Tolerances::default().cert_slack;
    for (lat, window) in [
        (Lattice::golden(), 10.0),
        (Lattice::frolov(2).map_err(|e| e.to_string())?, 10.0),
        (Lattice::frolov(3).map_err(|e| e.to_string())?, 8.0),
    ] {
        let nm = lat.nm_empirical(window).map_err(|e| e.to_string())?;
        if nm < lat.nm_certified() - slack {
            return Err(format!(
                "{:?}: empirical product minimum {nm} beats the certificate {}",
                lat.provenance(),
                lat.nm_certified()
            ));
        }
    }
    // The golden certificate is attained: (1, 0) has product exactly 1.
    let golden = Lattice::golden();
    let nm = golden.nm_empirical(10.0).map_err(|e| e.to_string())?;
    if (nm - 1.0).abs() > slack {
        return Err(format!("golden minimum should be 1, got {nm}"));
    }
    Ok(())
}

fn dual_identities() -> Result<(), String> {
    for lat in [
        Lattice::golden(),
        Lattice::frolov(2).map_err(|e| e.to_string())?,
        Lattice::frolov(3).map_err(|e| e.to_string())?,
    ] {
        let dual = lat.dual().map_err(|e| e.to_string())?;
        let det_product = lat.det_abs() * dual.det_abs();
        if (det_product - 1.0).abs() > 1e-10 {
            return Err(format!("det * dual det = {det_product}, expected 1"));
        }
        let back = dual.dual().map_err(|e| e.to_string())?;
        for (a, b) in back.generator().iter().zip(lat.generator()) {
            if (a - b).abs() > 1e-10 {
                return Err(format!("double dual strays: {a} vs {b}"));
            }
        }
    }
    Ok(())
}

fn enumeration_oracle() -> Result<(), String> {
    for lat in [
        Lattice::golden(),
        Lattice::frolov(2).map_err(|e| e.to_string())?,
    ] {
        let bounds = AxisBox::new(vec![-5.0, -5.0], vec![5.0, 5.0]).unwrap();
        let pts = points_in_box(&lat, &bounds).map_err(|e| e.to_string())?;
        let mut direct = Vec::new();
        for a in -60i64..=60 {
            for b in -60i64..=60 {
                let p = lat.map_integer(&[a, b]);
                if bounds.contains_closed(&p, Tolerances::default().membership) {
                    direct.push(p);
                }
            }
        }
        direct.sort_by(|a, b| linalg::lex_cmp(a, b));
        if pts != direct {
            return Err(format!(
                "{:?}: enumerated {} points, direct scan found {}",
                lat.provenance(),
                pts.len(),
                direct.len()
            ));
        }
    }
    Ok(())
}

fn calibration() -> Result<(), String> {
    let golden = Lattice::golden();
    for n in [1usize, 13, 64] {
        let ps = find_t_for_n(&golden, n).map_err(|e| e.to_string())?;
        if ps.points.len() != n {
            return Err(format!("asked for {n} points, got {}", ps.points.len()));
        }
        if ps
            .points
            .iter()
            .any(|p| p.iter().any(|&v| !(0.0..=1.0).contains(&v)))
        {
            return Err(format!("points for n = {n} leave the unit cube"));
        }
    }
    Ok(())
}

fn partition() -> Result<(), String> {
    let golden = Lattice::golden();
    for n in [2usize, 17, 64] {
        let ps = find_t_for_n(&golden, n).map_err(|e| e.to_string())?;
        let report =
            partition_bound_check(&golden, &ps.provenance.t, n).map_err(|e| e.to_string())?;
        if report.max_occupancy > 1 {
            return Err(format!("a slice holds {} points", report.max_occupancy));
        }
        if report.slice_volume >= golden.nm_certified() {
            return Err(format!(
                "slice volume {} reaches the certificate",
                report.slice_volume
            ));
        }
    }
    Ok(())
}

fn searches_agree() -> Result<(), String> {
    let ps = find_t_for_n(&Lattice::golden(), 40).map_err(|e| e.to_string())?;
    let domain = AxisBox::unit_cube(2);
    let s = sweep2d(&ps.points, &domain).map_err(|e| e.to_string())?;
    let b = branch_nd(&ps.points, &domain).map_err(|e| e.to_string())?;
    if (s.volume - b.volume).abs() > 1e-12 {
        return Err(format!("sweep {} vs branch {}", s.volume, b.volume));
    }
    let g = grid_oracle(&ps.points, &domain, 256).map_err(|e| e.to_string())?;
    if s.volume < g.volume - 1e-12 {
        return Err(format!("exact {} below grid bound {}", s.volume, g.volume));
    }
    if s.volume > g.volume + 4.0 / 256.0 + 1e-12 {
        return Err(format!(
            "exact {} exceeds grid bound {} plus slack",
            s.volume, g.volume
        ));
    }
    Ok(())
}

fn windowed_monotone() -> Result<(), String> {
    let golden = Lattice::golden();
    let mut prev = 0.0;
    for m in [2.0, 4.0, 6.0] {
        let disp = windowed_lattice_dispersion(&golden, m)
            .map_err(|e| e.to_string())?
            .volume;
        if disp < prev - 1e-12 {
            return Err(format!("window {m} shrank the dispersion: {disp} < {prev}"));
        }
        prev = disp;
    }
    Ok(())
}

fn homogeneity() -> Result<(), String> {
    let golden = Lattice::golden();
    let t = [1.5, 0.8];
    let n_t: f64 = t.iter().product();
    let window = AxisBox::centered_cube(6.0, 2).unwrap();
    let base = windowed_lattice_dispersion_in(&golden, &window)
        .map_err(|e| e.to_string())?
        .volume;
    let dilated = dilate(&golden, &t).map_err(|e| e.to_string())?;
    let scaled_window = AxisBox::new(
        window
            .lower()
            .iter()
            .zip(&t)
            .map(|(&l, &ti)| l / ti)
            .collect(),
        window
            .upper()
            .iter()
            .zip(&t)
            .map(|(&u, &ti)| u / ti)
            .collect(),
    )
    .unwrap();
    let scaled = windowed_lattice_dispersion_in(&dilated, &scaled_window)
        .map_err(|e| e.to_string())?
        .volume;
    let expected = base / n_t;
    if (scaled - expected).abs() > 1e-9 * expected.max(1.0) {
        return Err(format!(
            "disp {scaled} vs homogeneity prediction {expected}"
        ));
    }
    Ok(())
}

fn integer_control() -> Result<(), String> {
    let grid = Lattice::integer(2).map_err(|e| e.to_string())?;
    match find_t_for_n(&grid, 5) {
        Err(Error::NotAdmissible) => {}
        other => {
            return Err(format!(
                "calibration on the integer grid should be refused, got {other:?}"
            ))
        }
    }
    let small = windowed_lattice_dispersion(&grid, 4.0)
        .map_err(|e| e.to_string())?
        .volume;
    let large = windowed_lattice_dispersion(&grid, 8.0)
        .map_err(|e| e.to_string())?
        .volume;
    if large / small < 1.8 {
        return Err(format!(
            "slab volume should double with the window: {small} -> {large}"
        ));
    }
    Ok(())
}
