//! Lattice construction and admissibility certificates.
//!
//! A lattice is stored as `Lambda = T(Z^d)` with `T` the row-major generator
//! matrix; the columns of `T` are the basis vectors. Alongside the generator
//! every lattice carries `det_abs = |det T|` and `nm_certified`, a proven
//! lower bound on the coordinate-product norm
//! `Nm(Lambda) = inf { |z_1 * ... * z_d| : z in Lambda, z != 0 }`.
//! A strictly positive `nm_certified` is the admissibility certificate the
//! dilation and partition machinery relies on; `0` means "no certificate",
//! not "not admissible".

use serde::{Deserialize, Serialize};

use crate::config::{Budgets, Tolerances};
use crate::geometry::AxisBox;
use crate::{enumeration, linalg, Error};

/// How a lattice was built. Dilations and duals wrap the tag of their source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Provenance {
    Frolov { dim: usize },
    Golden,
    Integer { dim: usize },
    Custom,
    Dilated { base: Box<Provenance>, t: Vec<f64> },
    Dual { base: Box<Provenance> },
}

/// A full-rank lattice `T(Z^d)` with certification metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "LatticeRepr", into = "LatticeRepr")]
pub struct Lattice {
    dim: usize,
    /// Row-major `d x d` generator; column `j` is the j-th basis vector.
    generator: Vec<f64>,
    det_abs: f64,
    nm_certified: f64,
    provenance: Provenance,
}

impl Lattice {
    /// The lattice spanned by the Vandermonde matrix of the roots of
    /// `p_d(x) = (x-1)(x-3)...(x-(2d-1)) - 1`.
    ///
    /// `p_d` has `d` simple real roots, one in each interval `(2m, 2m+2)`
    /// for `m = 0..d-1`, and is irreducible over the rationals; the
    /// coordinate product of a nonzero lattice point is a nonzero resultant,
    /// hence a nonzero integer, so `nm_certified = 1` exactly. The cap
    /// `d <= 8` keeps the Vandermonde matrix within double-precision reach;
    /// it is a documented limit, not silently extended.
    pub fn frolov(dim: usize) -> Result<Self, Error> {
        if !(1..=8).contains(&dim) {
            return Err(Error::DimensionRange {
                dim,
                min: 1,
                max: 8,
            });
        }
        let roots = frolov_roots(dim)?;
        let mut generator = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                generator[i * dim + j] = roots[i].powi(j as i32);
            }
        }
        // Vandermonde determinant: product of root differences.
        let mut det = 1.0;
        for i in 0..dim {
            for j in (i + 1)..dim {
                det *= roots[j] - roots[i];
            }
        }
        Ok(Lattice {
            dim,
            generator,
            det_abs: det.abs(),
            nm_certified: 1.0,
            provenance: Provenance::Frolov { dim },
        })
    }

    /// The planar lattice of the golden ratio: `T = [[1, phi], [1, 1-phi]]`
    /// with `phi = (1+sqrt 5)/2`.
    ///
    /// Its points are `(a + b*phi, a + b*(1-phi))`; the coordinate product is
    /// the quadratic form `|a^2 + ab - b^2| >= 1`, so `nm_certified = 1`,
    /// attained at `(a, b) = (1, 0)`, the point `(1, 1)`.
    pub fn golden() -> Self {
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        Lattice {
            dim: 2,
            generator: vec![1.0, phi, 1.0, 1.0 - phi],
            det_abs: 5.0_f64.sqrt(),
            nm_certified: 1.0,
            provenance: Provenance::Golden,
        }
    }

    /// The integer lattice `Z^d`. For `d >= 2` it is *not* admissible
    /// (points on coordinate hyperplanes have product zero), which makes it
    /// the negative control in dispersion studies.
    pub fn integer(dim: usize) -> Result<Self, Error> {
        if dim == 0 {
            return Err(Error::DimensionRange {
                dim,
                min: 1,
                max: usize::MAX,
            });
        }
        let mut generator = vec![0.0; dim * dim];
        for i in 0..dim {
            generator[i * dim + i] = 1.0;
        }
        Ok(Lattice {
            dim,
            generator,
            det_abs: 1.0,
            nm_certified: if dim == 1 { 1.0 } else { 0.0 },
            provenance: Provenance::Integer { dim },
        })
    }

    /// A lattice from an arbitrary invertible generator, given as rows.
    /// Custom lattices carry no admissibility certificate.
    pub fn custom(rows: &[Vec<f64>]) -> Result<Self, Error> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidInput("empty generator".into()));
        }
        let mut generator = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::InvalidInput(format!(
                    "generator row of length {} in a {}-dimensional lattice",
                    row.len(),
                    dim
                )));
            }
            for &v in row {
                if !v.is_finite() {
                    return Err(Error::InvalidInput("generator entry is not finite".into()));
                }
                generator.push(v);
            }
        }
        let det = linalg::determinant(dim, &generator);
        if !det.is_finite() || det.abs() < 1e-300 {
            return Err(Error::SingularGenerator);
        }
        Ok(Lattice {
            dim,
            generator,
            det_abs: det.abs(),
            nm_certified: 0.0,
            provenance: Provenance::Custom,
        })
    }

    /// The dual lattice, generated by the inverse-transpose of the generator.
    ///
    /// Admissibility transfers to the dual, but no quantitative bound comes
    /// with that fact, so the dual carries `nm_certified = 0` and its
    /// admissibility is observed empirically. The integer lattice is exactly
    /// self-dual and keeps its own metadata.
    pub fn dual(&self) -> Result<Self, Error> {
        if let Provenance::Integer { dim } = self.provenance {
            return Lattice::integer(dim);
        }
        let inv = linalg::inverse(self.dim, &self.generator).ok_or(Error::SingularGenerator)?;
        Ok(Lattice {
            dim: self.dim,
            generator: linalg::transpose(self.dim, &inv),
            det_abs: 1.0 / self.det_abs,
            nm_certified: 0.0,
            provenance: Provenance::Dual {
                base: Box::new(self.provenance.clone()),
            },
        })
    }

    /// Minimum of `|z_1 * ... * z_d|` over the nonzero lattice points of the
    /// window `[-m, m]^d`. Errors when the window holds no nonzero point.
    pub fn nm_empirical(&self, m: f64) -> Result<f64, Error> {
        let window = AxisBox::centered_cube(m, self.dim)?;
        let mut min: Option<f64> = None;
        enumeration::visit_points(
            self,
            &window,
            Budgets::default().enumeration_visits,
            |x, z| {
                if z.iter().all(|&v| v == 0) {
                    return;
                }
                let prod: f64 = x.iter().map(|c| c.abs()).product();
                min = Some(match min {
                    Some(cur) if cur <= prod => cur,
                    _ => prod,
                });
            },
        )?;
        min.ok_or(Error::EmptyWindow(m))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major generator matrix.
    pub fn generator(&self) -> &[f64] {
        &self.generator
    }

    pub fn generator_entry(&self, row: usize, col: usize) -> f64 {
        self.generator[row * self.dim + col]
    }

    pub fn det_abs(&self) -> f64 {
        self.det_abs
    }

    pub fn nm_certified(&self) -> f64 {
        self.nm_certified
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Maps an integer vector through the generator.
    pub fn map_integer(&self, z: &[i64]) -> Vec<f64> {
        let zf: Vec<f64> = z.iter().map(|&v| v as f64).collect();
        let mut out = vec![0.0; self.dim];
        linalg::mat_vec(self.dim, &self.generator, &zf, &mut out);
        out
    }

    /// Constructor used by dilation; callers guarantee the metadata.
    pub(crate) fn from_parts(
        dim: usize,
        generator: Vec<f64>,
        det_abs: f64,
        nm_certified: f64,
        provenance: Provenance,
    ) -> Self {
        Lattice {
            dim,
            generator,
            det_abs,
            nm_certified,
            provenance,
        }
    }
}

/// Serialized form: generator as row-major array of arrays.
#[derive(Serialize, Deserialize)]
struct LatticeRepr {
    dim: usize,
    generator: Vec<Vec<f64>>,
    det_abs: f64,
    nm_certified: f64,
    provenance: Provenance,
}

impl From<Lattice> for LatticeRepr {
    fn from(l: Lattice) -> Self {
        let rows = (0..l.dim)
            .map(|i| l.generator[i * l.dim..(i + 1) * l.dim].to_vec())
            .collect();
        LatticeRepr {
            dim: l.dim,
            generator: rows,
            det_abs: l.det_abs,
            nm_certified: l.nm_certified,
            provenance: l.provenance,
        }
    }
}

impl TryFrom<LatticeRepr> for Lattice {
    type Error = Error;
    fn try_from(r: LatticeRepr) -> Result<Self, Error> {
        if r.dim == 0 || r.generator.len() != r.dim {
            return Err(Error::Parse(format!(
                "lattice dim {} does not match generator with {} rows",
                r.dim,
                r.generator.len()
            )));
        }
        let mut generator = Vec::with_capacity(r.dim * r.dim);
        for row in &r.generator {
            if row.len() != r.dim {
                return Err(Error::Parse("generator is not square".into()));
            }
            generator.extend_from_slice(row);
        }
        if generator.iter().any(|v| !v.is_finite()) {
            return Err(Error::Parse("generator entry is not finite".into()));
        }
        let det = linalg::determinant(r.dim, &generator).abs();
        if det < 1e-300 {
            return Err(Error::Parse("generator is singular".into()));
        }
        let tol = Tolerances::default().det_rel;
        if (det - r.det_abs).abs() > tol * det.max(r.det_abs) {
            return Err(Error::Parse(format!(
                "stored det_abs {} disagrees with generator determinant {}",
                r.det_abs, det
            )));
        }
        if !r.nm_certified.is_finite() || r.nm_certified < 0.0 {
            return Err(Error::Parse(
                "nm_certified must be finite and nonnegative".into(),
            ));
        }
        Ok(Lattice {
            dim: r.dim,
            generator,
            det_abs: r.det_abs,
            nm_certified: r.nm_certified,
            provenance: r.provenance,
        })
    }
}

/// `p_d(x) = (x-1)(x-3)...(x-(2d-1)) - 1`.
pub(crate) fn frolov_poly(dim: usize, x: f64) -> f64 {
    (1..=dim).map(|j| x - (2 * j - 1) as f64).product::<f64>() - 1.0
}

fn frolov_poly_deriv(dim: usize, x: f64) -> f64 {
    (0..dim)
        .map(|skip| {
            (1..=dim)
                .filter(|&j| j - 1 != skip)
                .map(|j| x - (2 * j - 1) as f64)
                .product::<f64>()
        })
        .sum()
}

/// The `d` roots of `p_d` in ascending order.
///
/// Root `m` is bracketed in `[2m, 2m+2]` (the values of `p_d` at even
/// integers alternate in sign), bisected to width `1e-14` and polished with
/// five Newton steps.
fn frolov_roots(dim: usize) -> Result<Vec<f64>, Error> {
    let mut roots = Vec::with_capacity(dim);
    for m in 0..dim {
        let mut lo = (2 * m) as f64;
        let mut hi = (2 * m + 2) as f64;
        let flo = frolov_poly(dim, lo);
        let fhi = frolov_poly(dim, hi);
        let mut root = if flo == 0.0 {
            lo
        } else if fhi == 0.0 {
            hi
        } else {
            if flo.signum() == fhi.signum() {
                return Err(Error::RootBracketing { lo, hi });
            }
            let neg_lo = flo < 0.0;
            while hi - lo > 1e-14 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = frolov_poly(dim, mid);
                if fm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if (fm < 0.0) == neg_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            0.5 * (lo + hi)
        };
        for _ in 0..5 {
            let deriv = frolov_poly_deriv(dim, root);
            if deriv == 0.0 {
                break;
            }
            root -= frolov_poly(dim, root) / deriv;
        }
        roots.push(root);
    }
    Ok(roots)
}
