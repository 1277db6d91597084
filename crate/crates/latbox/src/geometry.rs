//! Axis-parallel boxes.

use serde::{Deserialize, Serialize};

use crate::Error;

/// An axis-parallel box `[lower_1, upper_1] x ... x [lower_d, upper_d]`.
///
/// Invariant: `lower.len() == upper.len()`, every bound is finite, and
/// `lower[j] <= upper[j]` on every axis. Degenerate boxes (zero width on
/// some axis) are allowed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawAxisBox", into = "RawAxisBox")]
pub struct AxisBox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawAxisBox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl From<AxisBox> for RawAxisBox {
    fn from(b: AxisBox) -> Self {
        RawAxisBox {
            lower: b.lower,
            upper: b.upper,
        }
    }
}

impl TryFrom<RawAxisBox> for AxisBox {
    type Error = Error;
    fn try_from(raw: RawAxisBox) -> Result<Self, Error> {
        AxisBox::new(raw.lower, raw.upper)
    }
}

impl AxisBox {
    /// Builds a box from per-axis bounds, validating the box invariant.
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self, Error> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::InvalidInput(format!(
                "box bounds must be nonempty and of equal length, got {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        for j in 0..lower.len() {
            if !lower[j].is_finite() || !upper[j].is_finite() {
                return Err(Error::InvalidInput(format!(
                    "box bound on axis {j} is not finite"
                )));
            }
            if lower[j] > upper[j] {
                return Err(Error::InvalidInput(format!(
                    "box has lower[{j}] = {} > upper[{j}] = {}",
                    lower[j], upper[j]
                )));
            }
        }
        Ok(AxisBox { lower, upper })
    }

    /// The unit cube `[0,1]^d`.
    pub fn unit_cube(dim: usize) -> Self {
        AxisBox {
            lower: vec![0.0; dim],
            upper: vec![1.0; dim],
        }
    }

    /// The centered cube `[-half, half]^d`.
    pub fn centered_cube(half: f64, dim: usize) -> Result<Self, Error> {
        if !half.is_finite() || half <= 0.0 {
            return Err(Error::InvalidInput(format!(
                "window half-width must be positive and finite, got {half}"
            )));
        }
        AxisBox::new(vec![-half; dim], vec![half; dim])
    }

    /// The anchored box `[0, t_1] x ... x [0, t_d]` for positive `t`.
    pub fn anchored(t: &[f64]) -> Result<Self, Error> {
        if t.iter().any(|&v| !v.is_finite() || v <= 0.0) {
            return Err(Error::InvalidInput(
                "anchored box requires strictly positive components".into(),
            ));
        }
        AxisBox::new(vec![0.0; t.len()], t.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn side(&self, axis: usize) -> f64 {
        self.upper[axis] - self.lower[axis]
    }

    pub fn volume(&self) -> f64 {
        (0..self.dim()).map(|j| self.side(j)).product()
    }

    /// Closed membership with a per-coordinate absolute tolerance.
    pub fn contains_closed(&self, p: &[f64], tol: f64) -> bool {
        p.len() == self.dim()
            && (0..self.dim()).all(|j| p[j] >= self.lower[j] - tol && p[j] <= self.upper[j] + tol)
    }

    /// Strict membership in the open interior.
    pub fn strictly_inside(&self, p: &[f64]) -> bool {
        p.len() == self.dim()
            && (0..self.dim()).all(|j| p[j] > self.lower[j] && p[j] < self.upper[j])
    }

    /// The `2^d` corner points.
    pub fn vertices(&self) -> Vec<Vec<f64>> {
        let d = self.dim();
        (0..1usize << d)
            .map(|mask| {
                (0..d)
                    .map(|j| {
                        if mask >> j & 1 == 1 {
                            self.upper[j]
                        } else {
                            self.lower[j]
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn volume_and_sides() {
        let b = AxisBox::new(vec![0.0, -1.0], vec![2.0, 3.0]).unwrap();
        assert_eq!(b.volume(), 8.0);
        assert_eq!(b.side(0), 2.0);
        assert_eq!(b.side(1), 4.0);
    }

    #[test]
    fn rejects_inverted_bounds() {
        assert!(AxisBox::new(vec![1.0], vec![0.0]).is_err());
        assert!(AxisBox::new(vec![f64::NAN], vec![0.0]).is_err());
        assert!(AxisBox::new(vec![], vec![]).is_err());
    }

    #[test]
    fn degenerate_box_is_allowed() {
        let b = AxisBox::new(vec![0.5], vec![0.5]).unwrap();
        assert_eq!(b.volume(), 0.0);
        assert!(b.contains_closed(&[0.5], 0.0));
        assert!(!b.strictly_inside(&[0.5]));
    }

    #[test]
    fn membership_tolerance() {
        let b = AxisBox::unit_cube(2);
        assert!(b.contains_closed(&[1.0 + 5e-13, 0.0], 1e-12));
        assert!(!b.contains_closed(&[1.0 + 5e-12, 0.0], 1e-12));
        assert!(b.strictly_inside(&[0.5, 0.5]));
        assert!(!b.strictly_inside(&[0.0, 0.5]));
    }

    #[test]
    fn vertices_enumerate_all_corners() {
        let b = AxisBox::new(vec![0.0, 0.0], vec![1.0, 2.0]).unwrap();
        let vs = b.vertices();
        assert_eq!(vs.len(), 4);
        assert!(vs.contains(&vec![0.0, 0.0]));
        assert!(vs.contains(&vec![1.0, 2.0]));
    }

    #[test]
    fn serde_round_trip_rejects_bad_bounds() {
        let b = AxisBox::new(vec![0.0], vec![1.0]).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"lower":[0.0],"upper":[1.0]}"#);
        let back: AxisBox = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
        let bad: Result<AxisBox, _> = serde_json::from_str(r#"{"lower":[2.0],"upper":[1.0]}"#);
        assert!(bad.is_err());
    }
}
