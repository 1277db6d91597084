//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use latbox::{AxisBox, Lattice};

/// Same closed-box slack the library uses for membership decisions.
pub const MEMBERSHIP_TOL: f64 = 1e-12;

/// Every lattice point of the closed box, found by scanning the full integer
/// bounding range of the preimage, padded by one on each side, with no
/// pruning. Coordinates are built with the same ascending fold the library
/// enumerator uses, so results can be compared bit-for-bit.
pub fn brute_force_points(lattice: &Lattice, bounds: &AxisBox) -> Vec<Vec<f64>> {
    let dim = lattice.dim();
    let gen = lattice.generator();
    let inv = DMatrix::from_row_slice(dim, dim, gen)
        .try_inverse()
        .expect("test lattices are invertible");

    let mut zlo = vec![i64::MAX; dim];
    let mut zhi = vec![i64::MIN; dim];
    for vertex in bounds.vertices() {
        let y = &inv * DMatrix::from_column_slice(dim, 1, &vertex);
        for j in 0..dim {
            zlo[j] = zlo[j].min(y[(j, 0)].floor() as i64 - 1);
            zhi[j] = zhi[j].max(y[(j, 0)].ceil() as i64 + 1);
        }
    }

    let lower = bounds.lower();
    let upper = bounds.upper();
    let mut z = zlo.clone();
    let mut found = Vec::new();
    'odometer: loop {
        let mut x = vec![0.0; dim];
        for i in 0..dim {
            let mut s = 0.0;
            for (k, &zk) in z.iter().enumerate() {
                s += gen[i * dim + k] * zk as f64;
            }
            x[i] = s;
        }
        if (0..dim).all(|i| x[i] >= lower[i] - MEMBERSHIP_TOL && x[i] <= upper[i] + MEMBERSHIP_TOL)
        {
            found.push(x);
        }
        for axis in 0..dim {
            if z[axis] < zhi[axis] {
                z[axis] += 1;
                continue 'odometer;
            }
            z[axis] = zlo[axis];
        }
        break;
    }
    found
}

/// Lexicographic key on exact bit patterns (no NaNs in lattice points).
pub fn sort_key(p: &[f64]) -> Vec<u64> {
    p.iter().map(|v| v.to_bits()).collect()
}

/// A random box with both corners drawn uniformly from `[-half, half)^dim`.
pub fn random_box(rng: &mut ChaCha8Rng, dim: usize, half: f64) -> AxisBox {
    let mut lower = Vec::with_capacity(dim);
    let mut upper = Vec::with_capacity(dim);
    for _ in 0..dim {
        let a = rng.gen_range(-half..half);
        let b = rng.gen_range(-half..half);
        lower.push(a.min(b));
        upper.push(a.max(b));
    }
    AxisBox::new(lower, upper).unwrap()
}

/// Asserts that the pruned enumerator and the brute-force scan find exactly
/// the same point set in `bounds`, bit-for-bit.
pub fn assert_same_set(lattice: &Lattice, bounds: &AxisBox, label: &str) {
    let mut fast = latbox::points_in_box(lattice, bounds).unwrap();
    let mut slow = brute_force_points(lattice, bounds);
    fast.sort_by_key(|p| sort_key(p));
    slow.sort_by_key(|p| sort_key(p));
    assert_eq!(
        fast.len(),
        slow.len(),
        "{label}: enumerator found {} points, oracle {} in {:?}..{:?}",
        fast.len(),
        slow.len(),
        bounds.lower(),
        bounds.upper()
    );
    for (f, s) in fast.iter().zip(&slow) {
        assert_eq!(
            sort_key(f),
            sort_key(s),
            "{label}: point mismatch {f:?} vs {s:?}"
        );
    }
}
