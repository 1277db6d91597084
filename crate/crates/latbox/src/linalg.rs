//! Small dense linear-algebra helpers over row-major `d x d` matrices.
//!
//! Everything here is at desk scale (`d <= 8`); nalgebra does the factoring.

use std::cmp::Ordering;

use nalgebra::DMatrix;

pub(crate) fn determinant(dim: usize, rows: &[f64]) -> f64 {
    DMatrix::from_row_slice(dim, dim, rows).determinant()
}

/// Inverse as a row-major vector, or `None` when the matrix is singular.
pub(crate) fn inverse(dim: usize, rows: &[f64]) -> Option<Vec<f64>> {
    let inv = DMatrix::from_row_slice(dim, dim, rows).try_inverse()?;
    Some(row_major(dim, &inv))
}

pub(crate) fn transpose(dim: usize, rows: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            out[j * dim + i] = rows[i * dim + j];
        }
    }
    out
}

/// `out = M v` for a row-major matrix.
pub(crate) fn mat_vec(dim: usize, rows: &[f64], v: &[f64], out: &mut [f64]) {
    for i in 0..dim {
        let mut acc = 0.0;
        for j in 0..dim {
            acc += rows[i * dim + j] * v[j];
        }
        out[i] = acc;
    }
}

fn row_major(dim: usize, m: &DMatrix<f64>) -> Vec<f64> {
    let mut out = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            out.push(m[(i, j)]);
        }
    }
    out
}

/// Total lexicographic order on finite coordinate vectors.
pub(crate) fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.partial_cmp(y).expect("coordinates are finite") {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    a.len().cmp(&b.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_inverse_agree() {
        let rows = [2.0, 1.0, 1.0, 3.0];
        let det = determinant(2, &rows);
        assert!((det - 5.0).abs() < 1e-12);
        let inv = inverse(2, &rows).unwrap();
        // M * M^-1 = I
        let mut prod = [0.0; 4];
        for i in 0..2 {
            for j in 0..2 {
                prod[i * 2 + j] = (0..2).map(|k| rows[i * 2 + k] * inv[k * 2 + j]).sum();
            }
        }
        assert!((prod[0] - 1.0).abs() < 1e-12);
        assert!(prod[1].abs() < 1e-12);
        assert!(prod[2].abs() < 1e-12);
        assert!((prod[3] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn singular_matrix_has_no_inverse() {
        assert!(inverse(2, &[1.0, 2.0, 2.0, 4.0]).is_none());
    }

    #[test]
    fn transpose_flips_indices() {
        let t = transpose(2, &[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(t, vec![1.0, 3.0, 2.0, 4.0]);
    }

    #[test]
    fn lex_order_is_coordinatewise() {
        assert_eq!(lex_cmp(&[1.0, 2.0], &[1.0, 3.0]), Ordering::Less);
        assert_eq!(lex_cmp(&[2.0, 0.0], &[1.0, 9.0]), Ordering::Greater);
        assert_eq!(lex_cmp(&[1.0, 2.0], &[1.0, 2.0]), Ordering::Equal);
    }
}
