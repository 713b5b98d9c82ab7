//! Cyclic Jacobi eigenvalue iteration for dense real symmetric matrices.

use crate::error::{HdxError, Result};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of the symmetric `n x n` row-major matrix `a`, sorted in
/// descending order, together with the off-diagonal Frobenius norm left when
/// the iteration stopped. Every eigenvalue is within that norm of the exact one.
pub fn symmetric_eigenvalues(mut a: Vec<f64>, n: usize, tol: f64) -> Result<(Vec<f64>, f64)> {
    assert_eq!(a.len(), n * n);
    let target = tol * 1e-3;
    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while off > target {
        if sweeps == MAX_SWEEPS {
            break;
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        let next = off_diagonal_norm(&a, n);
        // rounding floor reached
        if next >= off && next <= tol {
            off = next;
            break;
        }
        off = next;
    }
    if off > tol {
        return Err(HdxError::Domain(format!(
            "Jacobi iteration stalled at off-diagonal norm {off:e} (tolerance {tol:e})"
        )));
    }
    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    values.sort_by(|x, y| y.total_cmp(x));
    Ok((values, off))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with one Givens rotation applied from both sides.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let (vals, off) = symmetric_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2, 1e-12).unwrap();
        assert!((vals[0] - 3.0).abs() < 1e-12);
        assert!((vals[1] - 1.0).abs() < 1e-12);
        assert!(off <= 1e-12);
    }

    #[test]
    fn diagonal_input_is_returned_sorted() {
        let a = vec![1.0, 0.0, 0.0, 0.0, -4.0, 0.0, 0.0, 0.0, 2.5];
        let (vals, _) = symmetric_eigenvalues(a, 3, 1e-12).unwrap();
        assert_eq!(vals, vec![2.5, 1.0, -4.0]);
    }

    #[test]
    fn empty_matrix() {
        let (vals, off) = symmetric_eigenvalues(Vec::new(), 0, 1e-9).unwrap();
        assert!(vals.is_empty());
        assert_eq!(off, 0.0);
    }

    #[test]
    fn equal_diagonal_entries() {
        // theta == 0 branch
        let a = vec![1.0, 2.0, 0.5, 2.0, 1.0, -1.0, 0.5, -1.0, 1.0];
        let (vals, _) = symmetric_eigenvalues(a, 3, 1e-12).unwrap();
        let trace: f64 = vals.iter().sum();
        assert!((trace - 3.0).abs() < 1e-12);
        let frob: f64 = vals.iter().map(|v| v * v).sum();
        assert!((frob - (3.0 + 2.0 * (4.0 + 0.25 + 1.0))).abs() < 1e-10);
    }
}
