//! Cyclic Jacobi eigensolver for small dense symmetric matrices.
//!
//! Used only as a floating-point oracle against the exact spectra.

use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;

fn off_diagonal_max(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut m = 0.0f64;
    for p in 0..n {
        for q in p + 1..n {
            m = m.max(a[p][q].abs());
        }
    }
    m
}

/// Eigenvalues of the symmetric matrix `a`, ascending. Converged once every
/// off-diagonal magnitude is below `tol`.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let n = a.len();
    if let Some(r) = a.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: r.len(),
        });
    }
    let mut sweeps = 0;
    loop {
        let residual = off_diagonal_max(&a);
        if residual < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[p][k] = a[k][p];
                    a[k][q] = s * akp + c * akq;
                    a[q][k] = a[k][q];
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}
