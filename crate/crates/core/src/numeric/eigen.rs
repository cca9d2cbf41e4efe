use super::dense::DenseMatrix;
use super::scalar::{Scalar, ZERO};
use crate::error::Error;

/// Eigenvalues (ascending) and matching unit eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: DenseMatrix,
}

const MAX_SWEEPS: usize = 200;

/// Complex Jacobi iteration for Hermitian matrices.
///
/// # Input
///
/// * `m` -- square matrix with `max|m - m†| <= tol`
/// * `tol` -- hermiticity tolerance; sweeps stop once the off-diagonal
///   Frobenius norm drops below `tol · ‖m‖_F`
///
/// # Notes
///
/// Pivots are visited cyclically by rows, so the result is deterministic.
pub fn hermitian_eigen(m: &DenseMatrix, tol: f64) -> Result<HermitianEigen, Error> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("eigenvalues of a non-square matrix".into()));
    }
    let herm = m.hermiticity_residual();
    if herm > tol {
        return Err(Error::NotHermitian(herm));
    }
    let n = m.rows();
    // symmetrize so that roundoff in the input does not leak into the result
    let mut a = DenseMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut v = DenseMatrix::identity(n);
    let norm = a.frobenius_norm();
    let stop = (tol * norm).max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) < stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                let phase = apq / r;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                // U = diag(1, conj(phase)) · [[c, s], [-s, c]]
                let upp = Scalar::new(c, 0.0);
                let upq = Scalar::new(s, 0.0);
                let uqp = -phase.conj() * s;
                let uqq = phase.conj() * c;
                for k in 0..n {
                    let (x, y) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = x * upp + y * uqp;
                    a[(k, q)] = x * upq + y * uqq;
                }
                for k in 0..n {
                    let (x, y) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = upp.conj() * x + uqp.conj() * y;
                    a[(q, k)] = upq.conj() * x + uqq.conj() * y;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Scalar::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Scalar::new(a[(q, q)].re, 0.0);
                for k in 0..n {
                    let (x, y) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = x * upp + y * uqp;
                    v[(k, q)] = x * upq + y * uqq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = DenseMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

/// Smallest eigenvalue of a Hermitian matrix; see [`hermitian_eigen`].
pub fn hermitian_min_eigenvalue(m: &DenseMatrix, tol: f64) -> Result<f64, Error> {
    if m.rows() == 0 {
        return Ok(f64::INFINITY);
    }
    Ok(hermitian_eigen(m, tol)?.values[0])
}

fn off_norm(a: &DenseMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// `f(M)` for a Hermitian `M`, applying `f` to the spectrum.
pub fn hermitian_function(m: &DenseMatrix, tol: f64, f: impl Fn(f64) -> f64) -> Result<DenseMatrix, Error> {
    let e = hermitian_eigen(m, tol)?;
    let d: Vec<Scalar> = e.values.iter().map(|&x| Scalar::new(f(x), 0.0)).collect();
    e.vectors.mul(&DenseMatrix::diagonal(&d))?.mul(&e.vectors.adjoint())
}
