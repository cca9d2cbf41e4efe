//! Complex scalars, sparse tensors, dense matrices, linear solving and
//! Hermitian spectra.

mod dense;
mod eigen;
mod linsolve;
mod scalar;
pub mod sparse;

pub use dense::DenseMatrix;
pub use eigen::{hermitian_eigen, hermitian_function, hermitian_min_eigenvalue, HermitianEigen};
pub use linsolve::{rank, solve_linear, LinearSolution, SparseSystem};
pub use scalar::{is_finite, RootOfUnity, Scalar, ScalarEntry, ONE, ZERO};
pub use sparse::{SparseMap, SparseTensor, SparseVec};

/// Process-wide pivot and prune thresholds.
///
/// Defaults are `1e-10` (pivot, relative to the largest matrix entry) and
/// `1e-14` (absolute prune level for stored tensor entries). The CLI may
/// override them once at startup.
pub mod thresholds {
    use std::sync::atomic::{AtomicU64, Ordering};

    pub const DEFAULT_PIVOT: f64 = 1e-10;
    pub const DEFAULT_PRUNE: f64 = 1e-14;

    static PIVOT: AtomicU64 = AtomicU64::new(DEFAULT_PIVOT.to_bits());
    static PRUNE: AtomicU64 = AtomicU64::new(DEFAULT_PRUNE.to_bits());

    pub fn pivot() -> f64 {
        f64::from_bits(PIVOT.load(Ordering::Relaxed))
    }

    pub fn prune() -> f64 {
        f64::from_bits(PRUNE.load(Ordering::Relaxed))
    }

    pub fn set_pivot(x: f64) {
        PIVOT.store(x.to_bits(), Ordering::Relaxed);
    }

    pub fn set_prune(x: f64) {
        PRUNE.store(x.to_bits(), Ordering::Relaxed);
    }
}
