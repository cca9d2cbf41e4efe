use crate::error::Error;
use crate::hopf::{solve_antipode, FiniteBialgebra, FiniteHopfAlgebra};
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{DenseMatrix, Scalar, SparseMap, ZERO};
use crate::report::VerificationReport;
use crate::star::StarHopfAlgebra;

/// A construction result: the algebra (star attached when compatible) and
/// the checks performed while building it.
#[derive(Clone, Debug, PartialEq)]
pub struct Built {
    pub algebra: StarHopfAlgebra,
    pub report: VerificationReport,
}

/// Bilinear map `X⊗Y→Z` stored as a [`SparseMap`] on the index `x·ny + y`,
/// extended to sparse arguments.
pub(crate) fn bilinear(map: &SparseMap, ny: usize, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
    let mut acc = vec![ZERO; map.dst];
    for &(i, a) in x {
        for &(j, b) in y {
            sparse::add_into(&mut acc, &map.cols[i * ny + j], a * b);
        }
    }
    sparse::from_dense(&acc)
}

pub(crate) fn diff(a: &[(usize, Scalar)], b: &[(usize, Scalar)], n: usize) -> f64 {
    sparse::max_abs_diff(&sparse::to_dense(a, n), &sparse::to_dense(b, n))
}

/// Bialgebra on `n` basis vectors from basis-level product and coproduct.
/// `comul(k)` returns `(i, j, c)` terms.
pub(crate) fn bialgebra_from_fns(
    n: usize,
    mut mul: impl FnMut(usize, usize) -> Vec<Scalar>,
    mut comul: impl FnMut(usize) -> Vec<(usize, usize, Scalar)>,
    unit: Vec<Scalar>,
    counit: Vec<Scalar>,
    labels: Vec<String>,
) -> Result<FiniteBialgebra, Error> {
    let mult = SparseMap::from_fn(n * n, n, |p| mul(p / n, p % n));
    let mut cm = SparseMap::zero(n, n * n);
    for k in 0..n {
        let mut acc = std::collections::BTreeMap::new();
        for (i, j, c) in comul(k) {
            *acc.entry(i * n + j).or_insert(ZERO) += c;
        }
        let tol = crate::numeric::thresholds::prune();
        cm.cols[k] = acc.into_iter().filter(|e| e.1.norm() >= tol).collect();
    }
    FiniteBialgebra::new(mult, unit, cm, counit, labels)
}

/// Solves the antipode generically and compares it with `closed`.
///
/// # Errors
///
/// [`Error::NotAHopfAlgebra`] if no antipode exists, [`Error::AntipodeMismatch`]
/// if the two disagree beyond `tol`.
pub(crate) fn antipode_cross_checked(
    b: FiniteBialgebra,
    closed: &DenseMatrix,
    tol: f64,
) -> Result<FiniteHopfAlgebra, Error> {
    let h = solve_antipode(&b)?;
    let d = h.antipode.max_abs_diff(closed);
    if d > tol {
        return Err(Error::AntipodeMismatch(d));
    }
    Ok(h)
}

/// Largest entrywise difference between the structure maps of two algebras
/// (product, coproduct, unit, counit, antipode and star when both have one).
pub fn structure_difference(a: &StarHopfAlgebra, b: &StarHopfAlgebra) -> f64 {
    if a.dim != b.dim {
        return f64::INFINITY;
    }
    let mut d = a.mult.max_abs_diff(&b.mult).max(a.comult.max_abs_diff(&b.comult));
    d = d.max(sparse::max_abs_diff(&a.unit, &b.unit));
    d = d.max(sparse::max_abs_diff(&a.counit, &b.counit));
    d = d.max(a.antipode.max_abs_diff(&b.antipode));
    match (&a.star, &b.star) {
        (Some(x), Some(y)) => d.max(x.matrix.max_abs_diff(&y.matrix)),
        (None, None) => d,
        _ => f64::INFINITY,
    }
}
