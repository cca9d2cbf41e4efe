//! Star structures, the Gram form of the Haar functional and the compact
//! quantum group test, plus invariance checks for modules and comodules.

mod comodule;

pub use comodule::{
    check_comodule_invariance, check_star_representation, comodule_to_dual_module, dual_module_to_comodule,
    regular_comodule, regular_module, tensor_comodule, trivial_comodule, unitarize_comodule,
    unitarize_comodule_with_tol, verify_comodule,
    verify_module, ComoduleData, ModuleData, Side,
};

use crate::error::Error;
use crate::hopf::{compute_integral, FiniteHopfAlgebra, IntegralData};
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{hermitian_min_eigenvalue, DenseMatrix, Scalar, ZERO};
use crate::report::VerificationReport;
use crate::DEFAULT_TOL;

/// Conjugate-linear map `x ↦ C · conj(x)`.
///
/// Composition is fixed as "first `C₁`, then `C₂`": `v ↦ C₂ conj(C₁ conj(v))`,
/// i.e. the matrix `C₂ · conj(C₁)` acting on plain coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct StarStructure {
    pub matrix: DenseMatrix,
    cols: Vec<SparseVec>,
}

impl StarStructure {
    pub fn new(matrix: DenseMatrix) -> Result<Self, Error> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch("star matrix must be square".into()));
        }
        let cols = matrix.sparse_columns();
        Ok(StarStructure { matrix, cols })
    }

    pub fn from_columns(n: usize, cols: &[SparseVec]) -> Self {
        StarStructure::new(DenseMatrix::from_sparse_columns(n, cols)).expect("square")
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, x: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = vec![ZERO; self.dim()];
        for &(i, c) in x {
            sparse::add_into(&mut acc, &self.cols[i], c.conj());
        }
        sparse::from_dense(&acc)
    }

    pub fn basis_image(&self, i: usize) -> &SparseVec {
        &self.cols[i]
    }
}

/// A Hopf algebra with an optional star structure.
#[derive(Clone, Debug, PartialEq)]
pub struct StarHopfAlgebra {
    pub hopf: FiniteHopfAlgebra,
    pub star: Option<StarStructure>,
}

impl StarHopfAlgebra {
    pub fn new(hopf: FiniteHopfAlgebra, star: Option<StarStructure>) -> Result<Self, Error> {
        if let Some(s) = &star {
            if s.dim() != hopf.dim {
                return Err(Error::DimensionMismatch("star and algebra dimensions differ".into()));
            }
        }
        Ok(StarHopfAlgebra { hopf, star })
    }

    pub fn plain(hopf: FiniteHopfAlgebra) -> Self {
        StarHopfAlgebra { hopf, star: None }
    }

    pub fn require_star(&self) -> Result<&StarStructure, Error> {
        self.star.as_ref().ok_or(Error::MissingStar)
    }

    /// Applies the star; panics if absent (callers check [`require_star`]).
    pub fn st(&self, x: &[(usize, Scalar)]) -> SparseVec {
        self.star.as_ref().expect("star structure present").apply(x)
    }

    pub fn without_star(&self) -> Self {
        StarHopfAlgebra { hopf: self.hopf.clone(), star: None }
    }
}

impl std::ops::Deref for StarHopfAlgebra {
    type Target = FiniteHopfAlgebra;

    fn deref(&self) -> &FiniteHopfAlgebra {
        &self.hopf
    }
}

fn diff(a: &[(usize, Scalar)], b: &[(usize, Scalar)], n: usize) -> f64 {
    sparse::max_abs_diff(&sparse::to_dense(a, n), &sparse::to_dense(b, n))
}

/// Star-Hopf axioms, one named residual each.
pub fn verify_star_hopf(h: &StarHopfAlgebra, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("star-hopf", tol);
    let Some(star) = &h.star else {
        r.flag("star-present", false, "no star structure");
        return r;
    };
    let n = h.dim;
    let e = sparse::basis;

    let inv = (0..n).map(|i| diff(&star.apply(star.basis_image(i)), &e(i), n)).fold(0.0, f64::max);
    r.residual("star-involution", inv);

    let mut am: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs = star.apply(h.mul_basis(i, j));
            let rhs = h.mul(star.basis_image(j), star.basis_image(i));
            am = am.max(diff(&lhs, &rhs, n));
        }
    }
    r.residual("star-antimultiplicative", am);

    let mut cm: f64 = 0.0;
    for i in 0..n {
        let mut lhs = vec![ZERO; n * n];
        for (a, b, c) in h.comul(star.basis_image(i)) {
            lhs[a * n + b] += c;
        }
        let mut rhs = vec![ZERO; n * n];
        for (a, b, c) in h.comul_basis(i) {
            sparse::kron_into(&mut rhs, star.basis_image(a), star.basis_image(b), n, c.conj());
        }
        cm = cm.max(sparse::max_abs_diff(&lhs, &rhs));
    }
    r.residual("star-comultiplicative", cm);

    let one = h.unit_sv();
    r.residual("star-unit", diff(&star.apply(&one), &one, n));
    let ce = (0..n)
        .map(|i| (h.counit_of(star.basis_image(i)) - h.counit[i].conj()).norm())
        .fold(0.0, f64::max);
    r.residual("star-counit", ce);

    let (mut sq, mut comm): (f64, f64) = (0.0, 0.0);
    for i in 0..n {
        let once = h.s(star.basis_image(i));
        let twice = h.s(&star.apply(&once));
        sq = sq.max(diff(&twice, &e(i), n));
        let other = star.apply(h.s_basis(i));
        comm = comm.max(diff(&once, &other, n));
    }
    r.residual("antipode-star-involution", sq).residual("antipode-star-commute", comm);
    r
}

/// `G_ij = φ(e_j* e_i)` with its hermiticity residual and lowest eigenvalue.
#[derive(Clone, Debug, PartialEq)]
pub struct GramForm {
    pub matrix: DenseMatrix,
    pub hermiticity_residual: f64,
    pub min_eigenvalue: f64,
}

impl GramForm {
    /// `⟨x, y⟩ = Σ x_i conj(y_j) G_ij`.
    pub fn inner(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Scalar {
        let mut s = ZERO;
        for &(i, a) in x {
            for &(j, b) in y {
                s += a * b.conj() * self.matrix[(i, j)];
            }
        }
        s
    }
}

pub fn gram_matrix(h: &StarHopfAlgebra, phi: &[Scalar]) -> Result<DenseMatrix, Error> {
    let star = h.require_star()?;
    let n = h.dim;
    Ok(DenseMatrix::from_fn(n, n, |i, j| {
        h.mul(star.basis_image(j), &sparse::basis(i)).iter().map(|&(k, c)| c * phi[k]).sum()
    }))
}

/// Gram form of the normal integral, tolerance [`DEFAULT_TOL`].
pub fn gram_form(h: &StarHopfAlgebra, integral: &IntegralData) -> Result<GramForm, Error> {
    gram_form_with_tol(h, integral, DEFAULT_TOL)
}

/// # Errors
///
/// [`Error::NotHermitian`] when `max|G - G†| > tol`, which means φ∘* differs
/// from conj∘φ.
pub fn gram_form_with_tol(h: &StarHopfAlgebra, integral: &IntegralData, tol: f64) -> Result<GramForm, Error> {
    let matrix = gram_matrix(h, &integral.phi)?;
    let hermiticity_residual = matrix.hermiticity_residual();
    let min_eigenvalue = hermitian_min_eigenvalue(&matrix, tol)?;
    Ok(GramForm { matrix, hermiticity_residual, min_eigenvalue })
}

#[derive(Clone, Debug, PartialEq)]
pub struct CqgVerdict {
    pub cqg: bool,
    pub min_eigenvalue: f64,
    pub report: VerificationReport,
}

/// CQG test: cosemisimple, star-Hopf axioms, and a positive definite Gram
/// form (lowest eigenvalue above `tol`).
///
/// # Errors
///
/// Propagates [`Error::NotCosemisimple`]; [`Error::MissingStar`] without a star.
pub fn is_cqg(h: &StarHopfAlgebra, tol: f64) -> Result<CqgVerdict, Error> {
    h.require_star()?;
    let integral = compute_integral(&h.hopf)?;
    is_cqg_with_integral(h, &integral, tol)
}

pub fn is_cqg_with_integral(h: &StarHopfAlgebra, integral: &IntegralData, tol: f64) -> Result<CqgVerdict, Error> {
    let mut report = verify_star_hopf(h, tol);
    report.artifact = "cqg".into();
    let (min_eigenvalue, gram_ok) = match gram_form_with_tol(h, integral, tol) {
        Ok(g) => {
            report.residual("gram-hermitian", g.hermiticity_residual);
            (g.min_eigenvalue, true)
        }
        Err(Error::NotHermitian(res)) => {
            report.residual("gram-hermitian", res);
            (f64::NAN, false)
        }
        Err(e) => return Err(e),
    };
    let positive = gram_ok && min_eigenvalue > tol;
    report.push(crate::report::Check {
        check_id: "gram-positive".into(),
        status: if positive { crate::report::Status::Pass } else { crate::report::Status::Fail },
        residual: if positive { 0.0 } else { tol - min_eigenvalue },
        detail: format!("min eigenvalue {min_eigenvalue:e}"),
    });
    Ok(CqgVerdict { cqg: report.overall(), min_eigenvalue, report })
}

/// `⟨zx, y⟩ = ⟨x, z*y⟩`, and if φ is tracial also `⟨xz, y⟩ = ⟨x, yz*⟩` and
/// `⟨x*, y*⟩ = ⟨y, x⟩`.
pub fn check_gram_invariance(h: &StarHopfAlgebra, gram: &GramForm, tracial: bool, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("gram-invariance", tol);
    let n = h.dim;
    let star = match h.require_star() {
        Ok(s) => s,
        Err(_) => {
            r.flag("star-present", false, "no star structure");
            return r;
        }
    };
    let e = sparse::basis;
    let (mut left, mut right, mut swap): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let a = gram.inner(h.mul_basis(z, x), &e(y));
                let b = gram.inner(&e(x), &h.mul(star.basis_image(z), &e(y)));
                left = left.max((a - b).norm());
                if tracial {
                    let a = gram.inner(h.mul_basis(x, z), &e(y));
                    let b = gram.inner(&e(x), &h.mul(&e(y), star.basis_image(z)));
                    right = right.max((a - b).norm());
                }
            }
        }
    }
    if tracial {
        for x in 0..n {
            for y in 0..n {
                let a = gram.inner(star.basis_image(x), star.basis_image(y));
                let b = gram.inner(&e(y), &e(x));
                swap = swap.max((a - b).norm());
            }
        }
    }
    r.residual("left-regular", left);
    if tracial {
        r.residual("right-regular", right).residual("star-swap", swap);
    }
    r
}

/// Hopf axioms, the star axioms when a star is present, the integral
/// invariants and, with a star, the Gram form. The integral part is
/// skipped when `H` is not cosemisimple.
pub fn verify_all(h: &StarHopfAlgebra, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("verify", tol);
    r.merge("", &crate::hopf::verify_hopf(&h.hopf, tol));
    match compute_integral(&h.hopf) {
        Ok(integral) => {
            r.merge("", &crate::hopf::check_integral_data(&h.hopf, &integral, tol));
            r.merge("", &crate::hopf::check_semisimple_identities(&h.hopf, &integral, tol));
            r.flag("integral-unique", integral.integral_space_dim == 1, format!("dimension {}", integral.integral_space_dim));
            if h.star.is_some() {
                match is_cqg_with_integral(h, &integral, tol) {
                    Ok(v) => {
                        r.merge("", &v.report);
                    }
                    Err(e) => {
                        r.flag("gram", false, e.to_string());
                    }
                }
            }
        }
        Err(e) => {
            r.skip("integral", e.to_string());
            if h.star.is_some() {
                r.merge("", &verify_star_hopf(h, tol));
            }
        }
    }
    r
}
