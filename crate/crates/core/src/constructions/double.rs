use super::common::{antipode_cross_checked, bialgebra_from_fns, structure_difference, Built};
use super::dual::{dual, opposite_variants, Variant};
use super::matched_pair::{bicrossproduct, MatchedPairHopfData};
use crate::error::Error;
use crate::hopf::FiniteHopfAlgebra;
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{DenseMatrix, Scalar, SparseMap, ONE, ZERO};
use crate::report::VerificationReport;
use crate::star::{StarHopfAlgebra, StarStructure};

/// `z ↦ β(w e_z u)` as dual coordinates.
fn sandwich(h: &FiniteHopfAlgebra, beta: &[(usize, Scalar)], w: &[(usize, Scalar)], u: &[(usize, Scalar)]) -> SparseVec {
    let n = h.dim;
    let mut b = vec![ZERO; n];
    for &(k, c) in beta {
        b[k] += c;
    }
    let out: Vec<Scalar> = (0..n)
        .map(|z| {
            let v = h.mul(&h.mul(w, &sparse::basis(z)), u);
            v.iter().map(|&(k, c)| c * b[k]).sum()
        })
        .collect();
    sparse::from_dense(&out)
}

/// The pair `(H^∨cop, H)` with `(x▷α)(y) = Σα(𝒮⁻¹(x₂)yx₁)` and
/// `x◁α = Σα(𝒮⁻¹(x₃)x₁)x₂`.
pub fn double_pair(h: &StarHopfAlgebra) -> MatchedPairHopfData {
    let n = h.dim;
    let a = opposite_variants(&dual(h), Variant::Cop);
    let e = sparse::basis;
    let mut left = SparseMap::zero(n * n, n);
    let mut right = SparseMap::zero(n * n, n);
    for x in 0..n {
        let mut by_q: Vec<Vec<Scalar>> = vec![vec![ZERO; n]; n];
        for (x1, x2, c) in h.comul_basis(x) {
            let w = h.s_inv_basis(x2);
            for y in 0..n {
                for &(q, d) in &h.mul(&h.mul(w, &e(y)), &e(x1)) {
                    by_q[q][y] += c * d;
                }
            }
        }
        let mut rq: Vec<Vec<Scalar>> = vec![vec![ZERO; n]; n];
        for (idx, c) in h.coprod(x, 3) {
            for &(q, d) in &h.mul(h.s_inv_basis(idx[2]), &e(idx[0])) {
                rq[q][idx[1]] += c * d;
            }
        }
        for q in 0..n {
            left.cols[x * n + q] = sparse::from_dense(&by_q[q]);
            right.cols[x * n + q] = sparse::from_dense(&rq[q]);
        }
    }
    MatchedPairHopfData::new(a, h.clone(), left, right).expect("shapes")
}

/// Drinfel'd double `D(H)` on the basis `δ^p e_x ↦ p·n + x`.
///
/// Built from the explicit product `(αx)(βy) = Σα(x₁⇀β↼𝒮⁻¹(x₃))x₂y`,
/// coproduct `Δ(αx) = Σα₂x₁⊗α₁x₂` and, when `H` has a star,
/// `(αx)* = Σ(x₁*⇀α*↼𝒮⁻¹(x₃)*)x₂*`. The result is compared with the
/// bicrossproduct of [`double_pair`].
///
/// # Errors
///
/// [`Error::AntipodeMismatch`] or [`Error::PathMismatch`] beyond `tol`.
pub fn drinfeld_double(h: &StarHopfAlgebra, tol: f64) -> Result<Built, Error> {
    let direct = double_direct(h, tol)?;
    let mut report = direct.report;
    let via = bicrossproduct(&double_pair(h), tol)?;
    report.merge("bicross", &via.report);
    let d = structure_difference(&direct.algebra, &via.algebra);
    report.residual("two-path", d);
    if d > tol {
        return Err(Error::PathMismatch(format!("double: direct and bicrossproduct differ by {d:e}")));
    }
    Ok(Built { algebra: direct.algebra, report })
}

/// The double from its explicit formulas only.
pub fn double_direct(h: &StarHopfAlgebra, tol: f64) -> Result<Built, Error> {
    let n = h.dim;
    let nn = n * n;
    let e = sparse::basis;
    let mut report = VerificationReport::new("double", tol);
    let d3: Vec<_> = (0..n).map(|x| h.coprod(x, 3)).collect();
    let dual_h = dual(h);
    // m_ij^k grouped by k
    let mut mt: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            for &(k, c) in h.mul_basis(i, j) {
                mt[k].push((i, j, c));
            }
        }
    }
    let labels = (0..nn).map(|k| format!("{}{}", dual_h.labels[k / n], h.labels[k % n])).collect();
    let mut unit = vec![ZERO; nn];
    sparse::kron_into(&mut unit, &dual_h.unit_sv(), &h.unit_sv(), n, ONE);
    let counit = (0..nn).map(|k| dual_h.counit[k / n] * h.counit[k % n]).collect();
    let b = bialgebra_from_fns(
        nn,
        |i, j| {
            let (p, x) = (i / n, i % n);
            let (q, y) = (j / n, j % n);
            let mut acc = vec![ZERO; nn];
            for (idx, c) in &d3[x] {
                let f = sandwich(h, &e(q), h.s_inv_basis(idx[2]), &e(idx[0]));
                let af = dual_h.mul(&e(p), &f);
                sparse::kron_into(&mut acc, &af, h.mul_basis(idx[1], y), n, *c);
            }
            acc
        },
        |k| {
            let (p, x) = (k / n, k % n);
            let mut out = Vec::new();
            for &(i, j, c) in &mt[p] {
                for (x1, x2, d) in h.comul_basis(x) {
                    out.push((j * n + x1, i * n + x2, c * d));
                }
            }
            out
        },
        unit,
        counit,
        labels,
    )?;
    // 𝒮(αx) = Σ(z ↦ α(𝒮⁻¹(x₁ z 𝒮(x₃))))𝒮(x₂)
    let closed_cols: Vec<SparseVec> = (0..nn)
        .map(|k| {
            let (p, x) = (k / n, k % n);
            let mut acc = vec![ZERO; nn];
            for (idx, c) in &d3[x] {
                let f: Vec<Scalar> = (0..n)
                    .map(|z| {
                        let inner = h.mul(&h.mul(&e(idx[0]), &e(z)), h.s_basis(idx[2]));
                        let v = h.s_inv(&inner);
                        v.iter().filter(|t| t.0 == p).map(|t| t.1).sum()
                    })
                    .collect();
                sparse::kron_into(&mut acc, &sparse::from_dense(&f), h.s_basis(idx[1]), n, *c);
            }
            sparse::from_dense(&acc)
        })
        .collect();
    let closed = DenseMatrix::from_sparse_columns(nn, &closed_cols);
    let hopf = antipode_cross_checked(b, &closed, tol)?;
    report.residual("antipode-closed-form", hopf.antipode.max_abs_diff(&closed));

    let star = match (&h.star, &dual_h.star) {
        (Some(sh), Some(sd)) => {
            let mut cols = Vec::with_capacity(nn);
            let mut alt_diff: f64 = 0.0;
            for k in 0..nn {
                let (p, x) = (k / n, k % n);
                let mut acc = vec![ZERO; nn];
                let mut alt = vec![ZERO; nn];
                for (idx, c) in &d3[x] {
                    let cc = c.conj();
                    let x2s = sh.basis_image(idx[1]);
                    // (x₁*⇀α*↼𝒮⁻¹(x₃)*)
                    let w = sh.apply(h.s_inv_basis(idx[2]));
                    let f = sandwich(h, sd.basis_image(p), &w, sh.basis_image(idx[0]));
                    sparse::kron_into(&mut acc, &f, x2s, n, cc);
                    // (x₃⇀α↼𝒮⁻¹(x₁))*, harpoons read as z ↦ α(x₃ z 𝒮⁻¹(x₁))
                    let g = sandwich(h, &e(p), &e(idx[2]), h.s_inv_basis(idx[0]));
                    sparse::kron_into(&mut alt, &sd.apply(&g), x2s, n, cc);
                }
                alt_diff = alt_diff.max(sparse::max_abs_diff(&acc, &alt));
                cols.push(sparse::from_dense(&acc));
            }
            report.residual("star-two-forms", alt_diff);
            Some(StarStructure::from_columns(nn, &cols))
        }
        _ => None,
    };
    Ok(Built { algebra: StarHopfAlgebra { hopf, star }, report })
}

/// Module over `D(H)` (basis `αx ↦ α·dim H + x`) from a left `H`-module and
/// a left `H`-comodule on the same space: `(αx)·v = α·(x·v)` with
/// `α·w = Σα(𝒮⁻¹(w₋₁))w₀`. It is a `D(H)`-module exactly when the pair is
/// Yetter–Drinfel'd, which [`crate::star::verify_module`] decides.
pub fn yetter_drinfeld_module(
    h: &FiniteHopfAlgebra,
    action: &crate::star::ModuleData,
    coaction: &crate::star::ComoduleData,
) -> Result<crate::star::ModuleData, Error> {
    use crate::star::{comodule_to_dual_module, ModuleData, Side};
    let n = h.dim;
    if action.side != Side::Left || action.actions.len() != n || action.dim != coaction.dim {
        return Err(Error::DimensionMismatch("a left H-module on the comodule's space is required".into()));
    }
    let dual_action = comodule_to_dual_module(coaction, h)?;
    let mut actions = Vec::with_capacity(n * n);
    for a in &dual_action.actions {
        for x in &action.actions {
            actions.push(a.mul(x)?);
        }
    }
    ModuleData::new(action.dim, Side::Left, actions)
}
