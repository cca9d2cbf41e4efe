use super::common::{antipode_cross_checked, bialgebra_from_fns, Built};
use crate::error::Error;
use crate::hopf::{convolution, convolution_inverse, verify_hopf, FiniteBialgebra, IntegralData, LinearMapBetween};
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{hermitian_function, hermitian_min_eigenvalue, DenseMatrix, Scalar, ZERO};
use crate::report::VerificationReport;
use crate::star::{gram_matrix, is_cqg, StarHopfAlgebra};

/// A cocycle `χ : H⊗H → ℂ` (index `x·dim(H) + y`) with the maps derived
/// from it.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistData {
    pub chi: Vec<Scalar>,
    pub chi_inv: Vec<Scalar>,
    /// `κ(x) = Σχ(x₁, 𝒮x₂)`
    pub kappa: Vec<Scalar>,
    pub kappa_inv: Vec<Scalar>,
    /// `(κ∘𝒮⁻¹) ⋆ κ⁻¹`
    pub zeta: Vec<Scalar>,
    /// `Φ = (κ∘𝒮⁻¹) ⋆ id ⋆ κ⁻¹`, columns are `Φ(e_x)`.
    pub phi_map: DenseMatrix,
    pub report: VerificationReport,
}

fn pair(f: &[Scalar], n: usize, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Scalar {
    let mut s = ZERO;
    for &(i, a) in x {
        for &(j, b) in y {
            s += a * b * f[i * n + j];
        }
    }
    s
}

fn eval(f: &[Scalar], x: &[(usize, Scalar)]) -> Scalar {
    x.iter().map(|&(i, c)| c * f[i]).sum()
}

fn max_diff(a: &[Scalar], b: &[Scalar]) -> f64 {
    sparse::max_abs_diff(a, b)
}

/// `ε⊗ε`.
pub fn trivial_cocycle(h: &FiniteBialgebra) -> Vec<Scalar> {
    let n = h.dim;
    (0..n * n).map(|k| h.counit[k / n] * h.counit[k % n]).collect()
}

/// Cocycle on `ℂ^G` coming from a bicharacter `β` of the dual of a subgroup
/// `K ≅ C_m × C_m`:
/// `χ(e_g, e_h) = |K|⁻² Σ β(ψ, ψ') conj ψ(g) conj ψ'(h)` for `g, h ∈ K`.
///
/// `embed[i·m + j]` is the index in `G` of `a^i b^j`; characters are
/// indexed the same way, `ψ_{k·m+l}(a^i b^j) = ω^{ik + jl}`.
pub fn bicharacter_cocycle(order: usize, embed: &[usize], m: usize, beta: impl Fn(usize, usize) -> Scalar) -> Vec<Scalar> {
    let k = m * m;
    let w = |t: usize| Scalar::from_polar(1.0, 2.0 * std::f64::consts::PI * (t % m) as f64 / m as f64);
    let chr = |psi: usize, g: usize| w((psi / m) * (g / m) + (psi % m) * (g % m));
    let norm = 1.0 / (k * k) as f64;
    let mut chi = vec![ZERO; order * order];
    for g in 0..k {
        for h in 0..k {
            let mut s = ZERO;
            for p in 0..k {
                for q in 0..k {
                    s += beta(p, q) * chr(p, g).conj() * chr(q, h).conj();
                }
            }
            chi[embed[g] * order + embed[h]] = s * norm;
        }
    }
    chi
}

/// Assembles [`TwistData`] and checks the cocycle identities.
///
/// Report entries: `normalization`, `cocycle`, `cocycle-inverse`,
/// `kappa-inverse-formula`, `phi-explicit`, `phi-star-antipode`,
/// `antipode-phi`.
///
/// # Errors
///
/// [`Error::NotACocycle`] when normalization or the cocycle identity fails,
/// [`Error::NotConvolutionInvertible`] when `χ` or `κ` has no inverse.
pub fn build_twist(h: &StarHopfAlgebra, chi: &[Scalar], tol: f64) -> Result<TwistData, Error> {
    let n = h.dim;
    if chi.len() != n * n {
        return Err(Error::DimensionMismatch(format!("cocycle has {} entries, expected {}", chi.len(), n * n)));
    }
    let e = sparse::basis;
    let one = h.unit_sv();
    let mut report = VerificationReport::new("twist", tol);

    let norm = (0..n)
        .map(|x| {
            let l = (pair(chi, n, &one, &e(x)) - h.counit[x]).norm();
            let r = (pair(chi, n, &e(x), &one) - h.counit[x]).norm();
            l.max(r)
        })
        .fold(0.0, f64::max);
    report.residual("normalization", norm);
    if norm > tol {
        return Err(Error::NotACocycle(format!("χ(1,x) = χ(x,1) = ε(x) fails by {norm:e}")));
    }

    // Σχ(x₁,y₁)χ(x₂y₂,z) = Σχ(y₁,z₁)χ(x,y₂z₂)
    let sandwich = |f: &[Scalar], x: usize, y: usize| -> Vec<Scalar> {
        let mut acc = vec![ZERO; n];
        for (x1, x2, a) in h.comul_basis(x) {
            for (y1, y2, b) in h.comul_basis(y) {
                sparse::add_into(&mut acc, h.mul_basis(x2, y2), a * b * f[x1 * n + y1]);
            }
        }
        acc
    };
    let w: Vec<Vec<SparseVec>> =
        (0..n).map(|x| (0..n).map(|y| sparse::from_dense(&sandwich(chi, x, y))).collect()).collect();
    let mut coc: f64 = 0.0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let l = pair(chi, n, &w[x][y], &e(z));
                let r = pair(chi, n, &e(x), &w[y][z]);
                coc = coc.max((l - r).norm());
            }
        }
    }
    report.residual("cocycle", coc);
    if coc > tol {
        return Err(Error::NotACocycle(format!("cocycle identity fails by {coc:e}")));
    }

    let hh = h.bialgebra.tensor(&h.bialgebra);
    let scalars = FiniteBialgebra::scalars();
    let chi_inv = convolution_inverse(&LinearMapBetween::functional(chi), &hh, &scalars)?.values();

    // Σχ(x₁,y₁z₁)χ⁻¹(x₂y₂,z₂) = Σχ⁻¹(y₁,z)χ(x,y₂)
    let mut inv_res: f64 = 0.0;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut l = ZERO;
                for (x1, x2, a) in h.comul_basis(x) {
                    for (y1, y2, b) in h.comul_basis(y) {
                        let x2y2 = h.mul_basis(x2, y2);
                        for (z1, z2, c) in h.comul_basis(z) {
                            l += a * b * c * pair(chi, n, &e(x1), h.mul_basis(y1, z1)) * pair(&chi_inv, n, x2y2, &e(z2));
                        }
                    }
                }
                let mut r = ZERO;
                for (y1, y2, b) in h.comul_basis(y) {
                    r += b * chi_inv[y1 * n + z] * chi[x * n + y2];
                }
                inv_res = inv_res.max((l - r).norm());
            }
        }
    }
    report.residual("cocycle-inverse", inv_res);

    let kappa: Vec<Scalar> = (0..n)
        .map(|x| h.comul_basis(x).map(|(x1, x2, c)| c * pair(chi, n, &e(x1), h.s_basis(x2))).sum())
        .collect();
    let kappa_inv = convolution_inverse(&LinearMapBetween::functional(&kappa), &h.bialgebra, &scalars)?.values();
    let closed: Vec<Scalar> = (0..n)
        .map(|x| h.comul_basis(x).map(|(x1, x2, c)| c * pair(&chi_inv, n, h.s_basis(x1), &e(x2))).sum())
        .collect();
    report.residual("kappa-inverse-formula", max_diff(&closed, &kappa_inv));

    let ks: Vec<Scalar> = (0..n).map(|x| eval(&kappa, h.s_inv_basis(x))).collect();
    let zeta = convolution(
        &LinearMapBetween::functional(&ks),
        &LinearMapBetween::functional(&kappa_inv),
        &h.bialgebra,
        &scalars,
    )?
    .values();

    let phi_cols: Vec<SparseVec> = (0..n)
        .map(|x| {
            let mut acc = vec![ZERO; n];
            for (ix, c) in h.coprod(x, 3) {
                sparse::add_into(&mut acc, &e(ix[1]), c * ks[ix[0]] * kappa_inv[ix[2]]);
            }
            sparse::from_dense(&acc)
        })
        .collect();
    let phi_map = DenseMatrix::from_sparse_columns(n, &phi_cols);

    // Φ(x) = Σχ(𝒮⁻¹x₂, x₁) x₃ χ⁻¹(𝒮x₄, x₅)
    let mut explicit: f64 = 0.0;
    for x in 0..n {
        let mut acc = vec![ZERO; n];
        for (ix, c) in h.coprod(x, 5) {
            let l = pair(chi, n, h.s_inv_basis(ix[1]), &e(ix[0]));
            let r = pair(&chi_inv, n, h.s_basis(ix[3]), &e(ix[4]));
            acc[ix[2]] += c * l * r;
        }
        explicit = explicit.max(max_diff(&acc, &sparse::to_dense(&phi_cols[x], n)));
    }
    report.residual("phi-explicit", explicit);

    let s_chi = twisted_antipode(h, &kappa, &kappa_inv);
    let phi_lin = LinearMapBetween::new(phi_map.clone());
    let zeta_one = LinearMapBetween::new(DenseMatrix::from_fn(n, n, |i, j| h.unit[i] * zeta[j]));
    let lhs = convolution(&phi_lin, &LinearMapBetween::new(s_chi.clone()), &h.bialgebra, &h.bialgebra)?;
    report.residual("phi-star-antipode", lhs.matrix.max_abs_diff(&zeta_one.matrix));

    let zeta_inv = convolution_inverse(&LinearMapBetween::functional(&zeta), &h.bialgebra, &scalars)?.values();
    let s_inv = h.antipode_inverse.mul(&s_chi)?;
    let rhs_cols: Vec<SparseVec> = (0..n)
        .map(|x| {
            let mut acc = vec![ZERO; n];
            for (x1, x2, c) in h.comul_basis(x) {
                sparse::add_into(&mut acc, &phi_cols[x2], c * zeta_inv[x1]);
            }
            sparse::from_dense(&acc)
        })
        .collect();
    report.residual("antipode-phi", s_inv.max_abs_diff(&DenseMatrix::from_sparse_columns(n, &rhs_cols)));

    Ok(TwistData { chi: chi.to_vec(), chi_inv, kappa, kappa_inv, zeta, phi_map, report })
}

/// `𝒮_χ = κ ⋆ 𝒮 ⋆ κ⁻¹`.
fn twisted_antipode(h: &StarHopfAlgebra, kappa: &[Scalar], kappa_inv: &[Scalar]) -> DenseMatrix {
    let n = h.dim;
    let cols: Vec<SparseVec> = (0..n)
        .map(|x| {
            let mut acc = vec![ZERO; n];
            for (ix, c) in h.coprod(x, 3) {
                sparse::add_into(&mut acc, h.s_basis(ix[1]), c * kappa[ix[0]] * kappa_inv[ix[2]]);
            }
            sparse::from_dense(&acc)
        })
        .collect();
    DenseMatrix::from_sparse_columns(n, &cols)
}

/// `m_χ(x, y) = Σχ(x₁,y₁) x₂y₂ χ⁻¹(x₃,y₃)` on basis elements.
fn twisted_mul(h: &StarHopfAlgebra, t: &TwistData, x: usize, y: usize) -> Vec<Scalar> {
    let n = h.dim;
    let mut acc = vec![ZERO; n];
    let dy = h.coprod(y, 3);
    for (ix, a) in h.coprod(x, 3) {
        for (iy, b) in &dy {
            let c = t.chi[ix[0] * n + iy[0]] * t.chi_inv[ix[2] * n + iy[2]];
            if c != ZERO {
                sparse::add_into(&mut acc, h.mul_basis(ix[1], iy[1]), a * b * c);
            }
        }
    }
    acc
}

/// Largest `|χ(x*, y*) − conj χ(y, x)|` over basis pairs.
pub fn star_cocycle_residual(h: &StarHopfAlgebra, chi: &[Scalar]) -> Result<f64, Error> {
    let star = h.require_star()?;
    let n = h.dim;
    let mut r: f64 = 0.0;
    for x in 0..n {
        for y in 0..n {
            let l = pair(chi, n, star.basis_image(x), star.basis_image(y));
            r = r.max((l - chi[y * n + x].conj()).norm());
        }
    }
    Ok(r)
}

/// `H_χ`: twisted product, same coproduct, `𝒮_χ`. The antipode is solved
/// generically and compared with `κ ⋆ 𝒮 ⋆ κ⁻¹`. The star of `H` is kept.
///
/// # Errors
///
/// [`Error::StarCompatFailed`] when `H` has a star and `χ(x*,y*) = conj χ(y,x)`
/// fails; pass `h.without_star()` to twist anyway.
/// [`Error::AntipodeMismatch`] when the two antipodes differ.
pub fn twist_product(h: &StarHopfAlgebra, t: &TwistData, tol: f64) -> Result<Built, Error> {
    let n = h.dim;
    let mut report = VerificationReport::new("twist-product", tol);
    if h.star.is_some() {
        let r = star_cocycle_residual(h, &t.chi)?;
        report.residual("star-cocycle", r);
        if r > tol {
            return Err(Error::StarCompatFailed(format!("χ(x*,y*) = conj χ(y,x) fails by {r:e}")));
        }
    }
    let b = bialgebra_from_fns(
        n,
        |x, y| twisted_mul(h, t, x, y),
        |k| h.comul_basis(k).collect(),
        h.unit.clone(),
        h.counit.clone(),
        h.labels.clone(),
    )?;
    let closed = twisted_antipode(h, &t.kappa, &t.kappa_inv);
    let hopf = antipode_cross_checked(b, &closed, tol)?;
    report.residual("antipode-closed-form", hopf.antipode.max_abs_diff(&closed));
    report.merge("hopf", &verify_hopf(&hopf, tol));
    Ok(Built { algebra: StarHopfAlgebra { hopf, star: h.star.clone() }, report })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwistPositivity {
    /// `max |⟨Φx, y⟩ − ⟨x, Φy⟩|` over basis pairs.
    pub selfadjoint_residual: f64,
    /// `max |[x, y] − ⟨Φx, y⟩|` with `[x, y] = φ(y* ·_χ x)`.
    pub bracket_residual: f64,
    pub min_eigenvalue: f64,
    pub cqg: bool,
    /// Verdict of the CQG test run on `H_χ` itself.
    pub direct_cqg: bool,
    pub report: VerificationReport,
}

/// Positivity of `Φ` against the Gram form of `H`, cross-checked with the
/// CQG test of `H_χ`.
///
/// # Errors
///
/// [`Error::MissingStar`], [`Error::CheckFailed`] if the Gram form of `H`
/// is not positive definite, [`Error::PathMismatch`] if the two verdicts
/// differ, and anything raised by [`twist_product`] or the CQG test.
pub fn twist_positivity(
    h: &StarHopfAlgebra,
    t: &TwistData,
    integral: &IntegralData,
    tol: f64,
) -> Result<TwistPositivity, Error> {
    let star = h.require_star()?;
    let n = h.dim;
    let g = gram_matrix(h, &integral.phi)?;
    let gmin = hermitian_min_eigenvalue(&g, tol)?;
    if gmin <= tol {
        return Err(Error::CheckFailed(format!("Gram form of H is not positive definite (min eigenvalue {gmin:e})")));
    }
    let m = &t.phi_map;
    // ⟨Φe_i, e_j⟩ and ⟨e_i, Φe_j⟩
    let a = m.transpose().mul(&g)?;
    let b = g.mul(&m.conj())?;
    let selfadjoint_residual = a.max_abs_diff(&b);
    let bracket = DenseMatrix::from_fn(n, n, |i, j| {
        let mut s = ZERO;
        for &(k, c) in star.basis_image(j) {
            s += c * eval(&integral.phi, &sparse::from_dense(&twisted_mul(h, t, k, i)));
        }
        s
    });
    let bracket_residual = bracket.max_abs_diff(&a);

    let k = g.transpose();
    let k_half_inv = hermitian_function(&k, tol, |v| 1.0 / v.sqrt())?;
    let x = k_half_inv.mul(&a.transpose())?.mul(&k_half_inv)?;
    let xh = x.add(&x.adjoint())?.scale(Scalar::new(0.5, 0.0));
    let min_eigenvalue = hermitian_min_eigenvalue(&xh, tol)?;
    let cqg = min_eigenvalue > tol;

    let twisted = twist_product(h, t, tol)?;
    let direct_cqg = is_cqg(&twisted.algebra, tol)?.cqg;

    let mut report = VerificationReport::new("twist-positivity", tol);
    report.residual("phi-selfadjoint", selfadjoint_residual);
    report.residual("bracket-identity", bracket_residual);
    report.flag("phi-positive", cqg, format!("min eigenvalue {min_eigenvalue:e}"));
    report.flag("verdict-agreement", cqg == direct_cqg, format!("via Φ {cqg}, direct {direct_cqg}"));
    if cqg != direct_cqg {
        return Err(Error::PathMismatch(format!("twist CQG verdict: via Φ {cqg}, direct {direct_cqg}")));
    }
    Ok(TwistPositivity { selfadjoint_residual, bracket_residual, min_eigenvalue, cqg, direct_cqg, report })
}
