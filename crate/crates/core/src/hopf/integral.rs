use super::bialgebra::FiniteHopfAlgebra;
use crate::error::Error;
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{rank, DenseMatrix, Scalar, SparseSystem, ONE, ZERO};
use crate::report::VerificationReport;

/// Normal integral, integral element, Nakayama automorphism and modular
/// function of a cosemisimple Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralData {
    pub phi: Vec<Scalar>,
    pub t: Option<Vec<Scalar>>,
    pub nakayama: DenseMatrix,
    pub nakayama_inverse: DenseMatrix,
    pub modular: Vec<Scalar>,
    /// Dimension of the space of two-sided integrals on `H`.
    pub integral_space_dim: usize,
}

impl IntegralData {
    pub fn phi_of(&self, x: &[(usize, Scalar)]) -> Scalar {
        x.iter().map(|&(i, c)| c * self.phi[i]).sum()
    }
}

/// Solves for φ with `(id⊗φ)Δ = (φ⊗id)Δ = φ(·)1` and `φ(1) = 1`, and for
/// `t` with `xt = tx = ε(x)t`, `ε(t) = 1`.
///
/// The Nakayama matrix comes from `A_ij = φ(e_i e_j)`: with maps acting on
/// column vectors, `φ(xy) = φ(y N(x))` reads `Aᵀ = A N`.
///
/// # Errors
///
/// * [`Error::NotCosemisimple`] -- no integral with `φ(1) = 1`
/// * [`Error::SingularGramForm`] -- `A` is singular
pub fn compute_integral(h: &FiniteHopfAlgebra) -> Result<IntegralData, Error> {
    let n = h.dim;
    let mut sys = SparseSystem::new(n);
    for i in 0..n {
        // row k of (id⊗φ)Δ(e_i) - φ(e_i)1 and of (φ⊗id)Δ(e_i) - φ(e_i)1
        let mut left: Vec<SparseVec> = vec![Vec::new(); n];
        let mut right: Vec<SparseVec> = vec![Vec::new(); n];
        for (a, b, c) in h.comul_basis(i) {
            left[a].push((b, c));
            right[b].push((a, c));
        }
        for k in 0..n {
            let mut l = std::mem::take(&mut left[k]);
            let mut r = std::mem::take(&mut right[k]);
            if h.unit[k] != ZERO {
                l.push((i, -h.unit[k]));
                r.push((i, -h.unit[k]));
            }
            sys.push(l, ZERO);
            sys.push(r, ZERO);
        }
    }
    let homogeneous = sys.solve()?;
    let integral_space_dim = homogeneous.nullspace.len();
    sys.push(sparse::from_dense(&h.unit), ONE);
    let sol = sys.solve().map_err(|_| Error::NotCosemisimple)?;
    let phi = sol.particular;

    let t = integral_element(h);

    let a = DenseMatrix::from_fn(n, n, |i, j| {
        h.mul_basis(i, j).iter().map(|&(k, c)| c * phi[k]).sum()
    });
    let a_inv = a.inverse().map_err(|_| Error::SingularGramForm)?;
    let nakayama = a_inv.mul(&a.transpose())?;
    let nakayama_inverse = nakayama.inverse().map_err(|_| Error::SingularGramForm)?;
    let modular = (0..n)
        .map(|j| (0..n).map(|k| h.counit[k] * nakayama[(k, j)]).sum())
        .collect();
    Ok(IntegralData { phi, t, nakayama, nakayama_inverse, modular, integral_space_dim })
}

fn integral_element(h: &FiniteHopfAlgebra) -> Option<Vec<Scalar>> {
    let n = h.dim;
    let mut sys = SparseSystem::new(n);
    for j in 0..n {
        let mut left: Vec<SparseVec> = vec![Vec::new(); n];
        let mut right: Vec<SparseVec> = vec![Vec::new(); n];
        for l in 0..n {
            for &(k, c) in h.mul_basis(j, l) {
                left[k].push((l, c));
            }
            for &(k, c) in h.mul_basis(l, j) {
                right[k].push((l, c));
            }
        }
        for k in 0..n {
            let mut l = std::mem::take(&mut left[k]);
            let mut r = std::mem::take(&mut right[k]);
            if h.counit[j] != ZERO {
                l.push((k, -h.counit[j]));
                r.push((k, -h.counit[j]));
            }
            sys.push(l, ZERO);
            sys.push(r, ZERO);
        }
    }
    sys.push(sparse::from_dense(&h.counit), ONE);
    let sol = sys.solve().ok()?;
    sol.nullspace.is_empty().then_some(sol.particular)
}

fn diff(a: &[(usize, Scalar)], b: &[(usize, Scalar)], n: usize) -> f64 {
    sparse::max_abs_diff(&sparse::to_dense(a, n), &sparse::to_dense(b, n))
}

/// Invariants of [`IntegralData`]: integral equations, `t`, the Nakayama
/// identity, multiplicativity of `N` and the two closed formulas for `N` and
/// `N⁻¹` in terms of `S²` and `α`.
pub fn check_integral_data(h: &FiniteHopfAlgebra, data: &IntegralData, tol: f64) -> VerificationReport {
    let n = h.dim;
    let mut r = VerificationReport::new("integral", tol);
    let one = h.unit_sv();
    let (mut li, mut ri): (f64, f64) = (0.0, 0.0);
    for i in 0..n {
        let mut left = vec![ZERO; n];
        let mut right = vec![ZERO; n];
        for (a, b, c) in h.comul_basis(i) {
            left[a] += c * data.phi[b];
            right[b] += c * data.phi[a];
        }
        let target: Vec<Scalar> = h.unit.iter().map(|u| u * data.phi[i]).collect();
        li = li.max(sparse::max_abs_diff(&left, &target));
        ri = ri.max(sparse::max_abs_diff(&right, &target));
    }
    r.residual("left-integral", li).residual("right-integral", ri);
    r.residual("phi-normalized", (data.phi_of(&one) - ONE).norm());
    r.flag(
        "integral-space-1d",
        data.integral_space_dim == 1,
        format!("dimension {}", data.integral_space_dim),
    );

    match &data.t {
        Some(t) => {
            let tv = sparse::from_dense(t);
            r.residual("t-counit", (h.counit_of(&tv) - ONE).norm());
            let (mut tl, mut tr): (f64, f64) = (0.0, 0.0);
            for j in 0..n {
                let e = sparse::basis(j);
                let target = sparse::scale(&tv, h.counit[j]);
                tl = tl.max(diff(&h.mul(&e, &tv), &target, n));
                tr = tr.max(diff(&h.mul(&tv, &e), &target, n));
            }
            r.residual("t-left", tl).residual("t-right", tr);
        }
        None => {
            r.skip("t-counit", "no integral element");
        }
    }

    let ncols: Vec<SparseVec> = data.nakayama.sparse_columns();
    let ninv: Vec<SparseVec> = data.nakayama_inverse.sparse_columns();
    let (mut ident, mut morph): (f64, f64) = (0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            let xy = data.phi_of(h.mul_basis(i, j));
            let ynx = data.phi_of(&h.mul(&sparse::basis(j), &ncols[i]));
            ident = ident.max((xy - ynx).norm());
            let lhs = data.nakayama.mul_sparse(h.mul_basis(i, j));
            let rhs = h.mul(&ncols[i], &ncols[j]);
            morph = morph.max(diff(&lhs, &rhs, n));
        }
    }
    r.residual("nakayama-identity", ident).residual("nakayama-morphism", morph);

    let alpha_s: Vec<Scalar> = (0..n)
        .map(|j| h.s_basis(j).iter().map(|&(k, c)| c * data.modular[k]).sum())
        .collect();
    let (mut f1, mut f2): (f64, f64) = (0.0, 0.0);
    for k in 0..n {
        let mut a = vec![ZERO; n];
        let mut b = vec![ZERO; n];
        for (i, j, c) in h.comul_basis(k) {
            let s2 = h.s(h.s_basis(i));
            sparse::add_into(&mut a, &s2, c * data.modular[j]);
            let sm2 = h.s_inv(h.s_inv_basis(i));
            sparse::add_into(&mut b, &sm2, c * alpha_s[j]);
        }
        f1 = f1.max(sparse::max_abs_diff(&a, &sparse::to_dense(&ncols[k], n)));
        f2 = f2.max(sparse::max_abs_diff(&b, &sparse::to_dense(&ninv[k], n)));
    }
    r.residual("nakayama-formula", f1).residual("inverse-nakayama-formula", f2);
    r
}

/// The semisimple identities: `S(x) = n Σ φ(t₁x)t₂`, `S(t) = t`, `φS = φ`,
/// `t` cocommutative, `φ` tracial and `x ↦ x⇀φ` bijective.
pub fn check_semisimple_identities(h: &FiniteHopfAlgebra, data: &IntegralData, tol: f64) -> VerificationReport {
    let n = h.dim;
    let mut r = VerificationReport::new("semisimple", tol);
    let Some(t) = &data.t else {
        r.flag("t-present", false, "no integral element");
        return r;
    };
    let tv = sparse::from_dense(t);
    let t_terms = h.comul(&tv);
    let dimc = Scalar::new(n as f64, 0.0);

    let mut sf: f64 = 0.0;
    for x in 0..n {
        let mut acc = vec![ZERO; n];
        for &(a, b, c) in &t_terms {
            let v = data.phi_of(h.mul_basis(a, x));
            acc[b] += dimc * c * v;
        }
        sf = sf.max(sparse::max_abs_diff(&acc, &sparse::to_dense(h.s_basis(x), n)));
    }
    r.residual("antipode-from-integrals", sf);
    r.residual("antipode-fixes-t", diff(&h.s(&tv), &tv, n));

    let phis = (0..n)
        .map(|j| (data.phi_of(h.s_basis(j)) - data.phi[j]).norm())
        .fold(0.0, f64::max);
    r.residual("phi-antipode-invariant", phis);

    let mut a = vec![ZERO; n * n];
    let mut b = vec![ZERO; n * n];
    for &(i, j, c) in &t_terms {
        a[i * n + j] += c;
        b[j * n + i] += c;
    }
    r.residual("t-cocommutative", sparse::max_abs_diff(&a, &b));

    let mut tr: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            tr = tr.max((data.phi_of(h.mul_basis(i, j)) - data.phi_of(h.mul_basis(j, i))).norm());
        }
    }
    r.residual("phi-tracial", tr);

    // column x holds the coordinates of x⇀φ : y ↦ φ(yx)
    let harpoon = DenseMatrix::from_fn(n, n, |y, x| data.phi_of(h.mul_basis(y, x)));
    let rk = rank(&harpoon);
    r.flag("harpoon-bijective", rk == n, format!("rank {rk} of {n}"));

    let s2 = h.antipode.mul(&h.antipode).map(|m| m.max_abs_diff(&DenseMatrix::identity(n)));
    r.residual("antipode-involutive", s2.unwrap_or(f64::INFINITY));
    r
}
