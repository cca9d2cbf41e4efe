use super::StarHopfAlgebra;
use crate::error::Error;
use crate::hopf::{FiniteBialgebra, FiniteHopfAlgebra, IntegralData};
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{hermitian_min_eigenvalue, DenseMatrix, Scalar, SparseMap, ZERO};
use crate::report::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Comodule of dimension `dim` over an `n`-dimensional coalgebra.
///
/// Right coactions index `V⊗H` as `w·n + h`, left ones index `H⊗V` as
/// `h·dim + w`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleData {
    pub dim: usize,
    pub side: Side,
    pub coalgebra_dim: usize,
    pub coaction: SparseMap,
}

impl ComoduleData {
    pub fn new(dim: usize, side: Side, coalgebra_dim: usize, coaction: SparseMap) -> Result<Self, Error> {
        if coaction.src != dim || coaction.dst != dim * coalgebra_dim {
            return Err(Error::DimensionMismatch(format!(
                "coaction must map {dim} -> {}",
                dim * coalgebra_dim
            )));
        }
        Ok(ComoduleData { dim, side, coalgebra_dim, coaction })
    }

    /// Builds the coaction from `(v, w, h, c)`: `e_v ↦ Σ c·(e_w, e_h)`.
    pub fn from_terms(
        dim: usize,
        side: Side,
        coalgebra_dim: usize,
        terms: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, Error> {
        let n = coalgebra_dim;
        let entries = terms.into_iter().map(|(v, w, h, c)| {
            let idx = match side {
                Side::Right => w * n + h,
                Side::Left => h * dim + w,
            };
            (v, idx, c)
        });
        ComoduleData::new(dim, side, n, SparseMap::from_entries(dim, dim * n, entries.collect::<Vec<_>>())?)
    }

    /// Terms of `ρ(e_v)` as `(w, h, c)`, whatever the side.
    pub fn terms(&self, v: usize) -> Vec<(usize, usize, Scalar)> {
        let (m, n) = (self.dim, self.coalgebra_dim);
        self.coaction.cols[v]
            .iter()
            .map(|&(p, c)| match self.side {
                Side::Right => (p / n, p % n, c),
                Side::Left => (p % m, p / m, c),
            })
            .collect()
    }
}

/// Module of dimension `dim`: one action matrix per basis element.
///
/// For a left module `actions[x]` sends `u` to `x·u`; for a right module it
/// sends `u` to `u·x`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleData {
    pub dim: usize,
    pub side: Side,
    pub actions: Vec<DenseMatrix>,
}

impl ModuleData {
    pub fn new(dim: usize, side: Side, actions: Vec<DenseMatrix>) -> Result<Self, Error> {
        if actions.iter().any(|a| a.rows() != dim || a.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {dim}x{dim}")));
        }
        Ok(ModuleData { dim, side, actions })
    }

    /// Action matrix of an arbitrary element.
    pub fn action_of(&self, x: &[(usize, Scalar)]) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.dim, self.dim);
        for &(i, c) in x {
            out = out.add(&self.actions[i].scale(c)).expect("same shape");
        }
        out
    }
}

fn check_form(form: &DenseMatrix, m: usize, tol: f64) -> Result<(), Error> {
    if form.rows() != m || form.cols() != m {
        return Err(Error::DimensionMismatch(format!("form must be {m}x{m}")));
    }
    let h = form.hermiticity_residual();
    if h > tol {
        return Err(Error::NotHermitian(h));
    }
    Ok(())
}

pub fn verify_comodule(v: &ComoduleData, h: &FiniteBialgebra, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("comodule", tol);
    let (m, n) = (v.dim, h.dim);
    if v.coalgebra_dim != n {
        r.flag("dimensions", false, "coalgebra dimension mismatch");
        return r;
    }
    let (mut coassoc, mut counit): (f64, f64) = (0.0, 0.0);
    for a in 0..m {
        // (w, h1, h2) at (w·n + h1)·n + h2, with h1 the leg nearer V on the right side
        let mut lhs = vec![ZERO; m * n * n];
        let mut rhs = vec![ZERO; m * n * n];
        let mut cu = vec![ZERO; m];
        for (w, x, c) in v.terms(a) {
            cu[w] += c * h.counit[x];
            for (y1, y2, d) in h.comul_basis(x) {
                rhs[(w * n + y1) * n + y2] += c * d;
            }
            for (w2, x2, d) in v.terms(w) {
                match v.side {
                    // ρ(v₀)⊗v₁ against v₀⊗Δ(v₁)
                    Side::Right => lhs[(w2 * n + x2) * n + x] += c * d,
                    // v₋₁⊗ρ(v₀) against Δ(v₋₁)⊗v₀
                    Side::Left => lhs[(w2 * n + x) * n + x2] += c * d,
                }
            }
        }
        coassoc = coassoc.max(sparse::max_abs_diff(&lhs, &rhs));
        counit = counit.max(sparse::max_abs_diff(&cu, &sparse::to_dense(&sparse::basis(a), m)));
    }
    r.residual("coassociative", coassoc).residual("counital", counit);
    r
}

pub fn verify_module(v: &ModuleData, a: &FiniteBialgebra, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("module", tol);
    if v.actions.len() != a.dim {
        r.flag("dimensions", false, "one action matrix per basis element required");
        return r;
    }
    let mut assoc: f64 = 0.0;
    for i in 0..a.dim {
        for j in 0..a.dim {
            let prod = v.action_of(a.mul_basis(i, j));
            let composed = match v.side {
                Side::Left => v.actions[i].mul(&v.actions[j]),
                Side::Right => v.actions[j].mul(&v.actions[i]),
            }
            .expect("square");
            assoc = assoc.max(prod.max_abs_diff(&composed));
        }
    }
    let unit = v.action_of(&a.unit_sv()).max_abs_diff(&DenseMatrix::identity(v.dim));
    r.residual("associative", assoc).residual("unital", unit);
    r
}

/// Right: `Σ⟨u₀,v⟩𝒮(u₁) = Σ⟨u,v₀⟩v₁*`. Left: `Σ𝒮⁻¹(u₋₁)⟨u₀,v⟩ = Σv₋₁*⟨u,v₀⟩`.
/// `form[(i, j)] = ⟨e_i, e_j⟩`, linear in the first slot.
///
/// # Errors
///
/// [`Error::DimensionMismatch`], [`Error::NotHermitian`] for a non-Hermitian
/// form, [`Error::MissingStar`].
pub fn check_comodule_invariance(
    v: &ComoduleData,
    h: &StarHopfAlgebra,
    form: &DenseMatrix,
    tol: f64,
) -> Result<f64, Error> {
    let star = h.require_star()?;
    let (m, n) = (v.dim, h.dim);
    if v.coalgebra_dim != n {
        return Err(Error::DimensionMismatch("comodule over a different coalgebra".into()));
    }
    check_form(form, m, tol)?;
    let terms: Vec<_> = (0..m).map(|a| v.terms(a)).collect();
    let mut res: f64 = 0.0;
    for a in 0..m {
        for b in 0..m {
            let mut lhs = vec![ZERO; n];
            let mut rhs = vec![ZERO; n];
            for &(w, x, c) in &terms[a] {
                let s = match v.side {
                    Side::Right => h.s_basis(x),
                    Side::Left => h.s_inv_basis(x),
                };
                sparse::add_into(&mut lhs, s, c * form[(w, b)]);
            }
            for &(w, x, c) in &terms[b] {
                sparse::add_into(&mut rhs, star.basis_image(x), c.conj() * form[(a, w)]);
            }
            res = res.max(sparse::max_abs_diff(&lhs, &rhs));
        }
    }
    Ok(res)
}

/// `⟨x·u,v⟩ = ⟨u,x*·v⟩` for left modules, `⟨u·x,v⟩ = ⟨u,v·x*⟩` for right
/// ones, over basis triples.
pub fn check_star_representation(
    v: &ModuleData,
    h: &StarHopfAlgebra,
    form: &DenseMatrix,
    tol: f64,
) -> Result<f64, Error> {
    let star = h.require_star()?;
    if v.actions.len() != h.dim {
        return Err(Error::DimensionMismatch("module over a different algebra".into()));
    }
    let m = v.dim;
    check_form(form, m, tol)?;
    let mut res: f64 = 0.0;
    for x in 0..h.dim {
        let lx = &v.actions[x];
        let lxs = v.action_of(star.basis_image(x));
        for u in 0..m {
            for w in 0..m {
                let lhs: Scalar = (0..m).map(|i| lx[(i, u)] * form[(i, w)]).sum();
                let rhs: Scalar = (0..m).map(|j| lxs[(j, w)].conj() * form[(u, j)]).sum();
                res = res.max((lhs - rhs).norm());
            }
        }
    }
    Ok(res)
}

/// Left `H`-comodule to left module over the dual, `α·v = Σα(𝒮⁻¹(v₋₁))v₀`.
/// Actions are indexed by the dual basis `δ^i`.
pub fn comodule_to_dual_module(v: &ComoduleData, h: &FiniteHopfAlgebra) -> Result<ModuleData, Error> {
    if v.side != Side::Left || v.coalgebra_dim != h.dim {
        return Err(Error::DimensionMismatch("a left comodule over the given algebra is required".into()));
    }
    let (m, n) = (v.dim, h.dim);
    let mut actions = vec![DenseMatrix::zeros(m, m); n];
    for w in 0..m {
        for (w2, x, c) in v.terms(w) {
            for &(i, s) in h.s_inv_basis(x) {
                actions[i][(w2, w)] += c * s;
            }
        }
    }
    ModuleData::new(m, Side::Left, actions)
}

/// Inverse of [`comodule_to_dual_module`]: `ρ(v) = Σ_i e_i ⊗ 𝒮(δ^i)·v`.
pub fn dual_module_to_comodule(v: &ModuleData, h: &FiniteHopfAlgebra) -> Result<ComoduleData, Error> {
    if v.side != Side::Left || v.actions.len() != h.dim {
        return Err(Error::DimensionMismatch("a left module over the dual is required".into()));
    }
    let (m, n) = (v.dim, h.dim);
    let mut terms = Vec::new();
    for i in 0..n {
        // 𝒮(δ^i) = δ^i∘𝒮 = Σ_k 𝒮_ik δ^k
        let sd: SparseVec = (0..n).map(|k| (k, h.antipode[(i, k)])).filter(|e| e.1 != ZERO).collect();
        let act = v.action_of(&sd);
        for a in 0..m {
            for w in 0..m {
                let c = act[(w, a)];
                if c != ZERO {
                    terms.push((a, w, i, c));
                }
            }
        }
    }
    ComoduleData::from_terms(m, Side::Left, n, terms)
}

/// Haar averaging `B(u,v) = Σ⟨u₀,v₀⟩₀ φ(v₁* u₁)` of the standard form on a
/// right comodule, followed by the invariance and positivity checks.
///
/// # Errors
///
/// [`Error::UnitarizationFailed`] if either post-check fails or the comodule
/// is a left one.
pub fn unitarize_comodule(v: &ComoduleData, h: &StarHopfAlgebra, integral: &IntegralData) -> Result<DenseMatrix, Error> {
    unitarize_comodule_with_tol(v, h, integral, crate::DEFAULT_TOL)
}

pub fn unitarize_comodule_with_tol(
    v: &ComoduleData,
    h: &StarHopfAlgebra,
    integral: &IntegralData,
    tol: f64,
) -> Result<DenseMatrix, Error> {
    if v.side != Side::Right {
        return Err(Error::UnitarizationFailed("averaging is defined for right comodules".into()));
    }
    let g = super::gram_matrix(h, &integral.phi)?;
    let m = v.dim;
    let terms: Vec<_> = (0..m).map(|a| v.terms(a)).collect();
    let form = DenseMatrix::from_fn(m, m, |a, b| {
        let mut s = ZERO;
        for &(w, x, c) in &terms[a] {
            for &(w2, y, d) in &terms[b] {
                if w == w2 {
                    s += c * d.conj() * g[(x, y)];
                }
            }
        }
        s
    });
    let inv = check_comodule_invariance(v, h, &form, tol)
        .map_err(|e| Error::UnitarizationFailed(format!("invariance check: {e}")))?;
    if inv > tol {
        return Err(Error::UnitarizationFailed(format!("invariance residual {inv:e}")));
    }
    let min = hermitian_min_eigenvalue(&form, tol).map_err(|e| Error::UnitarizationFailed(e.to_string()))?;
    if min <= tol {
        return Err(Error::UnitarizationFailed(format!("min eigenvalue {min:e}")));
    }
    Ok(form)
}

/// Diagonal coaction `ρ(v⊗w) = v₀⊗w₀⊗v₁w₁` on `V⊗W`, basis `v·dim(W) + w`.
pub fn tensor_comodule(v: &ComoduleData, w: &ComoduleData, h: &FiniteBialgebra) -> Result<ComoduleData, Error> {
    if v.side != w.side || v.coalgebra_dim != h.dim || w.coalgebra_dim != h.dim {
        return Err(Error::DimensionMismatch("comodules must share side and coalgebra".into()));
    }
    let (mv, mw) = (v.dim, w.dim);
    let mut terms = Vec::new();
    for a in 0..mv {
        for b in 0..mw {
            for (a2, x, c) in v.terms(a) {
                for (b2, y, d) in w.terms(b) {
                    for &(k, e) in h.mul_basis(x, y) {
                        terms.push((a * mw + b, a2 * mw + b2, k, c * d * e));
                    }
                }
            }
        }
    }
    let merged = merge_terms(terms);
    ComoduleData::from_terms(mv * mw, v.side, h.dim, merged)
}

fn merge_terms(terms: Vec<(usize, usize, usize, Scalar)>) -> Vec<(usize, usize, usize, Scalar)> {
    let mut map = std::collections::BTreeMap::new();
    for (a, b, c, s) in terms {
        *map.entry((a, b, c)).or_insert(ZERO) += s;
    }
    map.into_iter().filter(|e| e.1 != ZERO).map(|((a, b, c), s)| (a, b, c, s)).collect()
}

/// `H` coacting on itself through `Δ`.
pub fn regular_comodule(h: &FiniteBialgebra, side: Side) -> ComoduleData {
    let n = h.dim;
    let terms = (0..n).flat_map(|k| {
        h.comul_basis(k)
            .map(move |(a, b, c)| match side {
                Side::Right => (k, a, b, c),
                Side::Left => (k, b, a, c),
            })
            .collect::<Vec<_>>()
    });
    ComoduleData::from_terms(n, side, n, terms.collect::<Vec<_>>()).expect("regular comodule")
}

/// `ρ(v) = v⊗1` (or `1⊗v`).
pub fn trivial_comodule(m: usize, h: &FiniteBialgebra, side: Side) -> ComoduleData {
    let one = h.unit_sv();
    let terms: Vec<_> = (0..m).flat_map(|v| one.iter().map(move |&(k, c)| (v, v, k, c))).collect();
    ComoduleData::from_terms(m, side, h.dim, terms).expect("trivial comodule")
}

/// `H` acting on itself by multiplication.
pub fn regular_module(h: &FiniteBialgebra, side: Side) -> ModuleData {
    let n = h.dim;
    let actions = (0..n)
        .map(|x| match side {
            Side::Left => h.left_mult_matrix(&sparse::basis(x)),
            Side::Right => {
                let cols: Vec<SparseVec> = (0..n).map(|u| h.mul_basis(u, x).clone()).collect();
                DenseMatrix::from_sparse_columns(n, &cols)
            }
        })
        .collect();
    ModuleData::new(n, side, actions).expect("regular module")
}
