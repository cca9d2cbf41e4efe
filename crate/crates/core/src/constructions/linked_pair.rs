use super::common::{antipode_cross_checked, bialgebra_from_fns, bilinear, diff, Built};
use super::matched_pair::{pure, MatchedPairHopfData};
use crate::error::Error;
use crate::hopf::{compute_integral, convolution_inverse, FiniteBialgebra, LinearMapBetween};
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{DenseMatrix, Scalar, SparseMap, ONE, ZERO};
use crate::report::VerificationReport;
use crate::star::StarHopfAlgebra;

/// `(A, H, ▶, ρ, χ, ψ)`.
///
/// Index conventions: `▶ : H⊗A → A` on `x·dim(A) + a`, `ρ : H → H⊗A` with
/// values on `h·dim(A) + a`, `χ : H⊗H → A` on `x·dim(H) + y`, and
/// `ψ : H → A⊗A` with values on `a·dim(A) + b`. The convolution inverses of
/// `χ` and `ψ` are computed once at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleLinkedPairData {
    pub a: StarHopfAlgebra,
    pub h: StarHopfAlgebra,
    pub action: SparseMap,
    pub coaction: SparseMap,
    pub chi: SparseMap,
    pub psi: SparseMap,
    chi_inv: SparseMap,
    psi_inv: SparseMap,
}

fn to_map(m: &LinearMapBetween) -> SparseMap {
    SparseMap { src: m.source, dst: m.target, cols: m.matrix.sparse_columns() }
}

fn to_linear(m: &SparseMap) -> LinearMapBetween {
    LinearMapBetween::new(DenseMatrix::from_sparse_columns(m.dst, &m.cols))
}

impl CocycleLinkedPairData {
    /// # Errors
    ///
    /// [`Error::DimensionMismatch`] on inconsistent shapes,
    /// [`Error::NotConvolutionInvertible`] when `χ` or `ψ` has no inverse.
    pub fn new(
        a: StarHopfAlgebra,
        h: StarHopfAlgebra,
        action: SparseMap,
        coaction: SparseMap,
        chi: SparseMap,
        psi: SparseMap,
    ) -> Result<Self, Error> {
        let (na, nh) = (a.dim, h.dim);
        let shapes = [
            (action.src, nh * na, action.dst, na, "action H⊗A→A"),
            (coaction.src, nh, coaction.dst, nh * na, "coaction H→H⊗A"),
            (chi.src, nh * nh, chi.dst, na, "cocycle H⊗H→A"),
            (psi.src, nh, psi.dst, na * na, "cococycle H→A⊗A"),
        ];
        for (s, es, d, ed, what) in shapes {
            if s != es || d != ed {
                return Err(Error::DimensionMismatch(format!("{what}: got {s}→{d}")));
            }
        }
        let hh = h.bialgebra.tensor(&h.bialgebra);
        let aa = a.bialgebra.tensor(&a.bialgebra);
        let chi_inv = to_map(&convolution_inverse(&to_linear(&chi), &hh, &a.bialgebra)?);
        let psi_inv = to_map(&convolution_inverse(&to_linear(&psi), &h.bialgebra, &aa)?);
        Ok(CocycleLinkedPairData { a, h, action, coaction, chi, psi, chi_inv, psi_inv })
    }

    /// Trivial cocycle `χ = ε⊗ε·1` and cococycle `ψ = ε·1⊗1`.
    pub fn with_trivial_cocycles(
        a: StarHopfAlgebra,
        h: StarHopfAlgebra,
        action: SparseMap,
        coaction: SparseMap,
    ) -> Result<Self, Error> {
        let (na, nh) = (a.dim, h.dim);
        let one = a.unit_sv();
        let chi = SparseMap::from_fn(nh * nh, na, |p| {
            let c = h.counit[p / nh] * h.counit[p % nh];
            let mut v = vec![ZERO; na];
            sparse::add_into(&mut v, &one, c);
            v
        });
        let mut oo = vec![ZERO; na * na];
        sparse::kron_into(&mut oo, &one, &one, na, ONE);
        let psi = SparseMap::from_fn(nh, na * na, |x| oo.iter().map(|v| v * h.counit[x]).collect());
        Self::new(a, h, action, coaction, chi, psi)
    }

    /// The linked pair `(H'^∨, A')` of a matched pair `(A', H')`:
    /// `(x▶α)(h) = α(h◁x)` and `Σ x_H x_{A}(h) = h▷x`.
    pub fn from_matched_pair(p: &MatchedPairHopfData) -> Result<Self, Error> {
        let a = super::dual::dual(&p.h);
        let h = p.a.clone();
        let (na, nh) = (a.dim, h.dim);
        let e = sparse::basis;
        let mut action = SparseMap::zero(nh * na, na);
        let mut coaction = SparseMap::zero(nh, nh * na);
        for x in 0..nh {
            let mut rho = vec![ZERO; nh * na];
            for q in 0..na {
                // (x▶δ^q)(h) = δ^q(h◁x)
                let col: Vec<Scalar> = (0..na)
                    .map(|hh| p.tri_r(&e(hh), &e(x)).iter().filter(|t| t.0 == q).map(|t| t.1).sum())
                    .collect();
                action.cols[x * na + q] = sparse::from_dense(&col);
                for &(y, c) in &p.tri(&e(q), &e(x)) {
                    rho[y * na + q] += c;
                }
            }
            coaction.cols[x] = sparse::from_dense(&rho);
        }
        Self::with_trivial_cocycles(a, h, action, coaction)
    }

    pub fn act(&self, x: &[(usize, Scalar)], a: &[(usize, Scalar)]) -> SparseVec {
        bilinear(&self.action, self.a.dim, x, a)
    }

    pub fn chi_of(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        bilinear(&self.chi, self.h.dim, x, y)
    }

    pub fn chi_inv_of(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        bilinear(&self.chi_inv, self.h.dim, x, y)
    }

    pub fn chi_inverse(&self) -> &SparseMap {
        &self.chi_inv
    }

    pub fn psi_inverse(&self) -> &SparseMap {
        &self.psi_inv
    }

    /// `ρ(e_x)` as `(h, a, c)` terms.
    pub fn rho(&self, x: usize) -> Vec<(usize, usize, Scalar)> {
        let na = self.a.dim;
        self.coaction.cols[x].iter().map(|&(p, c)| (p / na, p % na, c)).collect()
    }

    /// `ρ` of a general element.
    pub fn rho_sv(&self, x: &[(usize, Scalar)]) -> Vec<(usize, usize, Scalar)> {
        let na = self.a.dim;
        let v = self.coaction.apply(x);
        v.into_iter().map(|(p, c)| (p / na, p % na, c)).collect()
    }

    /// `ψ(e_x)` as `(a, b, c)` terms.
    pub fn psi_of(&self, x: usize) -> Vec<(usize, usize, Scalar)> {
        split(&self.psi.cols[x], self.a.dim)
    }

    pub fn psi_sv(&self, x: &[(usize, Scalar)]) -> Vec<(usize, usize, Scalar)> {
        split(&self.psi.apply(x), self.a.dim)
    }

    pub fn psi_inv_of(&self, x: usize) -> Vec<(usize, usize, Scalar)> {
        split(&self.psi_inv.cols[x], self.a.dim)
    }

    pub fn psi_inv_sv(&self, x: &[(usize, Scalar)]) -> Vec<(usize, usize, Scalar)> {
        split(&self.psi_inv.apply(x), self.a.dim)
    }

    /// Copy with one structure map replaced; inverses are recomputed.
    pub fn with_maps(&self, action: SparseMap, coaction: SparseMap, chi: SparseMap, psi: SparseMap) -> Result<Self, Error> {
        Self::new(self.a.clone(), self.h.clone(), action, coaction, chi, psi)
    }
}

pub(crate) fn split(v: &[(usize, Scalar)], n: usize) -> Vec<(usize, usize, Scalar)> {
    v.iter().map(|&(p, c)| (p / n, p % n, c)).collect()
}

/// `acc += c·u⊗v⊗w` on `n2·n3`-strided coordinates.
fn triple_into(acc: &mut [Scalar], u: &[(usize, Scalar)], v: &[(usize, Scalar)], w: &[(usize, Scalar)], n2: usize, n3: usize, c: Scalar) {
    for &(i, x) in u {
        for &(j, y) in v {
            for &(k, z) in w {
                acc[(i * n2 + j) * n3 + k] += c * x * y * z;
            }
        }
    }
}

fn act_basis(d: &CocycleLinkedPairData, x: usize, p: usize) -> &SparseVec {
    &d.action.cols[x * d.a.dim + p]
}

/// Product in `A⊗A` of dense tensors on `i·n + j`.
fn tensor_mul(a: &FiniteBialgebra, u: &[Scalar], v: &[Scalar], n: usize) -> Vec<Scalar> {
    let nz = |w: &[Scalar]| -> Vec<(usize, usize, Scalar)> {
        w.iter().enumerate().filter(|(_, c)| c.norm() != 0.0).map(|(k, &c)| (k / n, k % n, c)).collect()
    };
    let (us, vs) = (nz(u), nz(v));
    let mut out = vec![ZERO; n * n];
    for &(i, j, x) in &us {
        for &(k, l, y) in &vs {
            sparse::kron_into(&mut out, a.mul_basis(i, k), a.mul_basis(j, l), n, x * y);
        }
    }
    out
}

fn max_diff(a: &[Scalar], b: &[Scalar]) -> f64 {
    sparse::max_abs_diff(a, b)
}

/// The cocycle linked pair axioms, one residual per axiom: a1–a6, b1–b6
/// and c1–c8, with c8 in its direct form.
pub fn verify_cocycle_linked_pair(d: &CocycleLinkedPairData, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("cocycle-linked-pair", tol);
    let (a, h) = (&d.a, &d.h);
    let (na, nh) = (a.dim, h.dim);
    let e = sparse::basis;
    let one_a = a.unit_sv();
    let one_h = h.unit_sv();
    let d2: Vec<_> = (0..nh).map(|x| h.coprod(x, 2)).collect();
    let d3: Vec<_> = (0..nh).map(|x| h.coprod(x, 3)).collect();

    // (a1)–(a3), (c1)
    let (mut a1, mut a2, mut a3, mut c1): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for x in 0..nh {
        a1 = a1.max(diff(&d.act(&e(x), &one_a), &sparse::scale(&one_a, h.counit[x]), na));
        for p in 0..na {
            let xa = d.act(&e(x), &e(p));
            c1 = c1.max((a.counit_of(&xa) - h.counit[x] * a.counit[p]).norm());
            for q in 0..na {
                let lhs = d.act(&e(x), a.mul_basis(p, q));
                let mut rhs = vec![ZERO; na];
                for (idx, c) in &d2[x] {
                    a.mul_into(&mut rhs, &d.act(&e(idx[0]), &e(p)), &d.act(&e(idx[1]), &e(q)), *c);
                }
                a2 = a2.max(max_diff(&sparse::to_dense(&lhs, na), &rhs));
            }
        }
    }
    for p in 0..na {
        a3 = a3.max(diff(&d.act(&one_h, &e(p)), &e(p), na));
    }

    // (a4), (a6), (c3)
    let (mut a4, mut a6, mut c3): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for x in 0..nh {
        a6 = a6.max(diff(&d.chi_of(&e(x), &one_h), &sparse::scale(&one_a, h.counit[x]), na));
        a6 = a6.max(diff(&d.chi_of(&one_h, &e(x)), &sparse::scale(&one_a, h.counit[x]), na));
        for y in 0..nh {
            let cxy = d.chi_of(&e(x), &e(y));
            c3 = c3.max((a.counit_of(&cxy) - h.counit[x] * h.counit[y]).norm());
            for p in 0..na {
                let mut lhs = vec![ZERO; na];
                let mut rhs = vec![ZERO; na];
                for (ix, cx) in &d2[x] {
                    for (iy, cy) in &d2[y] {
                        let c = cx * cy;
                        let l = d.act(&e(ix[0]), &d.act(&e(iy[0]), &e(p)));
                        a.mul_into(&mut lhs, &l, &d.chi_of(&e(ix[1]), &e(iy[1])), c);
                        let rr = d.act(h.mul_basis(ix[1], iy[1]), &e(p));
                        a.mul_into(&mut rhs, &d.chi_of(&e(ix[0]), &e(iy[0])), &rr, c);
                    }
                }
                a4 = a4.max(max_diff(&lhs, &rhs));
            }
        }
    }

    // (a5)
    let mut a5: f64 = 0.0;
    for x in 0..nh {
        for y in 0..nh {
            for z in 0..nh {
                let mut lhs = vec![ZERO; na];
                let mut rhs = vec![ZERO; na];
                for (ix, cx) in &d2[x] {
                    for (iy, cy) in &d2[y] {
                        // Σ(x₁▶χ(y₁,z₁))χ(x₂,y₂z₂)
                        for (iz, cz) in &d2[z] {
                            let l = d.act(&e(ix[0]), &d.chi_of(&e(iy[0]), &e(iz[0])));
                            let rr = d.chi_of(&e(ix[1]), h.mul_basis(iy[1], iz[1]));
                            a.mul_into(&mut lhs, &l, &rr, cx * cy * cz);
                        }
                        // Σχ(x₁,y₁)χ(x₂y₂,z)
                        let l = d.chi_of(&e(ix[0]), &e(iy[0]));
                        let rr = d.chi_of(h.mul_basis(ix[1], iy[1]), &e(z));
                        a.mul_into(&mut rhs, &l, &rr, cx * cy);
                    }
                }
                a5 = a5.max(max_diff(&lhs, &rhs));
            }
        }
    }

    // (b1)–(b3), (b6)
    let (mut b1, mut b2, mut b3, mut b6): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    for x in 0..nh {
        let mut v = vec![ZERO; na];
        let mut w = vec![ZERO; nh];
        let mut lhs = vec![ZERO; nh * nh * na];
        for (hh, p, c) in d.rho(x) {
            v[p] += c * h.counit[hh];
            w[hh] += c * a.counit[p];
            for (h1, h2, ch) in h.comul_basis(hh) {
                lhs[(h1 * nh + h2) * na + p] += c * ch;
            }
        }
        b1 = b1.max(max_diff(&v, &sparse::to_dense(&sparse::scale(&one_a, h.counit[x]), na)));
        b3 = b3.max(max_diff(&w, &sparse::to_dense(&e(x), nh)));
        let mut rhs = vec![ZERO; nh * nh * na];
        for (ix, c) in &d2[x] {
            for (g1, p1, u) in d.rho(ix[0]) {
                for (g2, p2, w2) in d.rho(ix[1]) {
                    triple_into(&mut rhs, &e(g1), &e(g2), a.mul_basis(p1, p2), nh, na, c * u * w2);
                }
            }
        }
        b2 = b2.max(max_diff(&lhs, &rhs));
        let mut l6 = vec![ZERO; na];
        let mut r6 = vec![ZERO; na];
        for (p, q, c) in d.psi_of(x) {
            l6[q] += c * a.counit[p];
            r6[p] += c * a.counit[q];
        }
        let target = sparse::to_dense(&sparse::scale(&one_a, h.counit[x]), na);
        b6 = b6.max(max_diff(&l6, &target)).max(max_diff(&r6, &target));
    }

    // (b4), (b5)
    let (mut b4, mut b5): (f64, f64) = (0.0, 0.0);
    for x in 0..nh {
        let mut l4 = vec![ZERO; nh * na * na];
        let mut r4 = vec![ZERO; nh * na * na];
        let mut l5 = vec![ZERO; na * na * na];
        let mut r5 = vec![ZERO; na * na * na];
        for (ix, c) in &d2[x] {
            let psi1 = d.psi_of(ix[0]);
            // Σx_{2HH} ⊗ x_{1I}x_{2HA} ⊗ x_{1II}x_{2A}
            for &(i1, i2, ci) in &psi1 {
                for (hh, p, cr) in d.rho(ix[1]) {
                    for (h2, p2, cr2) in d.rho(hh) {
                        triple_into(&mut l4, &e(h2), a.mul_basis(i1, p2), a.mul_basis(i2, p), na, na, c * ci * cr * cr2);
                    }
                    // Σx_{1I1}x_{2HI} ⊗ x_{1I2}x_{2HII} ⊗ x_{1II}x_{2A}
                    for (u1, u2, cu) in a.comul_basis(i1) {
                        for (j1, j2, cj) in d.psi_of(hh) {
                            triple_into(
                                &mut l5,
                                a.mul_basis(u1, j1),
                                a.mul_basis(u2, j2),
                                a.mul_basis(i2, p),
                                na,
                                na,
                                c * ci * cr * cu * cj,
                            );
                        }
                    }
                }
                // Σx_{1I} ⊗ x_{1II1}x_{2I} ⊗ x_{1II2}x_{2II}
                for (v1, v2, cv) in a.comul_basis(i2) {
                    for (j1, j2, cj) in d.psi_of(ix[1]) {
                        triple_into(&mut r5, &e(i1), a.mul_basis(v1, j1), a.mul_basis(v2, j2), na, na, c * ci * cv * cj);
                    }
                }
            }
            // Σx_{1H} ⊗ x_{1A1}x_{2I} ⊗ x_{1A2}x_{2II}
            for (hh, p, cr) in d.rho(ix[0]) {
                for (p1, p2, cp) in a.comul_basis(p) {
                    for (j1, j2, cj) in d.psi_of(ix[1]) {
                        triple_into(&mut r4, &e(hh), a.mul_basis(p1, j1), a.mul_basis(p2, j2), na, na, c * cr * cp * cj);
                    }
                }
            }
        }
        b4 = b4.max(max_diff(&l4, &r4));
        b5 = b5.max(max_diff(&l5, &r5));
    }

    // (c2), (c4)
    let mut oh = vec![ZERO; nh * na];
    sparse::kron_into(&mut oh, &one_h, &one_a, na, ONE);
    let c2 = max_diff(&sparse::to_dense(&d.coaction.apply(&one_h), nh * na), &oh);
    let mut oo = vec![ZERO; na * na];
    sparse::kron_into(&mut oo, &one_a, &one_a, na, ONE);
    let c4 = max_diff(&sparse::to_dense(&d.psi.apply(&one_h), na * na), &oo);

    // (c5), (c7)
    let (mut c5, mut c7): (f64, f64) = (0.0, 0.0);
    for x in 0..nh {
        for p in 0..na {
            let mut l5 = vec![ZERO; na * na];
            let mut l7 = vec![ZERO; nh * na];
            let mut r7 = vec![ZERO; nh * na];
            for (ix, c) in &d2[x] {
                let xa = d.act(&e(ix[0]), &e(p));
                for (u, v, cu) in a.comul(&xa) {
                    for (j1, j2, cj) in d.psi_of(ix[1]) {
                        sparse::kron_into(&mut l5, a.mul_basis(u, j1), a.mul_basis(v, j2), na, c * cu * cj);
                    }
                }
                for (hh, q, cr) in d.rho(ix[1]) {
                    sparse::kron_into(&mut l7, &e(hh), &a.mul(&xa, &e(q)), na, c * cr);
                }
                let x2a = d.act(&e(ix[1]), &e(p));
                for (hh, q, cr) in d.rho(ix[0]) {
                    sparse::kron_into(&mut r7, &e(hh), &a.mul(&e(q), &x2a), na, c * cr);
                }
            }
            let mut r5 = vec![ZERO; na * na];
            for (ix, c) in &d3[x] {
                for (i1, i2, ci) in d.psi_of(ix[0]) {
                    for (hh, q, cr) in d.rho(ix[1]) {
                        for (p1, p2, cp) in a.comul_basis(p) {
                            let l = a.mul(&e(i1), &d.act(&e(hh), &e(p1)));
                            let rr = a.mul_all(&[&e(i2), &e(q), &d.act(&e(ix[2]), &e(p2))]);
                            sparse::kron_into(&mut r5, &l, &rr, na, c * ci * cr * cp);
                        }
                    }
                }
            }
            c5 = c5.max(max_diff(&l5, &r5));
            c7 = c7.max(max_diff(&l7, &r7));
        }
    }

    // (c6), (c8)
    // W(u,y) = Σu_{1I}(u_{2H}▶y_I) ⊗ u_{1II}u_{2A}(u₃▶y_II), Z(v,y) = Σχ(v_{1H},y_H) ⊗ v_{1A}(v₂▶y_A)
    let mut w8 = vec![vec![ZERO; na * na]; nh * nh];
    let mut z8 = vec![vec![ZERO; na * na]; nh * nh];
    for u in 0..nh {
        for y0 in 0..nh {
            let w = &mut w8[u * nh + y0];
            for (iu, cu) in &d3[u] {
                for (xi, xii, c1) in d.psi_of(iu[0]) {
                    for (h2, a2, c2) in d.rho(iu[1]) {
                        for (yi, yii, c3) in d.psi_of(y0) {
                            let l = a.mul(&e(xi), act_basis(d, h2, yi));
                            let rr = a.mul(a.mul_basis(xii, a2), act_basis(d, iu[2], yii));
                            sparse::kron_into(w, &l, &rr, na, cu * c1 * c2 * c3);
                        }
                    }
                }
            }
            let z = &mut z8[u * nh + y0];
            for (iv, cv) in &d2[u] {
                for (h4, a4, c4) in d.rho(iv[0]) {
                    for (hy, ay, c5) in d.rho(y0) {
                        let rr = a.mul(&e(a4), act_basis(d, iv[1], ay));
                        sparse::kron_into(z, &d.chi.cols[h4 * nh + hy], &rr, na, cv * c4 * c5);
                    }
                }
            }
        }
    }
    let (mut c6, mut c8): (f64, f64) = (0.0, 0.0);
    for x in 0..nh {
        for y in 0..nh {
            let mut l6 = vec![ZERO; nh * na];
            let mut r6 = vec![ZERO; nh * na];
            let mut l8 = vec![ZERO; na * na];
            for (ix, cx) in &d2[x] {
                for (iy, cy) in &d2[y] {
                    let c = cx * cy;
                    let chi = d.chi_of(&e(ix[0]), &e(iy[0]));
                    let xy = h.mul_basis(ix[1], iy[1]);
                    // Σ(x₂y₂)_H ⊗ χ(x₁,y₁)(x₂y₂)_A
                    for (hh, q, cr) in d.rho_sv(xy) {
                        sparse::kron_into(&mut l6, &e(hh), &a.mul(&chi, &e(q)), na, c * cr);
                    }
                    // Σχ(x₁,y₁)₁(x₂y₂)_I ⊗ χ(x₁,y₁)₂(x₂y₂)_II
                    let dchi = a.comul(&chi);
                    for (i1, i2, ci) in d.psi_sv(xy) {
                        for &(u, v, cu) in &dchi {
                            sparse::kron_into(&mut l8, a.mul_basis(u, i1), a.mul_basis(v, i2), na, c * ci * cu);
                        }
                    }
                }
            }
            // Σx_{1H}y_{1H} ⊗ x_{1A}(x₂▶y_{1A})χ(x₃,y₂)
            for (ix, cx) in &d3[x] {
                for (iy, cy) in &d2[y] {
                    let chi = d.chi_of(&e(ix[2]), &e(iy[1]));
                    for (hx, qx, crx) in d.rho(ix[0]) {
                        for (hy, qy, cry) in d.rho(iy[0]) {
                            let av = a.mul_all(&[&e(qx), &d.act(&e(ix[1]), &e(qy)), &chi]);
                            sparse::kron_into(&mut r6, h.mul_basis(hx, hy), &av, na, cx * cy * crx * cry);
                        }
                    }
                }
            }
            // Σx_{1I}(x_{2H}▶y_{1I})χ(x_{4H},y_{2H}) ⊗ x_{1II}x_{2A}(x₃▶y_{1II})x_{4A}(x₅▶y_{2A})χ(x₆,y₃),
            // summed as W(x₁,y₁)·Z(x₂,y₂)·(1⊗χ(x₃,y₃)) in A⊗A, W and Z absorbing x₁₋₃ and x₄₋₅
            let mut r8 = vec![ZERO; na * na];
            for (ix, cx) in &d3[x] {
                for (iy, cy) in &d3[y] {
                    let w = &w8[ix[0] * nh + iy[0]];
                    let z = &z8[ix[1] * nh + iy[1]];
                    let wz = tensor_mul(&a.bialgebra, w, z, na);
                    let mut tail = vec![ZERO; na * na];
                    sparse::kron_into(&mut tail, &one_a, &d.chi.cols[ix[2] * nh + iy[2]], na, ONE);
                    let t = tensor_mul(&a.bialgebra, &wz, &tail, na);
                    for (k, v) in t.into_iter().enumerate() {
                        r8[k] += cx * cy * v;
                    }
                }
            }
            c6 = c6.max(max_diff(&l6, &r6));
            c8 = c8.max(max_diff(&l8, &r8));
        }
    }

    r.residual("a1", a1)
        .residual("a2", a2)
        .residual("a3", a3)
        .residual("a4", a4)
        .residual("a5", a5)
        .residual("a6", a6)
        .residual("b1", b1)
        .residual("b2", b2)
        .residual("b3", b3)
        .residual("b4", b4)
        .residual("b5", b5)
        .residual("b6", b6)
        .residual("c1", c1)
        .residual("c2", c2)
        .residual("c3", c3)
        .residual("c4", c4)
        .residual("c5", c5)
        .residual("c6", c6)
        .residual("c7", c7)
        .residual("c8", c8);
    r
}

/// Product `(a#x)(b#y) = Σa(x₁▶b)χ(x₂,y₁)#x₃y₂` on basis vectors.
fn bismash_mul(d: &CocycleLinkedPairData, d3: &[crate::hopf::Terms], i: usize, j: usize) -> Vec<Scalar> {
    let (na, nh) = (d.a.dim, d.h.dim);
    let (a, x) = (i / nh, i % nh);
    let (b, y) = (j / nh, j % nh);
    let e = sparse::basis;
    let mut acc = vec![ZERO; na * nh];
    for (ix, cx) in &d3[x] {
        let ab = d.a.mul(&e(a), &d.act(&e(ix[0]), &e(b)));
        for (y1, y2, cy) in d.h.comul_basis(y) {
            let left = d.a.mul(&ab, &d.chi_of(&e(ix[1]), &e(y1)));
            sparse::kron_into(&mut acc, &left, d.h.mul_basis(ix[2], y2), nh, cx * cy);
        }
    }
    acc
}

/// Coproduct `Δ(a#x) = Σa₁x_{1I}#x_{2H} ⊗ a₂x_{1II}x_{2A}#x₃` on basis vectors.
fn bismash_comul(d: &CocycleLinkedPairData, d3: &[crate::hopf::Terms], k: usize) -> Vec<(usize, usize, Scalar)> {
    let (na, nh) = (d.a.dim, d.h.dim);
    let n = na * nh;
    let (a, x) = (k / nh, k % nh);
    let mut acc = vec![ZERO; n * n];
    for (ix, cx) in &d3[x] {
        for (a1, a2, ca) in d.a.comul_basis(a) {
            for (i1, i2, ci) in d.psi_of(ix[0]) {
                let left = d.a.mul_basis(a1, i1);
                for (hh, q, cr) in d.rho(ix[1]) {
                    let right = d.a.mul(d.a.mul_basis(a2, i2), &sparse::basis(q));
                    let c = cx * ca * ci * cr;
                    for &(u, cu) in left {
                        for &(v, cv) in &right {
                            acc[(u * nh + hh) * n + v * nh + ix[2]] += c * cu * cv;
                        }
                    }
                }
            }
        }
    }
    acc.iter().enumerate().filter(|e| *e.1 != ZERO).map(|(p, &c)| (p / n, p % n, c)).collect()
}

/// The bialgebra `A^ψ#_χH` from the product and coproduct formulas alone,
/// with no axiom checks.
pub fn cocycle_bismash_bialgebra(d: &CocycleLinkedPairData) -> Result<FiniteBialgebra, Error> {
    let (na, nh) = (d.a.dim, d.h.dim);
    let n = na * nh;
    let d3: Vec<_> = (0..nh).map(|x| d.h.coprod(x, 3)).collect();
    let labels = (0..n).map(|k| format!("{}#{}", d.a.labels[k / nh], d.h.labels[k % nh])).collect();
    let mut unit = vec![ZERO; n];
    sparse::kron_into(&mut unit, &d.a.unit_sv(), &d.h.unit_sv(), nh, ONE);
    let counit = (0..n).map(|k| d.a.counit[k / nh] * d.h.counit[k % nh]).collect();
    bialgebra_from_fns(n, |i, j| bismash_mul(d, &d3, i, j), |k| bismash_comul(d, &d3, k), unit, counit, labels)
}

/// Cocycle bismash product `A^ψ#_χH` on the basis `a·dim(H) + x`, labels `a#x`.
///
/// The antipode is solved generically and compared with the closed form
/// `𝒮(a#x) = Σ(χ⁻¹(𝒮x_{2H}, x_{3H})#𝒮x_{1H})(x_{4Î}𝒮(a x_{1A}x_{2A}x_{3A}x_{4ÎÎ})#1)`.
/// When both factors are cosemisimple the integral is compared with
/// `φ_A⊗φ_H`. No star is attached; see [`super::attach_star_lift`].
///
/// # Errors
///
/// [`Error::NotAHopfAlgebra`] or [`Error::AntipodeMismatch`].
pub fn cocycle_bismash(d: &CocycleLinkedPairData, tol: f64) -> Result<Built, Error> {
    let (na, nh) = (d.a.dim, d.h.dim);
    let n = na * nh;
    let e = sparse::basis;
    let mut report = VerificationReport::new("cocycle-bismash", tol);
    let b = cocycle_bismash_bialgebra(d)?;

    let one_h = d.h.unit_sv();
    let closed_cols: Vec<SparseVec> = (0..n)
        .map(|k| {
            let (a, x) = (k / nh, k % nh);
            let mut acc = vec![ZERO; n];
            for (ix, c) in d.h.coprod(x, 4) {
                for (h1, q1, c1) in d.rho(ix[0]) {
                    for (h2, q2, c2) in d.rho(ix[1]) {
                        for (h3, q3, c3) in d.rho(ix[2]) {
                            let ci = d.chi_inv_of(d.h.s_basis(h2), &e(h3));
                            let left = pure(&ci, d.h.s_basis(h1), na, nh);
                            let head = d.a.mul_all(&[&e(a), &e(q1), &e(q2), &e(q3)]);
                            for (u, v, cu) in d.psi_inv_of(ix[3]) {
                                let inner = d.a.mul(&head, &e(v));
                                let right = pure(&d.a.mul(&e(u), &d.a.s(&inner)), &one_h, na, nh);
                                sparse::add_into(&mut acc, &b.mul(&left, &right), c * c1 * c2 * c3 * cu);
                            }
                        }
                    }
                }
            }
            sparse::from_dense(&acc)
        })
        .collect();
    let closed = DenseMatrix::from_sparse_columns(n, &closed_cols);
    let hopf = antipode_cross_checked(b, &closed, tol)?;
    report.residual("antipode-closed-form", hopf.antipode.max_abs_diff(&closed));

    match (compute_integral(&d.a), compute_integral(&d.h)) {
        (Ok(ia), Ok(ih)) => match compute_integral(&hopf) {
            Ok(im) => {
                let m = (0..n).map(|k| (im.phi[k] - ia.phi[k / nh] * ih.phi[k % nh]).norm()).fold(0.0, f64::max);
                report.residual("integral-product", m);
            }
            Err(err) => {
                report.flag("integral-product", false, err.to_string());
            }
        },
        _ => {
            report.skip("integral-product", "a factor is not cosemisimple");
        }
    }
    Ok(Built { algebra: StarHopfAlgebra::plain(hopf), report })
}
