use super::common::diff;
use super::linked_pair::{verify_cocycle_linked_pair, CocycleLinkedPairData};
use super::matched_pair::pure;
use crate::error::Error;
use crate::hopf::{FiniteHopfAlgebra, IntegralData, LinearMapBetween};
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{Scalar, ZERO};
use crate::report::VerificationReport;
use crate::star::{verify_star_hopf, StarHopfAlgebra, StarStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarLiftMode {
    Explicit,
    /// `γ(x) = Σχ⁻¹(x₂, 𝒮⁻¹(x₁))`
    ChiCanonical,
    /// `γ = ε·1`
    Trivial,
}

/// A map `γ : H → A` with `γ(1) = 1` and `ε∘γ = ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct StarLiftData {
    pub gamma: LinearMapBetween,
    pub mode: StarLiftMode,
}

impl StarLiftData {
    /// # Errors
    ///
    /// [`Error::InvalidInput`] if the shape is wrong or `γ(1) ≠ 1` or
    /// `ε∘γ ≠ ε` beyond `tol`.
    pub fn explicit(d: &CocycleLinkedPairData, gamma: LinearMapBetween, tol: f64) -> Result<Self, Error> {
        Self::checked(d, gamma, StarLiftMode::Explicit, tol)
    }

    fn checked(d: &CocycleLinkedPairData, gamma: LinearMapBetween, mode: StarLiftMode, tol: f64) -> Result<Self, Error> {
        let (na, nh) = (d.a.dim, d.h.dim);
        if gamma.source != nh || gamma.target != na {
            return Err(Error::DimensionMismatch(format!("γ must be {nh} → {na}")));
        }
        let g1 = gamma.apply(&d.h.unit_sv());
        let r1 = diff(&g1, &d.a.unit_sv(), na);
        if r1 > tol {
            return Err(Error::InvalidInput(format!("γ(1) ≠ 1 (residual {r1:e})")));
        }
        let r2 = (0..nh)
            .map(|x| (d.a.counit_of(&gamma.apply(&sparse::basis(x))) - d.h.counit[x]).norm())
            .fold(0.0, f64::max);
        if r2 > tol {
            return Err(Error::InvalidInput(format!("ε∘γ ≠ ε (residual {r2:e})")));
        }
        Ok(StarLiftData { gamma, mode })
    }

    pub fn chi_canonical(d: &CocycleLinkedPairData, tol: f64) -> Result<Self, Error> {
        let (na, nh) = (d.a.dim, d.h.dim);
        let cols: Vec<SparseVec> = (0..nh)
            .map(|x| {
                let mut acc = vec![ZERO; na];
                for (x1, x2, c) in d.h.comul_basis(x) {
                    sparse::add_into(&mut acc, &d.chi_inv_of(&sparse::basis(x2), d.h.s_inv_basis(x1)), c);
                }
                sparse::from_dense(&acc)
            })
            .collect();
        Self::checked(d, LinearMapBetween::from_columns(na, &cols), StarLiftMode::ChiCanonical, tol)
    }

    pub fn trivial(d: &CocycleLinkedPairData) -> Self {
        let (na, nh) = (d.a.dim, d.h.dim);
        let one = d.a.unit_sv();
        let cols: Vec<SparseVec> = (0..nh).map(|x| sparse::scale(&one, d.h.counit[x])).collect();
        StarLiftData { gamma: LinearMapBetween::from_columns(na, &cols), mode: StarLiftMode::Trivial }
    }

    pub fn of(&self, x: &[(usize, Scalar)]) -> SparseVec {
        self.gamma.apply(x)
    }
}

fn missing_stars(name: &str, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new(name, tol);
    r.flag("stars-present", false, "both A and H need a star");
    r
}

/// Residuals of the five conditions `cero`, `uno`, `dos`, `tres`, `cuatro`
/// for the star `(a#x)* = Σγ(x₁*)(x₂*▶a*)#x₃*`.
pub fn check_star_lift(d: &CocycleLinkedPairData, l: &StarLiftData, tol: f64) -> VerificationReport {
    let (Some(sa), Some(sh)) = (&d.a.star, &d.h.star) else {
        return missing_stars("star-lift", tol);
    };
    let mut r = VerificationReport::new("star-lift", tol);
    let (a, h) = (&d.a, &d.h);
    let (na, nh) = (a.dim, h.dim);
    let e = sparse::basis;
    let xs = |i: usize| sh.basis_image(i);
    let g = |v: &[(usize, Scalar)]| l.of(v);

    let (mut cero, mut uno, mut dos, mut tres, mut cuatro): (f64, f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for x in 0..nh {
        let d3 = h.coprod(x, 3);
        // Σγ(x₂*)(x₃*▶γ(x₁)*) = ε(x*)1
        let mut lhs = vec![ZERO; na];
        for (ix, c) in &d3 {
            let t = d.act(xs(ix[2]), &sa.apply(&g(&e(ix[0]))));
            a.mul_into(&mut lhs, &g(xs(ix[1])), &t, c.conj());
        }
        let rhs = sparse::scale(&a.unit_sv(), h.counit_of(xs(x)));
        cero = cero.max(sparse::max_abs_diff(&lhs, &sparse::to_dense(&rhs, na)));

        // Σγ(x₂*)(x₃*▶(x₁▶a)*) = a*γ(x*)
        for p in 0..na {
            let mut lhs = vec![ZERO; na];
            for (ix, c) in &d3 {
                let t = d.act(xs(ix[2]), &sa.apply(&d.act(&e(ix[0]), &e(p))));
                a.mul_into(&mut lhs, &g(xs(ix[1])), &t, c.conj());
            }
            let rhs = a.mul(sa.basis_image(p), &g(xs(x)));
            uno = uno.max(sparse::max_abs_diff(&lhs, &sparse::to_dense(&rhs, na)));
        }

        // Σγ(y₁*)(y₂*▶γ(x₁*))χ(y₃*,x₂*) = Σγ(y₂*x₂*)((y₃*x₃*)▶χ(x₁,y₁)*)
        let d2x = h.coprod(x, 2);
        for y in 0..nh {
            let d3y = h.coprod(y, 3);
            let mut lhs = vec![ZERO; na];
            for (iy, cy) in &d3y {
                for (ix, cx) in &d2x {
                    let t = a.mul_all(&[
                        &g(xs(iy[0])),
                        &d.act(xs(iy[1]), &g(xs(ix[0]))),
                        &d.chi_of(xs(iy[2]), xs(ix[1])),
                    ]);
                    sparse::add_into(&mut lhs, &t, (cx * cy).conj());
                }
            }
            let mut rhs = vec![ZERO; na];
            for (iy, cy) in &d3y {
                for (ix, cx) in &d3 {
                    let yx2 = h.mul(xs(iy[1]), xs(ix[1]));
                    let yx3 = h.mul(xs(iy[2]), xs(ix[2]));
                    let t = d.act(&yx3, &sa.apply(&d.chi_of(&e(ix[0]), &e(iy[0]))));
                    a.mul_into(&mut rhs, &g(&yx2), &t, (cx * cy).conj());
                }
            }
            dos = dos.max(sparse::max_abs_diff(&lhs, &rhs));
        }

        // Σ(x₂*)_H ⊗ γ(x₁*)(x₂*)_A = Σ((x₁)_H)* ⊗ γ(x₂*)(x₃*▶((x₁)_A)*)
        let mut lhs = vec![ZERO; nh * na];
        for (ix, c) in &d2x {
            let gx = g(xs(ix[0]));
            for (hh, q, cr) in d.rho_sv(xs(ix[1])) {
                sparse::kron_into(&mut lhs, &e(hh), &a.mul(&gx, &e(q)), na, c.conj() * cr);
            }
        }
        let mut rhs = vec![ZERO; nh * na];
        for (ix, c) in &d3 {
            let gx = g(xs(ix[1]));
            for (hh, q, cr) in d.rho(ix[0]) {
                let t = a.mul(&gx, &d.act(xs(ix[2]), sa.basis_image(q)));
                sparse::kron_into(&mut rhs, sh.basis_image(hh), &t, na, (c * cr).conj());
            }
        }
        tres = tres.max(sparse::max_abs_diff(&lhs, &rhs));

        // Σγ(x₁*)₁(x₂*)_I ⊗ γ(x₁*)₂(x₂*)_II
        //   = Σγ(((x₂)_H)*)(((x₃)_H)*▶((x₁)_I)*) ⊗ γ(x₄*)(x₅*▶((x₁)_II(x₂)_A(x₃)_A)*)
        let mut lhs = vec![ZERO; na * na];
        for (ix, c) in &d2x {
            let dg = a.comul(&g(xs(ix[0])));
            for (i1, i2, ci) in d.psi_sv(xs(ix[1])) {
                for &(u, v, cu) in &dg {
                    sparse::kron_into(&mut lhs, a.mul_basis(u, i1), a.mul_basis(v, i2), na, c.conj() * ci * cu);
                }
            }
        }
        let mut rhs = vec![ZERO; na * na];
        for (ix, c) in h.coprod(x, 5) {
            let right_g = g(xs(ix[3]));
            for (i1, i2, c1) in d.psi_of(ix[0]) {
                for (h2, q2, c2) in d.rho(ix[1]) {
                    let gh = g(sh.basis_image(h2));
                    for (h3, q3, c3) in d.rho(ix[2]) {
                        let left = a.mul(&gh, &d.act(sh.basis_image(h3), sa.basis_image(i1)));
                        let inner = a.mul_all(&[&e(i2), &e(q2), &e(q3)]);
                        let right = a.mul(&right_g, &d.act(xs(ix[4]), &sa.apply(&inner)));
                        sparse::kron_into(&mut rhs, &left, &right, na, (c * c1 * c2 * c3).conj());
                    }
                }
            }
        }
        cuatro = cuatro.max(sparse::max_abs_diff(&lhs, &rhs));
    }
    r.residual("cero", cero)
        .residual("uno", uno)
        .residual("dos", dos)
        .residual("tres", tres)
        .residual("cuatro", cuatro);
    r
}

/// Star matrix of `(a#x)* = Σγ(x₁*)(x₂*▶a*)#x₃*` on the bismash basis.
pub fn star_lift_matrix(d: &CocycleLinkedPairData, l: &StarLiftData) -> Result<StarStructure, Error> {
    let sa = d.a.require_star()?;
    let sh = d.h.require_star()?;
    let (na, nh) = (d.a.dim, d.h.dim);
    let n = na * nh;
    let cols: Vec<SparseVec> = (0..n)
        .map(|k| {
            let (p, x) = (k / nh, k % nh);
            let mut acc = vec![ZERO; n];
            for (ix, c) in d.h.coprod(x, 3) {
                let av = d.a.mul(&l.of(sh.basis_image(ix[0])), &d.act(sh.basis_image(ix[1]), sa.basis_image(p)));
                sparse::add_into(&mut acc, &pure(&av, sh.basis_image(ix[2]), na, nh), c.conj());
            }
            sparse::from_dense(&acc)
        })
        .collect();
    Ok(StarStructure::from_columns(n, &cols))
}

/// Attaches the lifted star to a cocycle bismash product of `d`.
///
/// # Errors
///
/// [`Error::StarCompatFailed`] when a condition of [`check_star_lift`] or
/// an axiom of [`verify_star_hopf`] fails; [`Error::MissingStar`] without
/// stars on the factors.
pub fn attach_star_lift(
    m: &StarHopfAlgebra,
    d: &CocycleLinkedPairData,
    l: &StarLiftData,
    tol: f64,
) -> Result<StarHopfAlgebra, Error> {
    d.a.require_star()?;
    d.h.require_star()?;
    if m.dim != d.a.dim * d.h.dim {
        return Err(Error::DimensionMismatch("bismash dimension differs from dim A · dim H".into()));
    }
    let report = check_star_lift(d, l, tol);
    if !report.overall() {
        let names: Vec<_> = report.failures().iter().map(|c| c.check_id.clone()).collect();
        return Err(Error::StarCompatFailed(format!("conditions {} fail", names.join(", "))));
    }
    let out = StarHopfAlgebra { hopf: m.hopf.clone(), star: Some(star_lift_matrix(d, l)?) };
    let axioms = verify_star_hopf(&out, tol);
    if !axioms.overall() {
        let names: Vec<_> = axioms.failures().iter().map(|c| c.check_id.clone()).collect();
        return Err(Error::StarCompatFailed(format!("star axioms {} fail", names.join(", "))));
    }
    Ok(out)
}

/// `max |φ(e_i e_j) − φ(e_j e_i)|`.
pub fn check_integral_centrality(h: &FiniteHopfAlgebra, phi: &[Scalar]) -> f64 {
    let n = h.dim;
    let at = |v: &SparseVec| -> Scalar { v.iter().map(|&(k, c)| c * phi[k]).sum() };
    let mut m: f64 = 0.0;
    for i in 0..n {
        for j in 0..i {
            m = m.max((at(h.mul_basis(i, j)) - at(h.mul_basis(j, i))).norm());
        }
    }
    m
}

/// Centrality of `φ_A`, `φ_H`, the module property `φ_A(x▶a) = ε(x)φ_A(a)`
/// and the comodule property `Σφ_H(x_H)x_A = φ_H(x)1`.
pub fn linked_pair_centrality(d: &CocycleLinkedPairData, ia: &IntegralData, ih: &IntegralData, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("integral-centrality", tol);
    let (na, nh) = (d.a.dim, d.h.dim);
    let e = sparse::basis;
    let mut module: f64 = 0.0;
    let mut comodule: f64 = 0.0;
    for x in 0..nh {
        for p in 0..na {
            module = module.max((ia.phi_of(&d.act(&e(x), &e(p))) - d.h.counit[x] * ia.phi[p]).norm());
        }
        let mut v = vec![ZERO; na];
        for (hh, q, c) in d.rho(x) {
            v[q] += c * ih.phi[hh];
        }
        let target = sparse::to_dense(&sparse::scale(&d.a.unit_sv(), ih.phi[x]), na);
        comodule = comodule.max(sparse::max_abs_diff(&v, &target));
    }
    r.residual("phi-a-central", check_integral_centrality(&d.a, &ia.phi))
        .residual("phi-h-central", check_integral_centrality(&d.h, &ih.phi))
        .residual("phi-a-module-morphism", module)
        .residual("phi-h-comodule-morphism", comodule);
    r
}

/// `(x▶a)* = 𝒮⁻¹(x*)▶a*` over basis pairs.
pub fn action_star_residual(d: &CocycleLinkedPairData) -> Result<f64, Error> {
    let sa = d.a.require_star()?;
    let sh = d.h.require_star()?;
    let e = sparse::basis;
    let mut m: f64 = 0.0;
    for x in 0..d.h.dim {
        let w = d.h.s_inv(sh.basis_image(x));
        for p in 0..d.a.dim {
            let l = sa.apply(&d.act(&e(x), &e(p)));
            m = m.max(diff(&l, &d.act(&w, sa.basis_image(p)), d.a.dim));
        }
    }
    Ok(m)
}

/// `ρ(x*) = Σ(x_{1H})* ⊗ (x₂*▶(x_{1A})*)` over basis vectors.
pub fn coaction_star_residual(d: &CocycleLinkedPairData) -> Result<f64, Error> {
    let sa = d.a.require_star()?;
    let sh = d.h.require_star()?;
    let (na, nh) = (d.a.dim, d.h.dim);
    let mut m: f64 = 0.0;
    for x in 0..nh {
        let mut lhs = vec![ZERO; nh * na];
        for (hh, q, c) in d.rho_sv(sh.basis_image(x)) {
            lhs[hh * na + q] += c;
        }
        let mut rhs = vec![ZERO; nh * na];
        for (x1, x2, c) in d.h.comul_basis(x) {
            for (hh, q, cr) in d.rho(x1) {
                let t = d.act(sh.basis_image(x2), sa.basis_image(q));
                sparse::kron_into(&mut rhs, sh.basis_image(hh), &t, na, (c * cr).conj());
            }
        }
        m = m.max(sparse::max_abs_diff(&lhs, &rhs));
    }
    Ok(m)
}

/// Simplified axioms of a cocycle Singer pair, the derived inverse
/// identities for `▶` and `ρ`, and, when both factors carry a star, the
/// four conditions `and1`–`and4`.
///
/// # Errors
///
/// [`Error::NotASingerPair`] unless `A` is commutative and `H` cocommutative.
pub fn verify_singer_conditions(d: &CocycleLinkedPairData, tol: f64) -> Result<VerificationReport, Error> {
    if !d.a.is_commutative(tol) {
        return Err(Error::NotASingerPair("A is not commutative".into()));
    }
    if !d.h.is_cocommutative(tol) {
        return Err(Error::NotASingerPair("H is not cocommutative".into()));
    }
    let mut r = VerificationReport::new("singer-pair", tol);
    let general = verify_cocycle_linked_pair(d, tol);
    for id in ["a1", "a2", "a3", "a5", "a6", "b1", "b2", "b3", "b5", "b6", "c1", "c2", "c3", "c4", "c8"] {
        if let Some(c) = general.get(id) {
            r.push(c.clone());
        }
    }
    let (a, h) = (&d.a, &d.h);
    let (na, nh) = (a.dim, h.dim);
    let e = sparse::basis;
    let one_a = a.unit_sv();

    let (mut assoc, mut coassoc, mut sc5, mut sc6, mut inv_act, mut inv_co): (f64, f64, f64, f64, f64, f64) =
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    for x in 0..nh {
        for y in 0..nh {
            for p in 0..na {
                let l = d.act(&e(x), &d.act(&e(y), &e(p)));
                assoc = assoc.max(diff(&l, &d.act(h.mul_basis(x, y), &e(p)), na));
            }
            // Σ(xy)_H ⊗ (xy)_A = Σx_{1H}y_H ⊗ x_{1A}(x₂▶y_A)
            let mut lhs = vec![ZERO; nh * na];
            for (hh, q, c) in d.rho_sv(h.mul_basis(x, y)) {
                lhs[hh * na + q] += c;
            }
            let mut rhs = vec![ZERO; nh * na];
            for (x1, x2, cx) in h.comul_basis(x) {
                for (hx, qx, c1) in d.rho(x1) {
                    for (hy, qy, c2) in d.rho(y) {
                        let t = a.mul(&e(qx), &d.act(&e(x2), &e(qy)));
                        sparse::kron_into(&mut rhs, h.mul_basis(hx, hy), &t, na, cx * c1 * c2);
                    }
                }
            }
            sc6 = sc6.max(sparse::max_abs_diff(&lhs, &rhs));
        }
        // Σx_{HH} ⊗ x_{HA} ⊗ x_A = Σx_H ⊗ x_{A1} ⊗ x_{A2}
        let mut lhs = vec![ZERO; nh * na * na];
        let mut rhs = vec![ZERO; nh * na * na];
        for (hh, q, c) in d.rho(x) {
            for (h2, q2, c2) in d.rho(hh) {
                lhs[(h2 * na + q2) * na + q] += c * c2;
            }
            for (q1, q2, cq) in a.comul_basis(q) {
                rhs[(hh * na + q1) * na + q2] += c * cq;
            }
        }
        coassoc = coassoc.max(sparse::max_abs_diff(&lhs, &rhs));
        for p in 0..na {
            // Σ(x▶a)₁ ⊗ (x▶a)₂ = Σ(x_{1H}▶a₁) ⊗ x_{1A}(x₂▶a₂)
            let mut lhs = vec![ZERO; na * na];
            for (u, v, c) in a.comul(&d.act(&e(x), &e(p))) {
                lhs[u * na + v] += c;
            }
            let mut rhs = vec![ZERO; na * na];
            for (x1, x2, cx) in h.comul_basis(x) {
                for (hh, q, cr) in d.rho(x1) {
                    for (p1, p2, cp) in a.comul_basis(p) {
                        let t = a.mul(&e(q), &d.act(&e(x2), &e(p2)));
                        sparse::kron_into(&mut rhs, &d.act(&e(hh), &e(p1)), &t, na, cx * cr * cp);
                    }
                }
            }
            sc5 = sc5.max(sparse::max_abs_diff(&lhs, &rhs));
            // ▶ ⋆ ▶(id⊗𝒮) = ▶(id⊗𝒮) ⋆ ▶ = ε⊗ε·1
            let mut f = vec![ZERO; na];
            let mut g = vec![ZERO; na];
            for (x1, x2, cx) in h.comul_basis(x) {
                for (p1, p2, cp) in a.comul_basis(p) {
                    a.mul_into(&mut f, &d.act(&e(x1), &e(p1)), &d.act(&e(x2), a.s_basis(p2)), cx * cp);
                    a.mul_into(&mut g, &d.act(&e(x1), a.s_basis(p1)), &d.act(&e(x2), &e(p2)), cx * cp);
                }
            }
            let target = sparse::to_dense(&sparse::scale(&one_a, h.counit[x] * a.counit[p]), na);
            inv_act = inv_act.max(sparse::max_abs_diff(&f, &target)).max(sparse::max_abs_diff(&g, &target));
        }
        // ρ ⋆ (𝒮⊗id)ρ = (𝒮⊗id)ρ ⋆ ρ = ε·1⊗1 in the algebra H⊗A
        let mut f = vec![ZERO; nh * na];
        let mut g = vec![ZERO; nh * na];
        for (x1, x2, cx) in h.comul_basis(x) {
            for (h1, q1, c1) in d.rho(x1) {
                for (h2, q2, c2) in d.rho(x2) {
                    let c = cx * c1 * c2;
                    sparse::kron_into(&mut f, &h.mul(&e(h1), h.s_basis(h2)), a.mul_basis(q1, q2), na, c);
                    sparse::kron_into(&mut g, &h.mul(h.s_basis(h1), &e(h2)), a.mul_basis(q1, q2), na, c);
                }
            }
        }
        let mut target = vec![ZERO; nh * na];
        sparse::kron_into(&mut target, &h.unit_sv(), &one_a, na, h.counit[x]);
        inv_co = inv_co.max(sparse::max_abs_diff(&f, &target)).max(sparse::max_abs_diff(&g, &target));
    }
    r.residual("action-assoc", assoc)
        .residual("coaction-coassoc", coassoc)
        .residual("sc5", sc5)
        .residual("sc6", sc6)
        .residual("action-inverse", inv_act)
        .residual("coaction-inverse", inv_co);

    match andruskiewitsch_conditions(d, tol) {
        Ok(and) => {
            for c in &and.checks {
                r.push(c.clone());
            }
        }
        Err(_) => {
            r.skip("and1", "factors carry no star");
        }
    }
    Ok(r)
}

/// The conditions `and1`–`and4` alone.
pub fn andruskiewitsch_conditions(d: &CocycleLinkedPairData, tol: f64) -> Result<VerificationReport, Error> {
    let sa = d.a.require_star()?;
    let sh = d.h.require_star()?;
    let (a, h) = (&d.a, &d.h);
    let (na, nh) = (a.dim, h.dim);
    let mut r = VerificationReport::new("andruskiewitsch", tol);
    let and1 = action_star_residual(d)?;
    let (mut and2, mut and3, mut and4): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for x in 0..nh {
        let wx = h.s_inv(sh.basis_image(x));
        for y in 0..nh {
            let wy = h.s_inv(sh.basis_image(y));
            let l = sa.apply(&d.chi_of(&sparse::basis(x), &sparse::basis(y)));
            and2 = and2.max(diff(&l, &d.chi_inv_of(&wx, &wy), na));
        }
        // Σ(x*)_H ⊗ (x*)_A = Σ(𝒮(𝒮⁻¹(x)_H))* ⊗ (𝒮⁻¹(x)_A)*
        let mut lhs = vec![ZERO; nh * na];
        for (hh, q, c) in d.rho_sv(sh.basis_image(x)) {
            lhs[hh * na + q] += c;
        }
        let mut rhs = vec![ZERO; nh * na];
        for (hh, q, c) in d.rho_sv(h.s_inv_basis(x)) {
            sparse::kron_into(&mut rhs, &sh.apply(h.s_basis(hh)), sa.basis_image(q), na, c.conj());
        }
        and3 = and3.max(sparse::max_abs_diff(&lhs, &rhs));
        // Σ(x*)_I ⊗ (x*)_II = Σ(𝒮⁻¹(x)_Î)* ⊗ (𝒮⁻¹(x)_ÎÎ)*
        let mut lhs = vec![ZERO; na * na];
        for (u, v, c) in d.psi_sv(sh.basis_image(x)) {
            lhs[u * na + v] += c;
        }
        let mut rhs = vec![ZERO; na * na];
        for (u, v, c) in d.psi_inv_sv(h.s_inv_basis(x)) {
            sparse::kron_into(&mut rhs, sa.basis_image(u), sa.basis_image(v), na, c.conj());
        }
        and4 = and4.max(sparse::max_abs_diff(&lhs, &rhs));
    }
    r.residual("and1", and1).residual("and2", and2).residual("and3", and3).residual("and4", and4);
    Ok(r)
}
