use super::cocycle::{alpha_verdicts, verify_alpha, verify_sigma_tau, GroupCocycleData};
use super::pair::{verify_matched_pair_groups, MatchedPairGroups};
use crate::constructions::{
    cocycle_bismash, star_lift_matrix, structure_difference, Built, CocycleLinkedPairData, StarLiftData,
};
use crate::error::Error;
use crate::hopf::examples::{function_algebra, group_algebra};
use crate::hopf::{compute_integral, solve_antipode, FiniteBialgebra, LinearMapBetween};
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{DenseMatrix, Scalar, SparseMap, ONE, ZERO};
use crate::report::VerificationReport;
use crate::star::{StarHopfAlgebra, StarStructure};

fn idx(p: &MatchedPairGroups, g: usize, f: usize) -> usize {
    g * p.nf() + f
}

/// `ℂ^G#_{σ,τ}ℂF` on the basis `e_g#f ↦ g·|F| + f`, from the product and
/// coproduct formulas with no checks.
pub fn group_bismash_bialgebra(p: &MatchedPairGroups, c: &GroupCocycleData) -> Result<FiniteBialgebra, Error> {
    let (nf, ng) = (p.nf(), p.ng());
    let n = nf * ng;
    // (e_g#f)(e_g'#f') = δ_{g◁f,g'} σ(g;f,f') e_g#ff'
    let mult = SparseMap::from_fn(n * n, n, |k| {
        let (i, j) = (k / n, k % n);
        let (g, f) = (i / nf, i % nf);
        let (g2, f2) = (j / nf, j % nf);
        let mut v = vec![ZERO; n];
        if p.rt(g, f) == g2 {
            v[idx(p, g, p.f.mul(f, f2))] = c.s(g, f, f2);
        }
        v
    });
    // Δ(e_g#f) = Σ_{g'g''=g} τ(g',g'';f) e_g'#(g''▷f) ⊗ e_g''#f
    let comult = SparseMap::from_fn(n, n * n, |k| {
        let (g, f) = (k / nf, k % nf);
        let mut v = vec![ZERO; n * n];
        for g1 in 0..ng {
            let g2 = p.g.mul(p.g.inv(g1), g);
            v[idx(p, g1, p.lt(g2, f)) * n + idx(p, g2, f)] += c.t(g1, g2, f);
        }
        v
    });
    let one_f = p.f.identity();
    let unit = (0..n).map(|k| if k % nf == one_f { ONE } else { ZERO }).collect();
    let counit = (0..n).map(|k| if k / nf == p.g.identity() { ONE } else { ZERO }).collect();
    let labels = (0..n).map(|k| format!("e_{}#{}", p.g.label(k / nf), p.f.label(k % nf))).collect();
    FiniteBialgebra::new(mult, unit, comult, counit, labels)
}

/// `𝒮(e_g#f) = σ(g⁻¹; g▷f, (g▷f)⁻¹)⁻¹ τ(g⁻¹, g; f)⁻¹ e_{(g◁f)⁻¹}#(g▷f)⁻¹`.
pub fn group_bismash_antipode(p: &MatchedPairGroups, c: &GroupCocycleData) -> DenseMatrix {
    let nf = p.nf();
    let n = nf * p.ng();
    let cols: Vec<SparseVec> = (0..n)
        .map(|k| {
            let (g, f) = (k / nf, k % nf);
            let gi = p.g.inv(g);
            let gf = p.lt(g, f);
            let coef = (c.s(gi, gf, p.f.inv(gf)) * c.t(gi, g, f)).inv();
            vec![(idx(p, p.g.inv(p.rt(g, f)), p.f.inv(gf)), coef)]
        })
        .collect();
    DenseMatrix::from_sparse_columns(n, &cols)
}

/// `(e_g#f)* = α(f⁻¹, g◁f) e_{g◁f}#f⁻¹`.
///
/// # Errors
///
/// [`Error::MissingStar`] without an α table.
pub fn group_bismash_star(p: &MatchedPairGroups, c: &GroupCocycleData) -> Result<StarStructure, Error> {
    if c.alpha.is_none() {
        return Err(Error::MissingStar);
    }
    let nf = p.nf();
    let n = nf * p.ng();
    let cols: Vec<SparseVec> = (0..n)
        .map(|k| {
            let (g, f) = (k / nf, k % nf);
            let fi = p.f.inv(f);
            let gf = p.rt(g, f);
            vec![(idx(p, gf, fi), c.a(fi, gf).expect("alpha present"))]
        })
        .collect();
    Ok(StarStructure::from_columns(n, &cols))
}

/// `(ℂ^G, ℂF, ▶, ρ, χ, ψ)` with `f▶e_g = e_{g◁f⁻¹}`, `ρ(f) = Σ_g (g▷f)⊗e_g`,
/// `χ(f,f') = Σ_g σ(g;f,f')e_g` and `ψ(f) = Σ τ(g,g';f) e_g⊗e_g'`.
pub fn encode_as_linked_pair(p: &MatchedPairGroups, c: &GroupCocycleData) -> Result<CocycleLinkedPairData, Error> {
    let (nf, ng) = (p.nf(), p.ng());
    let a = function_algebra(&p.g);
    let h = group_algebra(&p.f);
    let action = SparseMap::from_fn(nf * ng, ng, |k| {
        let (f, g) = (k / ng, k % ng);
        let mut v = vec![ZERO; ng];
        v[p.rt(g, p.f.inv(f))] = ONE;
        v
    });
    let coaction = SparseMap::from_fn(nf, nf * ng, |f| {
        let mut v = vec![ZERO; nf * ng];
        for g in 0..ng {
            v[p.lt(g, f) * ng + g] += ONE;
        }
        v
    });
    let chi = SparseMap::from_fn(nf * nf, ng, |k| (0..ng).map(|g| c.s(g, k / nf, k % nf)).collect());
    let psi = SparseMap::from_fn(nf, ng * ng, |f| (0..ng * ng).map(|k| c.t(k / ng, k % ng, f)).collect());
    CocycleLinkedPairData::new(a, h, action, coaction, chi, psi)
}

/// `γ(f) = Σ_g α(f, g) e_g`.
pub fn gamma_from_alpha(p: &MatchedPairGroups, c: &GroupCocycleData) -> Result<LinearMapBetween, Error> {
    if c.alpha.is_none() {
        return Err(Error::MissingStar);
    }
    let ng = p.ng();
    let cols: Vec<SparseVec> = (0..p.nf())
        .map(|f| sparse::from_dense(&(0..ng).map(|g| c.a(f, g).expect("alpha present")).collect::<Vec<Scalar>>()))
        .collect();
    Ok(LinearMapBetween::from_columns(ng, &cols))
}

/// Builds `ℂ^G#_{σ,τ}ℂF` from the group formulas and checks it against the
/// generic cocycle bismash of [`encode_as_linked_pair`].
///
/// The star is attached when an α table is present and `cond-0` … `cond-3`
/// hold; the α report is merged either way. Report entries:
/// `antipode-closed-form`, `two-path`, `integral-closed-form`,
/// `integral-unique`, and with a star `star-two-path`.
///
/// # Errors
///
/// [`Error::CheckFailed`] if the matched-pair tables fail,
/// [`Error::NotACocycle`] if σ, τ fail, [`Error::AntipodeMismatch`] or
/// [`Error::PathMismatch`] when construction paths disagree.
pub fn build_group_bismash(p: &MatchedPairGroups, c: &GroupCocycleData, tol: f64) -> Result<Built, Error> {
    let mp = verify_matched_pair_groups(p);
    if !mp.overall() {
        let bad: Vec<_> = mp.failures().iter().map(|c| c.check_id.clone()).collect();
        return Err(Error::CheckFailed(format!("not a matched pair of groups: {}", bad.join(", "))));
    }
    let st = verify_sigma_tau(p, c, tol);
    if !st.overall() {
        let bad: Vec<_> = st.failures().iter().map(|c| c.check_id.clone()).collect();
        return Err(Error::NotACocycle(format!("σ, τ fail {}", bad.join(", "))));
    }
    let mut report = VerificationReport::new("group-bismash", tol);
    report.merge("", &mp).merge("", &st);

    let b = group_bismash_bialgebra(p, c)?;
    let closed = group_bismash_antipode(p, c);
    let hopf = solve_antipode(&b)?;
    let da = hopf.antipode.max_abs_diff(&closed);
    report.residual("antipode-closed-form", da);
    if da > tol {
        return Err(Error::AntipodeMismatch(da));
    }

    let d = encode_as_linked_pair(p, c)?;
    let via = cocycle_bismash(&d, tol)?;
    let plain = StarHopfAlgebra::plain(hopf.clone());
    let two = structure_difference(&plain, &via.algebra);
    report.residual("two-path", two);
    if two > tol {
        return Err(Error::PathMismatch(format!("group bismash: direct and generic paths differ by {two:e}")));
    }

    let integral = compute_integral(&hopf)?;
    let ng = p.ng() as f64;
    let one_f = p.f.identity();
    let ir = integral
        .phi
        .iter()
        .enumerate()
        .map(|(k, &v)| (v - if k % p.nf() == one_f { Scalar::new(1.0 / ng, 0.0) } else { ZERO }).norm())
        .fold(0.0, f64::max);
    report.residual("integral-closed-form", ir);
    report.flag("integral-unique", integral.integral_space_dim == 1, format!("dimension {}", integral.integral_space_dim));

    let mut star = None;
    if c.alpha.is_some() {
        let ar = verify_alpha(p, c, tol);
        report.merge("alpha:", &ar);
        if alpha_verdicts(&ar).0 {
            let direct = group_bismash_star(p, c)?;
            let lift = StarLiftData::explicit(&d, gamma_from_alpha(p, c)?, tol)?;
            let generic = star_lift_matrix(&d, &lift)?;
            let sd = direct.matrix.max_abs_diff(&generic.matrix);
            report.residual("star-two-path", sd);
            if sd > tol {
                return Err(Error::PathMismatch(format!("group bismash star: paths differ by {sd:e}")));
            }
            star = Some(direct);
        }
    }
    Ok(Built { algebra: StarHopfAlgebra { hopf, star }, report })
}
