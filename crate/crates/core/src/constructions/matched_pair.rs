use super::common::{antipode_cross_checked, bialgebra_from_fns, bilinear, diff, Built};
use crate::error::Error;
use crate::hopf::IntegralData;
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{DenseMatrix, Scalar, SparseMap, ONE, ZERO};
use crate::report::VerificationReport;
use crate::star::{GramForm, StarHopfAlgebra, StarStructure};

/// `(A, H, ◁, ▷)`: `left` is `▷ : H⊗A → A`, `right` is `◁ : H⊗A → H`, both
/// indexed by `x·dim(A) + a`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatchedPairHopfData {
    pub a: StarHopfAlgebra,
    pub h: StarHopfAlgebra,
    pub left: SparseMap,
    pub right: SparseMap,
}

impl MatchedPairHopfData {
    pub fn new(a: StarHopfAlgebra, h: StarHopfAlgebra, left: SparseMap, right: SparseMap) -> Result<Self, Error> {
        let (na, nh) = (a.dim, h.dim);
        if left.src != nh * na || left.dst != na || right.src != nh * na || right.dst != nh {
            return Err(Error::DimensionMismatch("actions must be H⊗A→A and H⊗A→H".into()));
        }
        Ok(MatchedPairHopfData { a, h, left, right })
    }

    /// `▷ = ε⊗id`, `◁ = id⊗ε`.
    pub fn trivial(a: StarHopfAlgebra, h: StarHopfAlgebra) -> Self {
        let (na, nh) = (a.dim, h.dim);
        let left = SparseMap::from_fn(nh * na, na, |p| {
            let mut v = vec![ZERO; na];
            v[p % na] = h.counit[p / na];
            v
        });
        let right = SparseMap::from_fn(nh * na, nh, |p| {
            let mut v = vec![ZERO; nh];
            v[p / na] = a.counit[p % na];
            v
        });
        MatchedPairHopfData { a, h, left, right }
    }

    pub fn tri(&self, x: &[(usize, Scalar)], a: &[(usize, Scalar)]) -> SparseVec {
        bilinear(&self.left, self.a.dim, x, a)
    }

    pub fn tri_r(&self, x: &[(usize, Scalar)], a: &[(usize, Scalar)]) -> SparseVec {
        bilinear(&self.right, self.a.dim, x, a)
    }
}

/// Module, module-coalgebra and compatibility axioms of a matched pair.
pub fn verify_matched_pair(p: &MatchedPairHopfData, tol: f64) -> VerificationReport {
    let mut r = VerificationReport::new("matched-pair", tol);
    let (a, h) = (&p.a, &p.h);
    let (na, nh) = (a.dim, h.dim);
    let e = sparse::basis;
    let (one_a, one_h) = (a.unit_sv(), h.unit_sv());

    let (mut lu, mut la, mut ru, mut ra): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    let (mut lc, mut le, mut rc, mut re): (f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0);
    let (mut c3, mut c4, mut c5, mut c3u, mut c4u): (f64, f64, f64, f64, f64) = (0.0, 0.0, 0.0, 0.0, 0.0);

    for x in 0..nh {
        c3u = c3u.max(diff(&p.tri(&e(x), &one_a), &sparse::scale(&one_a, h.counit[x]), na));
        for ai in 0..na {
            let xa = p.tri(&e(x), &e(ai));
            let xra = p.tri_r(&e(x), &e(ai));
            // module-coalgebra for ▷ and ◁
            let mut lhs = vec![ZERO; na * na];
            for (u, v, c) in a.comul(&xa) {
                lhs[u * na + v] += c;
            }
            let mut lhs_r = vec![ZERO; nh * nh];
            for (u, v, c) in h.comul(&xra) {
                lhs_r[u * nh + v] += c;
            }
            let mut rhs = vec![ZERO; na * na];
            let mut rhs_r = vec![ZERO; nh * nh];
            let mut c5l = vec![ZERO; nh * na];
            let mut c5r = vec![ZERO; nh * na];
            for (x1, x2, cx) in h.comul_basis(x) {
                for (a1, a2, ca) in a.comul_basis(ai) {
                    let c = cx * ca;
                    sparse::kron_into(&mut rhs, &p.tri(&e(x1), &e(a1)), &p.tri(&e(x2), &e(a2)), na, c);
                    sparse::kron_into(&mut rhs_r, &p.tri_r(&e(x1), &e(a1)), &p.tri_r(&e(x2), &e(a2)), nh, c);
                    sparse::kron_into(&mut c5l, &p.tri_r(&e(x1), &e(a1)), &p.tri(&e(x2), &e(a2)), na, c);
                    sparse::kron_into(&mut c5r, &p.tri_r(&e(x2), &e(a2)), &p.tri(&e(x1), &e(a1)), na, c);
                }
            }
            lc = lc.max(sparse::max_abs_diff(&lhs, &rhs));
            rc = rc.max(sparse::max_abs_diff(&lhs_r, &rhs_r));
            c5 = c5.max(sparse::max_abs_diff(&c5l, &c5r));
            le = le.max((a.counit_of(&xa) - h.counit[x] * a.counit[ai]).norm());
            re = re.max((h.counit_of(&xra) - h.counit[x] * a.counit[ai]).norm());

            for y in 0..nh {
                // x▷(y▷a) = (xy)▷a
                let l = p.tri(&e(x), &p.tri(&e(y), &e(ai)));
                let rr = p.tri(h.mul_basis(x, y), &e(ai));
                la = la.max(diff(&l, &rr, na));
                // (4.4) xy◁a = Σ(x◁(y₁▷a₁))(y₂◁a₂)
                let lhs4 = p.tri_r(h.mul_basis(x, y), &e(ai));
                let mut rhs4 = vec![ZERO; nh];
                for (y1, y2, cy) in h.comul_basis(y) {
                    for (a1, a2, ca) in a.comul_basis(ai) {
                        let left = p.tri_r(&e(x), &p.tri(&e(y1), &e(a1)));
                        let right = p.tri_r(&e(y2), &e(a2));
                        h.mul_into(&mut rhs4, &left, &right, cy * ca);
                    }
                }
                c4 = c4.max(sparse::max_abs_diff(&sparse::to_dense(&lhs4, nh), &rhs4));
            }
            for b in 0..na {
                // (x◁a)◁b = x◁(ab)
                let l = p.tri_r(&p.tri_r(&e(x), &e(ai)), &e(b));
                let rr = p.tri_r(&e(x), a.mul_basis(ai, b));
                ra = ra.max(diff(&l, &rr, nh));
                // (4.3) x▷ab = Σ(x₁▷a₁)((x₂◁a₂)▷b)
                let lhs3 = p.tri(&e(x), a.mul_basis(ai, b));
                let mut rhs3 = vec![ZERO; na];
                for (x1, x2, cx) in h.comul_basis(x) {
                    for (a1, a2, ca) in a.comul_basis(ai) {
                        let left = p.tri(&e(x1), &e(a1));
                        let right = p.tri(&p.tri_r(&e(x2), &e(a2)), &e(b));
                        a.mul_into(&mut rhs3, &left, &right, cx * ca);
                    }
                }
                c3 = c3.max(sparse::max_abs_diff(&sparse::to_dense(&lhs3, na), &rhs3));
            }
        }
    }
    for ai in 0..na {
        lu = lu.max(diff(&p.tri(&one_h, &e(ai)), &e(ai), na));
        c4u = c4u.max(diff(&p.tri_r(&one_h, &e(ai)), &sparse::scale(&one_h, a.counit[ai]), nh));
    }
    for x in 0..nh {
        ru = ru.max(diff(&p.tri_r(&e(x), &one_a), &e(x), nh));
    }
    r.residual("left-module-unit", lu)
        .residual("left-module-assoc", la)
        .residual("left-module-coalgebra", lc)
        .residual("left-module-counit", le)
        .residual("right-module-unit", ru)
        .residual("right-module-assoc", ra)
        .residual("right-module-coalgebra", rc)
        .residual("right-module-counit", re)
        .residual("compat-left", c3)
        .residual("compat-left-unit", c3u)
        .residual("compat-right", c4)
        .residual("compat-right-unit", c4u)
        .residual("compat-flip", c5);
    r
}

/// Product of basis vectors `(a⊗x)(b⊗y) = Σ a(x₁▷b₁) ⊗ (x₂◁b₂)y` in `A⋈H`.
fn bicross_mul(p: &MatchedPairHopfData, i: usize, j: usize) -> Vec<Scalar> {
    let (na, nh) = (p.a.dim, p.h.dim);
    let (a, x) = (i / nh, i % nh);
    let (b, y) = (j / nh, j % nh);
    let e = sparse::basis;
    let mut acc = vec![ZERO; na * nh];
    for (x1, x2, cx) in p.h.comul_basis(x) {
        for (b1, b2, cb) in p.a.comul_basis(b) {
            let left = p.a.mul(&e(a), &p.tri(&e(x1), &e(b1)));
            let right = p.h.mul(&p.tri_r(&e(x2), &e(b2)), &e(y));
            sparse::kron_into(&mut acc, &left, &right, nh, cx * cb);
        }
    }
    acc
}

/// Element `a⊗x` of `A⋈H` from sparse factors.
pub(crate) fn pure(a: &[(usize, Scalar)], x: &[(usize, Scalar)], na: usize, nh: usize) -> SparseVec {
    let mut acc = vec![ZERO; na * nh];
    sparse::kron_into(&mut acc, a, x, nh, ONE);
    sparse::from_dense(&acc)
}

/// Bicrossproduct `A⋈H` on the basis `a·dim(H) + x`.
///
/// The antipode is solved generically and compared with `𝒮(ax) = 𝒮(x)𝒮(a)`;
/// the star `(ax)* = x*a*` is attached only when both stars exist and the
/// compatibility residuals are within `tol`.
///
/// # Errors
///
/// [`Error::AntipodeMismatch`] or [`Error::NotAHopfAlgebra`].
pub fn bicrossproduct(p: &MatchedPairHopfData, tol: f64) -> Result<Built, Error> {
    let (na, nh) = (p.a.dim, p.h.dim);
    let n = na * nh;
    let mut report = VerificationReport::new("bicrossproduct", tol);
    let labels = (0..n).map(|k| format!("{}{}", p.a.labels[k / nh], p.h.labels[k % nh])).collect();
    let mut unit = vec![ZERO; n];
    sparse::kron_into(&mut unit, &p.a.unit_sv(), &p.h.unit_sv(), nh, ONE);
    let counit = (0..n).map(|k| p.a.counit[k / nh] * p.h.counit[k % nh]).collect();
    let b = bialgebra_from_fns(
        n,
        |i, j| bicross_mul(p, i, j),
        |k| {
            let (a, x) = (k / nh, k % nh);
            let mut out = Vec::new();
            for (a1, a2, ca) in p.a.comul_basis(a) {
                for (x1, x2, cx) in p.h.comul_basis(x) {
                    out.push((a1 * nh + x1, a2 * nh + x2, ca * cx));
                }
            }
            out
        },
        unit,
        counit,
        labels,
    )?;
    // 𝒮(ax) = (1⊗𝒮x)(𝒮a⊗1)
    let (one_a, one_h) = (p.a.unit_sv(), p.h.unit_sv());
    let closed_cols: Vec<SparseVec> = (0..n)
        .map(|k| {
            let (a, x) = (k / nh, k % nh);
            let l = pure(&one_a, p.h.s_basis(x), na, nh);
            let r = pure(p.a.s_basis(a), &one_h, na, nh);
            b.mul(&l, &r)
        })
        .collect();
    let closed = DenseMatrix::from_sparse_columns(n, &closed_cols);
    let hopf = antipode_cross_checked(b, &closed, tol)?;
    report.residual("antipode-closed-form", hopf.antipode.max_abs_diff(&closed));

    let star = match (&p.a.star, &p.h.star) {
        (Some(sa), Some(sh)) => {
            let (r1, r2) = check_bicross_star_compat(p, tol);
            report.residual("star-compat-left", r1).residual("star-compat-right", r2);
            if r1 <= tol && r2 <= tol {
                let cols: Vec<SparseVec> = (0..n)
                    .map(|k| {
                        let (a, x) = (k / nh, k % nh);
                        let l = pure(&one_a, sh.basis_image(x), na, nh);
                        let r = pure(sa.basis_image(a), &one_h, na, nh);
                        hopf.mul(&l, &r)
                    })
                    .collect();
                Some(StarStructure::from_columns(n, &cols))
            } else {
                None
            }
        }
        _ => {
            report.skip("star-compat-left", "a factor has no star");
            None
        }
    };
    Ok(Built { algebra: StarHopfAlgebra { hopf, star }, report })
}

/// Residuals of `a*ε(x*) = Σ(x₂◁a₂)*▷(x₁▷a₁)*` and
/// `ε(a*)x* = Σ(x₂◁a₂)*◁(x₁▷a₁)*` over basis pairs. Infinite without stars.
pub fn check_bicross_star_compat(p: &MatchedPairHopfData, _tol: f64) -> (f64, f64) {
    let (Some(sa), Some(sh)) = (&p.a.star, &p.h.star) else {
        return (f64::INFINITY, f64::INFINITY);
    };
    let (na, nh) = (p.a.dim, p.h.dim);
    let e = sparse::basis;
    let (mut r1, mut r2): (f64, f64) = (0.0, 0.0);
    for x in 0..nh {
        let ex = p.h.counit_of(sh.basis_image(x));
        for a in 0..na {
            let ea = p.a.counit_of(sa.basis_image(a));
            let mut l = vec![ZERO; na];
            let mut rr = vec![ZERO; nh];
            for (x1, x2, cx) in p.h.comul_basis(x) {
                for (a1, a2, ca) in p.a.comul_basis(a) {
                    let c = (cx * ca).conj();
                    let u = sh.apply(&p.tri_r(&e(x2), &e(a2)));
                    let v = sa.apply(&p.tri(&e(x1), &e(a1)));
                    sparse::add_into(&mut l, &p.tri(&u, &v), c);
                    sparse::add_into(&mut rr, &p.tri_r(&u, &v), c);
                }
            }
            let tl = sparse::to_dense(&sparse::scale(sa.basis_image(a), ex), na);
            let tr = sparse::to_dense(&sparse::scale(sh.basis_image(x), ea), nh);
            r1 = r1.max(sparse::max_abs_diff(&l, &tl));
            r2 = r2.max(sparse::max_abs_diff(&rr, &tr));
        }
    }
    (r1, r2)
}

/// `φ_A(a)φ_H(xy) = Σφ_A(x₁▷a₁)φ_H((x₂◁a₂)y)` and
/// `φ_A(ba)φ_H(x) = Σφ_A(b(x₁▷a₁))φ_H(x₂◁a₂)`.
pub fn check_matched_pair_integrals(
    p: &MatchedPairHopfData,
    ia: &IntegralData,
    ih: &IntegralData,
    tol: f64,
) -> VerificationReport {
    let mut r = VerificationReport::new("matched-pair-integrals", tol);
    let (na, nh) = (p.a.dim, p.h.dim);
    let e = sparse::basis;
    let (mut r1, mut r2): (f64, f64) = (0.0, 0.0);
    for x in 0..nh {
        for a in 0..na {
            for y in 0..nh {
                let lhs = ia.phi[a] * ih.phi_of(p.h.mul_basis(x, y));
                let mut rhs = ZERO;
                for (x1, x2, cx) in p.h.comul_basis(x) {
                    for (a1, a2, ca) in p.a.comul_basis(a) {
                        let u = ia.phi_of(&p.tri(&e(x1), &e(a1)));
                        let v = ih.phi_of(&p.h.mul(&p.tri_r(&e(x2), &e(a2)), &e(y)));
                        rhs += cx * ca * u * v;
                    }
                }
                r1 = r1.max((lhs - rhs).norm());
            }
            for b in 0..na {
                let lhs = ia.phi_of(p.a.mul_basis(b, a)) * ih.phi[x];
                let mut rhs = ZERO;
                for (x1, x2, cx) in p.h.comul_basis(x) {
                    for (a1, a2, ca) in p.a.comul_basis(a) {
                        let u = ia.phi_of(&p.a.mul(&e(b), &p.tri(&e(x1), &e(a1))));
                        let v = ih.phi_of(&p.tri_r(&e(x2), &e(a2)));
                        rhs += cx * ca * u * v;
                    }
                }
                r2 = r2.max((lhs - rhs).norm());
            }
        }
    }
    r.residual("integral-left", r1).residual("integral-right", r2);
    r
}

/// `⟨ax, by⟩ = ⟨a,b⟩_A ⟨x,y⟩_H` over basis quadruples.
pub fn gram_factorization_residual(g: &GramForm, ga: &GramForm, gh: &GramForm, na: usize, nh: usize) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..na * nh {
        for j in 0..na * nh {
            let f = ga.matrix[(i / nh, j / nh)] * gh.matrix[(i % nh, j % nh)];
            m = m.max((g.matrix[(i, j)] - f).norm());
        }
    }
    m
}
