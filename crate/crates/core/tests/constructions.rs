use cqg_core::constructions::*;
use cqg_core::groups::FiniteGroup;
use cqg_core::hopf::examples::{function_algebra, group_algebra, sweedler};
use cqg_core::hopf::{compute_integral, kron_matrix, verify_hopf, LinearMapBetween};
use cqg_core::numeric::{sparse, DenseMatrix, Scalar, SparseVec};
use cqg_core::star::{gram_form, is_cqg, verify_star_hopf, StarHopfAlgebra, StarStructure};
use cqg_core::Error;

const TOL: f64 = 1e-9;

fn c(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

fn ids(r: &cqg_core::VerificationReport) -> Vec<String> {
    r.failures().iter().map(|c| c.check_id.clone()).collect()
}

fn add_at(v: &SparseVec, n: usize, k: usize, t: Scalar) -> SparseVec {
    let mut d = sparse::to_dense(v, n);
    d[k] += t;
    sparse::from_dense(&d)
}

fn s3() -> FiniteGroup {
    FiniteGroup::symmetric3()
}

#[test]
fn dual_of_group_algebra_is_function_algebra() {
    for g in [FiniteGroup::cyclic(3), s3()] {
        let d = dual(&group_algebra(&g));
        assert!(structure_difference(&d, &function_algebra(&g)) < 1e-12);
        assert!(verify_star_hopf(&d, TOL).overall());
    }
}

#[test]
fn double_dual_is_the_identity() {
    for h in [group_algebra(&s3()), function_algebra(&s3()), StarHopfAlgebra::plain(sweedler())] {
        assert!(structure_difference(&dual(&dual(&h)), &h) < 1e-12);
        assert!(verify_hopf(&dual(&h), TOL).overall());
    }
}

#[test]
fn opposite_variants_are_hopf_and_involutive() {
    let h = group_algebra(&s3());
    for v in [Variant::Op, Variant::Cop, Variant::Bop] {
        let o = opposite_variants(&h, v);
        assert!(verify_hopf(&o, TOL).overall());
        assert!(structure_difference(&opposite_variants(&o, v), &h) < 1e-12);
    }
    // ℂS₃ is cocommutative, ℂ^{S₃} is commutative
    assert!(structure_difference(&opposite_variants(&h, Variant::Cop), &h) < 1e-12);
    assert!(structure_difference(&opposite_variants(&h, Variant::Op), &h) > 0.5);
    let f = function_algebra(&s3());
    assert!(structure_difference(&opposite_variants(&f, Variant::Op), &f) < 1e-12);
    let sw = StarHopfAlgebra::plain(sweedler());
    assert!(verify_hopf(&opposite_variants(&sw, Variant::Bop), TOL).overall());
    assert!("bop".parse::<Variant>().is_ok() && "flip".parse::<Variant>().is_err());
}

#[test]
fn compactness_survives_opposites() {
    for h in [group_algebra(&s3()), function_algebra(&s3())] {
        for v in [Variant::Op, Variant::Cop, Variant::Bop] {
            assert!(is_cqg(&opposite_variants(&h, v), TOL).unwrap().cqg);
        }
    }
}

#[test]
fn tensor_products_of_compact_quantum_groups() {
    let a = group_algebra(&FiniteGroup::cyclic(2));
    let b = function_algebra(&FiniteGroup::cyclic(3));
    let t = tensor_product(&a, &b);
    assert!(verify_star_hopf(&t, TOL).overall());
    assert!(is_cqg(&t, TOL).unwrap().cqg);
    let bad = StarHopfAlgebra::new(group_algebra(&FiniteGroup::cyclic(3)).hopf.clone(), Some(StarStructure::new(DenseMatrix::identity(3)).unwrap())).unwrap();
    assert!(!is_cqg(&tensor_product(&a, &bad), TOL).unwrap().cqg);
}

#[test]
fn trivial_matched_pair_gives_tensor_product() {
    let a = group_algebra(&FiniteGroup::cyclic(2));
    let h = function_algebra(&FiniteGroup::cyclic(3));
    let p = MatchedPairHopfData::trivial(a.clone(), h.clone());
    assert!(verify_matched_pair(&p, TOL).overall());
    let b = bicrossproduct(&p, TOL).unwrap();
    assert!(b.report.overall());
    assert!(structure_difference(&b.algebra, &tensor_product(&a, &h)) < 1e-12);
}

fn check_bicross_integrals_and_gram(h: &StarHopfAlgebra) {
    let p = double_pair(h);
    assert!(verify_matched_pair(&p, TOL).overall());
    let (ia, ih) = (compute_integral(&p.a).unwrap(), compute_integral(&p.h).unwrap());
    assert!(check_matched_pair_integrals(&p, &ia, &ih, TOL).overall());
    assert_eq!(check_bicross_star_compat(&p, TOL), (0.0, 0.0));
    let b = bicrossproduct(&p, TOL).unwrap().algebra;
    let i = compute_integral(&b).unwrap();
    let nh = p.h.dim;
    for k in 0..b.dim {
        assert!((i.phi[k] - ia.phi[k / nh] * ih.phi[k % nh]).norm() < 1e-12);
    }
    let (g, ga, gh) = (gram_form(&b, &i).unwrap(), gram_form(&p.a, &ia).unwrap(), gram_form(&p.h, &ih).unwrap());
    assert!(gram_factorization_residual(&g, &ga, &gh, p.a.dim, nh) < 1e-12);
    assert!(g.matrix.max_abs_diff(&kron_matrix(&ga.matrix, &gh.matrix)) < 1e-12);
}

#[test]
fn bicrossproduct_integral_and_gram_factorize() {
    check_bicross_integrals_and_gram(&group_algebra(&FiniteGroup::cyclic(2)));
    check_bicross_integrals_and_gram(&group_algebra(&s3()));
}

#[test]
fn broken_matched_pair_is_detected() {
    let p = double_pair(&group_algebra(&s3()));
    let mut left = p.left.clone();
    let k = (0..left.cols.len()).find(|&k| !left.cols[k].is_empty() && k / p.a.dim != 0).unwrap();
    left.cols[k] = sparse::scale(&left.cols[k], c(-1.0));
    let q = MatchedPairHopfData::new(p.a.clone(), p.h.clone(), left, p.right.clone()).unwrap();
    assert!(!verify_matched_pair(&q, TOL).overall());
    assert!(MatchedPairHopfData::new(p.a.clone(), p.h.clone(), p.right.clone(), p.right.clone()).is_ok());
    let small = group_algebra(&FiniteGroup::cyclic(2));
    assert!(matches!(
        MatchedPairHopfData::new(p.a.clone(), small, p.left.clone(), p.right.clone()),
        Err(Error::DimensionMismatch(_))
    ));
}

#[test]
fn drinfeld_doubles() {
    for (g, dim) in [(FiniteGroup::cyclic(2), 4), (s3(), 36)] {
        let h = group_algebra(&g);
        let d = drinfeld_double(&h, TOL).unwrap();
        assert!(d.report.overall(), "{}", d.report.to_text());
        assert_eq!(d.algebra.dim, dim);
        assert!(verify_hopf(&d.algebra, TOL).overall());
        assert!(verify_star_hopf(&d.algebra, TOL).overall());
        assert!(is_cqg(&d.algebra, TOL).unwrap().cqg);
        assert!(structure_difference(&d.algebra, &double_direct(&h, TOL).unwrap().algebra) < 1e-10);
    }
    let d = drinfeld_double(&group_algebra(&FiniteGroup::cyclic(2)), TOL).unwrap().algebra;
    // D(ℂC₂) ≅ ℂ(C₂×C₂) is commutative and cocommutative
    assert!(d.is_commutative(TOL) && d.is_cocommutative(TOL));
    let d = drinfeld_double(&group_algebra(&s3()), TOL).unwrap().algebra;
    assert!(!d.is_commutative(TOL) && !d.is_cocommutative(TOL));
}

#[test]
fn double_without_star() {
    let sw = StarHopfAlgebra::plain(sweedler());
    let d = drinfeld_double(&sw, TOL).unwrap().algebra;
    assert_eq!(d.dim, 16);
    assert!(d.star.is_none());
    assert!(verify_hopf(&d, TOL).overall());
}

fn double_linked_pair(n: usize) -> CocycleLinkedPairData {
    CocycleLinkedPairData::from_matched_pair(&double_pair(&group_algebra(&FiniteGroup::cyclic(n)))).unwrap()
}

#[test]
fn linked_pair_from_matched_pair() {
    for n in [2, 3] {
        let d = double_linked_pair(n);
        let r = verify_cocycle_linked_pair(&d, TOL);
        assert!(r.overall(), "{}", r.to_text());
        assert_eq!(r.checks.len(), 20);
        let b = cocycle_bismash(&d, TOL).unwrap();
        assert!(b.report.overall());
        assert!(verify_hopf(&b.algebra, TOL).overall());
    }
    let d = CocycleLinkedPairData::from_matched_pair(&double_pair(&group_algebra(&s3()))).unwrap();
    assert!(verify_cocycle_linked_pair(&d, TOL).overall());
}

#[test]
fn linked_pair_action_mutation() {
    let d = double_linked_pair(2);
    let na = d.a.dim;
    let mut act = d.action.clone();
    act.cols[na + 1] = add_at(&act.cols[na + 1], na, 0, c(0.3));
    let m = d.with_maps(act, d.coaction.clone(), d.chi.clone(), d.psi.clone()).unwrap();
    let f = ids(&verify_cocycle_linked_pair(&m, TOL));
    for id in ["a1", "a2", "a3", "a4", "a5", "c8"] {
        assert!(f.iter().any(|x| x == id), "{id} in {f:?}");
    }
}

#[test]
fn linked_pair_rejects_bad_shapes_and_non_invertible_cocycles() {
    let d = double_linked_pair(2);
    assert!(matches!(
        d.with_maps(d.coaction.clone(), d.coaction.clone(), d.chi.clone(), d.psi.clone()),
        Err(Error::DimensionMismatch(_))
    ));
    let mut chi = d.chi.clone();
    for col in chi.cols.iter_mut() {
        col.clear();
    }
    assert!(matches!(
        d.with_maps(d.action.clone(), d.coaction.clone(), chi, d.psi.clone()),
        Err(Error::NotConvolutionInvertible)
    ));
}

#[test]
fn star_lifts_on_the_double_pair() {
    let d = double_linked_pair(3);
    let m = cocycle_bismash(&d, TOL).unwrap().algebra;
    for l in [StarLiftData::trivial(&d), StarLiftData::chi_canonical(&d, TOL).unwrap()] {
        assert!(check_star_lift(&d, &l, TOL).overall());
        let s = attach_star_lift(&m, &d, &l, TOL).unwrap();
        assert!(is_cqg(&s, TOL).unwrap().cqg);
        assert!(star_lift_matrix(&d, &l).is_ok());
    }
    // with trivial χ both lifts coincide
    assert_eq!(StarLiftData::trivial(&d).gamma, StarLiftData::chi_canonical(&d, TOL).unwrap().gamma);
}

#[test]
fn star_lift_rejections() {
    let d = double_linked_pair(2);
    let (na, nh) = (d.a.dim, d.h.dim);
    let base = StarLiftData::trivial(&d).gamma;
    let col = |x| base.apply(&sparse::basis(x));
    // the unit of H = ℂ^{C₂}-dual is δ⁰ + δ¹; shifting one column moves γ(1)
    let shifted: Vec<SparseVec> = (0..nh).map(|x| if x == 1 { add_at(&col(x), na, 1, c(0.5)) } else { col(x) }).collect();
    assert!(matches!(
        StarLiftData::explicit(&d, LinearMapBetween::from_columns(na, &shifted), TOL),
        Err(Error::InvalidInput(_))
    ));
    // same shift compensated on the other column keeps γ(1) = 1 and ε∘γ = ε
    let balanced: Vec<SparseVec> = (0..nh)
        .map(|x| match x {
            0 => add_at(&col(x), na, 1, c(-0.5)),
            1 => add_at(&col(x), na, 1, c(0.5)),
            _ => col(x),
        })
        .collect();
    let l = StarLiftData::explicit(&d, LinearMapBetween::from_columns(na, &balanced), TOL).unwrap();
    let f = ids(&check_star_lift(&d, &l, TOL));
    assert!(!f.is_empty() && f.iter().any(|x| x == "cero"), "{f:?}");
    let m = cocycle_bismash(&d, TOL).unwrap().algebra;
    assert!(matches!(attach_star_lift(&m, &d, &l, TOL), Err(Error::StarCompatFailed(_))));
    let plain = CocycleLinkedPairData::with_trivial_cocycles(d.a.without_star(), d.h.clone(), d.action.clone(), d.coaction.clone()).unwrap();
    assert!(matches!(attach_star_lift(&m, &plain, &l, TOL), Err(Error::MissingStar)));
}

#[test]
fn integral_centrality() {
    let d = double_linked_pair(3);
    let (ia, ih) = (compute_integral(&d.a).unwrap(), compute_integral(&d.h).unwrap());
    assert!(linked_pair_centrality(&d, &ia, &ih, TOL).overall());
    // indicator of a transposition is not central on ℂS₃
    let h = group_algebra(&s3());
    let g = s3();
    let t = (0..6).find(|&x| x != g.identity() && g.mul(x, x) == g.identity()).unwrap();
    let mut phi = vec![c(0.0); 6];
    phi[t] = c(1.0);
    assert!((check_integral_centrality(&h, &phi) - 1.0).abs() < 1e-12);
    let i = compute_integral(&h).unwrap();
    assert!(check_integral_centrality(&h, &i.phi) < 1e-14);
}

#[test]
fn singer_conditions() {
    let d = double_linked_pair(2);
    let r = verify_singer_conditions(&d, TOL).unwrap();
    assert!(r.overall(), "{}", r.to_text());
    assert!(andruskiewitsch_conditions(&d, TOL).unwrap().overall());
    assert!(action_star_residual(&d).unwrap() < 1e-14 && coaction_star_residual(&d).unwrap() < 1e-14);
    let ns = CocycleLinkedPairData::from_matched_pair(&double_pair(&group_algebra(&s3()))).unwrap();
    assert!(matches!(verify_singer_conditions(&ns, TOL), Err(Error::NotASingerPair(_))));
}

#[test]
fn cococycle_mutation_breaks_and4() {
    let d = double_linked_pair(3);
    let na = d.a.dim;
    for x in 1..d.h.dim {
        let mut psi = d.psi.clone();
        let col = add_at(&psi.cols[x], na * na, na + 1, c(0.3));
        psi.cols[x] = add_at(&col, na * na, 0, c(-0.3));
        let m = d.with_maps(d.action.clone(), d.coaction.clone(), d.chi.clone(), psi).unwrap();
        let f = ids(&verify_singer_conditions(&m, TOL).unwrap());
        assert!(f.iter().any(|i| i == "and4") && f.iter().any(|i| i == "c8"), "{f:?}");
        assert!(!ids(&andruskiewitsch_conditions(&m, TOL).unwrap()).is_empty());
    }
}

fn sgn(e: usize) -> Scalar {
    if e % 2 == 0 { c(1.0) } else { c(-1.0) }
}

fn sym(p: usize, q: usize) -> Scalar {
    sgn((p / 2) * (q / 2) + (p % 2) * (q % 2))
}

fn alt(p: usize, q: usize) -> Scalar {
    sgn((p / 2) * (q % 2))
}

#[test]
fn trivial_twist() {
    let h = function_algebra(&s3());
    let t = build_twist(&h, &trivial_cocycle(&h.bialgebra), TOL).unwrap();
    assert!(t.report.overall());
    assert!(t.phi_map.max_abs_diff(&DenseMatrix::identity(6)) < 1e-14);
    let b = twist_product(&h, &t, TOL).unwrap();
    assert!(structure_difference(&b.algebra, &h) < 1e-14);
}

#[test]
fn bicharacter_twists_on_klein_four() {
    let g = FiniteGroup::cyclic_square(2);
    let h = function_algebra(&g);
    let i = compute_integral(&h).unwrap();
    let chi = bicharacter_cocycle(4, &[0, 1, 2, 3], 2, sym);
    let t = build_twist(&h, &chi, TOL).unwrap();
    assert!(t.report.overall(), "{}", t.report.to_text());
    assert!(star_cocycle_residual(&h, &chi).unwrap() < 1e-12);
    let b = twist_product(&h, &t, TOL).unwrap();
    assert!(b.algebra.is_commutative(TOL));
    let p = twist_positivity(&h, &t, &i, TOL).unwrap();
    assert!(p.cqg && p.direct_cqg);
    assert!(p.selfadjoint_residual < 1e-12 && p.bracket_residual < 1e-12);

    let chi = bicharacter_cocycle(4, &[0, 1, 2, 3], 2, alt);
    let t = build_twist(&h, &chi, TOL).unwrap();
    assert!(t.report.overall());
    assert!((star_cocycle_residual(&h, &chi).unwrap() - 0.5).abs() < 1e-12);
    assert!(matches!(twist_product(&h, &t, TOL), Err(Error::StarCompatFailed(_))));
    assert!(matches!(twist_positivity(&h, &t, &i, TOL), Err(Error::StarCompatFailed(_))));
    assert!(twist_product(&h.without_star(), &t, TOL).unwrap().algebra.is_commutative(TOL));
}

#[test]
fn twist_on_nonabelian_group_both_paths_agree() {
    let g = s3().product(&FiniteGroup::cyclic(2));
    let h = function_algebra(&g);
    let i = compute_integral(&h).unwrap();
    let sub: Vec<usize> = (0..g.order()).filter(|&x| x == g.identity() || g.mul(x, x) == g.identity()).collect();
    assert!(sub.len() >= 4);
    let t = build_twist(&h, &bicharacter_cocycle(12, &[0, 1, 2, 3], 2, sym), TOL).unwrap();
    let p = twist_positivity(&h, &t, &i, TOL).unwrap();
    assert_eq!(p.cqg, p.direct_cqg);
    assert!(!p.cqg);
    assert!((p.min_eigenvalue + 1.0).abs() < 1e-9);
    let alt_t = build_twist(&h, &bicharacter_cocycle(12, &[0, 1, 2, 3], 2, alt), TOL).unwrap();
    assert!(!twist_product(&h.without_star(), &alt_t, TOL).unwrap().algebra.is_commutative(TOL));
}

#[test]
fn non_cocycles_are_rejected() {
    let h = function_algebra(&FiniteGroup::cyclic_square(2));
    let mut chi = trivial_cocycle(&h.bialgebra);
    chi[5] += c(0.4);
    assert!(matches!(build_twist(&h, &chi, TOL), Err(Error::NotACocycle(_))));
    let mut chi = trivial_cocycle(&h.bialgebra);
    chi[0] = c(2.0);
    assert!(matches!(build_twist(&h, &chi, TOL), Err(Error::NotACocycle(_))));
}

#[test]
fn cqg_equivalence_through_the_double_pair() {
    // the bismash of a linked pair built from compact factors is compact exactly when its Gram form factorizes
    for h in [group_algebra(&FiniteGroup::cyclic(2)), group_algebra(&FiniteGroup::cyclic(3))] {
        let d = CocycleLinkedPairData::from_matched_pair(&double_pair(&h)).unwrap();
        let m = cocycle_bismash(&d, TOL).unwrap().algebra;
        let s = attach_star_lift(&m, &d, &StarLiftData::trivial(&d), TOL).unwrap();
        let (ia, ih, is) = (compute_integral(&d.a).unwrap(), compute_integral(&d.h).unwrap(), compute_integral(&s).unwrap());
        let g = gram_form(&s, &is).unwrap();
        let r = gram_factorization_residual(&g, &gram_form(&d.a, &ia).unwrap(), &gram_form(&d.h, &ih).unwrap(), d.a.dim, d.h.dim);
        assert!(r < 1e-12);
        assert!(is_cqg(&s, TOL).unwrap().cqg);
    }
}
