mod common;

use cqg_core::constructions::dual;
use cqg_core::groups::{build_group_bismash, generate_example, ExampleKind, FiniteGroup};
use cqg_core::hopf::examples::{function_algebra, group_algebra, sweedler};
use cqg_core::hopf::{compute_integral, kron_matrix};
use cqg_core::numeric::{hermitian_min_eigenvalue, DenseMatrix, Scalar, SparseMap};
use cqg_core::star::*;
use cqg_core::Error;

const TOL: f64 = 1e-9;

fn c(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

fn with_star(h: &StarHopfAlgebra, m: DenseMatrix) -> StarHopfAlgebra {
    StarHopfAlgebra::new(h.hopf.clone(), Some(StarStructure::new(m).unwrap())).unwrap()
}

fn gram(h: &StarHopfAlgebra) -> DenseMatrix {
    gram_form(h, &compute_integral(&h.hopf).unwrap()).unwrap().matrix
}

fn battery() -> Vec<StarHopfAlgebra> {
    let s3 = FiniteGroup::symmetric3();
    let (p, cc) = generate_example(ExampleKind::TauFamily, 2, "1/2".parse().unwrap(), "1/2".parse().unwrap()).unwrap();
    vec![
        group_algebra(&FiniteGroup::cyclic(2)),
        group_algebra(&s3),
        function_algebra(&FiniteGroup::cyclic(4)),
        function_algebra(&s3),
        build_group_bismash(&p, &cc, TOL).unwrap().algebra,
    ]
}

#[test]
fn star_axioms_on_group_and_function_algebras() {
    for h in [group_algebra(&FiniteGroup::cyclic(2)), function_algebra(&FiniteGroup::cyclic(2)), group_algebra(&FiniteGroup::symmetric3())] {
        let r = verify_star_hopf(&h, TOL);
        assert!(r.overall(), "{}", r.to_text());
    }
}

#[test]
fn identity_star_on_cc3_is_star_hopf_but_not_compact() {
    let h = with_star(&group_algebra(&FiniteGroup::cyclic(3)), DenseMatrix::identity(3));
    assert!(verify_star_hopf(&h, TOL).overall());
    let v = is_cqg(&h, TOL).unwrap();
    assert!(!v.cqg);
    assert!((v.min_eigenvalue + 1.0).abs() < 1e-12);
}

#[test]
fn corrupted_star_fails_involution() {
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let bad = with_star(&h, DenseMatrix::diagonal(&[c(1.0), c(2.0)]));
    let r = verify_star_hopf(&bad, TOL);
    assert!(!r.passed("star-involution"));
    let r = verify_star_hopf(&h.without_star(), TOL);
    assert!(!r.overall());
}

#[test]
fn gram_of_group_algebra_is_identity() {
    for n in [2, 3, 5] {
        let g = gram(&group_algebra(&FiniteGroup::cyclic(n)));
        assert!(g.max_abs_diff(&DenseMatrix::identity(n)) < 1e-12);
    }
}

#[test]
fn gram_of_function_algebra_of_order_four() {
    for g in [FiniteGroup::cyclic(4), FiniteGroup::cyclic_square(2)] {
        let m = gram(&function_algebra(&g));
        assert!(m.max_abs_diff(&DenseMatrix::diagonal(&[c(0.25); 4])) < 1e-12);
    }
}

#[test]
fn gram_of_example_6_15() {
    let h = &battery()[4];
    assert!(gram(h).max_abs_diff(&DenseMatrix::diagonal(&[c(0.25); 8])) < 1e-9);
}

#[test]
fn non_hermitian_gram_is_reported() {
    // φ∘* ≠ conj∘φ when the star is scaled by i
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let bad = with_star(&h, DenseMatrix::identity(2).scale(Scalar::new(0.0, 1.0)));
    let i = compute_integral(&bad.hopf).unwrap();
    assert!(matches!(gram_form(&bad, &i), Err(Error::NotHermitian(_))));
}

#[test]
fn cqg_verdicts() {
    assert!(is_cqg(&group_algebra(&FiniteGroup::symmetric3()), TOL).unwrap().cqg);
    let sw = StarHopfAlgebra::new(sweedler(), Some(StarStructure::new(DenseMatrix::identity(4)).unwrap())).unwrap();
    assert_eq!(is_cqg(&sw, TOL).map(|v| v.cqg), Err(Error::NotCosemisimple));
    let (p, cc) = generate_example(ExampleKind::SigmaFamily, 3, "1/3".parse().unwrap(), "2/3".parse().unwrap()).unwrap();
    let h = build_group_bismash(&p, &cc, TOL).unwrap().algebra;
    assert!(is_cqg(&h, TOL).unwrap().cqg);
    assert_eq!(is_cqg(&h.without_star(), TOL).map(|v| v.cqg), Err(Error::MissingStar));
}

#[test]
fn cqg_is_invariant_under_duality() {
    let mut all = battery();
    all.push(with_star(&group_algebra(&FiniteGroup::cyclic(3)), DenseMatrix::identity(3)));
    for h in &all {
        let a = is_cqg(h, TOL).unwrap().cqg;
        let b = is_cqg(&dual(h), TOL).unwrap().cqg;
        assert_eq!(a, b, "dim {}", h.dim);
    }
}

#[test]
fn regular_comodules_are_invariant_for_the_gram_form() {
    for h in battery() {
        let g = gram(&h);
        for side in [Side::Left, Side::Right] {
            let v = regular_comodule(&h.bialgebra, side);
            assert!(check_comodule_invariance(&v, &h, &g, TOL).unwrap() < TOL);
        }
    }
}

#[test]
fn comodule_invariance_examples() {
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let v = regular_comodule(&h.bialgebra, Side::Right);
    assert!(check_comodule_invariance(&v, &h, &gram(&h), TOL).unwrap() < 1e-10);
    assert_eq!(check_comodule_invariance(&v, &h, &DenseMatrix::zeros(2, 2), TOL).unwrap(), 0.0);
    // on ℂC₂ any diagonal form is invariant; an off-diagonal one is not
    assert!(check_comodule_invariance(&v, &h, &DenseMatrix::diagonal(&[c(1.0), c(2.0)]), TOL).unwrap() < 1e-12);
    let off = DenseMatrix::from_vec(2, 2, vec![c(1.0), c(0.5), c(0.5), c(1.0)]).unwrap();
    assert!(check_comodule_invariance(&v, &h, &off, TOL).unwrap() > 0.4);
    let f = function_algebra(&FiniteGroup::cyclic(2));
    let w = regular_comodule(&f.bialgebra, Side::Right);
    assert!(check_comodule_invariance(&w, &f, &DenseMatrix::diagonal(&[c(1.0), c(2.0)]), TOL).unwrap() > 0.5);
    let other = function_algebra(&FiniteGroup::cyclic(3));
    assert!(matches!(check_comodule_invariance(&v, &other, &gram(&h), TOL), Err(Error::DimensionMismatch(_))));
}

#[test]
fn star_representation_examples() {
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let m = regular_module(&h.bialgebra, Side::Left);
    assert_eq!(check_star_representation(&m, &h, &DenseMatrix::identity(2), TOL).unwrap(), 0.0);
    let r = check_star_representation(&m, &h, &DenseMatrix::diagonal(&[c(1.0), c(3.0)]), TOL).unwrap();
    assert!((r - 2.0).abs() < 1e-12);
    let right = regular_module(&h.bialgebra, Side::Right);
    assert!(check_star_representation(&right, &h, &DenseMatrix::identity(2), TOL).unwrap() < 1e-12);
}

#[test]
fn unitary_comodule_gives_star_representation_of_the_dual() {
    for h in [group_algebra(&FiniteGroup::symmetric3()), function_algebra(&FiniteGroup::symmetric3())] {
        let v = regular_comodule(&h.bialgebra, Side::Left);
        let g = gram(&h);
        assert!(check_comodule_invariance(&v, &h, &g, TOL).unwrap() < TOL);
        let m = comodule_to_dual_module(&v, &h.hopf).unwrap();
        let d = dual(&h);
        assert!(verify_module(&m, &d.bialgebra, TOL).overall());
        assert!(check_star_representation(&m, &d, &g, TOL).unwrap() < TOL);
    }
}

#[test]
fn comodule_to_dual_module_examples() {
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let t = trivial_comodule(3, &h.bialgebra, Side::Left);
    let m = comodule_to_dual_module(&t, &h.hopf).unwrap();
    // δ^1 is the counit of the dual
    assert!(m.actions[0].max_abs_diff(&DenseMatrix::identity(3)) < 1e-14);
    assert!(m.actions[1].max_abs() < 1e-14);
    let v = regular_comodule(&h.bialgebra, Side::Left);
    let m = comodule_to_dual_module(&v, &h.hopf).unwrap();
    // δ^g acts on the basis element k by δ^g(k⁻¹) = δ_{g,k} in C₂
    assert!(m.actions[0].max_abs_diff(&DenseMatrix::diagonal(&[c(1.0), c(0.0)])) < 1e-14);
    assert!(m.actions[1].max_abs_diff(&DenseMatrix::diagonal(&[c(0.0), c(1.0)])) < 1e-14);
    let back = dual_module_to_comodule(&m, &h.hopf).unwrap();
    assert!(back.coaction.max_abs_diff(&v.coaction) < TOL);
    let s3 = group_algebra(&FiniteGroup::symmetric3());
    let v = regular_comodule(&s3.bialgebra, Side::Left);
    let back = dual_module_to_comodule(&comodule_to_dual_module(&v, &s3.hopf).unwrap(), &s3.hopf).unwrap();
    assert!(back.coaction.max_abs_diff(&v.coaction) < TOL);
    assert!(comodule_to_dual_module(&regular_comodule(&h.bialgebra, Side::Right), &h.hopf).is_err());
}

#[test]
fn unitarization_examples() {
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let i = compute_integral(&h.hopf).unwrap();
    let t = trivial_comodule(2, &h.bialgebra, Side::Right);
    assert!(unitarize_comodule(&t, &h, &i).unwrap().max_abs_diff(&DenseMatrix::identity(2)) < 1e-12);

    let f = function_algebra(&FiniteGroup::cyclic(2));
    let fi = compute_integral(&f.hopf).unwrap();
    let v = regular_comodule(&f.bialgebra, Side::Right);
    let b = unitarize_comodule(&v, &f, &fi).unwrap();
    assert!(b[(0, 1)].norm() < 1e-12 && b[(1, 0)].norm() < 1e-12);
    assert!(b[(0, 0)].re > 0.0 && b[(1, 1)].re > 0.0);
    assert!(check_comodule_invariance(&v, &f, &b, TOL).unwrap() < TOL);
}

#[test]
fn unitarize_tensor_products() {
    for h in [function_algebra(&FiniteGroup::symmetric3()), group_algebra(&FiniteGroup::symmetric3())] {
        let i = compute_integral(&h.hopf).unwrap();
        let v = regular_comodule(&h.bialgebra, Side::Right);
        let w = trivial_comodule(2, &h.bialgebra, Side::Right);
        let bv = unitarize_comodule(&v, &h, &i).unwrap();
        let bw = unitarize_comodule(&w, &h, &i).unwrap();
        assert!(hermitian_min_eigenvalue(&bv, TOL).unwrap() > TOL);
        let vw = tensor_comodule(&v, &w, &h.bialgebra).unwrap();
        assert!(verify_comodule(&vw, &h.bialgebra, TOL).overall());
        assert!(check_comodule_invariance(&vw, &h, &kron_matrix(&bv, &bw), TOL).unwrap() < TOL);
        let vv = tensor_comodule(&v, &v, &h.bialgebra).unwrap();
        assert!(check_comodule_invariance(&vv, &h, &kron_matrix(&bv, &bv), TOL).unwrap() < TOL);
    }
}

#[test]
fn unitarization_fails_for_non_compact_star() {
    let h = with_star(&group_algebra(&FiniteGroup::cyclic(3)), DenseMatrix::identity(3));
    let i = compute_integral(&h.hopf).unwrap();
    let v = regular_comodule(&h.bialgebra, Side::Right);
    assert!(matches!(unitarize_comodule(&v, &h, &i), Err(Error::UnitarizationFailed(_))));
}

#[test]
fn gram_invariance_identities() {
    for h in battery() {
        let i = compute_integral(&h.hopf).unwrap();
        let g = gram_form(&h, &i).unwrap();
        let r = check_gram_invariance(&h, &g, true, TOL);
        assert!(r.overall(), "{}", r.to_text());
    }
}

#[test]
fn comodule_checks_reject_bad_input() {
    let h = group_algebra(&FiniteGroup::cyclic(2));
    assert!(ComoduleData::new(2, Side::Right, 2, SparseMap::zero(2, 3)).is_err());
    assert!(ModuleData::new(2, Side::Left, vec![DenseMatrix::identity(3)]).is_err());
    let v = regular_comodule(&h.bialgebra, Side::Right);
    let nonherm = DenseMatrix::from_vec(2, 2, vec![c(1.0), c(1.0), c(0.0), c(1.0)]).unwrap();
    assert!(matches!(check_comodule_invariance(&v, &h, &nonherm, TOL), Err(Error::NotHermitian(_))));
}

mod yetter_drinfeld {
    use super::*;
    use cqg_core::constructions::{drinfeld_double, yetter_drinfeld_module};

    #[test]
    fn double_representation_is_unitary_iff_both_structures_are() {
        let t = crate::common::yd::trials(8, 30);
        assert!(t.modules_ok);
        assert!(t.disagreements.is_empty(), "{:?}", t.disagreements);
        assert!(t.invariant > 0 && t.invariant < t.forms);
    }

    #[test]
    fn non_yetter_drinfeld_pair_is_not_a_double_module() {
        // trivial ℂS₃ action on a line graded by a transposition
        let s3 = FiniteGroup::symmetric3();
        let h = group_algebra(&s3);
        let t = (0..6).find(|&g| g != s3.identity() && s3.mul(g, g) == s3.identity()).unwrap();
        let module = ModuleData::new(1, Side::Left, vec![DenseMatrix::identity(1); 6]).unwrap();
        let comod = ComoduleData::from_terms(1, Side::Left, 6, [(0, 0, t, c(1.0))]).unwrap();
        let d = drinfeld_double(&h, TOL).unwrap().algebra;
        let yd = yetter_drinfeld_module(&h.hopf, &module, &comod).unwrap();
        assert!(!verify_module(&yd, &d.bialgebra, TOL).overall());
    }
}
