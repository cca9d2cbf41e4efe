use cqg_core::groups::FiniteGroup;
use cqg_core::hopf::examples::group_algebra;
use cqg_core::numeric::{
    hermitian_min_eigenvalue, solve_linear, DenseMatrix, RootOfUnity, Scalar, SparseTensor,
};
use cqg_core::Error;
use proptest::prelude::*;

fn c(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

fn m(rows: usize, cols: usize, v: &[f64]) -> DenseMatrix {
    DenseMatrix::from_vec(rows, cols, v.iter().map(|&x| c(x)).collect()).unwrap()
}

#[test]
fn contract_identity_with_vector() {
    let id = SparseTensor::from_entries(vec![2, 2], vec![(vec![0, 0], c(1.0)), (vec![1, 1], c(1.0))]).unwrap();
    let v = SparseTensor::from_entries(vec![2], vec![(vec![0], c(3.0)), (vec![1], Scalar::new(0.0, -2.0))]).unwrap();
    let out = id.contract(&v, &[(1, 0)]).unwrap();
    assert_eq!(out, v);
}

#[test]
fn contract_c2_product_with_gg() {
    // m(x, x) = 1 in ℂC₂ with 1 = e_0, x = e_1
    let h = group_algebra(&FiniteGroup::cyclic(2));
    let mt = h.bialgebra.mult_tensor();
    let gg = SparseTensor::from_entries(vec![2, 2], vec![(vec![1, 1], c(1.0))]).unwrap();
    let out = gg.contract(&mt, &[(0, 0), (1, 1)]).unwrap();
    let e1 = SparseTensor::from_entries(vec![2], vec![(vec![0], c(1.0))]).unwrap();
    assert_eq!(out, e1);
}

#[test]
fn contract_mismatched_dims() {
    let a = SparseTensor::new(vec![2]);
    let b = SparseTensor::new(vec![3]);
    assert!(matches!(a.contract(&b, &[(0, 0)]), Err(Error::DimensionMismatch(_))));
}

#[test]
fn contract_prunes_cancellations() {
    let a = SparseTensor::from_entries(vec![2], vec![(vec![0], c(1.0)), (vec![1], c(1.0))]).unwrap();
    let b = SparseTensor::from_entries(vec![2, 1], vec![(vec![0, 0], c(1.0)), (vec![1, 0], c(-1.0))]).unwrap();
    let out = a.contract(&b, &[(0, 0)]).unwrap();
    assert_eq!(out.entries().count(), 0);
}

#[test]
fn solve_identity() {
    let s = solve_linear(&m(2, 2, &[1.0, 0.0, 0.0, 1.0]), &[c(1.0), c(2.0)]).unwrap();
    assert_eq!(s.particular, vec![c(1.0), c(2.0)]);
    assert!(s.nullspace.is_empty());
}

#[test]
fn solve_rank_one() {
    let a = m(2, 2, &[1.0, 1.0, 1.0, 1.0]);
    let s = solve_linear(&a, &[c(1.0), c(1.0)]).unwrap();
    assert!((s.particular[0] - c(1.0)).norm() < 1e-12 && s.particular[1].norm() < 1e-12);
    assert_eq!(s.nullspace.len(), 1);
    let k = &s.nullspace[0];
    assert!((k[0] + k[1]).norm() < 1e-12 && k[0].norm() > 0.1);
    assert_eq!(solve_linear(&a, &[c(1.0), c(0.0)]), Err(Error::NoSolution));
}

#[test]
fn min_eigenvalue_examples() {
    let i3 = DenseMatrix::identity(3);
    assert!((hermitian_min_eigenvalue(&i3, 1e-12).unwrap() - 1.0).abs() < 1e-14);
    let q = DenseMatrix::diagonal(&[c(0.25); 4]);
    assert!((hermitian_min_eigenvalue(&q, 1e-12).unwrap() - 0.25).abs() < 1e-14);
    assert!(matches!(hermitian_min_eigenvalue(&m(2, 2, &[0.0, 1.0, 0.0, 0.0]), 1e-9), Err(Error::NotHermitian(_))));
}

#[test]
fn roots_of_unity() {
    let z: RootOfUnity = "3/6".parse().unwrap();
    assert_eq!((z.numerator(), z.denominator()), (1, 2));
    assert!((z.to_scalar() - c(-1.0)).norm() == 0.0);
    let w = RootOfUnity::new(-1, 3).unwrap();
    assert_eq!(w, RootOfUnity::new(2, 3).unwrap());
    assert_eq!(w.mul(&w.inv()), RootOfUnity::one());
    assert_eq!(w.pow(3), RootOfUnity::one());
    assert!(RootOfUnity::new(1, 0).is_err());
    assert!("x/2".parse::<RootOfUnity>().is_err());
    assert_eq!(w.to_string(), "2/3");
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(a, b)| Scalar::new(a, b))
}

fn tensor(dims: Vec<usize>) -> impl Strategy<Value = SparseTensor> {
    let total: usize = dims.iter().product();
    prop::collection::vec(scalar(), total).prop_map(move |vals| {
        let entries = vals.into_iter().enumerate().map(|(mut k, v)| {
            let mut idx = vec![0; dims.len()];
            for a in (0..dims.len()).rev() {
                idx[a] = k % dims[a];
                k /= dims[a];
            }
            (idx, v)
        });
        SparseTensor::from_entries(dims.clone(), entries.collect::<Vec<_>>()).unwrap()
    })
}

fn hermitian(n: usize) -> impl Strategy<Value = DenseMatrix> {
    prop::collection::vec(scalar(), n * n).prop_map(move |v| {
        let a = DenseMatrix::from_vec(n, n, v).unwrap();
        a.add(&a.adjoint()).unwrap().scale(c(0.5))
    })
}

/// Roots of `det(λ − M)` for a 3×3 Hermitian `M` by the trigonometric
/// formula.
fn cubic_min_root(a: &DenseMatrix) -> f64 {
    let g = |i, j| a[(i, j)];
    let tr = (g(0, 0) + g(1, 1) + g(2, 2)).re;
    let minors = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) + g(0, 0) * g(2, 2) - g(0, 2) * g(2, 0) + g(1, 1) * g(2, 2)
        - g(1, 2) * g(2, 1))
        .re;
    let det = (g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) - g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0))
        + g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0)))
        .re;
    // λ³ + pλ² + qλ + r
    let (p, q, r) = (-tr, minors, -det);
    let pp = q - p * p / 3.0;
    let qq = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
    if pp.abs() < 1e-14 {
        return -p / 3.0 - qq.cbrt();
    }
    let s = 2.0 * (-pp / 3.0).sqrt();
    let arg = ((3.0 * qq / (2.0 * pp)) * (-3.0 / pp).sqrt()).clamp(-1.0, 1.0);
    let th = arg.acos() / 3.0;
    (0..3)
        .map(|k| s * (th - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - p / 3.0)
        .fold(f64::INFINITY, f64::min)
}

proptest! {
    #[test]
    fn contract_is_linear_in_first_argument(
        t1 in tensor(vec![2, 3]), t1b in tensor(vec![2, 3]), t2 in tensor(vec![3, 2]), a in scalar()
    ) {
        let combo: Vec<_> = (0..2).flat_map(|i| (0..3).map(move |j| (i, j)))
            .map(|(i, j)| (vec![i, j], a * t1.get(&[i, j]) + t1b.get(&[i, j])))
            .collect();
        let lhs = SparseTensor::from_entries(vec![2, 3], combo).unwrap().contract(&t2, &[(1, 0)]).unwrap();
        let x = t1.contract(&t2, &[(1, 0)]).unwrap();
        let y = t1b.contract(&t2, &[(1, 0)]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let want = a * x.get(&[i, j]) + y.get(&[i, j]);
                prop_assert!((lhs.get(&[i, j]) - want).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn solve_residual_small(v in prop::collection::vec(scalar(), 12), b in prop::collection::vec(scalar(), 3)) {
        let a = DenseMatrix::from_vec(3, 4, v).unwrap();
        if let Ok(s) = solve_linear(&a, &b) {
            let ax = a.mul_vec(&s.particular);
            for i in 0..3 {
                prop_assert!((ax[i] - b[i]).norm() < 1e-9);
            }
            for k in &s.nullspace {
                prop_assert!(a.mul_vec(k).iter().all(|z| z.norm() < 1e-9));
            }
        }
    }

    #[test]
    fn min_eigenvalue_2x2_closed_form(m in hermitian(2)) {
        let (a, d, b) = (m[(0, 0)].re, m[(1, 1)].re, m[(0, 1)]);
        let want = (a + d) / 2.0 - (((a - d) / 2.0).powi(2) + b.norm_sqr()).sqrt();
        prop_assert!((hermitian_min_eigenvalue(&m, 1e-12).unwrap() - want).abs() < 1e-8);
    }

    #[test]
    fn min_eigenvalue_3x3_characteristic_polynomial(m in hermitian(3)) {
        let got = hermitian_min_eigenvalue(&m, 1e-12).unwrap();
        prop_assert!((got - cubic_min_root(&m)).abs() < 1e-6, "{got} vs {}", cubic_min_root(&m));
    }

    #[test]
    fn roots_materialize_on_the_circle(k in -50i64..50, d in 1i64..40) {
        let r = RootOfUnity::new(k, d).unwrap();
        prop_assert!((r.to_scalar().norm() - 1.0).abs() < 1e-15);
        prop_assert!(r.numerator() >= 0 && r.numerator() < r.denominator());
    }
}
