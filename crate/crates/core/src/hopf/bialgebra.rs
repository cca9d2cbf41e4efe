use std::collections::HashMap;

use crate::error::Error;
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{is_finite, DenseMatrix, Scalar, SparseMap, SparseTensor, ONE, ZERO};
use crate::report::VerificationReport;

/// Sweedler terms of an iterated coproduct: basis indices of each leg and
/// a coefficient.
pub type Terms = Vec<(Vec<usize>, Scalar)>;

/// Finite-dimensional bialgebra given by structure constants.
///
/// `mult` maps the pair index `i·n + j` to the coordinates of `e_i e_j`;
/// `comult` maps `e_k` to coordinates on the pair basis `i·n + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteBialgebra {
    pub dim: usize,
    pub mult: SparseMap,
    pub unit: Vec<Scalar>,
    pub comult: SparseMap,
    pub counit: Vec<Scalar>,
    pub labels: Vec<String>,
}

impl FiniteBialgebra {
    /// Validates shapes and finiteness; the axioms are left to
    /// [`verify_bialgebra`].
    pub fn new(
        mult: SparseMap,
        unit: Vec<Scalar>,
        comult: SparseMap,
        counit: Vec<Scalar>,
        labels: Vec<String>,
    ) -> Result<Self, Error> {
        let n = unit.len();
        if mult.src != n * n || mult.dst != n || comult.src != n || comult.dst != n * n || counit.len() != n {
            return Err(Error::DimensionMismatch(format!("structure tensors do not match dimension {n}")));
        }
        if labels.len() != n {
            return Err(Error::DimensionMismatch(format!("{} labels for dimension {n}", labels.len())));
        }
        let finite = unit.iter().chain(&counit).all(|c| is_finite(*c))
            && mult.cols.iter().chain(&comult.cols).flatten().all(|e| is_finite(e.1));
        if !finite {
            return Err(Error::InvalidInput("non-finite structure constant".into()));
        }
        Ok(FiniteBialgebra { dim: n, mult, unit, comult, counit, labels })
    }

    /// The one-dimensional bialgebra ℂ, target of scalar-valued maps.
    pub fn scalars() -> Self {
        FiniteBialgebra {
            dim: 1,
            mult: SparseMap { src: 1, dst: 1, cols: vec![vec![(0, ONE)]] },
            unit: vec![ONE],
            comult: SparseMap { src: 1, dst: 1, cols: vec![vec![(0, ONE)]] },
            counit: vec![ONE],
            labels: vec!["1".into()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult.cols[i * self.dim + j]
    }

    pub fn mul(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = vec![ZERO; self.dim];
        self.mul_into(&mut acc, x, y, ONE);
        sparse::from_dense(&acc)
    }

    pub fn mul_into(&self, acc: &mut [Scalar], x: &[(usize, Scalar)], y: &[(usize, Scalar)], c: Scalar) {
        for &(i, a) in x {
            for &(j, b) in y {
                sparse::add_into(acc, self.mul_basis(i, j), c * a * b);
            }
        }
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, factors: &[&SparseVec]) -> SparseVec {
        let mut out = self.unit_sv();
        for f in factors {
            out = self.mul(&out, f);
        }
        out
    }

    pub fn unit_sv(&self) -> SparseVec {
        sparse::from_dense(&self.unit)
    }

    pub fn counit_of(&self, x: &[(usize, Scalar)]) -> Scalar {
        x.iter().map(|&(i, c)| c * self.counit[i]).sum()
    }

    pub fn comul_basis(&self, k: usize) -> impl Iterator<Item = (usize, usize, Scalar)> + '_ {
        let n = self.dim;
        self.comult.cols[k].iter().map(move |&(p, c)| (p / n, p % n, c))
    }

    pub fn comul(&self, x: &[(usize, Scalar)]) -> Vec<(usize, usize, Scalar)> {
        let mut acc: HashMap<(usize, usize), Scalar> = HashMap::new();
        for &(k, c) in x {
            for (a, b, d) in self.comul_basis(k) {
                *acc.entry((a, b)).or_insert(ZERO) += c * d;
            }
        }
        let mut out: Vec<_> = acc.into_iter().filter(|e| e.1 != ZERO).map(|((a, b), c)| (a, b, c)).collect();
        out.sort_by_key(|e| (e.0, e.1));
        out
    }

    /// `Δ^{(legs-1)}(e_k)`, splitting the last leg at each step.
    pub fn coprod(&self, k: usize, legs: usize) -> Terms {
        assert!(legs >= 1);
        let mut terms: Terms = vec![(vec![k], ONE)];
        for _ in 1..legs {
            let mut next = Terms::new();
            for (idx, c) in &terms {
                let last = *idx.last().unwrap();
                for (a, b, d) in self.comul_basis(last) {
                    let mut v = idx[..idx.len() - 1].to_vec();
                    v.push(a);
                    v.push(b);
                    next.push((v, c * d));
                }
            }
            terms = next;
        }
        terms
    }

    pub fn coprod_sv(&self, x: &[(usize, Scalar)], legs: usize) -> Terms {
        let mut out = Terms::new();
        for &(k, c) in x {
            for (idx, d) in self.coprod(k, legs) {
                out.push((idx, c * d));
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult_matrix(&self, x: &[(usize, Scalar)]) -> DenseMatrix {
        let cols: Vec<SparseVec> = (0..self.dim).map(|j| self.mul(x, &sparse::basis(j))).collect();
        DenseMatrix::from_sparse_columns(self.dim, &cols)
    }

    pub fn is_commutative(&self, tol: f64) -> bool {
        let n = self.dim;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let a = sparse::to_dense(self.mul_basis(i, j), n);
                let b = sparse::to_dense(self.mul_basis(j, i), n);
                sparse::max_abs_diff(&a, &b) <= tol
            })
        })
    }

    pub fn is_cocommutative(&self, tol: f64) -> bool {
        let n = self.dim;
        (0..n).all(|k| {
            let mut a = vec![ZERO; n * n];
            let mut b = vec![ZERO; n * n];
            for (i, j, c) in self.comul_basis(k) {
                a[i * n + j] += c;
                b[j * n + i] += c;
            }
            sparse::max_abs_diff(&a, &b) <= tol
        })
    }

    /// `m` as an arity-3 tensor `[i, j, k]`.
    pub fn mult_tensor(&self) -> SparseTensor {
        SparseTensor::from_map(&self.mult, &[self.dim, self.dim])
    }

    /// `Δ` as an arity-3 tensor `[k, i, j]`.
    pub fn comult_tensor(&self) -> SparseTensor {
        let n = self.dim;
        let entries = (0..n).flat_map(|k| self.comul_basis(k).map(move |(i, j, c)| (vec![k, i, j], c)));
        SparseTensor::from_entries(vec![n, n, n], entries.collect::<Vec<_>>()).expect("indices in range")
    }

    /// `B ⊗ C` with the componentwise structure; basis `(b, c) ↦ b·dim(C) + c`.
    pub fn tensor(&self, other: &FiniteBialgebra) -> FiniteBialgebra {
        let (n1, n2) = (self.dim, other.dim);
        let n = n1 * n2;
        let mut mult = SparseMap::zero(n * n, n);
        for i1 in 0..n1 {
            for j1 in 0..n2 {
                for i2 in 0..n1 {
                    for j2 in 0..n2 {
                        let mut acc = vec![ZERO; n];
                        sparse::kron_into(&mut acc, self.mul_basis(i1, i2), other.mul_basis(j1, j2), n2, ONE);
                        mult.cols[(i1 * n2 + j1) * n + i2 * n2 + j2] = sparse::from_dense(&acc);
                    }
                }
            }
        }
        let mut comult = SparseMap::zero(n, n * n);
        for i in 0..n1 {
            for j in 0..n2 {
                let mut col = Vec::new();
                for (a1, a2, c) in self.comul_basis(i) {
                    for (b1, b2, d) in other.comul_basis(j) {
                        col.push(((a1 * n2 + b1) * n + a2 * n2 + b2, c * d));
                    }
                }
                col.sort_by_key(|e| e.0);
                comult.cols[i * n2 + j] = col;
            }
        }
        let mut unit = vec![ZERO; n];
        sparse::kron_into(&mut unit, &self.unit_sv(), &other.unit_sv(), n2, ONE);
        let counit = (0..n).map(|k| self.counit[k / n2] * other.counit[k % n2]).collect();
        let labels = (0..n)
            .map(|k| format!("{}⊗{}", self.labels[k / n2], other.labels[k % n2]))
            .collect();
        FiniteBialgebra { dim: n, mult, unit, comult, counit, labels }
    }
}

/// A finite bialgebra together with its antipode and the inverse antipode.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteHopfAlgebra {
    pub bialgebra: FiniteBialgebra,
    pub antipode: DenseMatrix,
    pub antipode_inverse: DenseMatrix,
    s_cols: Vec<SparseVec>,
    s_inv_cols: Vec<SparseVec>,
}

impl FiniteHopfAlgebra {
    /// Stores `antipode` and inverts it; the antipode axiom itself is
    /// checked by [`verify_hopf`].
    pub fn new(bialgebra: FiniteBialgebra, antipode: DenseMatrix) -> Result<Self, Error> {
        let n = bialgebra.dim;
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch(format!("antipode must be {n}x{n}")));
        }
        let antipode_inverse = antipode.inverse().map_err(|_| Error::NotAHopfAlgebra)?;
        let s_cols = prune_cols(antipode.sparse_columns());
        let s_inv_cols = prune_cols(antipode_inverse.sparse_columns());
        Ok(FiniteHopfAlgebra { bialgebra, antipode, antipode_inverse, s_cols, s_inv_cols })
    }

    pub fn s(&self, x: &[(usize, Scalar)]) -> SparseVec {
        apply_cols(&self.s_cols, x, self.dim)
    }

    pub fn s_inv(&self, x: &[(usize, Scalar)]) -> SparseVec {
        apply_cols(&self.s_inv_cols, x, self.dim)
    }

    pub fn s_basis(&self, i: usize) -> &SparseVec {
        &self.s_cols[i]
    }

    pub fn s_inv_basis(&self, i: usize) -> &SparseVec {
        &self.s_inv_cols[i]
    }

    pub fn tensor(&self, other: &FiniteHopfAlgebra) -> FiniteHopfAlgebra {
        let b = self.bialgebra.tensor(&other.bialgebra);
        let s = kron_matrix(&self.antipode, &other.antipode);
        FiniteHopfAlgebra::new(b, s).expect("tensor of invertible antipodes")
    }
}

impl std::ops::Deref for FiniteHopfAlgebra {
    type Target = FiniteBialgebra;

    fn deref(&self) -> &FiniteBialgebra {
        &self.bialgebra
    }
}

fn prune_cols(cols: Vec<SparseVec>) -> Vec<SparseVec> {
    let tol = crate::numeric::thresholds::prune();
    cols.into_iter().map(|c| c.into_iter().filter(|e| e.1.norm() >= tol).collect()).collect()
}

pub(crate) fn apply_cols(cols: &[SparseVec], x: &[(usize, Scalar)], n: usize) -> SparseVec {
    let mut acc = vec![ZERO; n];
    for &(i, c) in x {
        sparse::add_into(&mut acc, &cols[i], c);
    }
    sparse::from_dense(&acc)
}

pub fn kron_matrix(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let (r2, c2) = (b.rows(), b.cols());
    DenseMatrix::from_fn(a.rows() * r2, a.cols() * c2, |i, j| a[(i / r2, j / c2)] * b[(i % r2, j % c2)])
}

/// Linear map between coordinate spaces; `matrix` is `target × source`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMapBetween {
    pub source: usize,
    pub target: usize,
    pub matrix: DenseMatrix,
}

impl LinearMapBetween {
    pub fn new(matrix: DenseMatrix) -> Self {
        LinearMapBetween { source: matrix.cols(), target: matrix.rows(), matrix }
    }

    pub fn identity(n: usize) -> Self {
        LinearMapBetween::new(DenseMatrix::identity(n))
    }

    /// A functional, as a map into the one-dimensional algebra.
    pub fn functional(values: &[Scalar]) -> Self {
        LinearMapBetween::new(DenseMatrix::from_fn(1, values.len(), |_, j| values[j]))
    }

    pub fn from_columns(target: usize, cols: &[SparseVec]) -> Self {
        LinearMapBetween::new(DenseMatrix::from_sparse_columns(target, cols))
    }

    pub fn apply(&self, x: &[(usize, Scalar)]) -> SparseVec {
        self.matrix.mul_sparse(x)
    }

    /// Row 0 of a functional.
    pub fn values(&self) -> Vec<Scalar> {
        self.matrix.row(0).to_vec()
    }

    pub fn compose(&self, inner: &LinearMapBetween) -> Result<LinearMapBetween, Error> {
        Ok(LinearMapBetween::new(self.matrix.mul(&inner.matrix)?))
    }
}

struct SparseAcc(HashMap<usize, Scalar>);

impl SparseAcc {
    fn new() -> Self {
        SparseAcc(HashMap::new())
    }

    fn add(&mut self, k: usize, c: Scalar) {
        *self.0.entry(k).or_insert(ZERO) += c;
    }

    fn diff(&self, other: &SparseAcc) -> f64 {
        let mut m: f64 = 0.0;
        for (k, v) in &self.0 {
            m = m.max((v - other.0.get(k).copied().unwrap_or(ZERO)).norm());
        }
        for (k, v) in &other.0 {
            if !self.0.contains_key(k) {
                m = m.max(v.norm());
            }
        }
        m
    }
}

fn dense_diff(a: &[(usize, Scalar)], b: &[(usize, Scalar)], n: usize) -> f64 {
    sparse::max_abs_diff(&sparse::to_dense(a, n), &sparse::to_dense(b, n))
}

/// Bialgebra axioms, one named residual each.
pub fn verify_bialgebra(b: &FiniteBialgebra, tol: f64) -> VerificationReport {
    let n = b.dim;
    let mut r = VerificationReport::new("bialgebra", tol);
    let basis = |i| sparse::basis(i);

    let mut assoc: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let ij = b.mul_basis(i, j);
            for k in 0..n {
                let left = b.mul(ij, &basis(k));
                let right = b.mul(&basis(i), b.mul_basis(j, k));
                assoc = assoc.max(dense_diff(&left, &right, n));
            }
        }
    }
    r.residual("assoc", assoc);

    let one = b.unit_sv();
    let (mut ul, mut ur): (f64, f64) = (0.0, 0.0);
    for i in 0..n {
        ul = ul.max(dense_diff(&b.mul(&one, &basis(i)), &basis(i), n));
        ur = ur.max(dense_diff(&b.mul(&basis(i), &one), &basis(i), n));
    }
    r.residual("unit-left", ul).residual("unit-right", ur);

    let mut coassoc: f64 = 0.0;
    for k in 0..n {
        let mut left = SparseAcc::new();
        let mut right = SparseAcc::new();
        for (i, j, c) in b.comul_basis(k) {
            for (a, bb, d) in b.comul_basis(i) {
                left.add((a * n + bb) * n + j, c * d);
            }
            for (a, bb, d) in b.comul_basis(j) {
                right.add((i * n + a) * n + bb, c * d);
            }
        }
        coassoc = coassoc.max(left.diff(&right));
    }
    r.residual("coassoc", coassoc);

    let (mut cl, mut cr): (f64, f64) = (0.0, 0.0);
    for k in 0..n {
        let mut left = vec![ZERO; n];
        let mut right = vec![ZERO; n];
        for (i, j, c) in b.comul_basis(k) {
            left[j] += c * b.counit[i];
            right[i] += c * b.counit[j];
        }
        let e = sparse::to_dense(&basis(k), n);
        cl = cl.max(sparse::max_abs_diff(&left, &e));
        cr = cr.max(sparse::max_abs_diff(&right, &e));
    }
    r.residual("counit-left", cl).residual("counit-right", cr);

    let mut dm: f64 = 0.0;
    let mut em: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let prod = b.mul_basis(i, j);
            let mut left = vec![ZERO; n * n];
            for &(k, c) in prod {
                for (a, bb, d) in b.comul_basis(k) {
                    left[a * n + bb] += c * d;
                }
            }
            let mut right = vec![ZERO; n * n];
            for (a1, b1, c1) in b.comul_basis(i) {
                for (a2, b2, c2) in b.comul_basis(j) {
                    sparse::kron_into(&mut right, b.mul_basis(a1, a2), b.mul_basis(b1, b2), n, c1 * c2);
                }
            }
            dm = dm.max(sparse::max_abs_diff(&left, &right));
            em = em.max((b.counit_of(prod) - b.counit[i] * b.counit[j]).norm());
        }
    }
    r.residual("comult-multiplicative", dm);

    let mut d1 = vec![ZERO; n * n];
    for &(k, c) in &one {
        for (a, bb, d) in b.comul_basis(k) {
            d1[a * n + bb] += c * d;
        }
    }
    let mut oo = vec![ZERO; n * n];
    sparse::kron_into(&mut oo, &one, &one, n, ONE);
    r.residual("comult-unital", sparse::max_abs_diff(&d1, &oo));
    r.residual("counit-multiplicative", em);
    r.residual("counit-unital", (b.counit_of(&one) - ONE).norm());
    r
}

/// Bialgebra axioms plus the antipode axioms and anti-(co)multiplicativity.
pub fn verify_hopf(h: &FiniteHopfAlgebra, tol: f64) -> VerificationReport {
    let mut r = verify_bialgebra(&h.bialgebra, tol);
    r.artifact = "hopf".into();
    let n = h.dim;
    let (mut left, mut right): (f64, f64) = (0.0, 0.0);
    for k in 0..n {
        let mut l = vec![ZERO; n];
        let mut rr = vec![ZERO; n];
        for (i, j, c) in h.comul_basis(k) {
            h.mul_into(&mut l, h.s_basis(i), &sparse::basis(j), c);
            h.mul_into(&mut rr, &sparse::basis(i), h.s_basis(j), c);
        }
        let target: Vec<Scalar> = h.unit.iter().map(|u| u * h.counit[k]).collect();
        left = left.max(sparse::max_abs_diff(&l, &target));
        right = right.max(sparse::max_abs_diff(&rr, &target));
    }
    r.residual("antipode-left", left).residual("antipode-right", right);
    let inv = h.antipode.mul(&h.antipode_inverse).map(|m| m.max_abs_diff(&DenseMatrix::identity(n)));
    r.residual("antipode-inverse", inv.unwrap_or(f64::INFINITY));

    let mut am: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs = h.s(h.mul_basis(i, j));
            let rhs = h.mul(h.s_basis(j), h.s_basis(i));
            am = am.max(dense_diff(&lhs, &rhs, n));
        }
    }
    r.residual("antipode-antimultiplicative", am);

    let mut ac: f64 = 0.0;
    for k in 0..n {
        let mut lhs = vec![ZERO; n * n];
        for (a, b, c) in h.comul(h.s_basis(k)) {
            lhs[a * n + b] += c;
        }
        let mut rhs = vec![ZERO; n * n];
        for (i, j, c) in h.comul_basis(k) {
            sparse::kron_into(&mut rhs, h.s_basis(j), h.s_basis(i), n, c);
        }
        ac = ac.max(sparse::max_abs_diff(&lhs, &rhs));
    }
    r.residual("antipode-anticomultiplicative", ac);
    r
}
