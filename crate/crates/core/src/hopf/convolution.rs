use super::bialgebra::{FiniteBialgebra, FiniteHopfAlgebra, LinearMapBetween};
use crate::error::Error;
use crate::numeric::sparse::{self, SparseVec};
use crate::numeric::{DenseMatrix, Scalar, SparseSystem, ZERO};

/// `u∘ε` from `coalg` to `alg`.
pub fn unit_counit(coalg: &FiniteBialgebra, alg: &FiniteBialgebra) -> LinearMapBetween {
    LinearMapBetween::new(DenseMatrix::from_fn(alg.dim, coalg.dim, |i, j| alg.unit[i] * coalg.counit[j]))
}

fn check_shapes(f: &LinearMapBetween, coalg: &FiniteBialgebra, alg: &FiniteBialgebra) -> Result<(), Error> {
    if f.source != coalg.dim || f.target != alg.dim {
        return Err(Error::DimensionMismatch(format!(
            "map {} -> {} used between dims {} and {}",
            f.source, f.target, coalg.dim, alg.dim
        )));
    }
    Ok(())
}

/// `f ⋆ g = m∘(f⊗g)∘Δ`.
pub fn convolution(
    f: &LinearMapBetween,
    g: &LinearMapBetween,
    coalg: &FiniteBialgebra,
    alg: &FiniteBialgebra,
) -> Result<LinearMapBetween, Error> {
    check_shapes(f, coalg, alg)?;
    check_shapes(g, coalg, alg)?;
    let fc = f.matrix.sparse_columns();
    let gc = g.matrix.sparse_columns();
    let cols: Vec<Vec<Scalar>> = (0..coalg.dim)
        .map(|k| {
            let mut acc = vec![ZERO; alg.dim];
            for (a, b, c) in coalg.comul_basis(k) {
                alg.mul_into(&mut acc, &fc[a], &gc[b], c);
            }
            acc
        })
        .collect();
    Ok(LinearMapBetween::new(DenseMatrix::from_columns(alg.dim, &cols)))
}

/// Solves `f ⋆ g = u∘ε` and confirms `g ⋆ f = u∘ε`.
///
/// # Errors
///
/// [`Error::NotConvolutionInvertible`] if the system is inconsistent, has
/// more than one solution, or the reverse product misses `u∘ε`.
pub fn convolution_inverse(
    f: &LinearMapBetween,
    coalg: &FiniteBialgebra,
    alg: &FiniteBialgebra,
) -> Result<LinearMapBetween, Error> {
    check_shapes(f, coalg, alg)?;
    let (n, m) = (coalg.dim, alg.dim);
    let fc = f.matrix.sparse_columns();
    // left multiplication by f(e_a) on each basis vector of alg
    let lmul: Vec<Vec<SparseVec>> = fc
        .iter()
        .map(|fa| (0..m).map(|l| alg.mul(fa, &sparse::basis(l))).collect())
        .collect();
    // unknown g(e_b)_l sits at column b·m + l
    let mut sys = SparseSystem::new(n * m);
    for i in 0..n {
        let mut rows: Vec<SparseVec> = vec![Vec::new(); m];
        for (a, b, c) in coalg.comul_basis(i) {
            for (l, prod) in lmul[a].iter().enumerate() {
                for &(k, x) in prod {
                    rows[k].push((b * m + l, c * x));
                }
            }
        }
        for (k, row) in rows.into_iter().enumerate() {
            sys.push(row, alg.unit[k] * coalg.counit[i]);
        }
    }
    let sol = sys.solve().map_err(|_| Error::NotConvolutionInvertible)?;
    if !sol.is_unique() {
        return Err(Error::NotConvolutionInvertible);
    }
    let g = LinearMapBetween::new(DenseMatrix::from_fn(m, n, |l, b| sol.particular[b * m + l]));
    let target = unit_counit(coalg, alg);
    let scale = 1.0_f64.max(f.matrix.max_abs() * g.matrix.max_abs());
    let tol = 1e-8 * scale;
    let fg = convolution(f, &g, coalg, alg)?.matrix.max_abs_diff(&target.matrix);
    let gf = convolution(&g, f, coalg, alg)?.matrix.max_abs_diff(&target.matrix);
    if fg > tol || gf > tol {
        return Err(Error::NotConvolutionInvertible);
    }
    Ok(g)
}

/// Antipode as the convolution inverse of the identity.
///
/// # Errors
///
/// [`Error::NotAHopfAlgebra`] when the identity is not convolution invertible.
pub fn solve_antipode(b: &FiniteBialgebra) -> Result<FiniteHopfAlgebra, Error> {
    let s = convolution_inverse(&LinearMapBetween::identity(b.dim), b, b).map_err(|_| Error::NotAHopfAlgebra)?;
    FiniteHopfAlgebra::new(b.clone(), s.matrix)
}
