use crate::hopf::{FiniteBialgebra, FiniteHopfAlgebra};
use crate::numeric::SparseMap;
use crate::star::{StarHopfAlgebra, StarStructure};

/// Dual Hopf algebra on the basis `δ^i` dual to `e_i`.
///
/// Product and coproduct are the transposes of `Δ` and `m`, the antipode is
/// `𝒮ᵀ`, and the star is `α*(x) = conj(α(𝒮(x)*))`, whose matrix is `(𝒮C)†`.
pub fn dual(h: &StarHopfAlgebra) -> StarHopfAlgebra {
    let n = h.dim;
    let mut mult = SparseMap::zero(n * n, n);
    for k in 0..n {
        for (a, b, c) in h.comul_basis(k) {
            mult.cols[a * n + b].push((k, c));
        }
    }
    for col in &mut mult.cols {
        col.sort_by_key(|e| e.0);
    }
    let mut comult = SparseMap::zero(n, n * n);
    for p in 0..n * n {
        for &(k, c) in &h.mult.cols[p] {
            comult.cols[k].push((p, c));
        }
    }
    for col in &mut comult.cols {
        col.sort_by_key(|e| e.0);
    }
    let labels = h.labels.iter().map(|l| format!("δ^{l}")).collect();
    let b = FiniteBialgebra::new(mult, h.counit.clone(), comult, h.unit.clone(), labels)
        .expect("transposed structure has matching shapes");
    let hopf = FiniteHopfAlgebra::new(b, h.antipode.transpose()).expect("transpose of an invertible antipode");
    let star = h.star.as_ref().map(|s| {
        let sc = h.antipode.mul(&s.matrix).expect("square");
        StarStructure::new(sc.adjoint()).expect("square")
    });
    StarHopfAlgebra { hopf, star }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Op,
    Cop,
    Bop,
}

impl std::str::FromStr for Variant {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "op" => Ok(Variant::Op),
            "cop" => Ok(Variant::Cop),
            "bop" => Ok(Variant::Bop),
            _ => Err(crate::Error::InvalidInput(format!("unknown variant {s}"))),
        }
    }
}

fn flip_mult(b: &FiniteBialgebra) -> SparseMap {
    let n = b.dim;
    let mut m = SparseMap::zero(n * n, n);
    for i in 0..n {
        for j in 0..n {
            m.cols[i * n + j] = b.mul_basis(j, i).clone();
        }
    }
    m
}

fn flip_comult(b: &FiniteBialgebra) -> SparseMap {
    let n = b.dim;
    let mut m = SparseMap::zero(n, n * n);
    for k in 0..n {
        let mut col: Vec<_> = b.comul_basis(k).map(|(a, c, d)| (c * n + a, d)).collect();
        col.sort_by_key(|e| e.0);
        m.cols[k] = col;
    }
    m
}

/// `H^op`, `H^cop` or `H^bop`, with the star unchanged.
pub fn opposite_variants(h: &StarHopfAlgebra, which: Variant) -> StarHopfAlgebra {
    let b = &h.bialgebra;
    let (mult, comult, s) = match which {
        Variant::Op => (flip_mult(b), b.comult.clone(), h.antipode_inverse.clone()),
        Variant::Cop => (b.mult.clone(), flip_comult(b), h.antipode_inverse.clone()),
        Variant::Bop => (flip_mult(b), flip_comult(b), h.antipode.clone()),
    };
    let nb = FiniteBialgebra::new(mult, b.unit.clone(), comult, b.counit.clone(), b.labels.clone())
        .expect("same shapes");
    let hopf = FiniteHopfAlgebra::new(nb, s).expect("invertible antipode");
    StarHopfAlgebra { hopf, star: h.star.clone() }
}

/// Tensor product of star Hopf algebras; the star is `*⊗*` when both exist.
pub fn tensor_product(a: &StarHopfAlgebra, b: &StarHopfAlgebra) -> StarHopfAlgebra {
    let hopf = a.hopf.tensor(&b.hopf);
    let star = match (&a.star, &b.star) {
        (Some(x), Some(y)) => Some(StarStructure::new(crate::hopf::kron_matrix(&x.matrix, &y.matrix)).expect("square")),
        _ => None,
    };
    StarHopfAlgebra { hopf, star }
}
