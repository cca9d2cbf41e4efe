//! Small standard algebras used as inputs, test batteries and controls.

use super::bialgebra::{FiniteBialgebra, FiniteHopfAlgebra};
use crate::groups::FiniteGroup;
use crate::numeric::{DenseMatrix, Scalar, SparseMap, ONE, ZERO};
use crate::star::{StarHopfAlgebra, StarStructure};

fn permutation(n: usize, f: impl Fn(usize) -> usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| if f(j) == i { ONE } else { ZERO })
}

/// `ℂG` with grouplike basis and `g* = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> StarHopfAlgebra {
    let n = g.order();
    let mult = SparseMap::from_fn(n * n, n, |p| {
        let mut v = vec![ZERO; n];
        v[g.mul(p / n, p % n)] = ONE;
        v
    });
    let comult = SparseMap::from_fn(n, n * n, |k| {
        let mut v = vec![ZERO; n * n];
        v[k * n + k] = ONE;
        v
    });
    let mut unit = vec![ZERO; n];
    unit[g.identity()] = ONE;
    let b = FiniteBialgebra::new(mult, unit, comult, vec![ONE; n], g.labels().to_vec()).expect("group algebra");
    let s = permutation(n, |k| g.inv(k));
    let hopf = FiniteHopfAlgebra::new(b, s.clone()).expect("group algebra antipode");
    let star = StarStructure::new(s).expect("square");
    StarHopfAlgebra::new(hopf, Some(star)).expect("dims")
}

/// `ℂ^G` with the delta basis `e_g` and `e_g* = e_g`.
pub fn function_algebra(g: &FiniteGroup) -> StarHopfAlgebra {
    let n = g.order();
    let mult = SparseMap::from_fn(n * n, n, |p| {
        let mut v = vec![ZERO; n];
        if p / n == p % n {
            v[p / n] = ONE;
        }
        v
    });
    let comult = SparseMap::from_fn(n, n * n, |k| {
        let mut v = vec![ZERO; n * n];
        for a in 0..n {
            let b = g.mul(g.inv(a), k);
            v[a * n + b] = ONE;
        }
        v
    });
    let mut counit = vec![ZERO; n];
    counit[g.identity()] = ONE;
    let labels = g.labels().iter().map(|l| format!("e_{l}")).collect();
    let b = FiniteBialgebra::new(mult, vec![ONE; n], comult, counit, labels).expect("function algebra");
    let hopf = FiniteHopfAlgebra::new(b, permutation(n, |k| g.inv(k))).expect("function algebra antipode");
    let star = StarStructure::new(DenseMatrix::identity(n)).expect("square");
    StarHopfAlgebra::new(hopf, Some(star)).expect("dims")
}

/// Sweedler's four-dimensional algebra on `[1, g, x, gx]`: `g² = 1`,
/// `x² = 0`, `xg = -gx`, `Δx = x⊗1 + g⊗x`. Not cosemisimple.
pub fn sweedler() -> FiniteHopfAlgebra {
    let m = |c: f64| Scalar::new(c, 0.0);
    // products e_i e_j as (index, coefficient), None for zero
    let table: [[Option<(usize, f64)>; 4]; 4] = [
        [Some((0, 1.0)), Some((1, 1.0)), Some((2, 1.0)), Some((3, 1.0))],
        [Some((1, 1.0)), Some((0, 1.0)), Some((3, 1.0)), Some((2, 1.0))],
        [Some((2, 1.0)), Some((3, -1.0)), None, None],
        [Some((3, 1.0)), Some((2, -1.0)), None, None],
    ];
    let mult = SparseMap::from_fn(16, 4, |p| {
        let mut v = vec![ZERO; 4];
        if let Some((k, c)) = table[p / 4][p % 4] {
            v[k] = m(c);
        }
        v
    });
    let entries = [(0, 0, 0), (1, 1, 1), (2, 2, 0), (2, 1, 2), (3, 3, 1), (3, 0, 3)];
    let comult = SparseMap::from_entries(4, 16, entries.iter().map(|&(k, a, b)| (k, a * 4 + b, ONE)))
        .expect("indices in range");
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let b = FiniteBialgebra::new(mult, vec![ONE, ZERO, ZERO, ZERO], comult, vec![ONE, ONE, ZERO, ZERO], labels)
        .expect("sweedler");
    let mut s = DenseMatrix::zeros(4, 4);
    s[(0, 0)] = ONE;
    s[(1, 1)] = ONE;
    s[(3, 2)] = m(-1.0);
    s[(2, 3)] = ONE;
    FiniteHopfAlgebra::new(b, s).expect("sweedler antipode")
}

/// Monoid algebra of `{1, p}` with `p² = p`, grouplike `p`. A bialgebra
/// without antipode.
pub fn monoid_bialgebra() -> FiniteBialgebra {
    let mult = SparseMap::from_fn(4, 2, |q| {
        let (i, j) = (q / 2, q % 2);
        let mut v = vec![ZERO; 2];
        v[if i == 1 || j == 1 { 1 } else { 0 }] = ONE;
        v
    });
    let comult = SparseMap::from_fn(2, 4, |k| {
        let mut v = vec![ZERO; 4];
        v[k * 2 + k] = ONE;
        v
    });
    FiniteBialgebra::new(mult, vec![ONE, ZERO], comult, vec![ONE, ONE], vec!["1".into(), "p".into()])
        .expect("monoid bialgebra")
}
