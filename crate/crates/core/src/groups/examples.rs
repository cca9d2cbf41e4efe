use std::fmt;
use std::str::FromStr;

use super::cocycle::GroupCocycleData;
use super::pair::MatchedPairGroups;
use super::FiniteGroup;
use crate::error::Error;
use crate::numeric::{RootOfUnity, ScalarEntry};

/// The two parametric families on `C₂` and `C_n × C_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleKind {
    /// `F = C₂`, `G = C_n×C_n`, `σ ≡ 1`, `τ(a^ib^j, a^kb^l; x) = ζ^{jk}η^{il}`.
    TauFamily,
    /// `F = C_n×C_n`, `G = C₂`, `τ ≡ 1`, `σ(x; a^ib^j, a^kb^l) = ζ^{il}η^{-jk}`.
    SigmaFamily,
}

impl FromStr for ExampleKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "6.15" => Ok(ExampleKind::TauFamily),
            "6.16" => Ok(ExampleKind::SigmaFamily),
            other => Err(Error::InvalidInput(format!("unknown example {other:?}, expected 6.15 or 6.16"))),
        }
    }
}

impl fmt::Display for ExampleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExampleKind::TauFamily => "6.15",
            ExampleKind::SigmaFamily => "6.16",
        })
    }
}

/// `C₂ = {1, x}`.
pub fn c2() -> FiniteGroup {
    FiniteGroup::from_table(vec!["1".into(), "x".into()], vec![vec![0, 1], vec![1, 0]]).expect("C2")
}

/// `a^ib^j ↦ a^ib^{-j}` on `C_n × C_n`.
fn flip(n: usize, k: usize) -> usize {
    let (i, j) = (k / n, k % n);
    i * n + (n - j) % n
}

/// Exact tables of the chosen family.
///
/// # Errors
///
/// [`Error::InvalidInput`] when `n < 2`.
pub fn generate_example(
    which: ExampleKind,
    n: usize,
    zeta: RootOfUnity,
    eta: RootOfUnity,
) -> Result<(MatchedPairGroups, GroupCocycleData), Error> {
    if n < 2 {
        return Err(Error::InvalidInput(format!("n must be at least 2, got {n}")));
    }
    let sq = FiniteGroup::cyclic_square(n);
    let nn = n * n;
    let root = |z: RootOfUnity| ScalarEntry::Root(z);
    let one = || ScalarEntry::Root(RootOfUnity::one());
    let ij = |k: usize| ((k / n) as i64, (k % n) as i64);
    match which {
        ExampleKind::TauFamily => {
            // F = C₂ indexed 0 = 1, 1 = x; G = C_n×C_n
            let left = (0..nn * 2).map(|k| k % 2).collect();
            let right = (0..nn * 2).map(|k| if k % 2 == 1 { flip(n, k / 2) } else { k / 2 }).collect();
            let p = MatchedPairGroups::new(c2(), sq, left, right)?;
            let sigma = (0..nn * 4).map(|_| one()).collect();
            let mut tau = Vec::with_capacity(nn * nn * 2);
            for g in 0..nn {
                for g2 in 0..nn {
                    for f in 0..2 {
                        let (i, j) = ij(g);
                        let (k, l) = ij(g2);
                        tau.push(if f == 0 { one() } else { root(zeta.pow(j * k).mul(&eta.pow(i * l))) });
                    }
                }
            }
            let alpha = (0..2 * nn).map(|_| one()).collect();
            let c = GroupCocycleData::new(&p, sigma, tau, Some(alpha))?;
            Ok((p, c))
        }
        ExampleKind::SigmaFamily => {
            // F = C_n×C_n; G = C₂ indexed 0 = 1, 1 = x
            let left = (0..2 * nn).map(|k| if k / nn == 1 { flip(n, k % nn) } else { k % nn }).collect();
            let right = (0..2 * nn).map(|k| k / nn).collect();
            let p = MatchedPairGroups::new(sq, c2(), left, right)?;
            let mut sigma = Vec::with_capacity(2 * nn * nn);
            for g in 0..2 {
                for f in 0..nn {
                    for f2 in 0..nn {
                        let (i, j) = ij(f);
                        let (k, l) = ij(f2);
                        sigma.push(if g == 0 { one() } else { root(zeta.pow(i * l).mul(&eta.pow(-j * k))) });
                    }
                }
            }
            let tau = (0..4 * nn).map(|_| one()).collect();
            let ratio = zeta.mul(&eta.inv());
            let mut alpha = Vec::with_capacity(nn * 2);
            for f in 0..nn {
                let (i, j) = ij(f);
                alpha.push(one());
                alpha.push(root(ratio.pow(i * j)));
            }
            let c = GroupCocycleData::new(&p, sigma, tau, Some(alpha))?;
            Ok((p, c))
        }
    }
}
