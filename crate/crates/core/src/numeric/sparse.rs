use std::collections::{BTreeMap, HashMap};

use super::scalar::{Scalar, ZERO};
use super::thresholds;
use crate::error::Error;

/// Sparse coordinate vector: `(index, coefficient)` pairs sorted by index.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn basis(i: usize) -> SparseVec {
    vec![(i, Scalar::new(1.0, 0.0))]
}

pub fn scaled_basis(i: usize, c: Scalar) -> SparseVec {
    vec![(i, c)]
}

pub fn to_dense(v: &[(usize, Scalar)], n: usize) -> Vec<Scalar> {
    let mut out = vec![ZERO; n];
    for &(i, c) in v {
        out[i] += c;
    }
    out
}

/// Drops exact zeros only; pruning of stored tensors happens elsewhere.
pub fn from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| c.re != 0.0 || c.im != 0.0)
        .map(|(i, c)| (i, *c))
        .collect()
}

pub fn add_into(acc: &mut [Scalar], v: &[(usize, Scalar)], c: Scalar) {
    for &(i, x) in v {
        acc[i] += c * x;
    }
}

pub fn scale(v: &[(usize, Scalar)], c: Scalar) -> SparseVec {
    v.iter().map(|&(i, x)| (i, c * x)).collect()
}

pub fn conj(v: &[(usize, Scalar)]) -> SparseVec {
    v.iter().map(|&(i, x)| (i, x.conj())).collect()
}

/// Coordinates of `u ⊗ v` with `u` major.
pub fn kron_into(acc: &mut [Scalar], u: &[(usize, Scalar)], v: &[(usize, Scalar)], n2: usize, c: Scalar) {
    for &(i, x) in u {
        for &(j, y) in v {
            acc[i * n2 + j] += c * x * y;
        }
    }
}

pub fn max_abs_diff(a: &[Scalar], b: &[Scalar]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn max_abs(a: &[Scalar]) -> f64 {
    a.iter().map(|x| x.norm()).fold(0.0, f64::max)
}

/// Linear map stored by columns: `cols[s]` is the image of basis vector `s`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMap {
    pub src: usize,
    pub dst: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMap {
    pub fn zero(src: usize, dst: usize) -> Self {
        SparseMap { src, dst, cols: vec![Vec::new(); src] }
    }

    /// Builds from a column function, pruning below the prune threshold.
    pub fn from_fn(src: usize, dst: usize, mut f: impl FnMut(usize) -> Vec<Scalar>) -> Self {
        let tol = thresholds::prune();
        let cols = (0..src)
            .map(|s| {
                let col = f(s);
                debug_assert_eq!(col.len(), dst);
                col.iter()
                    .enumerate()
                    .filter(|(_, c)| c.norm() >= tol)
                    .map(|(i, c)| (i, *c))
                    .collect()
            })
            .collect();
        SparseMap { src, dst, cols }
    }

    pub fn from_entries(src: usize, dst: usize, entries: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Result<Self, Error> {
        let mut dense: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); src];
        for (s, d, c) in entries {
            if s >= src || d >= dst {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({s} -> {d}) outside a {src} -> {dst} map"
                )));
            }
            *dense[s].entry(d).or_insert(ZERO) += c;
        }
        let tol = thresholds::prune();
        let cols = dense
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, c)| c.norm() >= tol).collect())
            .collect();
        Ok(SparseMap { src, dst, cols })
    }

    pub fn apply(&self, v: &[(usize, Scalar)]) -> SparseVec {
        let mut acc = vec![ZERO; self.dst];
        for &(s, c) in v {
            add_into(&mut acc, &self.cols[s], c);
        }
        from_dense(&acc)
    }

    pub fn apply_dense(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut acc = vec![ZERO; self.dst];
        for (s, &c) in v.iter().enumerate() {
            if c != ZERO {
                add_into(&mut acc, &self.cols[s], c);
            }
        }
        acc
    }

    pub fn column_dense(&self, s: usize) -> Vec<Scalar> {
        to_dense(&self.cols[s], self.dst)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Largest entrywise difference between two maps of equal shape.
    pub fn max_abs_diff(&self, other: &SparseMap) -> f64 {
        assert_eq!((self.src, self.dst), (other.src, other.dst));
        (0..self.src)
            .map(|s| max_abs_diff(&self.column_dense(s), &other.column_dense(s)))
            .fold(0.0, f64::max)
    }
}

/// Sparse multilinear tensor with entries keyed by index tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseTensor {
    dims: Vec<usize>,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl SparseTensor {
    pub fn new(dims: Vec<usize>) -> Self {
        SparseTensor { dims, entries: BTreeMap::new() }
    }

    pub fn from_entries(dims: Vec<usize>, entries: impl IntoIterator<Item = (Vec<usize>, Scalar)>) -> Result<Self, Error> {
        let mut t = SparseTensor::new(dims);
        for (idx, c) in entries {
            t.add(idx, c)?;
        }
        t.prune();
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.entries.get(idx).copied().unwrap_or(ZERO)
    }

    pub fn add(&mut self, idx: Vec<usize>, c: Scalar) -> Result<(), Error> {
        if idx.len() != self.dims.len() || idx.iter().zip(&self.dims).any(|(i, d)| i >= d) {
            return Err(Error::DimensionMismatch(format!(
                "index {idx:?} outside tensor of dims {:?}",
                self.dims
            )));
        }
        *self.entries.entry(idx).or_insert(ZERO) += c;
        Ok(())
    }

    pub fn prune(&mut self) {
        let tol = thresholds::prune();
        self.entries.retain(|_, c| c.norm() >= tol);
    }

    pub fn scale(&self, c: Scalar) -> SparseTensor {
        let mut t = self.clone();
        for v in t.entries.values_mut() {
            *v *= c;
        }
        t.prune();
        t
    }

    pub fn add_tensor(&self, other: &SparseTensor) -> Result<SparseTensor, Error> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", self.dims, other.dims)));
        }
        let mut t = self.clone();
        for (k, v) in &other.entries {
            *t.entries.entry(k.clone()).or_insert(ZERO) += v;
        }
        t.prune();
        Ok(t)
    }

    /// Contracts axis `p.0` of `self` with axis `p.1` of `other` for every
    /// pair. Free axes of `self` come first in the result, then those of
    /// `other`, each in their original order.
    pub fn contract(&self, other: &SparseTensor, pairs: &[(usize, usize)]) -> Result<SparseTensor, Error> {
        for &(a, b) in pairs {
            if a >= self.arity() || b >= other.arity() {
                return Err(Error::DimensionMismatch(format!("axis pair ({a},{b}) out of range")));
            }
            if self.dims[a] != other.dims[b] {
                return Err(Error::DimensionMismatch(format!(
                    "contracted axes have dims {} and {}",
                    self.dims[a], other.dims[b]
                )));
            }
        }
        let free1: Vec<usize> = (0..self.arity()).filter(|a| pairs.iter().all(|p| p.0 != *a)).collect();
        let free2: Vec<usize> = (0..other.arity()).filter(|b| pairs.iter().all(|p| p.1 != *b)).collect();
        let dims = free1.iter().map(|&a| self.dims[a]).chain(free2.iter().map(|&b| other.dims[b])).collect();

        let mut by_key: HashMap<Vec<usize>, Vec<(&Vec<usize>, Scalar)>> = HashMap::new();
        for (idx, &c) in &other.entries {
            let key = pairs.iter().map(|p| idx[p.1]).collect();
            by_key.entry(key).or_default().push((idx, c));
        }
        let mut out = SparseTensor::new(dims);
        for (idx, &c) in &self.entries {
            let key: Vec<usize> = pairs.iter().map(|p| idx[p.0]).collect();
            if let Some(matches) = by_key.get(&key) {
                for (idx2, c2) in matches {
                    let res: Vec<usize> = free1.iter().map(|&a| idx[a]).chain(free2.iter().map(|&b| idx2[b])).collect();
                    *out.entries.entry(res).or_insert(ZERO) += c * c2;
                }
            }
        }
        out.prune();
        Ok(out)
    }

    /// Reads a map `V_0 ⊗ … ⊗ V_{k-1} → W` off a tensor whose last axis is `W`.
    pub fn to_map(&self) -> SparseMap {
        let (out_dim, in_dims) = self.dims.split_last().expect("arity ≥ 1");
        let src: usize = in_dims.iter().product();
        let mut cols: Vec<SparseVec> = vec![Vec::new(); src];
        for (idx, &c) in &self.entries {
            let s = idx[..idx.len() - 1].iter().zip(in_dims).fold(0, |acc, (i, d)| acc * d + i);
            cols[s].push((idx[idx.len() - 1], c));
        }
        SparseMap { src, dst: *out_dim, cols }
    }

    /// Inverse of [`to_map`] given the factor dims of the source.
    pub fn from_map(m: &SparseMap, in_dims: &[usize]) -> SparseTensor {
        let mut dims = in_dims.to_vec();
        dims.push(m.dst);
        let mut t = SparseTensor::new(dims);
        for (s, col) in m.cols.iter().enumerate() {
            let mut idx = vec![0; in_dims.len()];
            let mut r = s;
            for (k, d) in in_dims.iter().enumerate().rev() {
                idx[k] = r % d;
                r /= d;
            }
            for &(d, c) in col {
                let mut full = idx.clone();
                full.push(d);
                t.entries.insert(full, c);
            }
        }
        t
    }
}
