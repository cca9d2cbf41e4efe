use super::dense::DenseMatrix;
use super::scalar::{Scalar, ONE, ZERO};
use super::sparse::SparseVec;
use super::thresholds;
use crate::error::Error;

/// A particular solution together with a basis of the homogeneous solutions.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSolution {
    pub particular: Vec<Scalar>,
    pub nullspace: Vec<Vec<Scalar>>,
}

impl LinearSolution {
    pub fn is_unique(&self) -> bool {
        self.nullspace.is_empty()
    }
}

/// Solves `A x = b` by Gaussian elimination with partial pivoting.
///
/// Pivots smaller than the pivot threshold times the largest entry of `A`
/// count as zero. Free variables are set to zero in the particular solution.
///
/// # Errors
///
/// [`Error::NoSolution`] when a zero row meets a nonzero right-hand side.
pub fn solve_linear(a: &DenseMatrix, b: &[Scalar]) -> Result<LinearSolution, Error> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!("rhs of length {} for {} rows", b.len(), a.rows())));
    }
    let rows: Vec<Vec<Scalar>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i]);
            r
        })
        .collect();
    let amax = a.max_abs();
    solve_augmented(rows, a.cols(), amax)
}

/// Numerical rank at the pivot threshold.
pub fn rank(a: &DenseMatrix) -> usize {
    let mut rows: Vec<Vec<Scalar>> = (0..a.rows()).map(|i| {
        let mut r = a.row(i).to_vec();
        r.push(ZERO);
        r
    }).collect();
    let tol = thresholds::pivot() * a.max_abs().max(f64::MIN_POSITIVE);
    eliminate(&mut rows, a.cols(), tol).len()
}

fn eliminate(m: &mut [Vec<Scalar>], ncols: usize, tol: f64) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let (p, best) = (r..nrows)
            .map(|i| (i, m[i][c].norm()))
            .fold((r, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if best <= tol {
            for row in m[r..].iter_mut() {
                row[c] = ZERO;
            }
            continue;
        }
        m.swap(r, p);
        let d = m[r][c].inv();
        for x in m[r].iter_mut() {
            *x *= d;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c];
            if f == ZERO {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn solve_augmented(rows: Vec<Vec<Scalar>>, ncols: usize, amax: f64) -> Result<LinearSolution, Error> {
    let bmax = rows.iter().map(|r| r[ncols].norm()).fold(0.0, f64::max);
    solve_augmented_with_bmax(rows, ncols, amax, bmax)
}

/// Sparse linear system assembled row by row.
///
/// Solving splits the unknowns into connected components of the row/column
/// incidence graph and eliminates each block densely, which keeps the
/// structured systems of antipodes and integrals cheap.
#[derive(Clone, Debug, Default)]
pub struct SparseSystem {
    ncols: usize,
    rows: Vec<SparseVec>,
    rhs: Vec<Scalar>,
}

impl SparseSystem {
    pub fn new(ncols: usize) -> Self {
        SparseSystem { ncols, rows: Vec::new(), rhs: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Adds one equation; duplicate column entries are summed.
    pub fn push(&mut self, mut row: SparseVec, rhs: Scalar) {
        row.sort_by_key(|e| e.0);
        let mut merged: SparseVec = Vec::with_capacity(row.len());
        for (c, x) in row {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 += x,
                _ => merged.push((c, x)),
            }
        }
        merged.retain(|e| e.1 != ZERO);
        self.rows.push(merged);
        self.rhs.push(rhs);
    }

    pub fn solve(&self) -> Result<LinearSolution, Error> {
        let n = self.ncols;
        let amax = self.rows.iter().flatten().map(|e| e.1.norm()).fold(0.0, f64::max);
        let bmax = self.rhs.iter().map(|x| x.norm()).fold(0.0, f64::max);
        let tol_b = thresholds::pivot() * amax.max(bmax).max(1e-300);

        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for row in &self.rows {
            if let Some(&(first, _)) = row.first() {
                let a = find(&mut parent, first);
                for &(c, _) in &row[1..] {
                    let b = find(&mut parent, c);
                    if a != b {
                        parent[b] = a;
                    }
                }
            }
        }
        let mut comp_of_root = vec![usize::MAX; n];
        let mut comp_cols: Vec<Vec<usize>> = Vec::new();
        for c in 0..n {
            let r = find(&mut parent, c);
            if comp_of_root[r] == usize::MAX {
                comp_of_root[r] = comp_cols.len();
                comp_cols.push(Vec::new());
            }
            comp_cols[comp_of_root[r]].push(c);
        }
        let mut comp_rows: Vec<Vec<usize>> = vec![Vec::new(); comp_cols.len()];
        for (i, row) in self.rows.iter().enumerate() {
            match row.first() {
                Some(&(c, _)) => {
                    let r = find(&mut parent, c);
                    comp_rows[comp_of_root[r]].push(i);
                }
                None => {
                    if self.rhs[i].norm() > tol_b {
                        return Err(Error::NoSolution);
                    }
                }
            }
        }

        let mut particular = vec![ZERO; n];
        let mut nullspace = Vec::new();
        let mut local = vec![usize::MAX; n];
        for (cols, rows) in comp_cols.iter().zip(&comp_rows) {
            for (k, &c) in cols.iter().enumerate() {
                local[c] = k;
            }
            let m = cols.len();
            let block: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|&i| {
                    let mut r = vec![ZERO; m + 1];
                    for &(c, x) in &self.rows[i] {
                        r[local[c]] += x;
                    }
                    r[m] = self.rhs[i];
                    r
                })
                .collect();
            let sol = if block.is_empty() {
                LinearSolution {
                    particular: vec![ZERO; m],
                    nullspace: (0..m).map(|k| {
                        let mut v = vec![ZERO; m];
                        v[k] = ONE;
                        v
                    }).collect(),
                }
            } else {
                solve_augmented_with_bmax(block, m, amax, bmax)?
            };
            for (k, &c) in cols.iter().enumerate() {
                particular[c] = sol.particular[k];
            }
            for v in sol.nullspace {
                let mut full = vec![ZERO; n];
                for (k, &c) in cols.iter().enumerate() {
                    full[c] = v[k];
                }
                nullspace.push(full);
            }
        }
        Ok(LinearSolution { particular, nullspace })
    }
}

fn solve_augmented_with_bmax(mut rows: Vec<Vec<Scalar>>, ncols: usize, amax: f64, bmax: f64) -> Result<LinearSolution, Error> {
    let tol = thresholds::pivot() * amax.max(f64::MIN_POSITIVE);
    let pivots = eliminate(&mut rows, ncols, tol);
    let tol_b = thresholds::pivot() * amax.max(bmax).max(1e-300);
    if rows[pivots.len()..].iter().any(|r| r[ncols].norm() > tol_b) {
        return Err(Error::NoSolution);
    }
    let mut particular = vec![ZERO; ncols];
    for (k, &c) in pivots.iter().enumerate() {
        particular[c] = rows[k][ncols];
    }
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let nullspace = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![ZERO; ncols];
            v[f] = ONE;
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = -rows[k][f];
            }
            v
        })
        .collect();
    Ok(LinearSolution { particular, nullspace })
}
