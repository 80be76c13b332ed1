//! Gaussian elimination and everything built on it, generic over the storage.

use std::fmt::Debug;

use crate::algebra::Elem;

/// Row operations a matrix over a finite field has to provide.
///
/// Elimination-based routines are provided methods, so the bit-packed and
/// dense representations share one implementation.
pub trait GfMatrix: Clone + PartialEq + Debug {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    fn get(&self, i: usize, j: usize) -> Elem;
    fn set(&mut self, i: usize, j: usize, v: Elem);
    fn swap_rows(&mut self, a: usize, b: usize);
    /// `row[dst] += c · row[src]`, touching only columns `from..`.
    fn add_scaled_row(&mut self, dst: usize, src: usize, c: Elem, from: usize);
    fn scale_row(&mut self, i: usize, c: Elem);
    fn zeros_like(&self, rows: usize, cols: usize) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn transpose(&self) -> Self;
    fn elem_inv(&self, a: Elem) -> Elem;
    fn elem_neg(&self, a: Elem) -> Elem;

    fn identity_like(&self, n: usize) -> Self {
        let mut out = self.zeros_like(n, n);
        for i in 0..n {
            out.set(i, i, 1);
        }
        out
    }

    fn is_zero(&self) -> bool {
        (0..self.rows()).all(|i| (0..self.cols()).all(|j| self.get(i, j) == 0))
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = self.zeros_like(rows.len(), cols.len());
        for (oi, &i) in rows.iter().enumerate() {
            for (oj, &j) in cols.iter().enumerate() {
                let v = self.get(i, j);
                if v != 0 {
                    out.set(oi, oj, v);
                }
            }
        }
        out
    }

    fn select_columns(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows()).collect();
        self.submatrix(&rows, cols)
    }

    fn select_rows(&self, rows: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.cols()).collect();
        self.submatrix(rows, &cols)
    }

    /// `[self | v]` for a column vector `v`.
    fn append_column(&self, v: &[Elem]) -> Self {
        assert_eq!(v.len(), self.rows(), "column length mismatch");
        let cols = self.cols();
        let mut out = self.zeros_like(self.rows(), cols + 1);
        for i in 0..self.rows() {
            for j in 0..cols {
                let x = self.get(i, j);
                if x != 0 {
                    out.set(i, j, x);
                }
            }
            out.set(i, cols, v[i]);
        }
        out
    }

    /// Gauss-Jordan elimination in place over the columns `0..limit`.
    ///
    /// Every row operation is mirrored on `transform` when given. Returns the
    /// pivot columns; the first `pivots.len()` rows are the nonzero ones.
    fn eliminate(&mut self, limit: usize, mut transform: Option<&mut Self>) -> Vec<usize> {
        let rows = self.rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit.min(self.cols()) {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
                if let Some(t) = transform.as_deref_mut() {
                    t.swap_rows(p, r);
                }
            }
            let lead = self.get(r, c);
            if lead != 1 {
                let s = self.elem_inv(lead);
                self.scale_row(r, s);
                if let Some(t) = transform.as_deref_mut() {
                    t.scale_row(r, s);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let x = self.get(i, c);
                if x != 0 {
                    let f = self.elem_neg(x);
                    self.add_scaled_row(i, r, f, c);
                    if let Some(t) = transform.as_deref_mut() {
                        t.add_scaled_row(i, r, f, 0);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form with the invertible transform `E`, `E·A = R`.
    fn rref(&self) -> Rref<Self> {
        let mut reduced = self.clone();
        let mut transform = self.identity_like(self.rows());
        let pivots = reduced.eliminate(self.cols(), Some(&mut transform));
        Rref { rank: pivots.len(), reduced, transform, pivots }
    }

    fn rank(&self) -> usize {
        self.clone().eliminate(self.cols(), None).len()
    }

    /// Rows form a basis of `{x : A·xᵀ = 0}`.
    fn nullspace(&self) -> Self {
        let mut r = self.clone();
        let pivots = r.eliminate(self.cols(), None);
        let mut is_pivot = vec![false; self.cols()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols()).filter(|&j| !is_pivot[j]).collect();
        let mut out = self.zeros_like(free.len(), self.cols());
        for (row, &f) in free.iter().enumerate() {
            out.set(row, f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                let x = r.get(i, f);
                if x != 0 {
                    out.set(row, p, self.elem_neg(x));
                }
            }
        }
        out
    }

    /// Inverse of a square matrix, `None` when singular.
    fn invert(&self) -> Option<Self> {
        assert_eq!(self.rows(), self.cols(), "only square matrices have inverses");
        let mut r = self.clone();
        let mut t = self.identity_like(self.rows());
        let pivots = r.eliminate(self.cols(), Some(&mut t));
        (pivots.len() == self.rows()).then_some(t)
    }

    /// Brings `self` to `(I | T)` by row operations alone and returns `T`.
    ///
    /// Fails when the leading square block is singular; no column swaps are tried.
    fn systematic_form(&self) -> Option<Self> {
        let rows = self.rows();
        assert!(rows <= self.cols(), "systematic form needs rows <= cols");
        let mut r = self.clone();
        let pivots = r.eliminate(rows, None);
        if pivots.len() != rows {
            return None;
        }
        let row_idx: Vec<usize> = (0..rows).collect();
        let col_idx: Vec<usize> = (rows..self.cols()).collect();
        Some(r.submatrix(&row_idx, &col_idx))
    }

    /// A solution of `A·x = b`, free variables set to zero; `None` if inconsistent.
    fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        let cols = self.cols();
        let mut aug = self.append_column(b);
        let pivots = aug.eliminate(cols, None);
        if (pivots.len()..self.rows()).any(|i| aug.get(i, cols) != 0) {
            return None;
        }
        let mut x = vec![0; cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(i, cols);
        }
        Some(x)
    }

    /// `X` with `X·self = target`, using an invertible column subset of `self`;
    /// `None` if `self` lacks full row rank or no such `X` exists.
    fn solve_left(&self, target: &Self) -> Option<Self> {
        let pivots = self.rref().pivots;
        if pivots.len() != self.rows() {
            return None;
        }
        let inv = self.select_columns(&pivots).invert()?;
        let x = target.select_columns(&pivots).mul(&inv);
        (x.mul(self) == *target).then_some(x)
    }

    /// `A = B·C` with `B` of shape rows×r, `C` of shape r×cols and `r = rank(A)`.
    fn full_rank_factorize(&self) -> (Self, Self) {
        let Rref { reduced, transform, rank, .. } = self.rref();
        let e_inv = transform.invert().expect("elimination transforms are invertible");
        let all_rows: Vec<usize> = (0..self.rows()).collect();
        let leading: Vec<usize> = (0..rank).collect();
        let b = e_inv.submatrix(&all_rows, &leading);
        let c = reduced.submatrix(&leading, &(0..self.cols()).collect::<Vec<_>>());
        (b, c)
    }
}

/// Output of [`GfMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref<M> {
    pub reduced: M,
    pub rank: usize,
    pub transform: M,
    pub pivots: Vec<usize>,
}
