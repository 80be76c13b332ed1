use std::fmt;

use rand::Rng;

use super::bitvec::{words_for, BitVec};
use super::linalg::GfMatrix;
use crate::algebra::Elem;
use crate::error::{Error, Result};

/// Row-major matrix over GF(2) with 64 entries per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

/// A random invertible matrix together with its inverse.
#[derive(Clone, Debug)]
pub struct Nonsingular {
    pub matrix: BitMatrix,
    pub inverse: BitMatrix,
    /// Uniform draws needed, including the accepted one.
    pub attempts: u64,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set_bit(i, i, true);
        }
        m
    }

    /// Builds from equal-length rows.
    pub fn from_rows(rows: &[BitVec]) -> Result<BitMatrix> {
        let cols = rows.first().map_or(0, BitVec::len);
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            m.set_row(i, r);
        }
        Ok(m)
    }

    /// Parses rows written as `0`/`1` strings, e.g. `["1010", "0111"]`.
    pub fn from_strs(rows: &[&str]) -> Result<BitMatrix> {
        let rows = rows.iter().map(|r| r.parse()).collect::<Result<Vec<BitVec>>>()?;
        BitMatrix::from_rows(&rows)
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> BitMatrix {
        let rows: Vec<BitVec> = (0..rows).map(|_| BitVec::random(cols, rng)).collect();
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.set_row(i, r);
        }
        m
    }

    /// Rejection-samples uniform `k×k` matrices until one is invertible.
    pub fn random_nonsingular<R: Rng + ?Sized>(k: usize, rng: &mut R) -> Nonsingular {
        let mut attempts = 0;
        loop {
            attempts += 1;
            let matrix = BitMatrix::random(k, k, rng);
            if let Some(inverse) = matrix.invert() {
                return Nonsingular { matrix, inverse, attempts };
            }
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn bit(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn set_bit(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.rows && j < self.cols);
        let w = &mut self.data[i * self.stride + j / 64];
        let mask = 1u64 << (j % 64);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn column(&self, j: usize) -> BitVec {
        let mut out = BitVec::zeros(self.rows);
        for i in 0..self.rows {
            if self.bit(i, j) {
                out.set(i, true);
            }
        }
        out
    }

    pub fn set_row(&mut self, i: usize, v: &BitVec) {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.data[i * self.stride..(i + 1) * self.stride].copy_from_slice(v.words());
    }

    pub fn row_iter(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.rows).map(|i| self.row(i))
    }

    /// `row[dst] ^= row[src]` from word `from_word` on.
    #[inline]
    fn xor_rows(&mut self, dst: usize, src: usize, from_word: usize) {
        if dst == src {
            return;
        }
        let s = self.stride;
        let (d, sr) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        for (a, b) in d[from_word..].iter_mut().zip(&sr[from_word..]) {
            *a ^= b;
        }
    }

    /// `A·xᵀ` for `x` of length `cols`.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        BitVec::from_bools((0..self.rows).map(|i| {
            self.row_words(i).iter().zip(x.words()).fold(0, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1
                == 1
        }))
    }

    /// `x·A` for `x` of length `rows`.
    pub fn vec_mul(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.rows, "vector length mismatch");
        let mut acc = vec![0u64; self.stride];
        for i in x.ones() {
            for (a, b) in acc.iter_mut().zip(self.row_words(i)) {
                *a ^= b;
            }
        }
        BitVec::from_words(self.cols, acc)
    }

    pub fn add(&self, rhs: &BitMatrix) -> BitMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "dimension mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a ^ b).collect();
        BitMatrix { data, ..self.clone() }
    }

    /// `[self | rhs]`.
    pub fn hcat(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.rows, rhs.rows, "row count mismatch");
        let mut out = BitMatrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            out.set_row(i, &self.row(i).concat(&rhs.row(i)));
        }
        out
    }

    /// `self` stacked over `rhs`.
    pub fn vcat(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        BitMatrix { rows: self.rows + rhs.rows, data, ..self.clone() }
    }

    /// Text form: `rows cols` on the first line, then one `0`/`1` string per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.rows, self.cols);
        for r in self.row_iter() {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Parses [`BitMatrix::to_text`]; `first_line` is the line number of the header for error messages.
    pub fn from_text_at(text: &str, first_line: usize) -> Result<(BitMatrix, usize)> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + first_line, l));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(first_line, "missing matrix header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(hl, format!("bad dimension `{t}`"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::parse(hl, "expected `rows cols`"));
        };
        let mut m = BitMatrix::zeros(rows, cols);
        for i in 0..rows {
            let (ln, line) = lines.next().ok_or_else(|| Error::parse(hl + i + 1, "missing matrix row"))?;
            let v: BitVec = line.parse().map_err(|_| Error::parse(ln, "row must contain only 0 and 1"))?;
            if v.len() != cols {
                return Err(Error::parse(ln, format!("row has {} entries, expected {cols}", v.len())));
            }
            m.set_row(i, &v);
        }
        Ok((m, rows + 1))
    }

    pub fn from_text(text: &str) -> Result<BitMatrix> {
        let (m, used) = BitMatrix::from_text_at(text, 1)?;
        if let Some((i, _)) = text.lines().enumerate().skip(used).find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(i + 1, "trailing data after matrix"));
        }
        Ok(m)
    }
}

impl GfMatrix for BitMatrix {
    fn rows(&self) -> usize {
        self.rows
    }

    fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> Elem {
        self.bit(i, j) as Elem
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.set_bit(i, j, v & 1 == 1);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    #[inline]
    fn add_scaled_row(&mut self, dst: usize, src: usize, c: Elem, from: usize) {
        if c & 1 == 1 {
            self.xor_rows(dst, src, from / 64);
        }
    }

    fn scale_row(&mut self, i: usize, c: Elem) {
        if c & 1 == 0 {
            self.data[i * self.stride..(i + 1) * self.stride].fill(0);
        }
    }

    fn zeros_like(&self, rows: usize, cols: usize) -> BitMatrix {
        BitMatrix::zeros(rows, cols)
    }

    fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            let dst = i * out.stride;
            for k in row.ones() {
                for (a, b) in out.data[dst..dst + out.stride].iter_mut().zip(rhs.row_words(k)) {
                    *a ^= b;
                }
            }
        }
        out
    }

    fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                out.set_bit(j, i, true);
            }
        }
        out
    }

    fn elem_inv(&self, a: Elem) -> Elem {
        debug_assert_eq!(a, 1);
        1
    }

    fn elem_neg(&self, a: Elem) -> Elem {
        a
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn select_columns(&self, cols: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            out.set_row(i, &self.row(i).select(cols));
        }
        out
    }

    fn select_rows(&self, rows: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(rows.len(), self.cols);
        for (oi, &i) in rows.iter().enumerate() {
            out.data[oi * self.stride..(oi + 1) * self.stride].copy_from_slice(self.row_words(i));
        }
        out
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in self.row_iter() {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}
