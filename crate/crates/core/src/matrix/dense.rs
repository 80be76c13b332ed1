use std::fmt;

use rand::Rng;

use super::bitmat::BitMatrix;
use super::linalg::GfMatrix;
use crate::algebra::{Elem, Field};
use crate::error::{Error, Result};

/// Matrix over an arbitrary [`Field`]; entries are packed bits when `q = 2`.
#[derive(Clone, PartialEq)]
pub struct MatGF {
    field: Field,
    data: Data,
}

#[derive(Clone, PartialEq)]
enum Data {
    Bits(BitMatrix),
    Dense { rows: usize, cols: usize, entries: Vec<Elem> },
}

impl MatGF {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> MatGF {
        let data = if field.order() == 2 {
            Data::Bits(BitMatrix::zeros(rows, cols))
        } else {
            Data::Dense { rows, cols, entries: vec![0; rows * cols] }
        };
        MatGF { field: field.clone(), data }
    }

    pub fn identity(field: &Field, n: usize) -> MatGF {
        MatGF::zeros(field, 0, 0).identity_like(n)
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Result<MatGF> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = MatGF::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {i} has length {}, expected {cols}", r.len())));
            }
            for (j, &v) in r.iter().enumerate() {
                if !field.contains(v) {
                    return Err(Error::Domain(format!("entry {v} is not an element of {field:?}")));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    /// Wraps a GF(2) matrix without copying.
    pub fn from_bits(bits: BitMatrix) -> MatGF {
        MatGF { field: Field::gf2(), data: Data::Bits(bits) }
    }

    pub fn random<R: Rng + ?Sized>(field: &Field, rows: usize, cols: usize, rng: &mut R) -> MatGF {
        if field.order() == 2 {
            return MatGF { field: field.clone(), data: Data::Bits(BitMatrix::random(rows, cols, rng)) };
        }
        let entries = (0..rows * cols).map(|_| rng.gen_range(0..field.order())).collect();
        MatGF { field: field.clone(), data: Data::Dense { rows, cols, entries } }
    }

    /// Uniform invertible `k×k` matrix by rejection sampling, with the number of draws used.
    pub fn random_nonsingular<R: Rng + ?Sized>(field: &Field, k: usize, rng: &mut R) -> (MatGF, u64) {
        let mut attempts = 0;
        loop {
            attempts += 1;
            let m = MatGF::random(field, k, k, rng);
            if m.rank() == k {
                return (m, attempts);
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn as_bits(&self) -> Option<&BitMatrix> {
        match &self.data {
            Data::Bits(b) => Some(b),
            Data::Dense { .. } => None,
        }
    }

    pub fn into_bits(self) -> Option<BitMatrix> {
        match self.data {
            Data::Bits(b) => Some(b),
            Data::Dense { .. } => None,
        }
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        (0..self.cols()).map(|j| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows()).map(|i| self.row(i)).collect()
    }

    fn check_field(&self, rhs: &MatGF) {
        assert!(self.field == rhs.field, "matrices over different fields");
    }

    pub fn add(&self, rhs: &MatGF) -> MatGF {
        self.check_field(rhs);
        assert!(self.rows() == rhs.rows() && self.cols() == rhs.cols(), "dimension mismatch");
        if let (Some(a), Some(b)) = (self.as_bits(), rhs.as_bits()) {
            return MatGF::from_bits(a.add(b));
        }
        let mut out = self.clone();
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.set(i, j, self.field.add(self.get(i, j), rhs.get(i, j)));
            }
        }
        out
    }

    /// `A·xᵀ`.
    pub fn mul_vec(&self, x: &[Elem]) -> Vec<Elem> {
        assert_eq!(x.len(), self.cols(), "vector length mismatch");
        let f = &self.field;
        (0..self.rows())
            .map(|i| (0..self.cols()).fold(0, |acc, j| f.add(acc, f.mul(self.get(i, j), x[j]))))
            .collect()
    }

    /// `x·A`.
    pub fn vec_mul(&self, x: &[Elem]) -> Vec<Elem> {
        assert_eq!(x.len(), self.rows(), "vector length mismatch");
        let f = &self.field;
        (0..self.cols())
            .map(|j| (0..self.rows()).fold(0, |acc, i| f.add(acc, f.mul(x[i], self.get(i, j)))))
            .collect()
    }

    /// Text form: `rows cols`, then rows of `0`/`1` for GF(2) or space-separated element indices.
    pub fn to_text(&self) -> String {
        if let Some(b) = self.as_bits() {
            return b.to_text();
        }
        let mut s = format!("{} {}\n", self.rows(), self.cols());
        for r in self.to_rows() {
            s.push_str(&r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_text(field: &Field, text: &str) -> Result<MatGF> {
        if field.order() == 2 {
            return Ok(MatGF { field: field.clone(), data: Data::Bits(BitMatrix::from_text(text)?) });
        }
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "missing matrix header"))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(1, format!("bad dimension `{t}`"))))
            .collect::<Result<_>>()?;
        let [rows, cols] = dims[..] else {
            return Err(Error::parse(1, "expected `rows cols`"));
        };
        let mut m = MatGF::zeros(field, rows, cols);
        for i in 0..rows {
            let (ln, line) = lines.next().ok_or_else(|| Error::parse(i + 2, "missing matrix row"))?;
            let vals: Vec<Elem> = line
                .split_whitespace()
                .map(|t| match t.parse::<Elem>() {
                    Ok(v) if field.contains(v) => Ok(v),
                    _ => Err(Error::parse(ln, format!("`{t}` is not a field element index"))),
                })
                .collect::<Result<_>>()?;
            if vals.len() != cols {
                return Err(Error::parse(ln, format!("row has {} entries, expected {cols}", vals.len())));
            }
            for (j, v) in vals.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        if let Some((ln, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(ln, "trailing data after matrix"));
        }
        Ok(m)
    }
}

impl GfMatrix for MatGF {
    fn rows(&self) -> usize {
        match &self.data {
            Data::Bits(b) => b.rows(),
            Data::Dense { rows, .. } => *rows,
        }
    }

    fn cols(&self) -> usize {
        match &self.data {
            Data::Bits(b) => b.cols(),
            Data::Dense { cols, .. } => *cols,
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> Elem {
        match &self.data {
            Data::Bits(b) => b.get(i, j),
            Data::Dense { rows, cols, entries } => {
                assert!(i < *rows && j < *cols, "index ({i}, {j}) out of range");
                entries[i * cols + j]
            }
        }
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: Elem) {
        debug_assert!(self.field.contains(v));
        match &mut self.data {
            Data::Bits(b) => b.set(i, j, v),
            Data::Dense { rows, cols, entries } => {
                assert!(i < *rows && j < *cols, "index ({i}, {j}) out of range");
                entries[i * *cols + j] = v;
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        match &mut self.data {
            Data::Bits(m) => m.swap_rows(a, b),
            Data::Dense { cols, entries, .. } => {
                for j in 0..*cols {
                    entries.swap(a * *cols + j, b * *cols + j);
                }
            }
        }
    }

    fn add_scaled_row(&mut self, dst: usize, src: usize, c: Elem, from: usize) {
        let f = &self.field;
        match &mut self.data {
            Data::Bits(m) => m.add_scaled_row(dst, src, c, from),
            Data::Dense { cols, entries, .. } => {
                if c == 0 {
                    return;
                }
                for j in from..*cols {
                    let s = entries[src * *cols + j];
                    if s != 0 {
                        let d = &mut entries[dst * *cols + j];
                        *d = f.add(*d, f.mul(c, s));
                    }
                }
            }
        }
    }

    fn scale_row(&mut self, i: usize, c: Elem) {
        let f = &self.field;
        match &mut self.data {
            Data::Bits(m) => m.scale_row(i, c),
            Data::Dense { cols, entries, .. } => {
                for v in &mut entries[i * *cols..(i + 1) * *cols] {
                    *v = f.mul(*v, c);
                }
            }
        }
    }

    fn zeros_like(&self, rows: usize, cols: usize) -> MatGF {
        MatGF::zeros(&self.field, rows, cols)
    }

    fn mul(&self, rhs: &MatGF) -> MatGF {
        self.check_field(rhs);
        assert_eq!(self.cols(), rhs.rows(), "dimension mismatch in product");
        if let (Some(a), Some(b)) = (self.as_bits(), rhs.as_bits()) {
            return MatGF { field: self.field.clone(), data: Data::Bits(a.mul(b)) };
        }
        let mut out = self.zeros_like(self.rows(), rhs.cols());
        for i in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.get(i, k);
                if a != 0 {
                    out.add_scaled_row_from(i, rhs, k, a);
                }
            }
        }
        out
    }

    fn transpose(&self) -> MatGF {
        if let Some(b) = self.as_bits() {
            return MatGF { field: self.field.clone(), data: Data::Bits(b.transpose()) };
        }
        let mut out = self.zeros_like(self.cols(), self.rows());
        for i in 0..self.rows() {
            for j in 0..self.cols() {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    fn elem_inv(&self, a: Elem) -> Elem {
        self.field.inv_nonzero(a)
    }

    fn elem_neg(&self, a: Elem) -> Elem {
        self.field.neg(a)
    }

    fn select_columns(&self, cols: &[usize]) -> MatGF {
        match &self.data {
            Data::Bits(b) => MatGF { field: self.field.clone(), data: Data::Bits(b.select_columns(cols)) },
            Data::Dense { .. } => {
                let rows: Vec<usize> = (0..self.rows()).collect();
                self.submatrix(&rows, cols)
            }
        }
    }
}

impl MatGF {
    /// `row[i] += c · other.row[k]`.
    fn add_scaled_row_from(&mut self, i: usize, other: &MatGF, k: usize, c: Elem) {
        for j in 0..other.cols() {
            let v = other.get(k, j);
            if v != 0 {
                let cur = self.get(i, j);
                self.set(i, j, self.field.add(cur, self.field.mul(c, v)));
            }
        }
    }
}

impl fmt::Debug for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MatGF {}x{} over {:?}", self.rows(), self.cols(), self.field)?;
        for r in self.to_rows() {
            writeln!(f, "  {}", r.iter().map(|&v| self.field.power_name(v)).collect::<Vec<_>>().join(" "))?;
        }
        Ok(())
    }
}
