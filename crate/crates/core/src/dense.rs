//! Constant matrices over `Z/pZ`: elimination, rank, nullspaces, echelon forms.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeModulus;

/// Dense row-major matrix of residues.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConstMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    modulus: PrimeModulus,
}

impl ConstMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: PrimeModulus) -> Self {
        ConstMatrix { rows, cols, data: vec![0; rows * cols], modulus }
    }

    pub fn identity(n: usize, modulus: PrimeModulus) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_signed(rows: &[Vec<i64>], modulus: PrimeModulus) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c, modulus);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = modulus.from_i64(v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> ConstMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &ConstMatrix) -> Result<ConstMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let m = self.modulus;
        let mut out = Self::zeros(self.rows, other.cols, m);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = m.add(out[(i, j)], m.mul(a, other[(k, j)]));
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    /// `companion`, when given, receives the same row operations.
    fn rref_with(&mut self, mut companion: Option<&mut ConstMatrix>) -> Vec<usize> {
        let m = self.modulus;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self[(i, c)] != 0) else {
                continue;
            };
            self.swap_rows(p, r);
            if let Some(comp) = companion.as_deref_mut() {
                comp.swap_rows(p, r);
            }
            let inv = m.inv(self[(r, c)]).expect("nonzero pivot");
            self.scale_row(r, inv);
            if let Some(comp) = companion.as_deref_mut() {
                comp.scale_row(r, inv);
            }
            for i in 0..self.rows {
                if i != r && self[(i, c)] != 0 {
                    let f = self[(i, c)];
                    self.axpy_row(i, r, m.neg(f));
                    if let Some(comp) = companion.as_deref_mut() {
                        comp.axpy_row(i, r, m.neg(f));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, f: u64) {
        let m = self.modulus;
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = m.mul(*v, f);
        }
    }

    /// row[dst] += f * row[src]
    fn axpy_row(&mut self, dst: usize, src: usize, f: u64) {
        let m = self.modulus;
        for j in 0..self.cols {
            let s = self.data[src * self.cols + j];
            if s != 0 {
                let d = &mut self.data[dst * self.cols + j];
                *d = m.add(*d, m.mul(f, s));
            }
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (ConstMatrix, Vec<usize>) {
        let mut a = self.clone();
        let piv = a.rref_with(None);
        (a, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let m = self.modulus;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            is_pivot[c] = Some(row);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free].is_some() {
                continue;
            }
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = m.neg(r[(row, free)]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn inverse(&self) -> Result<ConstMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let mut a = self.clone();
        let mut inv = Self::identity(self.rows, self.modulus);
        let piv = a.rref_with(Some(&mut inv));
        if piv.len() < self.rows {
            return Err(Error::Singular);
        }
        Ok(inv)
    }

    pub fn determinant(&self) -> Result<u64> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let m = self.modulus;
        let mut a = self.clone();
        let mut det = 1;
        for c in 0..a.cols {
            let Some(p) = (c..a.rows).find(|&i| a[(i, c)] != 0) else {
                return Ok(0);
            };
            if p != c {
                a.swap_rows(p, c);
                det = m.neg(det);
            }
            let pivot = a[(c, c)];
            det = m.mul(det, pivot);
            let inv = m.inv(pivot)?;
            for i in c + 1..a.rows {
                if a[(i, c)] != 0 {
                    let f = m.neg(m.mul(a[(i, c)], inv));
                    a.axpy_row(i, c, f);
                }
            }
        }
        Ok(det)
    }

    /// Invertible `U` with `self * U` in reduced column echelon form.
    /// Returns `(U, echelon, pivot_rows)`.
    pub fn column_echelon_transform(&self) -> (ConstMatrix, ConstMatrix, Vec<usize>) {
        let mut t = self.transpose();
        let mut w = Self::identity(self.cols, self.modulus);
        let pivots = t.rref_with(Some(&mut w));
        (w.transpose(), t.transpose(), pivots)
    }
}

impl std::ops::Index<(usize, usize)> for ConstMatrix {
    type Output = u64;
    fn index(&self, (i, j): (usize, usize)) -> &u64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ConstMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for ConstMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ConstMatrix {}x{} mod {}", self.rows, self.cols, self.modulus)?;
        for i in 0..self.rows {
            let row: Vec<i64> = self.row(i).iter().map(|&v| self.modulus.to_signed(v)).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}
