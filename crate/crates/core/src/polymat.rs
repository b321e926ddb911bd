//! Polynomial matrices and shifted-degree machinery.
//!
//! A shift `s` weights row `i` (for column degrees) by `x^{s_i}`:
//! `cdeg_s(p) = max_i (deg p_i + s_i)`. Row degrees are the mirror image,
//! with the shift applied to columns.

use std::fmt;
use std::ops::Mul;

use crate::dense::ConstMatrix;
use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::poly::{mul_coeffs, Degree, Polynomial};

/// Integer weight vector, entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Shift(Vec<i64>);

impl Shift {
    pub fn new(values: Vec<i64>) -> Self {
        Shift(values)
    }

    pub fn zeros(n: usize) -> Self {
        Shift(vec![0; n])
    }

    pub fn uniform(n: usize, value: i64) -> Self {
        Shift(vec![value; n])
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Shift {
        Shift(self.0.iter().map(|v| -v).collect())
    }

    pub fn concat(&self, other: &Shift) -> Shift {
        Shift(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn translated(&self, by: i64) -> Shift {
        Shift(self.0.iter().map(|v| v + by).collect())
    }

    /// Translates so the smallest entry is at least zero; returns the offset.
    pub fn normalized(&self) -> (Shift, i64) {
        let offset = (-self.0.iter().copied().min().unwrap_or(0)).max(0);
        (self.translated(offset), offset)
    }

    fn check_len(&self, expected: usize, what: &str) -> Result<()> {
        if self.0.len() != expected {
            return Err(Error::DimensionMismatch(format!(
                "shift has length {} but the matrix has {expected} {what}",
                self.0.len()
            )));
        }
        Ok(())
    }
}

impl From<Vec<i64>> for Shift {
    fn from(v: Vec<i64>) -> Self {
        Shift(v)
    }
}

impl From<&[i64]> for Shift {
    fn from(v: &[i64]) -> Self {
        Shift(v.to_vec())
    }
}

/// Which way a leading coefficient matrix or reducedness test is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Column,
    Row,
}

/// An `m x n` matrix of polynomials over a common prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    modulus: PrimeModulus,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize, modulus: PrimeModulus) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(modulus); rows * cols],
            modulus,
        }
    }

    pub fn identity(n: usize, modulus: PrimeModulus) -> Self {
        let mut m = Self::zero(n, n, modulus);
        for i in 0..n {
            m.set(i, i, Polynomial::one(modulus));
        }
        m
    }

    /// Builds from rows; every entry must use `modulus`.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>, modulus: PrimeModulus) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("rows of unequal length".into()));
            }
            for p in row {
                if p.modulus() != modulus {
                    return Err(Error::ModulusMismatch(p.modulus().value(), modulus.value()));
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { rows: r, cols: c, entries, modulus })
    }

    /// Builds from columns of length `rows`.
    pub fn from_columns(rows: usize, columns: Vec<Vec<Polynomial>>, modulus: PrimeModulus) -> Self {
        let cols = columns.len();
        let mut m = Self::zero(rows, cols, modulus);
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, p) in col.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m
    }

    /// Entries given as signed coefficient lists, low order first.
    pub fn from_signed(rows: &[Vec<Vec<i64>>], modulus: PrimeModulus) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|c| Polynomial::from_signed(c, modulus)).collect())
            .collect();
        Self::from_rows(rows, modulus).expect("well-formed literal matrix")
    }

    /// Entries written as polynomial expressions, e.g. `"2x^3 - x + 1"`.
    pub fn parse_rows(rows: &[&[&str]], modulus: PrimeModulus) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| Polynomial::parse(s, modulus)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows, modulus)
    }

    pub fn from_const(c: &ConstMatrix) -> Self {
        let m = c.modulus();
        let mut out = Self::zero(c.rows(), c.cols(), m);
        for i in 0..c.rows() {
            for j in 0..c.cols() {
                out.set(i, j, Polynomial::constant(c[(i, j)], m));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Polynomial {
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        debug_assert_eq!(p.modulus(), self.modulus);
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zero(self.cols, self.rows, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> PolyMatrix {
        let mut out = Self::zero(rows.len(), cols.len(), self.modulus);
        for (a, i) in rows.clone().enumerate() {
            for (b, j) in cols.clone().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> PolyMatrix {
        let mut out = Self::zero(self.rows, idx.len(), self.modulus);
        for (b, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// `[self, other]`.
    pub fn hstack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {} rows beside {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = Self::zero(self.rows, self.cols + other.cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// `[self; other]`.
    pub fn vstack(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns over {} columns",
                self.cols, other.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(PolyMatrix { rows: self.rows + other.rows, cols: self.cols, entries, modulus: self.modulus })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn is_zero_column(&self, j: usize) -> bool {
        (0..self.rows).all(|i| self.get(i, j).is_zero())
    }

    /// Indices of the columns with at least one nonzero entry.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|&j| !self.is_zero_column(j)).collect()
    }

    /// Largest entry degree.
    pub fn degree(&self) -> Degree {
        self.entries.iter().map(Polynomial::degree).max().unwrap_or(Degree::NegInfinity)
    }

    fn same_field(&self, other: &PolyMatrix) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.value(), other.modulus.value()));
        }
        Ok(())
    }

    /// Shifted column degrees; the shift (if any) has one entry per row.
    pub fn cdeg(&self, shift: Option<&Shift>) -> Result<Vec<Degree>> {
        if let Some(s) = shift {
            s.check_len(self.rows, "rows")?;
        }
        Ok((0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| {
                        let off = shift.map_or(0, |s| s.0[i]);
                        self.get(i, j).degree().shifted(off)
                    })
                    .max()
                    .unwrap_or(Degree::NegInfinity)
            })
            .collect())
    }

    /// Shifted row degrees; the shift (if any) has one entry per column.
    pub fn rdeg(&self, shift: Option<&Shift>) -> Result<Vec<Degree>> {
        if let Some(s) = shift {
            s.check_len(self.cols, "columns")?;
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let off = shift.map_or(0, |s| s.0[j]);
                        self.get(i, j).degree().shifted(off)
                    })
                    .max()
                    .unwrap_or(Degree::NegInfinity)
            })
            .collect())
    }

    /// Shifted leading coefficient matrix.
    ///
    /// Column side: entry `(i, j)` is the coefficient of `x^{d_j - s_i}` where
    /// `d = cdeg_s`. Row side: the coefficient of `x^{r_i - s_j}` where
    /// `r = rdeg_s`. A zero column (row) gives a zero column (row).
    pub fn lcoeff_shifted(&self, shift: &Shift, side: Side) -> Result<ConstMatrix> {
        let mut out = ConstMatrix::zeros(self.rows, self.cols, self.modulus);
        match side {
            Side::Column => {
                let d = self.cdeg(Some(shift))?;
                for (j, dj) in d.iter().enumerate() {
                    let Some(dj) = dj.finite() else { continue };
                    for i in 0..self.rows {
                        out[(i, j)] = self.get(i, j).coeff(dj - shift.0[i]);
                    }
                }
            }
            Side::Row => {
                let r = self.rdeg(Some(shift))?;
                for (i, ri) in r.iter().enumerate() {
                    let Some(ri) = ri.finite() else { continue };
                    for j in 0..self.cols {
                        out[(i, j)] = self.get(i, j).coeff(ri - shift.0[j]);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Entry `(i, j)` is the coefficient of `x^{degrees_i}` in `A[i][j]`, i.e.
    /// the leading matrix of `x^{-degrees} A` read at degree zero.
    pub fn lcoeff_at_row_degrees(&self, degrees: &[i64]) -> Result<ConstMatrix> {
        if degrees.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "{} row degrees for {} rows",
                degrees.len(),
                self.rows
            )));
        }
        let mut out = ConstMatrix::zeros(self.rows, self.cols, self.modulus);
        for (i, &d) in degrees.iter().enumerate() {
            for j in 0..self.cols {
                out[(i, j)] = self.get(i, j).coeff(d);
            }
        }
        Ok(out)
    }

    /// Shifted reducedness: the shifted leading matrix has full column (row) rank.
    pub fn is_reduced(&self, shift: &Shift, side: Side) -> Result<bool> {
        let lc = self.lcoeff_shifted(shift, side)?;
        Ok(match side {
            Side::Column => {
                self.nonzero_columns().len() == self.cols && lc.rank() == self.cols
            }
            Side::Row => {
                (0..self.rows).all(|i| self.row(i).iter().any(|p| !p.is_zero()))
                    && lc.rank() == self.rows
            }
        })
    }

    pub fn matmul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let p = dot(
                    self.modulus,
                    (0..self.cols).map(|k| (self.get(i, k), other.get(k, j))),
                );
                out.set(i, j, p);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Result<PolyMatrix> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("entrywise operation on unequal shapes".into()));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
            modulus: self.modulus,
        })
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            modulus: self.modulus,
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    /// Entrywise remainder modulo `x^k`.
    pub fn truncate(&self, k: usize) -> PolyMatrix {
        self.map(|p| p.truncate(k))
    }

    pub fn eval(&self, x: u64) -> ConstMatrix {
        let mut out = ConstMatrix::zeros(self.rows, self.cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self.get(i, j).eval(x);
            }
        }
        out
    }

    /// Matrix coefficient of `x^k`.
    pub fn coefficient(&self, k: usize) -> ConstMatrix {
        let mut out = ConstMatrix::zeros(self.rows, self.cols, self.modulus);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self.get(i, j).coeff(k as i64);
            }
        }
        out
    }

    /// Exact determinant. Uses evaluation at `sum(cdeg) + 1` points and
    /// interpolation when the field is large enough, fraction-free
    /// elimination otherwise.
    pub fn determinant(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let mut bound = 0u64;
        for d in self.cdeg(None)? {
            match d.finite() {
                Some(d) => bound += d as u64,
                None => return Ok(Polynomial::zero(self.modulus)),
            }
        }
        if self.modulus.value() > bound {
            self.determinant_by_interpolation(bound as usize)
        } else {
            self.determinant_fraction_free()
        }
    }

    /// Determinant from `bound + 1` evaluations; `bound` must dominate the
    /// determinant's degree and be below `p`.
    pub fn determinant_by_interpolation(&self, bound: usize) -> Result<Polynomial> {
        let m = self.modulus;
        if (bound as u64) >= m.value() {
            return Err(Error::InvalidInput("not enough field points to interpolate".into()));
        }
        let xs: Vec<u64> = (0..=bound as u64).collect();
        let ys = xs
            .iter()
            .map(|&x| self.eval(x).determinant())
            .collect::<Result<Vec<_>>>()?;
        interpolate(&xs, &ys, m)
    }

    /// Bareiss elimination over `K[x]`.
    pub fn determinant_fraction_free(&self) -> Result<Polynomial> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let m = self.modulus;
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(m));
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = Polynomial::one(m);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(Polynomial::zero(m));
                };
                a.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev)?;
                }
                a[i][k] = Polynomial::zero(m);
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { -&d } else { d })
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.determinant()?.is_unit())
    }

    pub fn is_nonsingular(&self) -> Result<bool> {
        Ok(!self.determinant()?.is_zero())
    }

    /// Rank over the rational function field `K(x)`.
    ///
    /// Evaluates at successive field points; the maximum rank seen is exact
    /// once it is full or once more points have been tried than any minor's
    /// degree. Falls back to fraction-free elimination for tiny fields.
    pub fn rank(&self) -> usize {
        let full = self.rows.min(self.cols);
        if full == 0 {
            return 0;
        }
        let mut degs: Vec<u64> = self
            .cdeg(None)
            .expect("no shift")
            .into_iter()
            .filter_map(|d| d.finite().map(|d| d as u64))
            .collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        let bound: u64 = degs.iter().take(full).sum();
        let points = (bound + 1).min(self.modulus.value());
        let mut best = 0;
        for x in 0..points {
            best = best.max(self.eval(x).rank());
            if best == full {
                return best;
            }
        }
        if points == bound + 1 {
            best
        } else {
            self.rank_fraction_free()
        }
    }

    /// Rank by fraction-free row echelon elimination over `K[x]`.
    pub fn rank_fraction_free(&self) -> usize {
        let m = self.modulus;
        let mut a: Vec<Vec<Polynomial>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut prev = Polynomial::one(m);
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[i][c] = Polynomial::zero(m);
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }
}

/// Sum of products, accumulated without intermediate reductions when the
/// modulus is small enough.
pub(crate) fn dot<'a>(
    m: PrimeModulus,
    pairs: impl Iterator<Item = (&'a Polynomial, &'a Polynomial)>,
) -> Polynomial {
    if !m.is_small() {
        let mut acc = Polynomial::zero(m);
        for (a, b) in pairs {
            if !a.is_zero() && !b.is_zero() {
                acc.add_assign_scaled(&Polynomial::from_reduced(mul_coeffs(a.coeffs(), b.coeffs(), m), m), 1, 0);
            }
        }
        return acc;
    }
    let mut acc: Vec<u128> = Vec::new();
    for (a, b) in pairs {
        let (a, b) = (a.coeffs(), b.coeffs());
        if a.is_empty() || b.is_empty() {
            continue;
        }
        let len = a.len() + b.len() - 1;
        if acc.len() < len {
            acc.resize(len, 0);
        }
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (slot, &y) in acc[i..].iter_mut().zip(b) {
                *slot += (x * y) as u128;
            }
        }
    }
    Polynomial::from_reduced(acc.into_iter().map(|s| m.reduce_wide(s)).collect(), m)
}

/// Newton interpolation through distinct points.
fn interpolate(xs: &[u64], ys: &[u64], m: PrimeModulus) -> Result<Polynomial> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = m.sub(dd[i], dd[i - 1]);
            let den = m.sub(xs[i], xs[i - level]);
            dd[i] = m.mul(num, m.inv(den)?);
        }
    }
    let mut acc = Polynomial::zero(m);
    for i in (0..n).rev() {
        // acc = acc * (x - xs[i]) + dd[i]
        let mut next = acc.shift(1);
        next.sub_assign_scaled(&acc, xs[i], 0);
        next.add_assign_scaled(&Polynomial::one(m), dd[i], 0);
        acc = next;
    }
    Ok(acc)
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        self.matmul(rhs).expect("incompatible matrix product")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix {}x{} mod {} ", self.rows, self.cols, self.modulus)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;
    use proptest::prelude::*;

    fn z7() -> PrimeModulus {
        PrimeModulus::new(7).unwrap()
    }

    fn fin(v: &[i64]) -> Vec<Degree> {
        v.iter().map(|&d| Degree::Finite(d)).collect()
    }

    #[test]
    fn column_degrees_of_example_one() {
        let f = testdata::example1_f();
        assert_eq!(f.cdeg(None).unwrap(), fin(&[1, 3, 4, 4, 2]));
        let s = Shift::new(vec![1, 3, 4, 4, 2]);
        assert_eq!(testdata::example1_n().cdeg(Some(&s)).unwrap(), fin(&[5, 2]));
    }

    #[test]
    fn zero_column_has_sentinel_degree() {
        let a = PolyMatrix::from_signed(&[vec![vec![1], vec![]], vec![vec![0, 1], vec![]]], z7());
        let d = a.cdeg(Some(&Shift::new(vec![5, -3]))).unwrap();
        assert_eq!(d, vec![Degree::Finite(5), Degree::NegInfinity]);
        assert!(a.cdeg(Some(&Shift::zeros(3))).is_err());
    }

    #[test]
    fn row_degrees() {
        assert_eq!(testdata::example3_h().rdeg(None).unwrap(), fin(&[1, 1, 7]));
        let i3 = PolyMatrix::identity(3, z7());
        assert_eq!(i3.rdeg(Some(&Shift::zeros(3))).unwrap(), fin(&[0, 0, 0]));
        assert_eq!(i3.rdeg(Some(&Shift::new(vec![2, 5, 1]))).unwrap(), fin(&[2, 5, 1]));
    }

    #[test]
    fn shifted_leading_matrices() {
        let s = Shift::new(vec![1, 3, 4, 4, 2]);
        let lc = testdata::example1_n().lcoeff_shifted(&s, Side::Column).unwrap();
        let expected = ConstMatrix::from_signed(
            &[vec![0, 1], vec![-1, 0], vec![-3, 0], vec![0, 0], vec![0, 1]],
            z7(),
        );
        assert_eq!(lc, expected);

        let n2 = testdata::example3_n2();
        let lc = n2.lcoeff_at_row_degrees(&[1, 1, 7]).unwrap();
        let expected = ConstMatrix::from_signed(&[vec![1, 1, -2], vec![0, 1, 0], vec![0, 0, 1]], z7());
        assert_eq!(lc, expected);
        // Same thing through the column mode with the negated shift, since every
        // column of N2 has (-s)-degree exactly zero.
        let neg = Shift::new(vec![-1, -1, -7]);
        assert_eq!(n2.lcoeff_shifted(&neg, Side::Column).unwrap(), expected);

        let i3 = PolyMatrix::identity(3, z7());
        assert_eq!(i3.lcoeff_shifted(&Shift::zeros(3), Side::Column).unwrap(), ConstMatrix::identity(3, z7()));
        assert_eq!(i3.lcoeff_shifted(&Shift::zeros(3), Side::Row).unwrap(), ConstMatrix::identity(3, z7()));
    }

    #[test]
    fn reducedness() {
        let s = Shift::new(vec![1, 3, 4, 4, 2]);
        assert!(testdata::example1_n().is_reduced(&s, Side::Column).unwrap());
        assert!(testdata::example3_f().is_reduced(&Shift::zeros(3), Side::Column).unwrap());
        let bad = PolyMatrix::parse_rows(&[&["x", "x"], &["1", "1"]], z7()).unwrap();
        assert!(!bad.is_reduced(&Shift::zeros(2), Side::Column).unwrap());
        assert!(!bad.is_reduced(&Shift::zeros(2), Side::Row).unwrap());
    }

    #[test]
    fn products() {
        let f = testdata::example2_f();
        let fd = f.submatrix(3..5, 0..5);
        let g2 = fd.matmul(&testdata::example1_n()).unwrap();
        let expected = PolyMatrix::parse_rows(&[&["x^3 - 1", "0"], &["-x", "x"]], z7()).unwrap();
        assert_eq!(g2, expected);
        assert_eq!(&f * &PolyMatrix::identity(5, z7()), f);
        let n1 = testdata::example3_n1();
        assert_eq!(&testdata::example3_f() * &n1, testdata::example3_n2());
        assert!(f.matmul(&n1).is_err());
    }

    #[test]
    fn determinants() {
        assert!(PolyMatrix::identity(3, z7()).determinant().unwrap().is_one());
        let h = testdata::example3_h();
        let prod = &(&Polynomial::parse("x - 1", z7()).unwrap() * &Polynomial::parse("x + 1", z7()).unwrap())
            * &Polynomial::parse("x^7 + 1", z7()).unwrap();
        // p = 7 is below the degree bound 9, so this goes through Bareiss.
        assert_eq!(h.determinant().unwrap(), prod);
        let f = testdata::example3_f();
        let df = f.determinant().unwrap();
        assert_eq!(df.monic().unwrap(), prod);
        assert!(PolyMatrix::zero(2, 3, z7()).determinant().is_err());
    }

    #[test]
    fn unimodularity() {
        assert!(testdata::example3_n1().is_unimodular().unwrap());
        let d = PolyMatrix::parse_rows(&[&["x", "0"], &["0", "1"]], z7()).unwrap();
        assert!(!d.is_unimodular().unwrap());
        assert!(PolyMatrix::identity(4, z7()).is_unimodular().unwrap());
        assert!(PolyMatrix::zero(2, 3, z7()).is_unimodular().is_err());
    }

    #[test]
    fn rank_of_examples() {
        assert_eq!(testdata::example1_f().rank(), 3);
        assert_eq!(testdata::example1_n().rank(), 2);
        let bad = PolyMatrix::parse_rows(&[&["x", "x^2"], &["1", "x"]], z7()).unwrap();
        assert_eq!(bad.rank(), 1);
        assert_eq!(bad.rank_fraction_free(), 1);
        assert_eq!(testdata::example1_f().rank_fraction_free(), 3);
    }

    fn random_matrix(rows: usize, cols: usize, deg: usize, p: u64, seed: &[u64]) -> PolyMatrix {
        let m = PrimeModulus::new(p).unwrap();
        let mut it = seed.iter().cycle();
        let rows = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| Polynomial::from_coeffs((0..=deg).map(|_| *it.next().unwrap()).collect(), m))
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows, m).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn determinant_routes_agree(n in 1usize..5, deg in 0usize..4, seed in prop::collection::vec(0u64..65521, 1..200)) {
            let a = random_matrix(n, n, deg, 65521, &seed);
            prop_assert_eq!(a.determinant().unwrap(), a.determinant_fraction_free().unwrap());
        }

        #[test]
        fn rank_routes_agree(r in 1usize..5, c in 1usize..5, deg in 0usize..3, seed in prop::collection::vec(0u64..5, 1..120)) {
            let a = random_matrix(r, c, deg, 5, &seed);
            prop_assert_eq!(a.rank(), a.rank_fraction_free());
        }

        #[test]
        fn plain_cdeg_is_max_degree(r in 1usize..5, c in 1usize..5, seed in prop::collection::vec(0u64..7, 1..120)) {
            let a = random_matrix(r, c, 3, 7, &seed);
            let plain = a.cdeg(Some(&Shift::zeros(r))).unwrap();
            prop_assert_eq!(&plain, &a.cdeg(None).unwrap());
            for (j, d) in plain.iter().enumerate() {
                let m = (0..r).map(|i| a.get(i, j).degree()).max().unwrap();
                prop_assert_eq!(*d, m);
            }
        }

        #[test]
        fn reducedness_ignores_column_order(c in 1usize..5, seed in prop::collection::vec(0u64..7, 1..120), rot in 0usize..5) {
            let a = random_matrix(4, c, 2, 7, &seed);
            let s = Shift::new(vec![0, 1, 2, 0]);
            let perm: Vec<usize> = (0..c).map(|j| (j + rot) % c).collect();
            prop_assert_eq!(
                a.is_reduced(&s, Side::Column).unwrap(),
                a.select_columns(&perm).is_reduced(&s, Side::Column).unwrap()
            );
        }
    }
}
