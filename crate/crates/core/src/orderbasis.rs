//! Minimal approximant (order) bases by iterative order raising.

use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::poly::Polynomial;
use crate::polymat::{PolyMatrix, Shift};

/// Shift-reduced basis of `{ p : F p = 0 mod x^order }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderBasis {
    pub basis: PolyMatrix,
    pub order: usize,
    pub shift: Shift,
    /// Shifted column degrees of `basis`.
    pub degrees: Vec<i64>,
}

/// Computes an order basis of `f` (`m x n`) for `x^sigma` and a shift of length `n`.
pub fn order_basis(f: &PolyMatrix, sigma: usize, shift: &Shift) -> Result<OrderBasis> {
    if sigma == 0 {
        return Err(Error::InvalidInput("order must be positive".into()));
    }
    let mut state = Approximation::new(f, shift)?;
    while state.order() < sigma {
        state.raise();
    }
    Ok(state.finish())
}

/// Incremental state: a reduced basis of approximants to the current order
/// together with the residuals `F p_j / x^order`.
pub(crate) struct Approximation {
    modulus: PrimeModulus,
    shift: Shift,
    offset: i64,
    n: usize,
    columns: Vec<PolyVec>,
    residuals: Vec<PolyVec>,
    degrees: Vec<i64>,
    order: usize,
}

impl Approximation {
    pub(crate) fn new(f: &PolyMatrix, shift: &Shift) -> Result<Self> {
        let n = f.cols();
        if shift.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "shift has length {} but the matrix has {n} columns",
                shift.len()
            )));
        }
        let modulus = f.modulus();
        let (normalized, offset) = shift.normalized();
        let columns = (0..n)
            .map(|j| {
                let mut unit = PolyVec { len: n, data: vec![0; n] };
                unit.data[j] = 1;
                unit
            })
            .collect();
        let residuals = f.columns().iter().map(|c| PolyVec::from_polys(c)).collect();
        Ok(Approximation {
            modulus,
            shift: shift.clone(),
            offset,
            n,
            columns,
            residuals,
            degrees: normalized.values().to_vec(),
            order: 0,
        })
    }

    pub(crate) fn order(&self) -> usize {
        self.order
    }

    pub(crate) fn kernel_columns(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.residuals[j].is_zero()).collect()
    }

    pub(crate) fn column(&self, j: usize) -> Vec<Polynomial> {
        self.columns[j].to_polys(self.modulus)
    }

    /// Coefficient of `x^t` in entry `i` of column `j`.
    pub(crate) fn coeff(&self, j: usize, i: usize, t: i64) -> u64 {
        if t < 0 {
            return 0;
        }
        self.columns[j].coeff(i, t as usize)
    }

    /// Shifted degree of column `j` for the caller's (unnormalized) shift.
    pub(crate) fn degree(&self, j: usize) -> i64 {
        self.degrees[j] - self.offset
    }

    /// Raises the order of approximation by one.
    pub(crate) fn raise(&mut self) {
        let m = self.modulus;
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&j| (self.degrees[j], j));

        // Pivots as (row, column, inverse of the pivot entry, reduced coefficient vector).
        let mut pivots: Vec<(usize, usize, u64, Vec<u64>)> = Vec::new();
        let mut is_pivot = vec![false; self.n];
        for &j in &order {
            let Some(mut v) = self.residuals[j].block(0).map(<[u64]>::to_vec) else {
                continue;
            };
            for (row, pj, inv, w) in &pivots {
                let c = v[*row];
                if c == 0 {
                    continue;
                }
                let factor = m.mul(c, *inv);
                for (a, &b) in v.iter_mut().zip(w) {
                    *a = m.sub(*a, m.mul(factor, b));
                }
                let (t, s) = two_mut(&mut self.columns, j, *pj);
                t.sub_scaled(s, factor, m);
                let (t, s) = two_mut(&mut self.residuals, j, *pj);
                t.sub_scaled(s, factor, m);
            }
            if let Some(row) = v.iter().position(|&c| c != 0) {
                let inv = m.inv(v[row]).expect("nonzero");
                pivots.push((row, j, inv, v));
                is_pivot[j] = true;
            }
        }
        for j in 0..self.n {
            if is_pivot[j] {
                self.columns[j].mul_x();
                self.degrees[j] += 1;
            } else {
                self.residuals[j].div_x();
            }
        }
        self.order += 1;
    }

    pub(crate) fn finish(self) -> OrderBasis {
        let m = self.modulus;
        let columns = self.columns.iter().map(|c| c.to_polys(m)).collect();
        let basis = PolyMatrix::from_columns(self.n, columns, m);
        OrderBasis {
            basis,
            order: self.order,
            degrees: self.degrees.iter().map(|d| d - self.offset).collect(),
            shift: self.shift,
        }
    }
}

/// A vector of polynomials stored as consecutive coefficient vectors:
/// block `t` holds the coefficients of `x^t`. No trailing zero block.
#[derive(Clone, Debug)]
struct PolyVec {
    len: usize,
    data: Vec<u64>,
}

impl PolyVec {
    fn from_polys(entries: &[Polynomial]) -> Self {
        let len = entries.len();
        let blocks = entries.iter().map(|p| p.coeffs().len()).max().unwrap_or(0);
        let mut data = vec![0; len * blocks];
        for (i, p) in entries.iter().enumerate() {
            for (t, &c) in p.coeffs().iter().enumerate() {
                data[t * len + i] = c;
            }
        }
        PolyVec { len, data }
    }

    fn to_polys(&self, m: PrimeModulus) -> Vec<Polynomial> {
        (0..self.len)
            .map(|i| Polynomial::from_coeffs(self.data.iter().skip(i).step_by(self.len.max(1)).copied().collect(), m))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.data.is_empty()
    }

    fn block(&self, t: usize) -> Option<&[u64]> {
        self.data.get(t * self.len..(t + 1) * self.len)
    }

    fn coeff(&self, i: usize, t: usize) -> u64 {
        self.data.get(t * self.len + i).copied().unwrap_or(0)
    }

    /// `self -= factor * other`.
    fn sub_scaled(&mut self, other: &PolyVec, factor: u64, m: PrimeModulus) {
        if factor == 0 || other.data.is_empty() {
            return;
        }
        if self.data.len() < other.data.len() {
            self.data.resize(other.data.len(), 0);
        }
        let p = m.value();
        let neg = p - factor;
        if m.is_small() {
            for (a, &b) in self.data.iter_mut().zip(&other.data) {
                *a = (*a + neg * b) % p;
            }
        } else {
            for (a, &b) in self.data.iter_mut().zip(&other.data) {
                *a = m.add(*a, m.mul(neg, b));
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.data.len() >= self.len && self.len > 0 && self.data[self.data.len() - self.len..].iter().all(|&c| c == 0) {
            self.data.truncate(self.data.len() - self.len);
        }
    }

    fn mul_x(&mut self) {
        if !self.data.is_empty() {
            self.data.splice(0..0, std::iter::repeat_n(0, self.len));
        }
    }

    fn div_x(&mut self) {
        debug_assert!(self.block(0).is_none_or(|b| b.iter().all(|&c| c == 0)));
        let cut = self.len.min(self.data.len());
        self.data.drain(..cut);
    }
}

fn two_mut<T>(v: &mut [T], a: usize, b: usize) -> (&mut T, &T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&mut hi[0], &lo[b])
    }
}

/// `true` when every entry of `F P` is divisible by `x^sigma`.
pub fn is_approximant(f: &PolyMatrix, p: &PolyMatrix, sigma: usize) -> Result<bool> {
    Ok(f.matmul(p)?.truncate(sigma).is_zero())
}
