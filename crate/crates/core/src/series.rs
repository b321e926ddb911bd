//! Power-series inversion of reversed matrices and division with remainder
//! by column-reduced matrices.
//!
//! For `F` column reduced with column degrees `d`, the reversal
//! `F*(x) = F(1/x) x^d` has an invertible constant term. Reversing
//! `x^k e_i = F g + c` turns it into `e_i = F* g* + x^{k-d_max+1} c*`, so a
//! truncated inverse of `F*` yields the quotient and the remainder.

use std::collections::HashMap;

use crate::dense::ConstMatrix;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::polymat::PolyMatrix;

/// Columnwise reversal of a matrix with no zero column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReversedMatrix {
    pub fstar: PolyMatrix,
    /// Column degrees of the original matrix.
    pub degrees: Vec<usize>,
}

impl ReversedMatrix {
    /// Undoes the reversal.
    pub fn restore(&self) -> PolyMatrix {
        reverse_with(&self.fstar, &self.degrees)
    }
}

/// Prefix of the power series `(F*)^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedInverse {
    pub g: PolyMatrix,
    pub order: usize,
}

pub fn reverse_columns(f: &PolyMatrix) -> Result<ReversedMatrix> {
    let degrees = f
        .cdeg(None)?
        .iter()
        .enumerate()
        .map(|(j, d)| {
            d.finite()
                .map(|d| d as usize)
                .ok_or_else(|| Error::InvalidInput(format!("column {j} is zero")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ReversedMatrix { fstar: reverse_with(f, &degrees), degrees })
}

fn reverse_with(f: &PolyMatrix, degrees: &[usize]) -> PolyMatrix {
    let mut out = f.clone();
    for i in 0..f.rows() {
        for (j, &d) in degrees.iter().enumerate() {
            out.set(i, j, f.get(i, j).reverse(d));
        }
    }
    out
}

/// `(F*)^{-1} mod x^order` by Newton iteration.
pub fn truncated_inverse(r: &ReversedMatrix, order: usize) -> Result<TruncatedInverse> {
    let fstar = &r.fstar;
    if !fstar.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    if order == 0 {
        return Err(Error::InvalidInput("order must be positive".into()));
    }
    let n = fstar.rows();
    let m = fstar.modulus();
    let seed = fstar.coefficient(0).inverse().map_err(|_| {
        Error::InvalidInput("constant term of the reversed matrix is singular; the source is not column reduced".into())
    })?;
    let mut x = PolyMatrix::from_const(&seed);
    let two = PolyMatrix::identity(n, m).map(|p| p.scale(2));
    let mut prec = 1;
    while prec < order {
        prec = (2 * prec).min(order);
        let fx = fstar.truncate(prec).matmul(&x)?.truncate(prec);
        x = x.matmul(&two.checked_sub(&fx)?)?.truncate(prec);
    }
    Ok(TruncatedInverse { g: x, order })
}

/// Quotient `g` and remainder `c` with `x^k e_i = F g + c`, `deg c < d_max`.
///
/// `F` must be square, nonsingular and column reduced, and `k >= d_max`.
pub fn remainder_power(f: &PolyMatrix, k: usize, i: usize) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
    Divider::new(f, k)?.remainder(k, i)
}

/// `E = F Q + R` with `deg R < d_max`; returns `(R, Q)`.
///
/// Terms of `E` of degree below `d_max` pass into `R` unchanged.
pub fn reduce_expansion(f: &PolyMatrix, e: &PolyMatrix) -> Result<(PolyMatrix, PolyMatrix)> {
    if e.rows() != f.rows() {
        return Err(Error::DimensionMismatch(format!(
            "expansion has {} rows, divisor has {}",
            e.rows(),
            f.rows()
        )));
    }
    let m = f.modulus();
    let n = f.rows();
    let top = e.degree().finite().unwrap_or(0).max(0) as usize;
    let dmax = f.degree().finite().unwrap_or(0) as usize;
    let mut r = PolyMatrix::zero(n, e.cols(), m);
    let mut q = PolyMatrix::zero(n, e.cols(), m);
    if e.is_zero() {
        return Ok((r, q));
    }
    let mut divider = if top >= dmax { Some(Divider::new(f, top)?) } else { None };
    let mut cache: HashMap<(usize, usize), (Vec<Polynomial>, Vec<Polynomial>)> = HashMap::new();
    for col in 0..e.cols() {
        for i in 0..n {
            for (t, &a) in e.get(i, col).coeffs().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if t < dmax {
                    r.get_mut(i, col).add_assign_scaled(&Polynomial::one(m), a, t);
                    continue;
                }
                let divider = divider.as_mut().expect("degree reaches d_max");
                if let std::collections::hash_map::Entry::Vacant(e) = cache.entry((t, i)) {
                    e.insert(divider.remainder(t, i)?);
                }
                let (g, c) = &cache[&(t, i)];
                for row in 0..n {
                    q.get_mut(row, col).add_assign_scaled(&g[row], a, 0);
                    r.get_mut(row, col).add_assign_scaled(&c[row], a, 0);
                }
            }
        }
    }
    Ok((r, q))
}

/// Remainders of powers `x^k e_i` for `k` up to a fixed maximum.
///
/// Only the columns of `(F*)^{-1}` that are asked for get expanded, one
/// coefficient at a time against the inverse of the constant term.
struct Divider {
    reversed: ReversedMatrix,
    lead_inverse: ConstMatrix,
    coefficients: Vec<ConstMatrix>,
    series: HashMap<usize, Vec<Vec<u64>>>,
    dmax: usize,
    top: usize,
    order: usize,
}

impl Divider {
    fn new(f: &PolyMatrix, top: usize) -> Result<Self> {
        if !f.is_square() {
            return Err(Error::DimensionMismatch("division by a non-square matrix".into()));
        }
        let reversed = reverse_columns(f)?;
        let lead_inverse = reversed
            .fstar
            .coefficient(0)
            .inverse()
            .map_err(|_| Error::InvalidInput("divisor is not column reduced".into()))?;
        let dmax = reversed.degrees.iter().copied().max().unwrap_or(0);
        let dmin = reversed.degrees.iter().copied().min().unwrap_or(0);
        if top < dmax {
            return Err(Error::InvalidInput(format!("power {top} is below the largest column degree {dmax}")));
        }
        let coefficients = (0..=dmax).map(|u| reversed.fstar.coefficient(u)).collect();
        Ok(Divider {
            reversed,
            lead_inverse,
            coefficients,
            series: HashMap::new(),
            dmax,
            top,
            order: top - dmin + 1,
        })
    }

    /// Coefficients of column `i` of `(F*)^{-1}` up to the working order.
    fn series_column(&mut self, i: usize) -> &[Vec<u64>] {
        let (coefficients, inv, order) = (&self.coefficients, &self.lead_inverse, self.order);
        self.series.entry(i).or_insert_with(|| {
            let n = inv.rows();
            let m = inv.modulus();
            let mut y: Vec<Vec<u64>> = Vec::with_capacity(order);
            for t in 0..order {
                let mut rhs = vec![0u64; n];
                if t == 0 {
                    rhs[i] = 1;
                }
                for (u, c) in coefficients.iter().enumerate().skip(1).take_while(|(u, _)| *u <= t) {
                    let prev = &y[t - u];
                    for (r, slot) in rhs.iter_mut().enumerate() {
                        let dot = (0..n).fold(0, |acc, j| m.add(acc, m.mul(c[(r, j)], prev[j])));
                        *slot = m.sub(*slot, dot);
                    }
                }
                y.push((0..n).map(|r| (0..n).fold(0, |acc, j| m.add(acc, m.mul(inv[(r, j)], rhs[j])))).collect());
            }
            y
        })
    }

    fn remainder(&mut self, k: usize, i: usize) -> Result<(Vec<Polynomial>, Vec<Polynomial>)> {
        let n = self.reversed.fstar.rows();
        let m = self.reversed.fstar.modulus();
        if i >= n {
            return Err(Error::InvalidInput(format!("column index {i} out of range")));
        }
        if k < self.dmax || k > self.top {
            return Err(Error::InvalidInput(format!("power {k} outside [{}, {}]", self.dmax, self.top)));
        }
        let degrees = self.reversed.degrees.clone();
        let column = self.series_column(i);
        // g*_j = (G e_i)_j mod x^{k - d_j + 1}
        let gstar: Vec<Polynomial> = (0..n)
            .map(|j| Polynomial::from_coeffs(column[..k - degrees[j] + 1].iter().map(|y| y[j]).collect(), m))
            .collect();
        let g = (0..n).map(|j| gstar[j].reverse(k - degrees[j])).collect();
        let gcol = PolyMatrix::from_columns(n, vec![gstar], m);
        let fg = self.reversed.fstar.matmul(&gcol)?;
        let shift = k + 1 - self.dmax;
        let c = (0..n)
            .map(|row| {
                let mut v = -fg.get(row, 0);
                if row == i {
                    v.add_assign_scaled(&Polynomial::one(m), 1, 0);
                }
                debug_assert!(v.truncate(shift).is_zero());
                match self.dmax {
                    0 => Polynomial::zero(m),
                    d => v.shift_down(shift).reverse(d - 1),
                }
            })
            .collect();
        Ok((g, c))
    }
}
