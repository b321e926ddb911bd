//! Slow reference computations: elimination-based Hermite forms, module
//! equality, and brute-force kernels and approximants from coefficient
//! linear systems.

use crate::dense::ConstMatrix;
use crate::error::{Error, Result};
use crate::hermite::HermiteForm;
use crate::poly::Polynomial;
use crate::polymat::{PolyMatrix, Shift};

/// Hermite form by extended-gcd column elimination, row by row from the top.
pub fn naive_hermite(f: &PolyMatrix) -> Result<HermiteForm> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch("Hermite form of a non-square matrix".into()));
    }
    let (h, pivots) = echelon(f);
    if pivots.len() < f.rows() {
        return Err(Error::Singular);
    }
    Ok(HermiteForm::new_unchecked(h))
}

/// Canonical column echelon form of the module generated by the columns of
/// `a`: pivots monic, entries left of a pivot reduced modulo it, zero
/// columns dropped.
pub fn column_echelon(a: &PolyMatrix) -> PolyMatrix {
    echelon(a).0
}

fn echelon(a: &PolyMatrix) -> (PolyMatrix, Vec<usize>) {
    let rows = a.rows();
    let mut cols = a.columns();
    let mut pivots = Vec::new();
    let mut k = 0;
    for i in 0..rows {
        if k == cols.len() {
            break;
        }
        let Some(first) = (k..cols.len()).find(|&j| !cols[j][i].is_zero()) else {
            continue;
        };
        cols.swap(k, first);
        for j in k + 1..cols.len() {
            if !cols[j][i].is_zero() {
                combine(&mut cols, k, j, i);
            }
        }
        let inv = a.modulus().inv(cols[k][i].leading_coeff()).expect("nonzero pivot");
        for p in cols[k].iter_mut() {
            *p = p.scale(inv);
        }
        for j in 0..k {
            let (q, _) = cols[j][i].divrem(&cols[k][i]).expect("nonzero pivot");
            if !q.is_zero() {
                let (pivot, target) = pick(&mut cols, k, j);
                for (t, p) in target.iter_mut().zip(pivot) {
                    *t = &*t - &(&q * p);
                }
            }
        }
        pivots.push(i);
        k += 1;
    }
    cols.truncate(k);
    (PolyMatrix::from_columns(rows, cols, a.modulus()), pivots)
}

/// Unimodular 2x2 step leaving `gcd` in column `k` and zero in column `j` at row `i`.
fn combine(cols: &mut [Vec<Polynomial>], k: usize, j: usize, i: usize) {
    let a = cols[k][i].clone();
    let b = cols[j][i].clone();
    let (g, u, v) = a.xgcd(&b).expect("operands not both zero");
    let a_g = a.divrem(&g).expect("gcd is nonzero").0;
    let b_g = b.divrem(&g).expect("gcd is nonzero").0;
    let (ck, cj) = (cols[k].clone(), cols[j].clone());
    for r in 0..ck.len() {
        cols[k][r] = &(&u * &ck[r]) + &(&v * &cj[r]);
        cols[j][r] = &(&b_g * &ck[r]) - &(&a_g * &cj[r]);
    }
}

fn pick(cols: &mut [Vec<Polynomial>], pivot: usize, target: usize) -> (&Vec<Polynomial>, &mut Vec<Polynomial>) {
    debug_assert!(target < pivot);
    let (lo, hi) = cols.split_at_mut(pivot);
    (&hi[0], &mut lo[target])
}

/// `true` iff the columns of `a` and `b` generate the same `K[x]`-module.
pub fn module_equal(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch("modules in different ambient spaces".into()));
    }
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch(a.modulus().value(), b.modulus().value()));
    }
    Ok(column_echelon(a) == column_echelon(b))
}

/// `true` iff every column of `b` lies in the module generated by `a`.
pub fn module_contains(a: &PolyMatrix, b: &PolyMatrix) -> Result<bool> {
    module_equal(a, &a.hstack(b)?)
}

/// Default degree bound for [`brute_kernel`]: the sum of the column degrees.
pub fn default_kernel_bound(f: &PolyMatrix) -> usize {
    f.cdeg(None)
        .unwrap()
        .iter()
        .filter_map(|d| d.finite())
        .sum::<i64>() as usize
}

/// A `K`-basis of all kernel vectors with entries of degree at most `bound`.
pub fn brute_kernel(f: &PolyMatrix, bound: usize) -> Vec<Vec<Polynomial>> {
    let bounds = vec![bound as i64; f.cols()];
    solve_truncated(f, &bounds, None)
}

/// A `K`-basis of kernel vectors `p` with `cdeg_s p <= t`.
pub fn brute_kernel_shifted(f: &PolyMatrix, shift: &Shift, t: i64) -> Vec<Vec<Polynomial>> {
    let bounds: Vec<i64> = shift.values().iter().map(|s| t - s).collect();
    solve_truncated(f, &bounds, None)
}

/// A `K`-basis of approximants `F p = 0 mod x^sigma` with `cdeg_s p <= t`.
pub fn brute_approximants(f: &PolyMatrix, sigma: usize, shift: &Shift, t: i64) -> Vec<Vec<Polynomial>> {
    let bounds: Vec<i64> = shift.values().iter().map(|s| t - s).collect();
    solve_truncated(f, &bounds, Some(sigma))
}

/// Shifted degrees of a minimal kernel basis, found by measuring the
/// dimensions of the degree-bounded kernel slices. Searches `t <= max_degree`.
pub fn brute_minimal_kernel_degrees(f: &PolyMatrix, shift: &Shift, max_degree: i64) -> Vec<i64> {
    let target = f.cols() - f.rank();
    let start = shift.values().iter().copied().min().unwrap_or(0);
    let mut degrees = Vec::new();
    let (mut prev_dim, mut prev_count) = (0usize, 0usize);
    for t in start..=max_degree {
        let dim = brute_kernel_shifted(f, shift, t).len();
        let count = dim - prev_dim;
        degrees.extend(std::iter::repeat_n(t, count - prev_count));
        if count == target {
            break;
        }
        prev_dim = dim;
        prev_count = count;
    }
    degrees
}

/// Nullspace of the coefficient system of `F p` (optionally modulo `x^sigma`)
/// over vectors whose entry `j` has degree at most `bounds[j]`.
fn solve_truncated(f: &PolyMatrix, bounds: &[i64], sigma: Option<usize>) -> Vec<Vec<Polynomial>> {
    let m = f.modulus();
    let (rows, cols) = (f.rows(), f.cols());
    let mut unknowns = Vec::new();
    for (j, &b) in bounds.iter().enumerate() {
        for t in 0..=b.max(-1) {
            unknowns.push((j, t as usize));
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    let fdeg = f.degree().finite().unwrap_or(0).max(0) as usize;
    let top = bounds.iter().copied().max().unwrap_or(0).max(0) as usize + fdeg + 1;
    let span = sigma.map_or(top, |s| s.min(top));
    let mut system = ConstMatrix::zeros(rows * span, unknowns.len(), m);
    for (u, &(j, t)) in unknowns.iter().enumerate() {
        for i in 0..rows {
            for (e, &c) in f.get(i, j).coeffs().iter().enumerate() {
                if e + t < span {
                    system[(i * span + e + t, u)] = c;
                }
            }
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut col = vec![Polynomial::zero(m); cols];
            for (u, &(j, t)) in unknowns.iter().enumerate() {
                if v[u] != 0 {
                    col[j].add_assign_scaled(&Polynomial::one(m), v[u], t);
                }
            }
            col
        })
        .collect()
}
