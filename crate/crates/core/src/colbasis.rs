//! Column bases and column reduction by leading-matrix elimination.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::polymat::{PolyMatrix, Shift, Side};

/// A column-reduced basis of the module generated by the columns of `f`.
///
/// Has `rank(f)` columns, and no column degree exceeds the largest column
/// degree of `f`.
pub fn column_basis(f: &PolyMatrix) -> PolyMatrix {
    let mut cols: Vec<Vec<Polynomial>> =
        f.columns().into_iter().filter(|c| c.iter().any(|p| !p.is_zero())).collect();
    while let Some(step) = reduction_step(&cols, f.rows()) {
        apply(&mut cols, &step);
        cols.retain(|c| c.iter().any(|p| !p.is_zero()));
    }
    PolyMatrix::from_columns(f.rows(), cols, f.modulus())
}

/// A column-reduced matrix right-equivalent to the square nonsingular `f`.
pub fn column_reduce(f: &PolyMatrix) -> Result<PolyMatrix> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch("column reduction of a non-square matrix".into()));
    }
    let mut cols = f.columns();
    loop {
        if cols.iter().any(|c| c.iter().all(Polynomial::is_zero)) {
            return Err(Error::Singular);
        }
        match reduction_step(&cols, f.rows()) {
            Some(step) => apply(&mut cols, &step),
            None => return Ok(PolyMatrix::from_columns(f.rows(), cols, f.modulus())),
        }
    }
}

struct Step {
    target: usize,
    terms: Vec<(usize, u64, usize)>,
}

/// Finds a dependency among the leading column coefficients, if any, and
/// the combination cancelling the leading term of its highest-degree column.
fn reduction_step(cols: &[Vec<Polynomial>], rows: usize) -> Option<Step> {
    let first = cols.first()?;
    let m = first.first()?.modulus();
    let a = PolyMatrix::from_columns(rows, cols.to_vec(), m);
    let degs: Vec<i64> = a
        .cdeg(None)
        .expect("no shift")
        .iter()
        .map(|d| d.finite().expect("no zero columns"))
        .collect();
    let lead = a.lcoeff_shifted(&Shift::zeros(rows), Side::Column).expect("shift has the right length");
    let v = lead.nullspace().into_iter().next()?;
    let target = (0..cols.len())
        .filter(|&j| v[j] != 0)
        .max_by_key(|&j| (degs[j], j))
        .expect("nonzero kernel vector");
    let inv = m.inv(v[target]).expect("nonzero");
    let terms = (0..cols.len())
        .filter(|&j| j != target && v[j] != 0)
        .map(|j| (j, m.mul(v[j], inv), (degs[target] - degs[j]) as usize))
        .collect();
    Some(Step { target, terms })
}

fn apply(cols: &mut [Vec<Polynomial>], step: &Step) {
    let mut col = cols[step.target].clone();
    for &(j, c, k) in &step.terms {
        for (t, p) in col.iter_mut().zip(&cols[j]) {
            t.add_assign_scaled(p, c, k);
        }
    }
    cols[step.target] = col;
}
