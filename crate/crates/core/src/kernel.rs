//! Shifted minimal kernel bases.

use crate::error::Result;
use crate::orderbasis::Approximation;
use crate::poly::Polynomial;
use crate::polymat::{PolyMatrix, Shift, Side};

/// Columns generate `{ p : F p = 0 }` and are shift-column-reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    pub basis: PolyMatrix,
    pub shift: Shift,
    /// Shifted column degrees, ascending.
    pub degrees: Vec<i64>,
}

/// Minimal kernel basis of `f` for a shift with one entry per column.
///
/// Raises the order of an approximant basis until as many of its columns
/// have zero residual as the kernel has rank. Those columns then generate
/// the kernel: any kernel vector is a combination of the approximant basis,
/// and the remaining residual columns are independent.
pub fn minimal_kernel_basis(f: &PolyMatrix, shift: &Shift) -> Result<KernelBasis> {
    let n = f.cols();
    let mut state = Approximation::new(f, shift)?;
    let target = n - f.rank();
    let mut found = state.kernel_columns();
    while found.len() < target {
        state.raise();
        found = state.kernel_columns();
    }
    let m = f.modulus();
    let leading_row = |j: usize| {
        let d = state.degree(j);
        (0..n)
            .find(|&i| state.coeff(j, i, d - shift.values()[i]) != 0)
            .unwrap_or(n)
    };
    let mut keys: Vec<(i64, usize, usize)> =
        found.iter().map(|&j| (state.degree(j), leading_row(j), j)).collect();
    keys.sort_unstable();
    let columns: Vec<Vec<Polynomial>> = keys.iter().map(|&(_, _, j)| state.column(j)).collect();
    let basis = PolyMatrix::from_columns(n, columns, m);
    debug_assert!(basis.cols() == 0 || basis.is_reduced(shift, Side::Column).unwrap());
    Ok(KernelBasis {
        basis,
        shift: shift.clone(),
        degrees: keys.iter().map(|k| k.0).collect(),
    })
}
