//! Column Hermite normal forms.

use crate::colbasis::{column_basis, column_reduce};
use crate::error::{Error, Result};
use crate::field::PrimeModulus;
use crate::kernel::{minimal_kernel_basis, KernelBasis};
use crate::poly::Polynomial;
use crate::polymat::{PolyMatrix, Shift};
use crate::series::reduce_expansion;

/// A lower triangular matrix with monic diagonal whose off-diagonal entries
/// have degree below the diagonal entry of their row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    matrix: PolyMatrix,
}

impl HermiteForm {
    /// Validates the shape conditions.
    pub fn new(matrix: PolyMatrix) -> Result<Self> {
        Self::check(&matrix)?;
        Ok(HermiteForm { matrix })
    }

    pub(crate) fn new_unchecked(matrix: PolyMatrix) -> Self {
        debug_assert!(Self::check(&matrix).is_ok(), "{matrix}");
        HermiteForm { matrix }
    }

    /// Checks squareness, triangularity, monic diagonal and reduced rows.
    pub fn check(h: &PolyMatrix) -> Result<()> {
        let bad = |why: String| Err(Error::Inconsistent(why));
        if !h.is_square() {
            return bad(format!("{}x{} is not square", h.rows(), h.cols()));
        }
        for i in 0..h.rows() {
            let d = h.get(i, i);
            if !d.is_monic() {
                return bad(format!("diagonal entry {i} is not monic"));
            }
            for j in i + 1..h.cols() {
                if !h.get(i, j).is_zero() {
                    return bad(format!("entry ({i}, {j}) above the diagonal is nonzero"));
                }
            }
            for j in 0..i {
                if h.get(i, j).degree() >= d.degree() {
                    return bad(format!("entry ({i}, {j}) is not reduced by the diagonal"));
                }
            }
        }
        Ok(())
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> PolyMatrix {
        self.matrix
    }

    pub fn diagonal(&self) -> Vec<Polynomial> {
        (0..self.matrix.rows()).map(|i| self.matrix.get(i, i).clone()).collect()
    }

    pub fn diagonal_degrees(&self) -> Vec<usize> {
        self.diagonal().iter().map(|p| p.deg().expect("monic")).collect()
    }
}

/// Monic diagonal entries of the Hermite form of a square nonsingular matrix.
///
/// Splits off the top half of the rows: a column basis of that slice and the
/// bottom rows times a kernel basis of it are two smaller matrices whose
/// Hermite diagonals, concatenated, form the diagonal sought.
pub fn hermite_diagonal(f: &PolyMatrix) -> Result<Vec<Polynomial>> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch("Hermite form of a non-square matrix".into()));
    }
    let n = f.rows();
    match n {
        0 => return Ok(Vec::new()),
        1 => {
            let p = f.get(0, 0);
            return if p.is_zero() { Err(Error::Singular) } else { Ok(vec![p.monic()?]) };
        }
        _ => {}
    }
    let degrees = f.cdeg(None)?;
    if degrees.iter().any(|d| !d.is_finite()) {
        return Err(Error::Singular);
    }
    let shift = Shift::new(degrees.iter().map(|d| d.finite().unwrap()).collect());
    let top = n.div_ceil(2);
    let upper = f.submatrix(0..top, 0..n);
    let lower = f.submatrix(top..n, 0..n);
    let g1 = column_basis(&upper);
    if g1.cols() != top {
        return Err(Error::Singular);
    }
    let kernel = minimal_kernel_basis(&upper, &shift)?;
    let g2 = lower.matmul(&kernel.basis)?;
    let mut diag = hermite_diagonal(&g1)?;
    diag.extend(hermite_diagonal(&g2)?);
    Ok(diag)
}

/// Expansion of degree targets `s` into blocks of degree at most `d_max`.
///
/// Block `i` holds the columns `x^e e_i` for `e` in `0, r_i, r_i + d_max, ...,
/// r_i + (q_i - 1) d_max` where `s_i = q_i d_max + r_i` with `0 < r_i <= d_max`
/// whenever `q_i > 0`. The shift gives each column the degree allowed to
/// its coefficient: `r_i` for the first, `d_max` for the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionPlan {
    pub e: PolyMatrix,
    pub sstar: Shift,
    pub q: Vec<usize>,
    pub r: Vec<usize>,
    pub d_max: usize,
    /// Exponent of each column of `e` together with its row.
    pub columns: Vec<(usize, usize)>,
}

pub fn build_expansion(s: &[usize], d_max: usize, modulus: PrimeModulus) -> Result<ExpansionPlan> {
    if d_max == 0 {
        return Err(Error::InvalidInput("d_max must be positive".into()));
    }
    let n = s.len();
    let (mut q, mut r, mut columns, mut sstar) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for (i, &si) in s.iter().enumerate() {
        let (mut qi, mut ri) = (si / d_max, si % d_max);
        if ri == 0 && qi > 0 {
            qi -= 1;
            ri = d_max;
        }
        columns.push((i, 0));
        sstar.push(ri as i64);
        for t in 0..qi {
            columns.push((i, ri + t * d_max));
            sstar.push(d_max as i64);
        }
        q.push(qi);
        r.push(ri);
    }
    let mut e = PolyMatrix::zero(n, columns.len(), modulus);
    for (c, &(i, k)) in columns.iter().enumerate() {
        e.set(i, c, Polynomial::monomial(1, k, modulus));
    }
    Ok(ExpansionPlan { e, sstar: Shift::new(sstar), q, r, d_max, columns })
}

impl ExpansionPlan {
    /// Splits each row `i` of `h` (entries of degree at most `s_i`) into the
    /// pieces `h_E` with `E h_E = h` and entry degrees bounded by the shift.
    pub fn split(&self, h: &PolyMatrix) -> Result<PolyMatrix> {
        if h.rows() != self.e.rows() {
            return Err(Error::DimensionMismatch("matrix does not match the expansion".into()));
        }
        let mut out = PolyMatrix::zero(self.columns.len(), h.cols(), h.modulus());
        for (c, &(i, k)) in self.columns.iter().enumerate() {
            let next = self.columns.get(c + 1).filter(|(row, _)| *row == i).map(|&(_, e)| e);
            for j in 0..h.cols() {
                let p = h.get(i, j).shift_down(k);
                out.set(c, j, match next {
                    Some(e) => p.truncate(e - k),
                    None => p,
                });
            }
        }
        Ok(out)
    }
}

/// Hermite form of the module generated by `a`, whose Hermite form is known
/// to have diagonal degrees `s`.
///
/// Reads the coefficient of `x^{s_i}` in row `i`, brings that constant matrix
/// into reduced column echelon form and applies the same column operations.
pub fn echelon_recover(a: &PolyMatrix, s: &[usize]) -> Result<HermiteForm> {
    let n = a.rows();
    if s.len() != n {
        return Err(Error::DimensionMismatch(format!("{} degrees for {n} rows", s.len())));
    }
    let a = a.select_columns(&a.nonzero_columns());
    for i in 0..n {
        for j in 0..a.cols() {
            if a.get(i, j).degree() > s[i] as i64 {
                return Err(Error::Inconsistent(format!("entry ({i}, {j}) exceeds degree {}", s[i])));
            }
        }
    }
    let degrees: Vec<i64> = s.iter().map(|&d| d as i64).collect();
    let lead = a.lcoeff_at_row_degrees(&degrees)?;
    let (u, _, pivots) = lead.column_echelon_transform();
    if pivots.len() != n {
        return Err(Error::Inconsistent(format!("leading matrix has rank {} < {n}", pivots.len())));
    }
    let h = a.matmul(&PolyMatrix::from_const(&u))?.submatrix(0..n, 0..n);
    HermiteForm::new(h)
}

/// Intermediate values of [`hermite_form`].
#[derive(Clone, Debug)]
pub struct HermiteTrace {
    /// Column-reduced equivalent of the input.
    pub reduced: PolyMatrix,
    pub diagonal: Vec<Polynomial>,
    pub plan: Option<ExpansionPlan>,
    /// Remainder `R` and quotient `Q` of `E = F Q + R`.
    pub remainder: Option<PolyMatrix>,
    pub quotient: Option<PolyMatrix>,
    /// Kernel basis of `[F, -R]`.
    pub kernel: Option<KernelBasis>,
    /// Columns of the bottom block of the kernel within the degree bounds.
    pub selected: Option<PolyMatrix>,
    /// Nonzero columns of `E` times the selected block.
    pub expanded: Option<PolyMatrix>,
    pub form: HermiteForm,
}

/// The Hermite normal form of a square nonsingular matrix.
pub fn hermite_form(f: &PolyMatrix) -> Result<HermiteForm> {
    hermite_trace(f).map(|t| t.form)
}

/// [`hermite_form`] keeping its intermediate results.
pub fn hermite_trace(f: &PolyMatrix) -> Result<HermiteTrace> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch("Hermite form of a non-square matrix".into()));
    }
    let n = f.rows();
    let m = f.modulus();
    let reduced = column_reduce(f)?;
    let diagonal = hermite_diagonal(&reduced)?;
    let s: Vec<usize> = diagonal.iter().map(|p| p.deg().expect("monic")).collect();
    let d_max = reduced.degree().finite().unwrap_or(0) as usize;
    let mut trace = HermiteTrace {
        reduced,
        diagonal,
        plan: None,
        remainder: None,
        quotient: None,
        kernel: None,
        selected: None,
        expanded: None,
        form: HermiteForm::new_unchecked(PolyMatrix::identity(n, m)),
    };
    if d_max == 0 {
        return Ok(trace);
    }
    let plan = build_expansion(&s, d_max, m)?;
    let (r, q) = reduce_expansion(&trace.reduced, &plan.e)?;
    let stacked = trace.reduced.hstack(&r.neg())?;
    let shift = Shift::uniform(n, -2 * d_max as i64).concat(&plan.sstar.negated());
    let kernel = minimal_kernel_basis(&stacked, &shift)?;
    let nbar = plan.e.cols();
    let bottom = kernel.basis.submatrix(n..n + nbar, 0..kernel.basis.cols());
    let keep: Vec<usize> = (0..bottom.cols())
        .filter(|&j| (0..nbar).all(|i| bottom.get(i, j).degree() <= plan.sstar.values()[i]))
        .collect();
    let selected = bottom.select_columns(&keep);
    let product = plan.e.matmul(&selected)?;
    let expanded = product.select_columns(&product.nonzero_columns());
    trace.form = echelon_recover(&expanded, &s)?;
    trace.plan = Some(plan);
    trace.remainder = Some(r);
    trace.quotient = Some(q);
    trace.kernel = Some(kernel);
    trace.selected = Some(selected);
    trace.expanded = Some(expanded);
    Ok(trace)
}
