//! JSON matrix documents.
//!
//! ```json
//! {
//!   "modulus": 7,
//!   "rows": 2,
//!   "cols": 2,
//!   "entries": [
//!     [1], [],
//!     [], [1]
//!   ]
//! }
//! ```
//!
//! Entries are listed row by row, each as its coefficients from the constant
//! term up; the zero polynomial is `[]`.

use polyhermite::{PolyMatrix, Polynomial, PrimeModulus};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Invalid { field: String, message: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    modulus: u64,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u64>>,
}

pub fn parse_matrix(text: &str) -> Result<PolyMatrix, FormatError> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| FormatError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    let invalid = |field: String, message: String| FormatError::Invalid { field, message };
    let modulus = PrimeModulus::new(file.modulus).map_err(|e| invalid("modulus".into(), e.to_string()))?;
    let expected = file.rows.checked_mul(file.cols).ok_or_else(|| invalid("rows".into(), "dimensions overflow".into()))?;
    if file.entries.len() != expected {
        return Err(invalid(
            "entries".into(),
            format!("expected {expected} entries for a {}x{} matrix, found {}", file.rows, file.cols, file.entries.len()),
        ));
    }
    let mut m = PolyMatrix::zero(file.rows, file.cols, modulus);
    for (k, coeffs) in file.entries.into_iter().enumerate() {
        if let Some((t, c)) = coeffs.iter().enumerate().find(|(_, &c)| c >= file.modulus) {
            return Err(invalid(
                format!("entries[{k}][{t}]"),
                format!("coefficient {c} is not below the modulus {}", file.modulus),
            ));
        }
        let (i, j) = (k / file.cols, k % file.cols);
        m.set(i, j, Polynomial::from_coeffs(coeffs, modulus));
    }
    Ok(m)
}

fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(at) => message[..at].to_string(),
        None => message.to_string(),
    }
}

/// One matrix row per line.
pub fn serialize_matrix(m: &PolyMatrix) -> String {
    let mut out = format!(
        "{{\n  \"modulus\": {},\n  \"rows\": {},\n  \"cols\": {},\n  \"entries\": [",
        m.modulus().value(),
        m.rows(),
        m.cols()
    );
    let lines: Vec<String> = (0..m.rows())
        .filter(|_| m.cols() > 0)
        .map(|i| {
            let row: Vec<String> = m.row(i).iter().map(|p| format!("{:?}", p.coeffs())).collect();
            format!("    {}", row.join(", "))
        })
        .collect();
    if lines.is_empty() {
        out.push_str("]\n}\n");
    } else {
        out.push('\n');
        out.push_str(&lines.join(",\n"));
        out.push_str("\n  ]\n}\n");
    }
    out
}
