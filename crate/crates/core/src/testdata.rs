//! Worked matrices over `Z/7Z` shared by the unit tests.

use crate::field::PrimeModulus;
use crate::polymat::PolyMatrix;

pub fn z7() -> PrimeModulus {
    PrimeModulus::new(7).unwrap()
}

fn parse(rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::parse_rows(rows, z7()).unwrap()
}

/// Top three rows of the 5x5 example.
pub fn example1_f() -> PolyMatrix {
    parse(&[
        &["x", "-x^3", "-2x^4", "2x", "-x^2"],
        &["1", "-1", "-2x", "2", "-x"],
        &["-3", "3x^2 + x", "2x^2", "-x^4 + 1", "3x"],
    ])
}

/// Kernel basis of [`example1_f`] for the shift `(1, 3, 4, 4, 2)`.
pub fn example1_n() -> PolyMatrix {
    parse(&[
        &["-1", "x"],
        &["-x^2", "0"],
        &["-3x", "0"],
        &["-3", "0"],
        &["0", "1"],
    ])
}

pub fn example2_f() -> PolyMatrix {
    parse(&[
        &["x", "-x^3", "-2x^4", "2x", "-x^2"],
        &["1", "-1", "-2x", "2", "-x"],
        &["-3", "3x^2 + x", "2x^2", "-x^4 + 1", "3x"],
        &["0", "1", "x^2 + 2x - 2", "x^3 + 2x - 2", "0"],
        &["1", "-x^2 + 2", "-2x^3 - 3x + 3", "2x + 2", "0"],
    ])
}

pub fn example3_f() -> PolyMatrix {
    parse(&[
        &["2x^3 - 2x^2 + 3x - 3", "-2x^3 + 2x^2", "-2x + 2"],
        &["x^3 + 3x^2 - x + 2", "-2x^2 + x + 1", "-x^3 - x^2 - 2"],
        &["-3x^3 + x - 1", "-x", "1"],
    ])
}

pub fn example3_h() -> PolyMatrix {
    parse(&[
        &["x - 1", "0", "0"],
        &["1", "x + 1", "0"],
        &["-3x^3", "x^5 - x", "x^7 + 1"],
    ])
}

/// Unimodular transform with `F N1 = N2`.
pub fn example3_n1() -> PolyMatrix {
    parse(&[
        &["1", "2x^2 + 1", "2x^4"],
        &["1", "2x^2 + 2", "2x^4 + x^2"],
        &["1", "2x^2 + 1", "2x^4 + 1"],
    ])
}

pub fn example3_n2() -> PolyMatrix {
    parse(&[
        &["x - 1", "x - 1", "-2x + 2"],
        &["1", "x + 2", "-2"],
        &["-3x^3", "x^5 - 3x^3 - x", "x^7 - x^3 + 1"],
    ])
}
