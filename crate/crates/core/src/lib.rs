//! Hermite normal forms of nonsingular polynomial matrices over prime fields.
//!
//! The diagonal of the column Hermite form is found first by alternating
//! column bases and minimal kernel bases. The remaining entries are then
//! recovered from a single shifted kernel computation after the problem has
//! been reduced to balanced degrees.

pub mod colbasis;
pub mod dense;
pub mod error;
pub mod field;
pub mod hermite;
pub mod kernel;
pub mod oracle;
pub mod orderbasis;
pub mod poly;
pub mod polymat;
pub mod series;

#[cfg(test)]
mod testdata;

pub use dense::ConstMatrix;
pub use error::{Error, Result};
pub use field::{FieldElement, PrimeModulus};
pub use poly::{Degree, Polynomial};
pub use polymat::{PolyMatrix, Shift, Side};
