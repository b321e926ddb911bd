//! Reproducible random nonsingular instances.

use polyhermite::{PolyMatrix, Polynomial, PrimeModulus};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Attempts before giving up on finding a nonsingular draw.
pub const MAX_ATTEMPTS: u64 = 1000;

/// Uniform entries of degree at most `deg`, redrawn from the next seed
/// until the determinant is nonzero.
pub fn random_nonsingular(n: usize, deg: usize, modulus: PrimeModulus, seed: u64) -> Option<PolyMatrix> {
    (0..MAX_ATTEMPTS).find_map(|attempt| {
        let f = random_matrix(n, n, deg, modulus, seed.wrapping_add(attempt));
        f.is_nonsingular().unwrap().then_some(f)
    })
}

pub fn random_matrix(rows: usize, cols: usize, deg: usize, modulus: PrimeModulus, seed: u64) -> PolyMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = modulus.value();
    let entries = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| Polynomial::from_coeffs((0..=deg).map(|_| rng.gen_range(0..p)).collect(), modulus))
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(entries, modulus).expect("entries share the modulus")
}
