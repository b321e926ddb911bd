#![allow(dead_code)]

use polyhermite::{PolyMatrix, Polynomial, PrimeModulus};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn modulus(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn z7() -> PrimeModulus {
    modulus(7)
}

pub fn parse(rows: &[&[&str]]) -> PolyMatrix {
    PolyMatrix::parse_rows(rows, z7()).unwrap()
}

pub fn random_poly(rng: &mut ChaCha8Rng, deg: usize, m: PrimeModulus) -> Polynomial {
    Polynomial::from_coeffs((0..=deg).map(|_| rng.gen_range(0..m.value())).collect(), m)
}

/// Entries of random degree up to `deg`, with a sprinkling of zeros.
pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, deg: usize, m: PrimeModulus) -> PolyMatrix {
    let rows = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_ratio(1, 8) {
                        Polynomial::zero(m)
                    } else {
                        let d = rng.gen_range(0..=deg);
                        random_poly(rng, d, m)
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows, m).unwrap()
}

pub fn random_nonsingular(rng: &mut ChaCha8Rng, n: usize, deg: usize, m: PrimeModulus) -> PolyMatrix {
    loop {
        let f = random_matrix(rng, n, n, deg, m);
        if f.is_nonsingular().unwrap() {
            return f;
        }
    }
}

/// Product of `count` random elementary column operations on `n` columns.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize, count: usize, m: PrimeModulus) -> PolyMatrix {
    let mut v = PolyMatrix::identity(n, m);
    for _ in 0..count {
        let mut e = PolyMatrix::identity(n, m);
        match rng.gen_range(0..3) {
            0 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                let d = rng.gen_range(0..3);
                e.set(j, i, random_poly(rng, d, m));
            }
            1 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                e.set(i, i, Polynomial::zero(m));
                e.set(j, j, Polynomial::zero(m));
                e.set(i, j, Polynomial::one(m));
                e.set(j, i, Polynomial::one(m));
            }
            _ => {
                let i = rng.gen_range(0..n);
                e.set(i, i, Polynomial::constant(rng.gen_range(1..m.value()), m));
            }
        }
        v = v.matmul(&e).unwrap();
    }
    v
}

pub fn finite(d: &[polyhermite::Degree]) -> Vec<i64> {
    d.iter().map(|d| d.finite().unwrap()).collect()
}
