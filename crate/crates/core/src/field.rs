//! Arithmetic in `Z/pZ` for a runtime prime `p` that fits in a machine word.
//!
//! Raw residues are plain `u64` values in `[0, p)`; [`PrimeModulus`] carries the
//! operations. [`FieldElement`] bundles a residue with its modulus for callers
//! that want mismatches caught.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Upper bound (exclusive) on supported moduli.
pub const MAX_MODULUS: u64 = 1 << 62;

/// An odd prime `p` with `2 < p < 2^62`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 {
            return Err(Error::InvalidModulus(p, "modulus must be an odd prime greater than 2"));
        }
        if p >= MAX_MODULUS {
            return Err(Error::InvalidModulus(p, "modulus must be below 2^62"));
        }
        if !is_prime(p) {
            return Err(Error::InvalidModulus(p, "modulus is not prime"));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    /// True when products of two residues fit in a `u64`.
    #[inline]
    pub(crate) fn is_small(self) -> bool {
        self.0 < (1 << 32)
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.0
    }

    #[inline]
    pub(crate) fn reduce_wide(self, a: u128) -> u64 {
        (a % self.0 as u128) as u64
    }

    /// Maps a signed integer to its residue.
    pub fn from_i64(self, a: i64) -> u64 {
        let r = a.rem_euclid(self.0 as i64);
        r as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`, handy for printing.
    pub fn to_signed(self, a: u64) -> i64 {
        if a > self.0 / 2 {
            a as i64 - self.0 as i64
        } else {
            a as i64
        }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        if self.is_small() {
            (a * b) % self.0
        } else {
            ((a as u128 * b as u128) % self.0 as u128) as u64
        }
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.0 as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(t0.rem_euclid(self.0 as i128) as u64)
    }

    pub fn element(self, value: u64) -> FieldElement {
        FieldElement {
            value: self.reduce(value),
            modulus: self,
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, a, m);
        }
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A residue tagged with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    modulus: PrimeModulus,
}

impl FieldElement {
    pub fn new(value: u64, modulus: PrimeModulus) -> Self {
        modulus.element(value)
    }

    pub fn from_i64(value: i64, modulus: PrimeModulus) -> Self {
        FieldElement {
            value: modulus.from_i64(value),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: FieldElement) -> Result<PrimeModulus> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.0, other.modulus.0));
        }
        Ok(self.modulus)
    }

    pub fn checked_add(self, other: FieldElement) -> Result<FieldElement> {
        let m = self.same_field(other)?;
        Ok(FieldElement { value: m.add(self.value, other.value), modulus: m })
    }

    pub fn checked_sub(self, other: FieldElement) -> Result<FieldElement> {
        let m = self.same_field(other)?;
        Ok(FieldElement { value: m.sub(self.value, other.value), modulus: m })
    }

    pub fn checked_mul(self, other: FieldElement) -> Result<FieldElement> {
        let m = self.same_field(other)?;
        Ok(FieldElement { value: m.mul(self.value, other.value), modulus: m })
    }

    pub fn inv(self) -> Result<FieldElement> {
        Ok(FieldElement {
            value: self.modulus.inv(self.value)?,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Operator forms panic on mismatched moduli; use the `checked_*` methods to
// get an error instead.
impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("field elements from different moduli")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self.checked_sub(rhs).expect("field elements from different moduli")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("field elements from different moduli")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z7() -> PrimeModulus {
        PrimeModulus::new(7).unwrap()
    }

    #[test]
    fn arithmetic_mod_7() {
        let m = z7();
        assert_eq!((m.element(3) + m.element(5)).value(), 1);
        assert_eq!((m.element(0) - m.element(3)).value(), 4);
        assert_eq!((m.element(6) * m.element(6)).value(), 1);
        assert_eq!((-m.element(3)).value(), 4);
    }

    #[test]
    fn inverses_mod_7() {
        let m = z7();
        assert_eq!(m.element(1).inv().unwrap().value(), 1);
        assert_eq!(m.element(6).inv().unwrap().value(), 6);
        assert_eq!(m.element(3).inv().unwrap().value(), 5);
        assert_eq!(m.element(0).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_moduli() {
        let a = z7().element(3);
        let b = PrimeModulus::new(11).unwrap().element(3);
        assert_eq!(a.checked_add(b), Err(Error::ModulusMismatch(7, 11)));
        assert!(a.checked_mul(b).is_err());
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimeModulus::new(2).is_err());
        assert!(PrimeModulus::new(9).is_err());
        assert!(PrimeModulus::new(65521).is_ok());
        assert!(PrimeModulus::new((1 << 61) - 1).is_ok());
        assert!(PrimeModulus::new(1 << 62).is_err());
        // 3215031751 is a strong pseudoprime to bases 2, 3, 5, 7.
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        let trial = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial(n), "n = {n}");
        }
    }

    fn modulus_strategy() -> impl Strategy<Value = PrimeModulus> {
        prop::sample::select(vec![3u64, 7, 65521, 4_294_967_311, (1 << 61) - 1])
            .prop_map(|p| PrimeModulus::new(p).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn inverse_round_trips(m in modulus_strategy(), a in any::<u64>()) {
            let a = m.element(a);
            prop_assume!(!a.is_zero());
            let inv = a.inv().unwrap();
            prop_assert_eq!((inv * a).value(), 1);
            prop_assert_eq!(inv.inv().unwrap(), a);
        }

        #[test]
        fn add_mul_laws(m in modulus_strategy(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
            let (a, b, c) = (m.element(a), m.element(b), m.element(c));
            prop_assert_eq!(a + b, b + a);
            prop_assert_eq!(a * b, b * a);
            prop_assert_eq!((a + b) + c, a + (b + c));
            prop_assert_eq!((a * b) * c, a * (b * c));
            prop_assert_eq!(a * (b + c), a * b + a * c);
        }
    }
}
