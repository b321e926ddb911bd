//! Dense univariate polynomials over `Z/pZ`, coefficients stored low to high.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};

/// A (possibly shifted) degree. The zero polynomial has degree
/// [`Degree::NegInfinity`], which compares below every finite value and
/// absorbs any integer offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(i64),
}

impl Degree {
    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }

    /// Adds an integer shift; `-inf` stays `-inf`.
    pub fn shifted(self, by: i64) -> Degree {
        match self {
            Degree::Finite(d) => Degree::Finite(d + by),
            Degree::NegInfinity => Degree::NegInfinity,
        }
    }
}

impl From<i64> for Degree {
    fn from(d: i64) -> Self {
        Degree::Finite(d)
    }
}

impl PartialEq<i64> for Degree {
    fn eq(&self, other: &i64) -> bool {
        *self == Degree::Finite(*other)
    }
}

impl PartialOrd<i64> for Degree {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&Degree::Finite(*other)))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Finite(d) => write!(f, "{d}"),
            Degree::NegInfinity => write!(f, "-inf"),
        }
    }
}

/// A polynomial over `Z/pZ`. The coefficient vector never ends in a zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<u64>,
    modulus: PrimeModulus,
}

impl Polynomial {
    pub fn zero(modulus: PrimeModulus) -> Self {
        Polynomial { coeffs: Vec::new(), modulus }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::constant(1, modulus)
    }

    pub fn constant(c: u64, modulus: PrimeModulus) -> Self {
        Self::monomial(c, 0, modulus)
    }

    /// `c * x^k`.
    pub fn monomial(c: u64, k: usize, modulus: PrimeModulus) -> Self {
        let c = modulus.reduce(c);
        if c == 0 {
            return Self::zero(modulus);
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Polynomial { coeffs, modulus }
    }

    /// Builds from raw coefficients, reducing them and trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<u64>, modulus: PrimeModulus) -> Self {
        let coeffs = coeffs.into_iter().map(|c| modulus.reduce(c)).collect();
        Self::from_reduced(coeffs, modulus)
    }

    pub fn from_signed(coeffs: &[i64], modulus: PrimeModulus) -> Self {
        let coeffs = coeffs.iter().map(|&c| modulus.from_i64(c)).collect();
        Self::from_reduced(coeffs, modulus)
    }

    /// Caller guarantees every coefficient is already in `[0, p)`.
    pub(crate) fn from_reduced(mut coeffs: Vec<u64>, modulus: PrimeModulus) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs, modulus }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u64> {
        self.coeffs
    }

    /// Coefficient of `x^i`; zero past the end (and for negative `i`).
    pub fn coeff(&self, i: i64) -> u64 {
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n as i64 - 1),
        }
    }

    /// Degree as an index, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus;
        self.coeffs.iter().rev().fold(0, |acc, &c| m.add(m.mul(acc, x), c))
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.value(), other.modulus.value()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_assign_scaled(other, 1, 0);
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut out = self.clone();
        out.sub_assign_scaled(other, 1, 0);
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(Polynomial::from_reduced(
            mul_coeffs(&self.coeffs, &other.coeffs, self.modulus),
            self.modulus,
        ))
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let m = self.modulus;
        let c = m.reduce(c);
        if c == 0 {
            return Polynomial::zero(m);
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|&a| m.mul(a, c)).collect(),
            modulus: m,
        }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs, modulus: self.modulus }
    }

    /// Remainder modulo `x^k`.
    pub fn truncate(&self, k: usize) -> Polynomial {
        let k = k.min(self.coeffs.len());
        Polynomial::from_reduced(self.coeffs[..k].to_vec(), self.modulus)
    }

    /// Exact quotient by `x^k`; the low coefficients are dropped.
    pub fn shift_down(&self, k: usize) -> Polynomial {
        if k >= self.coeffs.len() {
            return Polynomial::zero(self.modulus);
        }
        Polynomial { coeffs: self.coeffs[k..].to_vec(), modulus: self.modulus }
    }

    /// `x^len * p(1/x)` for `len >= deg p`: coefficient `t` of the result is
    /// coefficient `len - t` of `self`.
    pub fn reverse(&self, len: usize) -> Polynomial {
        debug_assert!(self.deg().is_none_or(|d| d <= len));
        let coeffs = (0..=len).map(|t| self.coeff((len - t) as i64)).collect();
        Polynomial::from_reduced(coeffs, self.modulus)
    }

    /// `self += c * x^k * other`.
    pub fn add_assign_scaled(&mut self, other: &Polynomial, c: u64, k: usize) {
        let m = self.modulus;
        debug_assert_eq!(m, other.modulus);
        if other.is_zero() || c == 0 {
            return;
        }
        let need = other.coeffs.len() + k;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        if c == 1 {
            for (a, &b) in self.coeffs[k..].iter_mut().zip(&other.coeffs) {
                *a = m.add(*a, b);
            }
        } else {
            for (a, &b) in self.coeffs[k..].iter_mut().zip(&other.coeffs) {
                *a = m.add(*a, m.mul(b, c));
            }
        }
        self.normalize();
    }

    /// `self -= c * x^k * other`.
    pub fn sub_assign_scaled(&mut self, other: &Polynomial, c: u64, k: usize) {
        let c = self.modulus.neg(self.modulus.reduce(c));
        self.add_assign_scaled(other, c, k);
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check(divisor)?;
        let m = self.modulus;
        let Some(db) = divisor.deg() else {
            return Err(Error::DivisionByZero);
        };
        let Some(da) = self.deg() else {
            return Ok((Polynomial::zero(m), Polynomial::zero(m)));
        };
        if da < db {
            return Ok((Polynomial::zero(m), self.clone()));
        }
        let lead_inv = m.inv(divisor.leading_coeff())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; da - db + 1];
        for i in (0..=da - db).rev() {
            let c = m.mul(rem[i + db], lead_inv);
            quot[i] = c;
            if c != 0 {
                for (j, &b) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = m.sub(rem[i + j], m.mul(c, b));
                }
            }
        }
        rem.truncate(db);
        Ok((Polynomial::from_reduced(quot, m), Polynomial::from_reduced(rem, m)))
    }

    /// Quotient of a division known to be exact.
    pub(crate) fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Inconsistent("inexact polynomial division".into()));
        }
        Ok(q)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::InvalidInput("the zero polynomial has no monic form".into()));
        }
        let inv = self.modulus.inv(self.leading_coeff())?;
        Ok(self.scale(inv))
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    /// Extended gcd: returns `(g, u, v)` with `g = u*self + v*other`, `g` monic
    /// (or zero when both inputs are zero).
    pub fn xgcd(&self, other: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        self.check(other)?;
        let m = self.modulus;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Polynomial::one(m), Polynomial::zero(m));
        let (mut v0, mut v1) = (Polynomial::zero(m), Polynomial::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let u2 = &u0 - &(&q * &u1);
            let v2 = &v0 - &(&q * &v1);
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        if r0.is_zero() {
            return Ok((r0, u0, v0));
        }
        let inv = m.inv(r0.leading_coeff())?;
        Ok((r0.scale(inv), u0.scale(inv), v0.scale(inv)))
    }

    pub fn leading_element(&self) -> FieldElement {
        FieldElement::new(self.leading_coeff(), self.modulus)
    }

    /// Renders with symmetric residues, e.g. `x^2 - 1`.
    pub fn to_pretty_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let m = self.modulus;
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let s = m.to_signed(c);
            let (neg, mag) = (s < 0, s.unsigned_abs());
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = match (i, mag) {
                (0, _) => mag.to_string(),
                (1, 1) => "x".to_string(),
                (1, _) => format!("{mag}*x"),
                (_, 1) => format!("x^{i}"),
                _ => format!("{mag}*x^{i}"),
            };
            out.push_str(&body);
        }
        out
    }
}

impl Polynomial {
    /// Parses expressions such as `2*x^3 - x + 1` or `3x^2+4`.
    pub fn parse(text: &str, modulus: PrimeModulus) -> Result<Polynomial> {
        let bad = |why: &str| Error::InvalidInput(format!("cannot parse polynomial {text:?}: {why}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut acc = Polynomial::zero(modulus);
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if rest.starts_with('-') || rest.starts_with('+') {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            if term.is_empty() {
                return Err(bad("missing term"));
            }
            let (coef, power) = match term.find('x') {
                None => (term, 0usize),
                Some(at) => {
                    let c = term[..at].trim_end_matches('*');
                    let tail = &term[at + 1..];
                    let k = if tail.is_empty() {
                        1
                    } else {
                        tail.strip_prefix('^')
                            .and_then(|k| k.parse().ok())
                            .ok_or_else(|| bad("bad exponent"))?
                    };
                    (if c.is_empty() { "1" } else { c }, k)
                }
            };
            let c: u128 = coef.parse().map_err(|_| bad("bad coefficient"))?;
            let mut c = modulus.reduce_wide(c);
            if negative {
                c = modulus.neg(c);
            }
            acc.add_assign_scaled(&Polynomial::one(modulus), c, power);
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty_string())
    }
}

/// Schoolbook product with wide accumulation.
pub(crate) fn mul_coeffs(a: &[u64], b: &[u64], m: PrimeModulus) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (a, b) = if a.len() < b.len() { (a, b) } else { (b, a) };
    let len = a.len() + b.len() - 1;
    let mut acc = vec![0u128; len];
    if m.is_small() {
        // Each product is below 2^64, so a u128 accumulator never overflows.
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (slot, &y) in acc[i..].iter_mut().zip(b) {
                *slot += (x * y) as u128;
            }
        }
    } else {
        // Products are below 2^124; reduce every 15 rows of the shorter factor.
        for (i, &x) in a.iter().enumerate() {
            if x != 0 {
                for (slot, &y) in acc[i..].iter_mut().zip(b) {
                    *slot += x as u128 * y as u128;
                }
            }
            if i % 15 == 14 {
                for slot in acc.iter_mut() {
                    *slot %= m.value() as u128;
                }
            }
        }
    }
    acc.into_iter().map(|s| m.reduce_wide(s)).collect()
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials over different moduli")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials over different moduli")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials over different moduli")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let m = self.modulus;
        Polynomial { coeffs: self.coeffs.iter().map(|&c| m.neg(c)).collect(), modulus: m }
    }
}
