//! GF(p^m) arithmetic on integer-encoded elements.
//!
//! An element is an integer in [0, q) whose base-p digits are the
//! coefficients of its polynomial representative in the basis
//! {1, a, ..., a^{m-1}}. Prime fields take the direct modular path;
//! extension fields reduce polynomial products modulo an irreducible
//! modulus.

use serde::Serialize;
use thiserror::Error;

use crate::bound::prime_power_decompose;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("q={0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("q={0} exceeds the supported maximum 2^20")]
    TooLarge(u64),
    #[error("modulus has degree {got}, expected {want}")]
    WrongDegree { got: usize, want: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("modulus coefficient {0} out of range for GF({1})")]
    CoefficientOutOfRange(u64, u64),
    #[error("modulus is reducible over GF({0})")]
    Reducible(u64),
    #[error("element {0} out of range for GF({1})")]
    ElementOutOfRange(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
}

pub type FieldElement = u64;

/// A finite field GF(p^m) with a fixed irreducible modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    pub p: u64,
    pub m: u32,
    pub q: u64,
    /// Modulus coefficients, constant term first, length m + 1, monic.
    pub modulus: Vec<u64>,
}

const MAX_Q: u64 = 1 << 20;

/// Polynomial arithmetic over GF(p), coefficients low-degree first.
mod poly {
    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn deg(v: &[u64]) -> Option<usize> {
        v.iter().rposition(|&c| c != 0)
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of a modulo b, b nonzero.
    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let db = deg(b).expect("divisor must be nonzero");
        let lead_inv = mod_inv(b[db], p);
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let factor = r[dr] * lead_inv % p;
            for i in 0..=db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - factor * b[i] % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mod_inv(a: u64, p: u64) -> u64 {
        // p is prime and a != 0 mod p
        pow_mod(a % p, p - 2, p)
    }

    pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    }

    /// Extended Euclid: returns (g, s) with s*a = g mod b, g = gcd(a, b)
    /// made monic.
    pub fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut r0: Vec<u64> = a.to_vec();
        let mut r1: Vec<u64> = b.to_vec();
        trim(&mut r0);
        trim(&mut r1);
        let mut s0: Vec<u64> = vec![1];
        let mut s1: Vec<u64> = vec![];
        while !r1.is_empty() {
            let (quot, rem) = div_rem(&r0, &r1, p);
            let qs = mul(&quot, &s1, p);
            let new_s = sub(&s0, &qs, p);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = new_s;
        }
        // normalize gcd to monic
        if let Some(d) = deg(&r0) {
            let inv = mod_inv(r0[d], p);
            r0 = r0.iter().map(|&c| c * inv % p).collect();
            s0 = s0.iter().map(|&c| c * inv % p).collect();
            trim(&mut r0);
            trim(&mut s0);
        }
        (r0, s0)
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let mut out = vec![0u64; n];
        for i in 0..n {
            let ai = a.get(i).copied().unwrap_or(0);
            let bi = b.get(i).copied().unwrap_or(0);
            out[i] = (ai + p - bi) % p;
        }
        trim(&mut out);
        out
    }

    pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
        let mut r: Vec<u64> = a.to_vec();
        trim(&mut r);
        let db = deg(b).expect("divisor must be nonzero");
        let lead_inv = mod_inv(b[db], p);
        let mut quot = vec![0u64; r.len().saturating_sub(db)];
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let factor = r[dr] * lead_inv % p;
            quot[dr - db] = factor;
            for i in 0..=db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - factor * b[i] % p) % p;
            }
            trim(&mut r);
        }
        trim(&mut quot);
        (quot, r)
    }
}

/// Irreducibility over GF(p) by trial division with all monic
/// polynomials of degree 1..=deg/2.
fn is_irreducible(modulus: &[u64], p: u64) -> bool {
    let deg = match poly::deg(modulus) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // enumerate monic divisor candidates of degree d
        let mut count = 1u64;
        for _ in 0..d {
            count *= p;
        }
        for idx in 0..count {
            let mut cand = vec![0u64; d + 1];
            cand[d] = 1;
            let mut rest = idx;
            for coeff in cand.iter_mut().take(d) {
                *coeff = rest % p;
                rest /= p;
            }
            if poly::rem(modulus, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree m over GF(p),
/// coefficients compared low-degree first.
fn default_modulus(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        // the polynomial x; prime-field degenerate case
        return vec![0, 1];
    }
    let m = m as usize;
    let mut count = 1u64;
    for _ in 0..m {
        count *= p;
    }
    for idx in 0..count {
        let mut cand = vec![0u64; m + 1];
        cand[m] = 1;
        let mut rest = idx;
        for coeff in cand.iter_mut().take(m) {
            *coeff = rest % p;
            rest /= p;
        }
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Constructs GF(q), optionally with a user-supplied modulus.
pub fn make_field(q: u64, modulus: Option<Vec<u64>>) -> Result<FieldSpec, FieldError> {
    let (p, m) = prime_power_decompose(q).ok_or(FieldError::NotAPrimePower(q))?;
    if q > MAX_Q {
        return Err(FieldError::TooLarge(q));
    }
    let modulus = match modulus {
        None => default_modulus(p, m),
        Some(mut coeffs) => {
            poly::trim(&mut coeffs);
            if m == 1 && coeffs == vec![0, 1] {
                coeffs
            } else {
                if coeffs.len() != m as usize + 1 {
                    return Err(FieldError::WrongDegree {
                        got: coeffs.len().saturating_sub(1),
                        want: m as usize,
                    });
                }
                if coeffs[m as usize] != 1 {
                    return Err(FieldError::NotMonic);
                }
                if let Some(&bad) = coeffs.iter().find(|&&c| c >= p) {
                    return Err(FieldError::CoefficientOutOfRange(bad, q));
                }
                if m > 1 && !is_irreducible(&coeffs, p) {
                    return Err(FieldError::Reducible(p));
                }
                coeffs
            }
        }
    };
    Ok(FieldSpec { p, m, q, modulus })
}

impl FieldSpec {
    pub fn check_element(&self, a: FieldElement) -> Result<(), FieldError> {
        if a < self.q {
            Ok(())
        } else {
            Err(FieldError::ElementOutOfRange(a, self.q))
        }
    }

    fn to_poly(&self, a: FieldElement) -> Vec<u64> {
        let mut digits = Vec::with_capacity(self.m as usize);
        let mut rest = a;
        for _ in 0..self.m {
            digits.push(rest % self.p);
            rest /= self.p;
        }
        let mut v = digits;
        poly::trim(&mut v);
        v
    }

    fn from_poly(&self, v: &[u64]) -> FieldElement {
        let mut acc = 0u64;
        for &c in v.iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    /// Digit-wise addition mod p.
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.q && b < self.q);
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let mut out = 0u64;
        let (mut a, mut b) = (a, b);
        let mut place = 1u64;
        for _ in 0..self.m {
            out += (a % self.p + b % self.p) % self.p * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        debug_assert!(a < self.q);
        if self.m == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let mut out = 0u64;
        let mut a = a;
        let mut place = 1u64;
        for _ in 0..self.m {
            out += (self.p - a % self.p) % self.p * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.q && b < self.q);
        if self.m == 1 {
            return a * b % self.p;
        }
        let prod = poly::mul(&self.to_poly(a), &self.to_poly(b), self.p);
        let red = poly::rem(&prod, &self.modulus, self.p);
        self.from_poly(&red)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.check_element(a)?;
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if self.m == 1 {
            return Ok(poly::mod_inv(a, self.p));
        }
        let (g, s) = poly::ext_gcd(&self.to_poly(a), &self.modulus, self.p);
        debug_assert_eq!(g, vec![1], "modulus is irreducible, gcd must be 1");
        let s = poly::rem(&s, &self.modulus, self.p);
        Ok(self.from_poly(&s))
    }

    pub fn pow(&self, mut a: FieldElement, mut e: u64) -> FieldElement {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
}
