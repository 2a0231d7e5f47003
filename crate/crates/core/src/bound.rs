//! Exact evaluation of the two GV-type existence inequalities.
//!
//! All arithmetic is arbitrary-precision integer; the inequalities are
//! decided by cross-multiplied integer comparison, never by floating
//! point. Field sizes like 25^96 appear in the parameter ranges of
//! interest, far beyond any machine word.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// Parameters of the symplectic-space bound (new theorem).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundParamsNew {
    pub q: u64,
    pub n: u64,
    pub ell: u64,
    pub c: u64,
    pub d_x: u64,
    pub d_z: u64,
}

/// Parameters of the conventional direct-product bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundParamsOld {
    pub q: u64,
    pub n: u64,
    pub k1: u64,
    pub k2: u64,
    pub c: u64,
    pub d_z: u64,
    pub d_x: u64,
}

/// An exact nonnegative rational, reported unreduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRatio {
    pub numerator: BigUint,
    pub denominator: BigUint,
}

impl ExactRatio {
    pub fn new(numerator: BigUint, denominator: BigUint) -> Self {
        assert!(!denominator.is_zero(), "denominator must be positive");
        ExactRatio {
            numerator,
            denominator,
        }
    }

    /// True iff the ratio is strictly less than one.
    pub fn less_than_one(&self) -> bool {
        self.numerator < self.denominator
    }
}

/// Returns true iff q = p^m for some prime p and m >= 1.
pub fn is_prime_power(q: u64) -> bool {
    prime_power_decompose(q).is_some()
}

/// Factors q as p^m with p prime, or None if q is not a prime power.
pub fn prime_power_decompose(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0u64;
    let mut rest = q;
    let mut d = 2u64;
    while d * d <= rest {
        if rest % d == 0 {
            p = d;
            while rest % d == 0 {
                rest /= d;
            }
            break;
        }
        d += 1;
    }
    if p == 0 {
        // q itself is prime
        return Some((q, 1));
    }
    if rest != 1 {
        return None; // second prime factor
    }
    let mut m = 0u32;
    let mut acc = 1u64;
    while acc < q {
        acc *= p;
        m += 1;
    }
    (acc == q).then_some((p, m))
}

/// Binomial coefficient C(n, k), exact; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of vectors in F_q^n of Hamming weight at most d-1:
/// sum_{i=0}^{d-1} C(n,i) (q-1)^i.
pub fn ball_sum(n: u64, d: u64, q: u64) -> BigUint {
    assert!(d >= 1 && n >= 1 && q >= 2);
    let qm1 = BigUint::from(q - 1);
    let mut total = BigUint::zero();
    let mut pow = BigUint::one();
    for i in 0..d {
        total += binomial(n, i) * &pow;
        pow *= &qm1;
    }
    total
}

impl BoundParamsNew {
    pub fn validate(&self) -> Result<(), BoundError> {
        let err = |m: String| Err(BoundError::InvalidParameters(m));
        if !is_prime_power(self.q) {
            return err(format!("q={} is not a prime power", self.q));
        }
        if self.n < 1 {
            return err("n must be >= 1".into());
        }
        if self.ell < 1 || self.ell >= self.n + self.c {
            return err(format!(
                "l={} must satisfy 1 <= l < n + c = {}",
                self.ell,
                self.n + self.c
            ));
        }
        if 2 * self.c > self.ell {
            return err(format!("c > l/2 (c={}, l={})", self.c, self.ell));
        }
        if self.d_x < 1 || self.d_z < 1 {
            return err("dx and dz must be >= 1".into());
        }
        if self.d_x - 1 > self.n {
            return err(format!("dx-1={} exceeds n={}", self.d_x - 1, self.n));
        }
        if self.d_z - 1 > self.n {
            return err(format!("dz-1={} exceeds n={}", self.d_z - 1, self.n));
        }
        Ok(())
    }
}

impl BoundParamsOld {
    pub fn validate(&self) -> Result<(), BoundError> {
        let err = |m: String| Err(BoundError::InvalidParameters(m));
        if !is_prime_power(self.q) {
            return err(format!("q={} is not a prime power", self.q));
        }
        if self.n < 1 {
            return err("n must be >= 1".into());
        }
        if self.k1 > self.n || self.k2 > self.n {
            return err(format!(
                "k1={} and k2={} must not exceed n={}",
                self.k1, self.k2, self.n
            ));
        }
        if self.k1 + self.k2 > self.n + self.c {
            return err(format!(
                "c={} < k1 + k2 - n = {}",
                self.c,
                self.k1 + self.k2 - self.n
            ));
        }
        if self.c > self.k1.min(self.k2) {
            return err(format!(
                "c={} > min(k1, k2) = {}",
                self.c,
                self.k1.min(self.k2)
            ));
        }
        if self.d_x < 1 || self.d_z < 1 {
            return err("dx and dz must be >= 1".into());
        }
        if self.d_x - 1 > self.n {
            return err(format!("dx-1={} exceeds n={}", self.d_x - 1, self.n));
        }
        if self.d_z - 1 > self.n {
            return err(format!("dz-1={} exceeds n={}", self.d_z - 1, self.n));
        }
        Ok(())
    }
}

fn pow_q(q: u64, e: u64) -> BigUint {
    BigUint::from(q).pow(u32::try_from(e).expect("exponent fits in u32"))
}

/// Evaluates the symplectic-space inequality
/// (q^{2n-l} - q^{l-2c}) (S_x S_z - 1) / (q^{2n} - 1) < 1
/// with S_d = ball_sum(n, d, q). The boolean is decided by pure integer
/// comparison of numerator and denominator.
pub fn check_new(p: &BoundParamsNew) -> Result<(bool, ExactRatio), BoundError> {
    p.validate()?;
    let factor = pow_q(p.q, 2 * p.n - p.ell) - pow_q(p.q, p.ell - 2 * p.c);
    let sx = ball_sum(p.n, p.d_x, p.q);
    let sz = ball_sum(p.n, p.d_z, p.q);
    let numerator = factor * (sx * sz - BigUint::one());
    let denominator = pow_q(p.q, 2 * p.n) - BigUint::one();
    let ratio = ExactRatio::new(numerator, denominator);
    let satisfied = ratio.less_than_one();
    Ok((satisfied, ratio))
}

/// Evaluates the direct-product inequality
/// [(q^{n-k1} - q^{k2-c}) (S_z - 1) + (q^{n-k2} - q^{k1-c}) (S_x - 1)] / (q^n - 1) < 1.
/// The inner sums start at weight 1, hence the ball sums minus one.
pub fn check_old(p: &BoundParamsOld) -> Result<(bool, ExactRatio), BoundError> {
    p.validate()?;
    // k1 + k2 - n <= c guarantees both factors are nonnegative.
    let f1 = pow_q(p.q, p.n - p.k1) - pow_q(p.q, p.k2 - p.c);
    let f2 = pow_q(p.q, p.n - p.k2) - pow_q(p.q, p.k1 - p.c);
    let sz = ball_sum(p.n, p.d_z, p.q) - BigUint::one();
    let sx = ball_sum(p.n, p.d_x, p.q) - BigUint::one();
    let numerator = f1 * sz + f2 * sx;
    let denominator = pow_q(p.q, p.n) - BigUint::one();
    let ratio = ExactRatio::new(numerator, denominator);
    let satisfied = ratio.less_than_one();
    Ok((satisfied, ratio))
}
