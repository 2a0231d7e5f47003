//! The q-ary entropy feasibility condition and rate/distance curves.
//!
//! This is the one module that works in floating point: the condition
//! is asymptotic, and results within 1e-9 of equality are reported as
//! boundary rather than asserted strictly.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AsymptoticError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("x={0} outside [0, 1]")]
    DomainError(f64),
}

pub const BOUNDARY_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticParams {
    pub q: u64,
    /// Normalized dimension l/n.
    pub big_l: f64,
    /// Normalized entanglement c/n.
    pub lambda: f64,
    pub delta_x: f64,
    pub delta_z: f64,
}

impl AsymptoticParams {
    pub fn validate(&self) -> Result<(), AsymptoticError> {
        let err = |m: String| Err(AsymptoticError::InvalidParameters(m));
        if !crate::bound::is_prime_power(self.q) {
            return err(format!("q={} is not a prime power", self.q));
        }
        if !(0.0..=1.0 + self.lambda).contains(&self.big_l) {
            return err(format!("L={} outside [0, 1 + lambda]", self.big_l));
        }
        if !(0.0..=self.big_l / 2.0).contains(&self.lambda) {
            return err(format!("lambda={} outside [0, L/2]", self.lambda));
        }
        for (name, d) in [("delta_x", self.delta_x), ("delta_z", self.delta_z)] {
            if !(0.0..0.5).contains(&d) {
                return err(format!("{name}={d} outside [0, 1/2)"));
            }
        }
        Ok(())
    }

    /// Rate 1 - L + lambda of the promised code family.
    pub fn rate(&self) -> f64 {
        1.0 - self.big_l + self.lambda
    }
}

/// Feasibility verdict with an explicit boundary band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Feasibility {
    Feasible,
    Boundary,
    Infeasible,
}

impl Feasibility {
    pub fn as_bool(self) -> bool {
        matches!(self, Feasibility::Feasible)
    }
}

/// q-ary entropy h(x) = -x log_q x - (1-x) log_q(1-x), with
/// 0 log 0 = 0.
pub fn entropy_q(x: f64, q: u64) -> Result<f64, AsymptoticError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(AsymptoticError::DomainError(x));
    }
    assert!(q >= 2);
    let lnq = (q as f64).ln();
    let term = |t: f64| if t == 0.0 { 0.0 } else { -t * t.ln() / lnq };
    Ok(term(x) + term(1.0 - x))
}

/// One side of the entropy condition: h(d) + d log_q(q-1).
fn weight_entropy(d: f64, q: u64) -> f64 {
    let log_qm1 = ((q - 1) as f64).ln() / (q as f64).ln();
    entropy_q(d, q).expect("caller validated d") + d * log_qm1
}

/// Decides h(d_x) + d_x log_q(q-1) + h(d_z) + d_z log_q(q-1) < L.
pub fn check_asymptotic(p: &AsymptoticParams) -> Result<Feasibility, AsymptoticError> {
    p.validate()?;
    let lhs = weight_entropy(p.delta_x, p.q) + weight_entropy(p.delta_z, p.q);
    let gap = p.big_l - lhs;
    if gap.abs() <= BOUNDARY_BAND {
        Ok(Feasibility::Boundary)
    } else if gap > 0.0 {
        Ok(Feasibility::Feasible)
    } else {
        Ok(Feasibility::Infeasible)
    }
}

const HALF_OPEN_SUP: f64 = 0.5 - 1e-12;

/// Largest delta < 1/2 keeping the condition within budget after
/// spending delta_other, by bisection; the per-coordinate map is
/// strictly increasing on [0, 1/2).
pub fn max_delta(q: u64, big_l: f64, delta_other: f64) -> Result<f64, AsymptoticError> {
    if !crate::bound::is_prime_power(q) {
        return Err(AsymptoticError::InvalidParameters(format!(
            "q={q} is not a prime power"
        )));
    }
    if !(0.0..0.5).contains(&delta_other) {
        return Err(AsymptoticError::InvalidParameters(format!(
            "delta_other={delta_other} outside [0, 1/2)"
        )));
    }
    if !(0.0..=2.0).contains(&big_l) {
        return Err(AsymptoticError::InvalidParameters(format!(
            "L={big_l} outside [0, 2]"
        )));
    }
    let residual = big_l - weight_entropy(delta_other, q);
    if residual <= 0.0 {
        return Ok(0.0);
    }
    if weight_entropy(HALF_OPEN_SUP, q) <= residual {
        return Ok(HALF_OPEN_SUP);
    }
    let mut lo = 0.0f64;
    let mut hi = HALF_OPEN_SUP;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if weight_entropy(mid, q) <= residual {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// Samples delta_x on a uniform grid over [0, 1/2) and reports the
/// matching maximal delta_z; rendered as the curve CSV.
pub fn curve(q: u64, big_l: f64, points: usize) -> Result<Vec<(f64, f64)>, AsymptoticError> {
    assert!(points >= 2);
    let mut out = Vec::with_capacity(points);
    for i in 0..points {
        let dx = 0.5 * i as f64 / points as f64;
        out.push((dx, max_delta(q, big_l, dx)?));
    }
    Ok(out)
}

/// CSV rendering of a curve: header delta_x,delta_z_max, 12 significant
/// digits.
pub fn curve_csv(samples: &[(f64, f64)]) -> String {
    let mut out = String::from("delta_x,delta_z_max\n");
    for (dx, dz) in samples {
        out.push_str(&format!("{dx:.12e},{dz:.12e}\n"));
    }
    out
}
