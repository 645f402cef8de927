//! Generalized complete elliptic integrals of the first and second kind,
//!
//! K_a(r) = (π/2)·F(a, 1−a; 1; r²) and E_a(r) = (π/2)·F(a−1, 1−a; 1; r²)
//!
//! for parameter a ∈ (0, 1) and modulus r ∈ [0, 1], together with their
//! complements taken at r' = √(1 − r²). At a = 1/2 they reduce to the
//! classical K and E.

use crate::error::{Error, Result};
use crate::hyp2f1::f21_series;

/// Internal series tolerance for elliptic evaluations.
const ELLIPTIC_TOL: f64 = 1e-13;

/// A validated (a, r) evaluation point with its complementary modulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticPoint {
    a: f64,
    r: f64,
    r_prime: f64,
}

impl EllipticPoint {
    pub fn new(a: f64, r: f64) -> Result<Self> {
        if !(0.0 < a && a < 1.0) {
            return Err(Error::Domain(format!("elliptic parameter a must lie in (0, 1), got {a}")));
        }
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain(format!("modulus r must lie in [0, 1], got {r}")));
        }
        Ok(Self { a, r, r_prime: (1.0 - r * r).sqrt() })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn r_prime(&self) -> f64 {
        self.r_prime
    }
}

/// K_a(r). Returns +∞ at r = 1, where the integral diverges.
pub fn ka(a: f64, r: f64) -> Result<f64> {
    let p = EllipticPoint::new(a, r)?;
    if p.r == 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok(std::f64::consts::FRAC_PI_2 * f21_series(a, 1.0 - a, 1.0, p.r * p.r, ELLIPTIC_TOL)?.value)
}

/// E_a(r). At r = 1 the closed form sin(πa)/(2(1−a)) applies.
pub fn ea(a: f64, r: f64) -> Result<f64> {
    let p = EllipticPoint::new(a, r)?;
    if p.r == 1.0 {
        return Ok((std::f64::consts::PI * a).sin() / (2.0 * (1.0 - a)));
    }
    Ok(std::f64::consts::FRAC_PI_2
        * f21_series(a - 1.0, 1.0 - a, 1.0, p.r * p.r, ELLIPTIC_TOL)?.value)
}

/// Complement K_a'(r) = K_a(r').
pub fn ka_prime(a: f64, r: f64) -> Result<f64> {
    let p = EllipticPoint::new(a, r)?;
    ka(a, p.r_prime)
}

/// Complement E_a'(r) = E_a(r').
pub fn ea_prime(a: f64, r: f64) -> Result<f64> {
    let p = EllipticPoint::new(a, r)?;
    ea(a, p.r_prime)
}
