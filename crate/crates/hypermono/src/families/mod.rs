//! Parameter-monotonicity machinery for hypergeometric combinations.
//!
//! A family here is a quotient f(a)/a^λ where f is a positive combination
//! of hypergeometric values at the point (a, c−a; c; x) — or, in the
//! elliptic cases (c = 1, x = r²), of K_a and E_a with finitely many
//! Maclaurin terms removed. For each family the sign of its derivative
//! in a is governed by a series-ratio function (the logarithmic
//! derivative a·f'/f, see [`ratio_fn`]), whose endpoint limits in the
//! argument are the closed-form threshold functions λ₁..λ₁₀ exposed by
//! [`lambda_fn`].
//!
//! Everything is evaluated through cancellation-free series taken from
//! the raw coefficient forms, never by subtracting near-equal values, so
//! the quotients stay accurate down to a → 0.

mod feval;
mod gseq;
mod lambdas;
mod pseries;
mod ratios;

pub use feval::{family_eval, family_eval_series, Family, FamilyId};
pub use gseq::{g_logderiv, g_seq, taylor_coeff_mu, taylor_coeff_nu};
pub use lambdas::{lambda_fn, seq_a, seq_b, LAMBDA5_SMALL_A_CROSSOVER};
pub use pseries::{p_series, p1, p2, p3, p4, p5, p6, p7, p8, PSeriesId};
pub use ratios::{ratio_fn, ratio_fn_detailed, RatioEval, RatioId, RATIO_ARG_CROSSOVER};

use crate::error::{Error, Result};

/// A validated evaluation point: 0 < a ≤ c/2, c > 0, x ∈ (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPoint {
    a: f64,
    c: f64,
    x: f64,
}

impl ParamPoint {
    pub fn new(a: f64, c: f64, x: f64) -> Result<Self> {
        check_param(a, c)?;
        if !(0.0 < x && x < 1.0) {
            return Err(Error::Domain(format!("ParamPoint: x must lie in (0, 1), got {x}")));
        }
        Ok(Self { a, c, x })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn x(&self) -> f64 {
        self.x
    }
}

pub(crate) fn check_param(a: f64, c: f64) -> Result<()> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::Domain(format!("c must be positive, got {c}")));
    }
    if !(a > 0.0 && a <= c / 2.0) {
        return Err(Error::Domain(format!("a must lie in (0, c/2] = (0, {}], got {a}", c / 2.0)));
    }
    Ok(())
}
