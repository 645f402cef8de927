//! Numerics for Gaussian hypergeometric functions, generalized elliptic
//! integrals, and the monotonicity-in-parameter machinery built on them:
//! threshold constants, family evaluation, grid monotonicity scans, and
//! sharp two-sided bound verification.
//!
//! The library is organized bottom-up:
//!
//! * [`specialfn`] — gamma, log-gamma, digamma, beta, rising factorial;
//! * [`hyp2f1`] — the ₂F₁ series with certified truncation, plus three
//!   independent oracles (Euler integral, Gauss summation, zero-balanced
//!   asymptote) and an AGM evaluator for the classical K and E;
//! * [`elliptic`] — generalized complete elliptic integrals K_a, E_a;
//! * [`families`] — the λ threshold functions, correction series P₁..P₈,
//!   the monotone families f₁..f₇ and φ₁..φ₆, and the series-ratio forms
//!   of their logarithmic parameter derivatives;
//! * [`analysis`] — supremum/infimum solving for the thresholds, grid
//!   monotonicity verdicts, and two-sided bound verification.
//!
//! All evaluation routines are pure and reentrant. Everything validates
//! its domain and returns [`Error`] rather than NaN.

pub mod elliptic;
mod error;
pub mod families;
pub mod hyp2f1;
mod quad;
mod series;
pub mod specialfn;

pub mod analysis;

pub use error::{Error, Result};
pub use series::SeriesValue;

#[cfg(doctest)]
mod guide;
