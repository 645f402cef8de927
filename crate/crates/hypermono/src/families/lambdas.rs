//! The threshold functions λ₁..λ₁₀ and the digamma difference sequences
//! they are built from. Each λᵢ is the endpoint limit of one family's
//! logarithmic parameter derivative; their extrema over a are the sharp
//! monotonicity thresholds located by the analysis layer.

use crate::error::{Error, Result};
use crate::families::check_param;
use crate::families::gseq::{g_logderiv, g_seq};
use crate::specialfn::{digamma, gamma};

/// Below this a, λ₅ switches to its analytic limit 0: the formula itself
/// stays finite but the value is ~ -a/c, indistinguishable from the limit
/// at solver tolerances.
pub const LAMBDA5_SMALL_A_CROSSOVER: f64 = 1e-4;

/// aₙ = ψ(n+a) − ψ(n+c−a); strictly increasing in n with limit 0 for
/// a ∈ (0, c/2].
pub fn seq_a(n: usize, a: f64, c: f64) -> Result<f64> {
    check_param(a, c)?;
    let nf = n as f64;
    Ok(digamma(nf + a)? - digamma(nf + c - a)?)
}

/// bₙ = ψ(n+a) − ψ(n+1+c−a) = aₙ − 1/(n+c−a); also strictly increasing
/// with limit 0.
pub fn seq_b(n: usize, a: f64, c: f64) -> Result<f64> {
    check_param(a, c)?;
    let nf = n as f64;
    Ok(digamma(nf + a)? - digamma(nf + 1.0 + c - a)?)
}

fn require_c1(i: usize, c: f64) -> Result<()> {
    if c != 1.0 {
        return Err(Error::InvalidParameter(format!("lambda {i} is a c = 1 quantity, got c = {c}")));
    }
    Ok(())
}

fn require_n(i: usize, n: Option<usize>) -> Result<usize> {
    n.ok_or_else(|| Error::InvalidParameter(format!("lambda {i} needs a truncation index n")))
}

/// Truncated-kernel weight Σ_{k=0}^{n} g₆,ₖ(a)/((k+1)(k!)²) and the same
/// sum over g'₆,ₖ, shared by λ₁₀ and the bound layer.
pub(crate) fn g6_weight_sums(a: f64, n: usize) -> Result<(f64, f64)> {
    let mut s = 0.0;
    let mut sp = 0.0;
    let mut fact2 = 1.0; // (k!)²
    for k in 0..=n {
        if k > 0 {
            fact2 *= (k as f64) * (k as f64);
        }
        let w = 1.0 / ((k as f64 + 1.0) * fact2);
        let g = g_seq(6, k, a, 1.0)?;
        s += w * g;
        sp += w * g * g_logderiv(6, k, a, 1.0)?;
    }
    Ok((s, sp))
}

/// Threshold functions over a ∈ (0, c/2] (c fixed):
///
/// λ₁ = a/(a−c)                    λ₂ = (c−2a)/(c−a)
/// λ₃ = a[ψ(c−a) − ψ(a)]           λ₄ = a(2a−c−1)/[(c−a)(1−a)]
/// λ₅ = aΓ(c)[ψ(c+1−a) − ψ(a)] / [Γ(c) − Γ(a)Γ(c+1−a)]
/// λ₆ = a[ψ(c+1−a) − ψ(a)]
///
/// and, at c = 1 with a truncation index n where noted:
///
/// λ₇ = πa/tan(πa)
/// λ₈ = a[ψ(n+1+a) − ψ(n+3−a) + ψ(1−a) − ψ(a)]
/// λ₉ = 1 + a[ψ(n+1+a) − ψ(n+2−a) + ψ(1−a) − ψ(a)]
/// λ₁₀ = a/(1−a) · [sin πa + π(1−a)cos πa − π(1−a)²·Σ g'₆ₖ w_k]
///                / [sin πa − π(1−a)·Σ g₆ₖ w_k],  w_k = 1/((k+1)(k!)²).
///
/// λ₈, λ₉ equal a·g'/g for g₅,ₙ₊₁ and g₆,ₙ₊₁; λ₇ and λ₁₀ are the r → 1
/// limits of the two elliptic series-ratio functions.
pub fn lambda_fn(i: usize, a: f64, c: f64, n: Option<usize>) -> Result<f64> {
    check_param(a, c)?;
    match i {
        1 => Ok(a / (a - c)),
        2 => Ok((c - 2.0 * a) / (c - a)),
        3 => Ok(a * (digamma(c - a)? - digamma(a)?)),
        4 => {
            if a == 1.0 {
                return Err(Error::Domain("lambda 4 has a pole at a = 1".into()));
            }
            Ok(a * (2.0 * a - c - 1.0) / ((c - a) * (1.0 - a)))
        }
        5 => {
            if a < LAMBDA5_SMALL_A_CROSSOVER {
                return Ok(0.0);
            }
            let den = gamma(c)? - gamma(a)? * gamma(c + 1.0 - a)?;
            if den == 0.0 {
                return Err(Error::Domain(format!("lambda 5 denominator vanishes at a = {a}")));
            }
            Ok(a * gamma(c)? * (digamma(c + 1.0 - a)? - digamma(a)?) / den)
        }
        6 => Ok(a * (digamma(c + 1.0 - a)? - digamma(a)?)),
        7 => {
            require_c1(7, c)?;
            if a == 0.5 {
                return Ok(0.0);
            }
            Ok(std::f64::consts::PI * a / (std::f64::consts::PI * a).tan())
        }
        8 => {
            require_c1(8, c)?;
            let nf = require_n(8, n)? as f64;
            Ok(a * (digamma(nf + 1.0 + a)? - digamma(nf + 3.0 - a)? + digamma(1.0 - a)?
                - digamma(a)?))
        }
        9 => {
            require_c1(9, c)?;
            let nf = require_n(9, n)? as f64;
            Ok(1.0
                + a * (digamma(nf + 1.0 + a)? - digamma(nf + 2.0 - a)? + digamma(1.0 - a)?
                    - digamma(a)?))
        }
        10 => {
            require_c1(10, c)?;
            let n = require_n(10, n)?;
            let (s, sp) = g6_weight_sums(a, n)?;
            let pi = std::f64::consts::PI;
            let num = (pi * a).sin() + pi * (1.0 - a) * (pi * a).cos()
                - pi * (1.0 - a) * (1.0 - a) * sp;
            let den = (pi * a).sin() - pi * (1.0 - a) * s;
            Ok(a / (1.0 - a) * num / den)
        }
        _ => Err(Error::InvalidParameter(format!("lambda index must lie in 1..=10, got {i}"))),
    }
}
