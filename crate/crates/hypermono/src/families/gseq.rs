//! The rising-factorial products g₁..g₆, their logarithmic derivatives in
//! closed form, and the Maclaurin coefficients of the two elliptic kernels.

use crate::error::{Error, Result};
use crate::families::check_param;
use crate::families::lambdas::seq_a;
use crate::specialfn::pochhammer;

fn check_g_index(i: usize) -> Result<()> {
    if !(1..=6).contains(&i) {
        return Err(Error::InvalidParameter(format!("g index must lie in 1..=6, got {i}")));
    }
    Ok(())
}

/// Product sequences over the parameter a (c is fixed):
///
/// g₁ = (a)_n (c−a)_{n+1},  g₂ = (a)_n (c−a)_n,
/// g₃ = (1−a)(a)_n (c−a)_{n+1},  g₄ = a (a)_n (c−a)_n,
/// g₅ = g₁ at c = 1,  g₆ = g₄ at c = 1.
///
/// Indices 5 and 6 require c = 1. Values grow like (n!)² and overflow
/// f64 past n ≈ 150; overflow is reported.
pub fn g_seq(i: usize, n: usize, a: f64, c: f64) -> Result<f64> {
    check_g_index(i)?;
    if i >= 5 && c != 1.0 {
        return Err(Error::InvalidParameter(format!("g{i} is a c = 1 sequence, got c = {c}")));
    }
    check_param(a, c)?;
    let v = match i {
        1 => pochhammer(a, n)? * pochhammer(c - a, n + 1)?,
        2 => pochhammer(a, n)? * pochhammer(c - a, n)?,
        3 => (1.0 - a) * pochhammer(a, n)? * pochhammer(c - a, n + 1)?,
        4 => a * pochhammer(a, n)? * pochhammer(c - a, n)?,
        5 => pochhammer(a, n)? * pochhammer(1.0 - a, n + 1)?,
        _ => a * pochhammer(a, n)? * pochhammer(1.0 - a, n)?,
    };
    if !v.is_finite() {
        return Err(Error::Overflow(format!("g{i} overflows at n = {n}")));
    }
    Ok(v)
}

/// Logarithmic derivative g'ᵢ,ₙ(a)/gᵢ,ₙ(a), in closed form through the
/// digamma differences aₙ = ψ(n+a) − ψ(n+c−a):
///
/// g₁: a_{n+1} − a₀ − 1/(n+a)        g₂: aₙ − a₀
/// g₃: a_{n+1} − a₀ − 1/(n+a) + 1/(a−1)
/// g₄: aₙ − a₀ + 1/a                 g₅, g₆: the same at c = 1.
///
/// Never computed by numerical differentiation.
pub fn g_logderiv(i: usize, n: usize, a: f64, c: f64) -> Result<f64> {
    check_g_index(i)?;
    if i >= 5 && c != 1.0 {
        return Err(Error::InvalidParameter(format!("g{i} is a c = 1 sequence, got c = {c}")));
    }
    check_param(a, c)?;
    let cc = if i >= 5 { 1.0 } else { c };
    let a0 = seq_a(0, a, cc)?;
    Ok(match i {
        1 | 5 => seq_a(n + 1, a, cc)? - a0 - 1.0 / (n as f64 + a),
        2 => seq_a(n, a, cc)? - a0,
        3 => {
            if a == 1.0 {
                return Err(Error::Domain("g3 log-derivative has a pole at a = 1".into()));
            }
            seq_a(n + 1, a, cc)? - a0 - 1.0 / (n as f64 + a) + 1.0 / (a - 1.0)
        }
        _ => seq_a(n, a, cc)? - a0 + 1.0 / a,
    })
}

/// Coefficient of r^{2n} in (2/π)·K_a(r): (a)_n (1−a)_n / (n!)².
/// Computed by the term recurrence, so large n cannot overflow.
pub fn taylor_coeff_nu(a: f64, n: usize) -> f64 {
    let mut coef = 1.0;
    for k in 0..n {
        let kf = k as f64;
        coef *= (a + kf) * (1.0 - a + kf) / ((kf + 1.0) * (kf + 1.0));
    }
    coef
}

/// Coefficient of r^{2n} in (2/π)·E_a(r): (a−1)_n (1−a)_n / (n!)².
pub fn taylor_coeff_mu(a: f64, n: usize) -> f64 {
    let mut coef = 1.0;
    for k in 0..n {
        let kf = k as f64;
        coef *= (a - 1.0 + kf) * (1.0 - a + kf) / ((kf + 1.0) * (kf + 1.0));
    }
    coef
}
