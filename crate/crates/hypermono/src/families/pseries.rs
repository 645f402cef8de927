//! The correction series P₁..P₈.
//!
//! P₁..P₄ are the midpoint values f(c/2)/·(2/c)^λ of the four
//! hypergeometric families, summed as infinite series with certified
//! tails. P₅, P₆ are finite Maclaurin prefixes of K_a − E_a and
//! E_a − r'²K_a. P₇, P₈ are the a → 0 limit profiles of the truncated
//! elliptic families and have closed forms.

use crate::error::{Error, Result};
use crate::families::gseq::g_seq;
use crate::series::{sum_series, SeriesValue, TermRatio, TERM_CAP};

fn check_unit(name: &str, v: f64) -> Result<()> {
    if !(0.0 < v && v < 1.0) {
        return Err(Error::Domain(format!("{name} must lie in (0, 1), got {v}")));
    }
    Ok(())
}

fn check_c(c: f64) -> Result<()> {
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::Domain(format!("c must be positive, got {c}")));
    }
    Ok(())
}

/// P₁(λ,c,x) = (2/c)^λ Σ_{n≥1} (c/2)_n² xⁿ / ((c)_n n!).
pub fn p1(lambda: f64, c: f64, x: f64, tol: f64) -> Result<SeriesValue> {
    check_c(c)?;
    check_unit("x", x)?;
    let h = c / 2.0;
    let t1 = h * h * x / c;
    let ratio = TermRatio { z: x, alpha: [h, h], beta: [c, 1.0] };
    let s = sum_series(t1, 1, &ratio, tol, TERM_CAP)?;
    Ok(scale(s, (2.0 / c).powf(lambda)))
}

/// P₂(λ,c,x) = (2/c)^λ Σ_{n≥1} (1−c/2)(c/2)_{n−1}(c/2)_n xⁿ / ((c)_n n!).
pub fn p2(lambda: f64, c: f64, x: f64, tol: f64) -> Result<SeriesValue> {
    check_c(c)?;
    check_unit("x", x)?;
    let h = c / 2.0;
    let t1 = (1.0 - h) * h * x / c;
    let ratio = TermRatio { z: x, alpha: [h - 1.0, h], beta: [c, 1.0] };
    let s = sum_series(t1, 1, &ratio, tol, TERM_CAP)?;
    Ok(scale(s, (2.0 / c).powf(lambda)))
}

/// P₃(λ,c,x) = (2/c)^λ Σ_{n≥1} (c/2)_{n−1}(c/2)_n xⁿ / ((c)_n (n−1)!).
pub fn p3(lambda: f64, c: f64, x: f64, tol: f64) -> Result<SeriesValue> {
    check_c(c)?;
    check_unit("x", x)?;
    let h = c / 2.0;
    let t1 = h * x / c;
    let ratio = TermRatio { z: x, alpha: [h - 1.0, h], beta: [c, 0.0] };
    let s = sum_series(t1, 1, &ratio, tol, TERM_CAP)?;
    Ok(scale(s, (2.0 / c).powf(lambda)))
}

/// P₄(λ,c,x) = (2/c)^{λ−1} Σ_{n≥0} (c/2)_n² x^{n+1} / ((n+c)(c)_n n!).
pub fn p4(lambda: f64, c: f64, x: f64, tol: f64) -> Result<SeriesValue> {
    check_c(c)?;
    check_unit("x", x)?;
    let h = c / 2.0;
    let t0 = x / c;
    let ratio = TermRatio { z: x, alpha: [h, h], beta: [c + 1.0, 1.0] };
    let s = sum_series(t0, 0, &ratio, tol, TERM_CAP)?;
    Ok(scale(s, (2.0 / c).powf(lambda - 1.0)))
}

/// P₅,ₙ(a,r) = (π/2) Σ_{k=0}^{n} g₅,ₖ(a) r^{2(k+1)} / (k!(k+1)!).
pub fn p5(a: f64, r: f64, n: usize) -> Result<f64> {
    check_unit("r", r)?;
    finite_prefix(5, a, r, n)
}

/// P₆,ₙ(a,r) = (π/2) Σ_{k=0}^{n} g₆,ₖ(a) r^{2(k+1)} / (k!(k+1)!).
pub fn p6(a: f64, r: f64, n: usize) -> Result<f64> {
    check_unit("r", r)?;
    finite_prefix(6, a, r, n)
}

fn finite_prefix(gi: usize, a: f64, r: f64, n: usize) -> Result<f64> {
    let r2 = r * r;
    let mut sum = 0.0;
    let mut w = 1.0; // 1/(k!(k+1)!)
    let mut r_pow = r2;
    for k in 0..=n {
        if k > 0 {
            w /= (k as f64) * (k as f64 + 1.0);
            r_pow *= r2;
        }
        sum += g_seq(gi, k, a, 1.0)? * w * r_pow;
    }
    Ok(std::f64::consts::FRAC_PI_2 * sum)
}

/// P₇,ₙ(r) = (π/2) Σ_{k>n} r^{2(k+1)}/k, in closed form:
/// −π r² log r' − (π/2) Σ_{k=1}^{n} r^{2(k+1)}/k.
pub fn p7(r: f64, n: usize) -> Result<f64> {
    check_unit("r", r)?;
    let r2 = r * r;
    let log_rp = 0.5 * (1.0 - r2).ln(); // log r' = log(1-r²)/2
    let mut v = -std::f64::consts::PI * r2 * log_rp;
    let mut r_pow = r2;
    for k in 1..=n {
        r_pow *= r2;
        v -= std::f64::consts::FRAC_PI_2 * r_pow / k as f64;
    }
    Ok(v)
}

/// P₈,ₙ(r) = (π/2) Σ_{k>n} r^{2(k+1)}/(k(k+1)), in closed form:
/// (π/2)[r² + 2r'² log r'] − (π/2) Σ_{k=1}^{n} r^{2(k+1)}/(k(k+1)).
pub fn p8(r: f64, n: usize) -> Result<f64> {
    check_unit("r", r)?;
    let r2 = r * r;
    let rp2 = 1.0 - r2;
    let log_rp = 0.5 * rp2.ln();
    let mut v = std::f64::consts::FRAC_PI_2 * (r2 + 2.0 * rp2 * log_rp);
    let mut r_pow = r2;
    for k in 1..=n {
        r_pow *= r2;
        v -= std::f64::consts::FRAC_PI_2 * r_pow / (k as f64 * (k as f64 + 1.0));
    }
    Ok(v)
}

fn scale(mut s: SeriesValue, factor: f64) -> SeriesValue {
    s.value *= factor;
    s.tail_bound *= factor.abs();
    s
}

/// Identifier for the dispatching [`p_series`] entry point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PSeriesId(pub usize);

/// Dispatch over the eight series. `lambda` and `c` apply to i ≤ 4 only;
/// `a` (default 1/2, giving the classical-midpoint variants) and `n`
/// apply to i ≥ 5.
pub fn p_series(
    id: PSeriesId,
    lambda: f64,
    c: f64,
    arg: f64,
    a: Option<f64>,
    n: Option<usize>,
    tol: f64,
) -> Result<SeriesValue> {
    let need_n = |n: Option<usize>| {
        n.ok_or_else(|| Error::InvalidParameter(format!("P{} needs an index n", id.0)))
    };
    let exact = |v: f64| SeriesValue { value: v, terms_used: 1, tail_bound: 0.0 };
    match id.0 {
        1 => p1(lambda, c, arg, tol),
        2 => p2(lambda, c, arg, tol),
        3 => p3(lambda, c, arg, tol),
        4 => p4(lambda, c, arg, tol),
        5 => Ok(exact(p5(a.unwrap_or(0.5), arg, need_n(n)?)?)),
        6 => Ok(exact(p6(a.unwrap_or(0.5), arg, need_n(n)?)?)),
        7 => Ok(exact(p7(arg, need_n(n)?)?)),
        8 => Ok(exact(p8(arg, need_n(n)?)?)),
        _ => Err(Error::InvalidParameter(format!("P index must lie in 1..=8, got {}", id.0))),
    }
}
