//! Power-series summation with certified truncation bounds.
//!
//! Every series in this crate has term ratios of the form
//! `t_{k+1}/t_k = z·(k+α₁)(k+α₂)/((k+β₁)(k+β₂))` with `0 ≤ z ≤ 1`.
//! Two rigorous tail bounds are maintained once all shifted factors are
//! positive:
//!
//! * geometric — `sup_{m≥k} |t_{m+1}/t_m| ≤ z·Π(1 + (αᵢ−βᵢ)₊/(k+βᵢ))`,
//!   since each factor `(m+α)/(m+β)` with `α > β` decreases in `m`;
//! * polynomial — if `σ = Σβ − Σα > 1`, then with `s = (1+σ)/2` the ratio
//!   is eventually below `m/(m+s)` and `Σ_{m>k} |t_m| ≤ |t_k|·k/(s−1)`,
//!   which certifies convergence even as `z → 1`.
//!
//! Summation stops when the smaller of the two bounds drops below
//! `tol·max(1, |sum|)`.

use crate::error::{Error, Result};
use serde::Serialize;

/// Result of a certified series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    /// The partial sum accepted as the value.
    pub value: f64,
    /// Number of terms accumulated, at least 1.
    pub terms_used: usize,
    /// Absolute bound on the truncated tail, `≥ 0`.
    pub tail_bound: f64,
}

/// Default cap on the number of terms.
pub const TERM_CAP: usize = 1_000_000;

/// Term-ratio descriptor: `t_{k+1} = t_k · z · Π(k+αᵢ)/Π(k+βᵢ)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TermRatio {
    pub z: f64,
    pub alpha: [f64; 2],
    pub beta: [f64; 2],
}

impl TermRatio {
    pub(crate) fn at(&self, k: f64) -> f64 {
        self.z * (k + self.alpha[0]) * (k + self.alpha[1])
            / ((k + self.beta[0]) * (k + self.beta[1]))
    }

    /// First index at or after `k0` from which every shifted factor is positive.
    fn positivity_guard(&self, k0: usize) -> usize {
        let mut g = k0 as f64;
        for v in self.alpha.iter().chain(self.beta.iter()) {
            if g + v <= 0.0 {
                g = (-v).floor() + 1.0;
            }
        }
        g as usize
    }

    /// Certified bound on `|t_{m+1}/t_m|` for all `m ≥ k` (requires `k` past
    /// the positivity guard). Pairs sorted shifts so that each factor of the
    /// bound is monotone in `m`.
    fn ratio_sup(&self, k: f64) -> f64 {
        let mut a = self.alpha;
        let mut b = self.beta;
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        let mut q = self.z;
        for i in 0..2 {
            if a[i] > b[i] {
                q *= 1.0 + (a[i] - b[i]) / (k + b[i]);
            }
        }
        q
    }

    /// Raabe-type envelope: returns `(s, m_min)` with `s > 1` such that
    /// `|t_{m+1}/t_m| ≤ m/(m+s)` for all `m ≥ m_min`, when the shift surplus
    /// `σ = Σβ − Σα` exceeds 1. Implies `Σ_{m>k}|t_m| ≤ |t_k|·k/(s−1)`.
    fn raabe_envelope(&self) -> Option<(f64, f64)> {
        let sigma = self.beta[0] + self.beta[1] - self.alpha[0] - self.alpha[1];
        if sigma <= 1.0 + 1e-12 {
            return None;
        }
        let s = 0.5 * (1.0 + sigma);
        // Need (m+α₁)(m+α₂)(m+s) ≤ (m+β₁)(m+β₂)m, i.e. A m² + B m + C ≥ 0 with:
        let a_q = sigma - s; // = (σ-1)/2 > 0
        let b_q = self.beta[0] * self.beta[1] - self.alpha[0] * self.alpha[1]
            - s * (self.alpha[0] + self.alpha[1]);
        let c_q = -s * self.alpha[0] * self.alpha[1];
        let disc = b_q * b_q - 4.0 * a_q * c_q;
        let m_min = if disc > 0.0 {
            ((-b_q + disc.sqrt()) / (2.0 * a_q)).max(0.0)
        } else {
            0.0
        };
        Some((s, m_min))
    }
}

/// Sum `Σ_{k≥k0} t_k` with `t_{k0} = first_term` and the given term ratio.
pub(crate) fn sum_series(
    first_term: f64,
    k0: usize,
    ratio: &TermRatio,
    tol: f64,
    cap: usize,
) -> Result<SeriesValue> {
    debug_assert!((0.0..=1.0).contains(&ratio.z));
    let mut sum = first_term;
    let mut t = first_term;
    let mut k = k0;
    let mut terms = 1usize;
    if first_term == 0.0 || ratio.z == 0.0 {
        return Ok(SeriesValue { value: sum, terms_used: terms, tail_bound: 0.0 });
    }
    let guard = ratio.positivity_guard(k0);
    let raabe = ratio.raabe_envelope();
    let mut best_tail = f64::INFINITY;
    loop {
        if terms >= cap {
            return Err(Error::NoConvergence { terms, tail_bound: best_tail });
        }
        t *= ratio.at(k as f64);
        k += 1;
        sum += t;
        terms += 1;
        if t == 0.0 {
            // terminating series (a shift hit a non-positive integer)
            return Ok(SeriesValue { value: sum, terms_used: terms, tail_bound: 0.0 });
        }
        if k >= guard {
            let kf = k as f64;
            let mut tail = f64::INFINITY;
            let q = ratio.ratio_sup(kf);
            if q < 1.0 {
                tail = t.abs() * q / (1.0 - q);
            }
            if let Some((s, m_min)) = raabe {
                if kf >= m_min {
                    tail = tail.min(t.abs() * kf / (s - 1.0));
                }
            }
            best_tail = best_tail.min(tail);
            if tail <= tol * sum.abs().max(1.0) {
                return Ok(SeriesValue { value: sum, terms_used: terms, tail_bound: tail });
            }
        }
    }
}

/// Ratio of two series sharing one term skeleton: denominator terms `d_k`
/// follow `ratio`, numerator terms are `ρ_k·d_k`. The `ρ_k` are supplied by
/// a stateful step closure and must be monotone with supremum `rho_sup`.
#[derive(Debug, Clone, Copy, Serialize)]
pub(crate) struct RatioSeriesValue {
    pub value: f64,
    pub terms_used: usize,
    pub err_bound: f64,
    /// Set when the denominator sum is too close to zero to certify the
    /// quotient (parameter sits next to a pole of the ratio).
    pub den_near_zero: bool,
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn sum_series_ratio(
    den_first: f64,
    k0: usize,
    ratio: &TermRatio,
    rho0: f64,
    mut rho_next: impl FnMut() -> f64,
    rho_sup: f64,
    tol: f64,
    cap: usize,
) -> Result<RatioSeriesValue> {
    let mut den = den_first;
    let mut num = rho0 * den_first;
    let mut t = den_first;
    let mut k = k0;
    let mut terms = 1usize;
    let rho_abs = rho0.abs().max(rho_sup.abs());
    if den_first == 0.0 {
        return Err(Error::Domain("series ratio: leading denominator term is zero".into()));
    }
    if ratio.z == 0.0 {
        return Ok(RatioSeriesValue { value: rho0, terms_used: 1, err_bound: 0.0, den_near_zero: false });
    }
    let guard = ratio.positivity_guard(k0);
    let raabe = ratio.raabe_envelope();
    loop {
        if terms >= cap {
            return Err(Error::NoConvergence { terms, tail_bound: f64::INFINITY });
        }
        t *= ratio.at(k as f64);
        k += 1;
        let rho = rho_next();
        den += t;
        num += rho * t;
        terms += 1;
        if t == 0.0 {
            return Ok(RatioSeriesValue { value: num / den, terms_used: terms, err_bound: 0.0, den_near_zero: den == 0.0 });
        }
        if k >= guard {
            let kf = k as f64;
            let mut den_tail = f64::INFINITY;
            let q = ratio.ratio_sup(kf);
            if q < 1.0 {
                den_tail = t.abs() * q / (1.0 - q);
            }
            if let Some((s, m_min)) = raabe {
                if kf >= m_min {
                    den_tail = den_tail.min(t.abs() * kf / (s - 1.0));
                }
            }
            if den.abs() > 2.0 * den_tail && den_tail.is_finite() {
                let value = num / den;
                // first-order propagation: |δ(N/D)| ≤ (|δN| + |N/D||δD|)/(|D| - |δD|)
                let err = (rho_abs * den_tail + value.abs() * den_tail) / (den.abs() - den_tail);
                if err <= tol * value.abs().max(1.0) {
                    return Ok(RatioSeriesValue {
                        value,
                        terms_used: terms,
                        err_bound: err,
                        den_near_zero: den.abs() <= 1e-12 * num.abs(),
                    });
                }
            }
        }
    }
}
