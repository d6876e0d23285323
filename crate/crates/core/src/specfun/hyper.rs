//! Generalized hypergeometric series `pFq(a; b; x)`.

use super::series::{sum_ratio_series, SeriesResult};
use super::SERIES_TOL;
use crate::error::{domain, Error, Result};
use crate::scaled::ScaledReal;

/// Sums `pFq(upper; lower; x) = sum_k prod (a_i)_k / prod (b_j)_k x^k / k!`.
///
/// Requires `p <= q + 1`, no lower parameter a nonpositive integer, and
/// `|x| < 1` when `p = q + 1`.
pub fn pfq(upper: &[f64], lower: &[f64], x: f64) -> Result<SeriesResult> {
    const FN: &str = "pfq";
    let (p, q) = (upper.len(), lower.len());
    if p > q + 1 {
        return Err(domain(FN, format!("p = {p} exceeds q + 1 = {}", q + 1)));
    }
    if let Some(b) = lower.iter().find(|b| **b <= 0.0 && b.fract() == 0.0) {
        return Err(domain(FN, format!("lower parameter {b} is a nonpositive integer")));
    }
    if upper.iter().chain(lower).any(|v| !v.is_finite()) || !x.is_finite() {
        return Err(domain(FN, "parameters and argument must be finite"));
    }
    if p == q + 1 && x.abs() >= 1.0 {
        return Err(Error::Divergence(format!(
            "{p}F{q} requires |x| < 1, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(SeriesResult {
            value: ScaledReal::ONE,
            terms_used: 1,
            truncation_estimate: 0.0,
        });
    }

    let ratio = |k: usize| {
        let k = k as f64;
        let num: f64 = upper.iter().map(|a| a + k).product();
        let den: f64 = lower.iter().map(|b| b + k).product();
        num / den * x / (k + 1.0)
    };
    // Past every parameter each factor (a+k)/(b+k) is monotone; the ones still
    // rising toward 1 are divided out so the bound covers all later ratios.
    let tail_ratio = |k: usize, r: f64| {
        let k = k as f64;
        let mut bound = r.abs();
        for (i, a) in upper.iter().enumerate() {
            let b = lower.get(i).copied().unwrap_or(1.0);
            let f = (a + k) / (b + k);
            if f < 1.0 {
                bound /= f;
            }
        }
        bound
    };
    let min_terms = upper
        .iter()
        .chain(lower)
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .ceil() as usize
        + 1;
    sum_ratio_series(ScaledReal::ONE, ratio, tail_ratio, SERIES_TOL, min_terms, "pFq series")
        .map_err(|e| match e {
            Error::NonConvergence { cap, .. } => Error::Divergence(format!(
                "{p}F{q} term ratio did not fall below 1 within {cap} terms"
            )),
            other => other,
        })
}
