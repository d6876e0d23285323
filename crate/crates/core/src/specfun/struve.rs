//! Modified Struve function of the first kind `L_nu(x)`.
//!
//! Direct ascending summation of
//! `L_nu(x) = sum_k (x/2)^{nu+2k+1} / (Gamma(k+3/2) Gamma(k+nu+3/2))`.
//! Every term is positive for `nu > -3/2`, so the sum is free of
//! cancellation at any `x`.

use super::series::sum_ratio_series;
use super::{gamma_scaled, SERIES_TOL};
use crate::error::{domain, Error, Result};
use crate::scaled::ScaledReal;

const FN: &str = "struve_l";

/// `L_nu(x)` as a wide-range value (no overflow for any `x`).
pub fn struve_l_wide(nu: f64, x: f64) -> Result<ScaledReal> {
    if !(nu > -1.5) || !nu.is_finite() {
        return Err(domain(FN, format!("order must exceed -3/2, got {nu}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(FN, format!("x must be finite and nonnegative, got {x}")));
    }
    if x == 0.0 {
        if nu > -1.0 {
            return Ok(ScaledReal::ZERO);
        }
        if nu < -1.0 {
            return Err(domain(FN, format!("L_nu(0) is unbounded for nu = {nu} < -1")));
        }
    }
    let half = 0.5 * x;
    let first = if x == 0.0 {
        ScaledReal::ONE
    } else {
        ScaledReal::powf(half, nu + 1.0)
    } / (gamma_scaled(1.5)? * gamma_scaled(nu + 1.5)?);
    let q = half * half;
    let res = sum_ratio_series(
        first,
        |k| {
            let k = k as f64;
            q / ((k + 1.5) * (k + nu + 1.5))
        },
        |_, r| r.abs(),
        SERIES_TOL,
        0,
        "struve L series",
    )?;
    Ok(res.value)
}

/// `L_nu(x)` as a plain float. Fails with [`Error::Overflow`] when the value
/// does not fit in `f64` (roughly `x > 700`).
pub fn struve_l(nu: f64, x: f64) -> Result<f64> {
    let v = struve_l_wide(nu, x)?.to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow { function: FN, x })
    }
}

/// Exponentially scaled `e^{-x} L_nu(x)`.
pub fn struve_l_scaled(nu: f64, x: f64) -> Result<ScaledReal> {
    Ok(struve_l_wide(nu, x)?.scale_exp(-x))
}
