//! Modified Bessel functions `I_nu` and `K_nu`.
//!
//! `I_nu` is summed from its ascending series exactly like `L_nu`. `K_nu`
//! comes from the integral `K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt`,
//! whose integrand already decays double-exponentially, so the plain
//! trapezoid rule converges geometrically in the step size. The integrand is
//! evaluated relative to its peak at `t* = asinh(|nu|/x)` so neither tiny
//! `x` with large order nor `x` in the thousands leaves `f64` range.

use super::series::sum_ratio_series;
use super::{gamma_scaled, SERIES_TOL};
use crate::error::{domain, Error, Result};
use crate::scaled::ScaledReal;

/// Doubling of the trapezoid grid stops before exceeding this many nodes.
pub const QUADRATURE_NODE_CAP: usize = 2000;

/// `I_nu(x)` as a wide-range value. Requires `nu >= -1`, `x >= 0`.
pub fn bessel_i_wide(nu: f64, x: f64) -> Result<ScaledReal> {
    const FN: &str = "bessel_i";
    if !(nu >= -1.0) || !nu.is_finite() {
        return Err(domain(FN, format!("order must be at least -1, got {nu}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(domain(FN, format!("x must be finite and nonnegative, got {x}")));
    }
    // I_{-1} = I_1; other orders in (-1, 0) have positive series terms
    let nu = if nu == -1.0 { 1.0 } else { nu };
    if x == 0.0 {
        return match nu {
            0.0 => Ok(ScaledReal::ONE),
            n if n > 0.0 => Ok(ScaledReal::ZERO),
            _ => Err(domain(FN, format!("I_nu(0) is unbounded for nu = {nu} < 0"))),
        };
    }
    let half = 0.5 * x;
    let first = ScaledReal::powf(half, nu) / gamma_scaled(nu + 1.0)?;
    let q = half * half;
    let res = sum_ratio_series(
        first,
        |k| {
            let k = k as f64;
            q / ((k + 1.0) * (k + nu + 1.0))
        },
        |_, r| r.abs(),
        SERIES_TOL,
        0,
        "bessel I series",
    )?;
    Ok(res.value)
}

pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    let v = bessel_i_wide(nu, x)?.to_f64();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow {
            function: "bessel_i",
            x,
        })
    }
}

/// `e^{-x} I_nu(x)`.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<ScaledReal> {
    Ok(bessel_i_wide(nu, x)?.scale_exp(-x))
}

/// `K_nu(x)` as a wide-range value, any real `nu`, `x > 0`.
pub fn bessel_k_wide(nu: f64, x: f64) -> Result<ScaledReal> {
    const FN: &str = "bessel_k";
    if !nu.is_finite() {
        return Err(domain(FN, format!("order must be finite, got {nu}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(FN, format!("x must be positive, got {x}")));
    }
    let nu = nu.abs();
    let peak = (nu / x).asinh();
    // ln of e^{x} e^{-x cosh t} e^{nu t}, relative to its value at the peak
    let rel_log = |t: f64| -> f64 {
        let dcosh = 2.0 * (0.5 * (t + peak)).sinh() * (0.5 * (t - peak)).sinh();
        -x * dcosh + nu * (t - peak)
    };
    let integrand = |t: f64| -> f64 {
        let even = if nu == 0.0 {
            1.0
        } else {
            0.5 * (1.0 + (-2.0 * nu * t).exp())
        };
        rel_log(t).exp() * even
    };
    // right truncation: e^{-60} below the peak
    const CUT: f64 = -60.0;
    let mut step = 1.0;
    while rel_log(peak + step) > CUT {
        step *= 2.0;
    }
    let (mut lo, mut hi) = (peak, peak + step);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if rel_log(mid) > CUT {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let upper = hi;

    let mut n = 32usize;
    let mut h = upper / n as f64;
    let mut inner: f64 = (1..n).map(|j| integrand(j as f64 * h)).sum();
    let ends = 0.5 * (integrand(0.0) + integrand(upper));
    let mut estimate = h * (ends + inner);
    loop {
        if 2 * n + 1 > QUADRATURE_NODE_CAP {
            return Err(Error::NonConvergence {
                what: "bessel K trapezoid",
                cap: QUADRATURE_NODE_CAP,
            });
        }
        let mids: f64 = (0..n).map(|j| integrand((j as f64 + 0.5) * h)).sum();
        inner += mids;
        n *= 2;
        h *= 0.5;
        let refined = h * (ends + inner);
        let converged = (refined - estimate).abs() <= 1e-13 * refined;
        estimate = refined;
        if converged {
            break;
        }
    }
    // peak log value: -x cosh t* + nu t*  (cosh t* - 1 = 2 sinh^2(t*/2))
    let peak_log = -x * 2.0 * (0.5 * peak).sinh().powi(2) + nu * peak - x;
    Ok(ScaledReal::new(estimate, peak_log))
}

pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    let v = bessel_k_wide(nu, x)?.to_f64();
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(Error::Overflow {
            function: "bessel_k",
            x,
        })
    }
}

/// `e^{x} K_nu(x)`.
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<ScaledReal> {
    Ok(bessel_k_wide(nu, x)?.scale_exp(x))
}
