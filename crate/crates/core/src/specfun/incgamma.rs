//! Lower incomplete gamma function `gamma(a, x) = int_0^x e^{-t} t^{a-1} dt`.
//!
//! Ascending series for `x < a + 1`, Lentz continued fraction for the upper
//! complement otherwise.

use super::gamma::ln_gamma;
use crate::error::{domain, Error, Result};
use crate::specfun::SERIES_TERM_CAP;

const EPS: f64 = 1e-16;
const TINY: f64 = 1e-300;

/// `gamma(a, x)` for `a > 0`, `x >= 0`. Overflows to `inf` when `Gamma(a)`
/// does; use [`ln_lower_incomplete_gamma`] for large arguments.
pub fn lower_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    check(a, x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    Ok(ln_lower_incomplete_gamma(a, x)?.exp())
}

/// `ln gamma(a, x)` for `a > 0`, `x > 0` (`-inf` at `x = 0`).
pub fn ln_lower_incomplete_gamma(a: f64, x: f64) -> Result<f64> {
    check(a, x)?;
    if x == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    let ln_prefactor = a * x.ln() - x;
    if x < a + 1.0 {
        Ok(ln_prefactor + series_sum(a, x)?.ln())
    } else {
        let ln_q = ln_prefactor - ln_gamma(a)? + continued_fraction(a, x)?.ln();
        Ok(ln_gamma(a)? + (-ln_q.exp()).ln_1p())
    }
}

fn check(a: f64, x: f64) -> Result<()> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain("lower_incomplete_gamma", format!("a must be positive, got {a}")));
    }
    if !(x >= 0.0) {
        return Err(domain("lower_incomplete_gamma", format!("x must be nonnegative, got {x}")));
    }
    Ok(())
}

/// `sum_n x^n / (a (a+1) ... (a+n))`
fn series_sum(a: f64, x: f64) -> Result<f64> {
    let mut ap = a;
    let mut term = 1.0 / a;
    let mut sum = term;
    for _ in 0..SERIES_TERM_CAP {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if term < sum * EPS {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "incomplete gamma series",
        cap: SERIES_TERM_CAP,
    })
}

/// Continued fraction for `Gamma(a, x) e^x x^{-a}` (modified Lentz).
fn continued_fraction(a: f64, x: f64) -> Result<f64> {
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..SERIES_TERM_CAP {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            return Ok(h);
        }
    }
    Err(Error::NonConvergence {
        what: "incomplete gamma continued fraction",
        cap: SERIES_TERM_CAP,
    })
}
