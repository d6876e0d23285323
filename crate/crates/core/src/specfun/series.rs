//! Ratio-driven power-series summation with running exponent extraction.

use crate::error::{Error, Result};
use crate::scaled::ScaledReal;

use super::SERIES_TERM_CAP;

/// Outcome of a summed series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: ScaledReal,
    pub terms_used: usize,
    /// Relative bound on the discarded tail.
    pub truncation_estimate: f64,
}

/// Partial sums are renormalized once they exceed `e^30`.
const RENORM_LN: f64 = 30.0;

/// Sums `t_0 + t_1 + ...` where `t_0 = first` and `t_{k+1} = t_k * ratio(k)`.
///
/// Stops once `k >= min_terms`, the tail ratio `r = tail_ratio(k, ratio(k))`
/// is below 1 and the geometric tail bound `|t_k| r / (1 - r)` falls below
/// `tol * |sum|`. `tail_ratio(k, .)` must bound `|ratio(j)|` for every
/// `j >= k >= min_terms`.
pub(crate) fn sum_ratio_series(
    first: ScaledReal,
    mut ratio: impl FnMut(usize) -> f64,
    tail_ratio: impl Fn(usize, f64) -> f64,
    tol: f64,
    min_terms: usize,
    what: &'static str,
) -> Result<SeriesResult> {
    if first.is_zero() {
        return Ok(SeriesResult {
            value: ScaledReal::ZERO,
            terms_used: 1,
            truncation_estimate: 0.0,
        });
    }
    let renorm = RENORM_LN.exp();
    let mut base = first.exponent();
    let mut term = first.mantissa();
    let mut sum = term;
    let mut r = ratio(0);
    for k in 0..SERIES_TERM_CAP {
        if r == 0.0 {
            return Ok(SeriesResult {
                value: ScaledReal::new(sum, base),
                terms_used: k + 1,
                truncation_estimate: 0.0,
            });
        }
        let rt = if k >= min_terms { tail_ratio(k, r) } else { f64::INFINITY };
        if rt < 1.0 {
            let tail = term.abs() * rt / (1.0 - rt);
            if tail <= tol * sum.abs() || term == 0.0 {
                return Ok(SeriesResult {
                    value: ScaledReal::new(sum, base),
                    terms_used: k + 1,
                    truncation_estimate: tail / sum.abs(),
                });
            }
        }
        term *= r;
        sum += term;
        if sum.abs() > renorm {
            sum /= renorm;
            term /= renorm;
            base += RENORM_LN;
        }
        r = ratio(k + 1);
    }
    Err(Error::NonConvergence {
        what,
        cap: SERIES_TERM_CAP,
    })
}
