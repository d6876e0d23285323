//! Special-function kernel: `Gamma`, lower incomplete gamma, `pFq`, `L_nu`,
//! `I_nu` and `K_nu`, each with a wide-range or exponentially scaled form.
//!
//! Every function here is pure; results do not depend on call order or
//! thread.

mod bessel;
mod gamma;
mod hyper;
mod incgamma;
mod series;
mod struve;

pub use bessel::{
    bessel_i, bessel_i_scaled, bessel_i_wide, bessel_k, bessel_k_scaled, bessel_k_wide,
    QUADRATURE_NODE_CAP,
};
pub use gamma::{gamma_fn, ln_gamma};
pub use hyper::pfq;
pub use incgamma::{ln_lower_incomplete_gamma, lower_incomplete_gamma};
pub use series::SeriesResult;
pub use struve::{struve_l, struve_l_scaled, struve_l_wide};

use crate::error::Result;
use crate::scaled::ScaledReal;

/// Hard cap on terms of any series or continued fraction.
pub const SERIES_TERM_CAP: usize = 40_000;

/// Relative truncation target for the ascending series.
pub const SERIES_TOL: f64 = 1e-16;

/// An order for `L_nu` evaluation; construction enforces `nu > -3/2`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if nu > -1.5 && nu.is_finite() {
            Ok(Order(nu))
        } else {
            Err(crate::error::domain(
                "Order::new",
                format!("order must exceed -3/2, got {nu}"),
            ))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `Gamma(x)` as a wide-range value (falls back to `ln Gamma` past 170).
pub(crate) fn gamma_scaled(x: f64) -> Result<ScaledReal> {
    if x < 170.0 {
        Ok(ScaledReal::from_f64(gamma_fn(x)?))
    } else {
        Ok(ScaledReal::from_ln(ln_gamma(x)?, false))
    }
}
