//! The integrals
//!
//! `F(nu, beta, x) = int_0^x e^{-beta t} t^nu L_nu(t) dt` and
//! `G(nu, beta, x) = int_0^x e^{-beta t} t^nu L_{nu+1}(t) dt`
//!
//! by four independent routes: adaptive quadrature, an incomplete-gamma
//! series for `0 < beta < 1`, a closed form at `beta = 1` and a `2F3`
//! representation at `beta = 0`.
//!
//! Every route works relative to an exponent field, so results for `x` up to
//! 1000 and beyond stay finite.

use std::f64::consts::{LN_2, PI};

use crate::error::{domain, Error, Result};
use crate::quad::{adaptive_gauss_kronrod, tanh_sinh};
use crate::scaled::ScaledReal;
use crate::specfun::{
    gamma_scaled, ln_gamma, ln_lower_incomplete_gamma, pfq, struve_l_scaled, struve_l_wide,
    SERIES_TERM_CAP,
};

/// Relative tolerance the dispatchers request from quadrature.
pub const QUAD_TOL: f64 = 1e-12;
/// Smallest tolerance [`integral_quad`] accepts.
pub const MIN_QUAD_TOL: f64 = 1e-13;
/// Relative truncation target of [`integral_series`].
pub const SERIES_TRUNCATION: f64 = 1e-15;
/// Below this `beta` the dispatcher prefers quadrature over the series.
pub const SERIES_MIN_BETA: f64 = 0.05;

/// `int_0^upper e^{-beta t} t^weight_power L_order(t) dt`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralSpec {
    pub weight_power: f64,
    pub order: f64,
    pub beta: f64,
    pub upper: f64,
}

impl IntegralSpec {
    /// Parameters of `F(nu, beta, x)`.
    pub fn f(nu: f64, beta: f64, x: f64) -> Self {
        IntegralSpec {
            weight_power: nu,
            order: nu,
            beta,
            upper: x,
        }
    }

    /// Parameters of `G(nu, beta, x)`.
    pub fn g(nu: f64, beta: f64, x: f64) -> Self {
        IntegralSpec {
            weight_power: nu,
            order: nu + 1.0,
            beta,
            upper: x,
        }
    }

    /// Checks that the integral exists and the parameters are in range.
    ///
    /// Near `t = 0` the integrand behaves like `t^(weight_power + order + 1)`,
    /// which is integrable iff `weight_power + order > -2`.
    pub fn validate(&self) -> Result<()> {
        let IntegralSpec {
            weight_power: a,
            order: mu,
            beta,
            upper: x,
        } = *self;
        if !(a.is_finite() && mu.is_finite() && beta.is_finite() && x.is_finite()) {
            return Err(domain("IntegralSpec", "parameters must be finite"));
        }
        if mu <= -1.5 {
            return Err(domain("IntegralSpec", format!("order must exceed -3/2, got {mu}")));
        }
        if a + mu <= -2.0 {
            return Err(domain(
                "IntegralSpec",
                format!("integral diverges at 0 for weight {a} and order {mu}"),
            ));
        }
        if !(0.0..=1.0).contains(&beta) {
            return Err(domain("IntegralSpec", format!("beta must lie in [0, 1], got {beta}")));
        }
        if x < 0.0 {
            return Err(domain("IntegralSpec", format!("upper limit must be >= 0, got {x}")));
        }
        Ok(())
    }

    /// `ln` of the integrand at `t > 0`.
    fn ln_integrand(&self, t: f64) -> Result<f64> {
        Ok(-self.beta * t + self.weight_power * t.ln() + struve_l_wide(self.order, t)?.ln_abs())
    }
}

/// Quadrature outcome.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: ScaledReal,
    /// Absolute error estimate, carried with the same exponent range as
    /// `value`.
    pub abs_error_estimate: ScaledReal,
    pub node_count: usize,
}

/// Adaptive quadrature of an [`IntegralSpec`].
///
/// Tanh-sinh on `[0, min(1, x)]`, which absorbs the algebraic behavior at
/// `t = 0`, then adaptive Gauss-Kronrod on `[1, x]`. The integrand is
/// divided by its value at `x`, so only the final result carries the large
/// exponent.
pub fn integral_quad(spec: IntegralSpec, tol: f64) -> Result<QuadratureResult> {
    spec.validate()?;
    if !(tol >= MIN_QUAD_TOL) {
        return Err(domain("integral_quad", format!("tolerance must be >= {MIN_QUAD_TOL}, got {tol}")));
    }
    let x = spec.upper;
    if x == 0.0 {
        return Ok(QuadratureResult {
            value: ScaledReal::ZERO,
            abs_error_estimate: ScaledReal::ZERO,
            node_count: 0,
        });
    }
    let reference = spec.ln_integrand(x)?;
    let scaled = |t: f64| -> f64 {
        if t <= 0.0 {
            return 0.0;
        }
        match struve_l_wide(spec.order, t) {
            Ok(l) => (l * ScaledReal::powf(t, spec.weight_power))
                .scale_exp(-spec.beta * t - reference)
                .to_f64(),
            Err(_) => f64::NAN,
        }
    };
    let split = x.min(1.0);
    let head = tanh_sinh(|_, offset| scaled(offset), 0.0, split, tol)?;
    let (mut value, mut error, mut nodes) = (head.value, head.abs_error, head.evaluations);
    if x > split {
        // the head is never larger than the tail's share when x > 1, so a
        // tolerance on the tail alone keeps the sum within tol
        let tail = adaptive_gauss_kronrod(scaled, split, x, tol, 0.0)?;
        value += tail.value;
        error += tail.abs_error;
        nodes += tail.evaluations;
    }
    if !value.is_finite() || !error.is_finite() {
        return Err(Error::NonConvergence {
            what: "integral quadrature (non-finite integrand)",
            cap: nodes,
        });
    }
    Ok(QuadratureResult {
        value: ScaledReal::from_f64(value).scale_exp(reference),
        abs_error_estimate: ScaledReal::from_f64(error).scale_exp(reference),
        node_count: nodes,
    })
}

/// `F` for `0 < beta < 1` from the incomplete-gamma expansion
///
/// `sum_k 2^{-nu-2k-1} beta^{-2k-2nu-2} gamma(2k+2nu+2, beta x) / (Gamma(k+3/2) Gamma(k+nu+3/2))`.
///
/// Terms are formed in log space. Each is bounded by
/// `b_k = 2^{-nu-2k-1} x^{a_k} / (a_k Gamma(k+3/2) Gamma(k+nu+3/2))`,
/// `a_k = 2k+2nu+2`, whose successive ratios fall monotonically; summation
/// stops once the geometric tail of `b_k` is below `1e-15` of the sum.
pub fn integral_series(nu: f64, beta: f64, x: f64) -> Result<ScaledReal> {
    if !(nu > -1.0) {
        return Err(domain("integral_series", format!("nu must exceed -1, got {nu}")));
    }
    if !(beta > 0.0 && beta < 1.0) {
        return Err(domain("integral_series", format!("beta must lie in (0, 1), got {beta}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("integral_series", format!("x must be positive, got {x}")));
    }
    let (ln_x, ln_beta) = (x.ln(), beta.ln());
    let quarter_x2 = 0.25 * x * x;
    let mut sum = ScaledReal::ZERO;
    for k in 0..SERIES_TERM_CAP {
        let kf = k as f64;
        let a = 2.0 * kf + 2.0 * nu + 2.0;
        let ln_denominator =
            (nu + 2.0 * kf + 1.0) * LN_2 + ln_gamma(kf + 1.5)? + ln_gamma(kf + nu + 1.5)?;
        let ln_term = ln_lower_incomplete_gamma(a, beta * x)? - a * ln_beta - ln_denominator;
        sum = sum + ScaledReal::from_ln(ln_term, false);
        let ratio_bound = quarter_x2 / ((kf + 1.5) * (kf + nu + 1.5));
        if ratio_bound < 1.0 {
            let ln_b = a * ln_x - a.ln() - ln_denominator;
            let ln_tail = ln_b + (ratio_bound / (1.0 - ratio_bound)).ln();
            if ln_tail - sum.ln_abs() <= SERIES_TRUNCATION.ln() {
                return Ok(sum);
            }
        }
    }
    Err(Error::NonConvergence {
        what: "incomplete-gamma series for F",
        cap: SERIES_TERM_CAP,
    })
}

/// `F(nu, 1, x)` in closed form:
///
/// `e^{-x} x^{nu+1} (L_nu + L_{nu+1}) / (2nu+1) - gamma(2nu+2, x) / (sqrt(pi) 2^nu (2nu+1) Gamma(nu+3/2))`.
pub fn integral_beta1(nu: f64, x: f64) -> Result<ScaledReal> {
    if !(nu > -0.5) {
        return Err(domain("integral_beta1", format!("nu must exceed -1/2, got {nu}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("integral_beta1", format!("x must be positive, got {x}")));
    }
    let two_nu_1 = 2.0 * nu + 1.0;
    let struve_sum = struve_l_scaled(nu, x)? + struve_l_scaled(nu + 1.0, x)?;
    let first = struve_sum * ScaledReal::powf(x, nu + 1.0) / two_nu_1;
    let ln_second = ln_lower_incomplete_gamma(2.0 * nu + 2.0, x)?
        - 0.5 * PI.ln()
        - nu * LN_2
        - two_nu_1.ln()
        - ln_gamma(nu + 1.5)?;
    Ok(first - ScaledReal::from_ln(ln_second, false))
}

/// `F(nu, 0, x)` from
/// `x^{2nu+2} 2F3(1, nu+1; 3/2, nu+3/2, nu+2; x^2/4) / (sqrt(pi) 2^{nu+1} (nu+1) Gamma(nu+3/2))`.
pub fn integral_beta0(nu: f64, x: f64) -> Result<ScaledReal> {
    if !(nu > -1.0) {
        return Err(domain("integral_beta0", format!("nu must exceed -1, got {nu}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("integral_beta0", format!("x must be positive, got {x}")));
    }
    let hyper = pfq(&[1.0, nu + 1.0], &[1.5, nu + 1.5, nu + 2.0], 0.25 * x * x)?.value;
    let denominator = gamma_scaled(nu + 1.5)? * (PI.sqrt() * (nu + 1.0)) * ScaledReal::powf(2.0, nu + 1.0);
    Ok(hyper * ScaledReal::powf(x, 2.0 * nu + 2.0) / denominator)
}

/// `F(nu, beta, x)`, dispatched to the most suitable route.
///
/// `beta = 0` uses the `2F3` form, `beta = 1` the closed form (quadrature
/// when `nu <= -1/2`), and `0 < beta < 1` the series when `beta >= 0.05`,
/// falling back to quadrature if the series fails.
pub fn f_integral(nu: f64, beta: f64, x: f64) -> Result<ScaledReal> {
    let spec = IntegralSpec::f(nu, beta, x);
    spec.validate()?;
    if x == 0.0 {
        return Ok(ScaledReal::ZERO);
    }
    let quad = || integral_quad(spec, QUAD_TOL).map(|r| r.value);
    if beta == 0.0 {
        integral_beta0(nu, x)
    } else if beta == 1.0 {
        if nu > -0.5 {
            integral_beta1(nu, x)
        } else {
            quad()
        }
    } else if beta >= SERIES_MIN_BETA {
        integral_series(nu, beta, x).or_else(|_| quad())
    } else {
        quad()
    }
}

/// `G(nu, beta, x)`, always by quadrature.
pub fn g_integral(nu: f64, beta: f64, x: f64) -> Result<ScaledReal> {
    let spec = IntegralSpec::g(nu, beta, x);
    spec.validate()?;
    if !(nu > -1.0) {
        return Err(domain("g_integral", format!("nu must exceed -1, got {nu}")));
    }
    Ok(integral_quad(spec, QUAD_TOL)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma_fn;

    fn rel(a: ScaledReal, b: ScaledReal) -> f64 {
        (a.ratio(&b) - 1.0).abs()
    }

    fn quad_f(nu: f64, beta: f64, x: f64) -> ScaledReal {
        integral_quad(IntegralSpec::f(nu, beta, x), QUAD_TOL).unwrap().value
    }

    fn leading_coefficient(nu: f64) -> f64 {
        1.0 / (PI.sqrt() * 2f64.powf(nu + 1.0) * (nu + 1.0) * gamma_fn(nu + 1.5).unwrap())
    }

    #[test]
    fn validation() {
        assert!(IntegralSpec::f(-1.0, 0.5, 1.0).validate().is_err());
        assert!(IntegralSpec::f(-0.99, 0.5, 1.0).validate().is_ok());
        assert!(IntegralSpec::f(0.0, 1.5, 1.0).validate().is_err());
        assert!(IntegralSpec::f(0.0, 0.5, -1.0).validate().is_err());
        assert!(integral_quad(IntegralSpec::f(0.0, 0.5, 1.0), 1e-14).is_err());
        assert!(integral_beta1(-0.5, 1.0).is_err());
        assert!(integral_series(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn empty_range_is_zero() {
        for &(nu, beta) in &[(-0.9, 0.0), (0.0, 0.5), (2.0, 1.0)] {
            assert!(f_integral(nu, beta, 0.0).unwrap().is_zero());
        }
        let r = integral_quad(IntegralSpec::f(3.5, 0.5, 0.0), QUAD_TOL).unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn quad_vanishes_like_power_near_zero() {
        let v = quad_f(1.0, 0.25, 1e-8).to_f64();
        assert!(v > 0.0 && v <= 1e-18, "{v}");
        let expected = leading_coefficient(1.0) * 1e-32;
        assert!((v / expected - 1.0).abs() < 1e-6);
    }

    #[test]
    fn quad_error_estimate_within_tolerance() {
        for &(nu, beta, x) in &[(-0.9, 0.3, 4.0), (0.0, 0.5, 1.0), (5.0, 0.75, 400.0)] {
            let r = integral_quad(IntegralSpec::f(nu, beta, x), 1e-11).unwrap();
            assert!(r.abs_error_estimate.ratio(&r.value) <= 1e-11);
            assert!(r.node_count > 0);
        }
    }

    #[test]
    fn beta1_matches_quad() {
        let closed = integral_beta1(1.0, 3.0).unwrap();
        assert!(rel(closed, quad_f(1.0, 1.0, 3.0)) < 1e-10);
        assert!(rel(integral_beta1(0.5, 1.0).unwrap(), quad_f(0.5, 1.0, 1.0)) < 1e-10);
        let wide = integral_beta1(10.0, 100.0).unwrap();
        assert!(wide.to_f64().is_finite());
        assert!(rel(wide, quad_f(10.0, 1.0, 100.0)) < 1e-10);
    }

    #[test]
    fn beta1_small_x_leading_order() {
        let nu = 0.75;
        let x: f64 = 1e-4;
        let v = integral_beta1(nu, x).unwrap().to_f64() / x.powf(2.0 * nu + 2.0);
        assert!((v / leading_coefficient(nu) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn beta0_matches_quad() {
        assert!(rel(integral_beta0(0.0, 2.0).unwrap(), quad_f(0.0, 0.0, 2.0)) < 1e-10);
        let edge = integral_beta0(-0.9, 1.0).unwrap();
        assert!(edge.is_positive());
        assert!(rel(edge, quad_f(-0.9, 0.0, 1.0)) < 1e-10);
        let x: f64 = 1e-5;
        let v = integral_beta0(2.0, x).unwrap().to_f64() / x.powi(6);
        assert!((v / leading_coefficient(2.0) - 1.0).abs() < 1e-9);
    }

    #[test]
    fn series_matches_quad() {
        assert!(rel(integral_series(0.0, 0.5, 1.0).unwrap(), quad_f(0.0, 0.5, 1.0)) < 1e-9);
        assert!(rel(integral_series(2.5, 0.5, 10.0).unwrap(), quad_f(2.5, 0.5, 10.0)) < 1e-9);
        let edge = integral_series(-0.5 + 1e-6, 0.25, 2.0).unwrap();
        assert!(edge.is_positive() && edge.to_f64().is_finite());
        assert!(rel(edge, quad_f(-0.5 + 1e-6, 0.25, 2.0)) < 1e-9);
    }

    #[test]
    fn series_first_term_gives_leading_order() {
        let (nu, beta, x) = (0.5, 0.5, 1e-3f64);
        let a = 2.0 * nu + 2.0;
        let first = crate::specfun::lower_incomplete_gamma(a, beta * x).unwrap()
            * 2f64.powf(-nu - 1.0)
            * beta.powf(-a)
            / (gamma_fn(1.5).unwrap() * gamma_fn(nu + 1.5).unwrap());
        let f = integral_series(nu, beta, x).unwrap().to_f64();
        assert!((first / f - 1.0).abs() < 0.01);
    }

    fn large_x_law(nu: f64, beta: f64, x: f64) -> f64 {
        let f = f_integral(nu, beta, x).unwrap();
        (f.scale_exp(-(1.0 - beta) * x) * ((2.0 * PI).sqrt() * (1.0 - beta) * x.powf(0.5 - nu)))
            .to_f64()
    }

    #[test]
    fn large_x_law_within_two_percent() {
        for &beta in &[0.25, 0.5] {
            for &(nu, x) in &[(0.0, 400.0), (1.0, 400.0), (5.0, 2000.0)] {
                let law = large_x_law(nu, beta, x);
                assert!((law - 1.0).abs() < 0.02, "nu={nu} beta={beta} x={x}: {law}");
            }
        }
    }

    #[test]
    fn large_x_law_first_order_correction() {
        // at nu = 5, x = 400 the ratio is still ~4.5% below 1; the
        // 1 - (4nu^2-1)/(8x) - (nu-1/2)/((1-beta)x) expansion accounts for it
        for &beta in &[0.25, 0.5] {
            let (nu, x) = (5.0, 400.0);
            let corrected = 1.0 - (4.0 * nu * nu - 1.0) / (8.0 * x) - (nu - 0.5) / ((1.0 - beta) * x);
            let law = large_x_law(nu, beta, x);
            assert!((law - corrected).abs() < 2e-3, "beta={beta}: {law} vs {corrected}");
        }
    }

    #[test]
    fn g_below_f() {
        let g = g_integral(0.5, 0.5, 2.0).unwrap();
        let f = f_integral(0.5, 0.5, 2.0).unwrap();
        assert!(g < f);
    }

    #[test]
    fn f_decreases_and_scaled_f_increases_in_beta() {
        let (nu, x) = (1.0, 5.0);
        let betas = [0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0];
        let values: Vec<_> = betas.iter().map(|&b| f_integral(nu, b, x).unwrap()).collect();
        for w in values.windows(2) {
            assert!(w[1] < w[0]);
        }
        for (i, w) in values.windows(2).enumerate() {
            assert!(w[0].scale_exp(betas[i] * x) < w[1].scale_exp(betas[i + 1] * x));
        }
    }

    #[test]
    fn quad_monotone_in_x() {
        let mut prev = ScaledReal::ZERO;
        for &x in &[0.1, 0.5, 1.0, 2.0, 7.5, 30.0] {
            let v = quad_f(-0.4, 0.6, x);
            assert!(v > prev);
            prev = v;
        }
    }
}
