//! Tightness trajectories and checks of the limiting forms.

use std::f64::consts::PI;

use crate::bounds::{eval_bound, reference_value, BoundId, BoundOptions};
use crate::error::{Error, Result};
use crate::integral::f_integral;
use crate::scaled::ScaledReal;
use crate::specfun::{bessel_k_wide, ln_gamma, struve_l_wide};

/// Bound and reference at one `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TightnessPoint {
    pub x: f64,
    pub bound: ScaledReal,
    pub reference: ScaledReal,
    /// `bound / reference`.
    pub ratio: f64,
}

/// `bound/reference` along `xs` (the binding side for two-sided and chained
/// bounds). Every point must satisfy the bound's hypotheses.
pub fn tightness_profile(id: BoundId, nu: f64, beta: f64, xs: &[f64], opts: BoundOptions) -> Result<Vec<TightnessPoint>> {
    xs.iter()
        .map(|&x| {
            let at = |e: Error| Error::AtPoint {
                context: format!("tightness {id}"),
                nu,
                beta,
                x,
                source: Box::new(e),
            };
            let bound = eval_bound(id, nu, beta, x, opts).map_err(at)?.primary();
            let reference = reference_value(id, nu, beta, x).map_err(at)?;
            Ok(TightnessPoint {
                x,
                bound,
                reference,
                ratio: bound.ratio(&reference),
            })
        })
        .collect()
}

/// First `x` in a profile at which the bound turns positive after being
/// nonpositive, as an empirical crossover for lower bounds that are negative
/// at small `x`.
pub fn sign_crossover(points: &[TightnessPoint]) -> Option<f64> {
    points
        .windows(2)
        .find(|w| !w[0].bound.is_positive() && w[1].bound.is_positive())
        .map(|w| w[1].x)
}

/// One limiting-form check: `ratio` is computed / asymptotic form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticRow {
    pub law: &'static str,
    pub nu: f64,
    pub beta: Option<f64>,
    pub x: f64,
    pub ratio: f64,
    pub tolerance: f64,
}

impl AsymptoticRow {
    pub fn deviation(&self) -> f64 {
        (self.ratio - 1.0).abs()
    }

    pub fn pass(&self) -> bool {
        self.deviation() <= self.tolerance
    }
}

pub const ASYMPTOTIC_HEADER: &str = "law,nu,beta,x,ratio,deviation,tolerance,status";

pub fn asymptotics_csv(rows: &[AsymptoticRow]) -> String {
    let mut out = format!("{ASYMPTOTIC_HEADER}\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.16e},{:.16e},{},{}\n",
            r.law,
            r.nu,
            r.beta.map(|b| b.to_string()).unwrap_or_default(),
            r.x,
            r.ratio,
            r.deviation(),
            r.tolerance,
            if r.pass() { "pass" } else { "fail" }
        ));
    }
    out
}

fn row(law: &'static str, nu: f64, beta: Option<f64>, x: f64, ln_ratio: f64, tolerance: f64) -> AsymptoticRow {
    AsymptoticRow {
        law,
        nu,
        beta,
        x,
        ratio: ln_ratio.exp(),
        tolerance,
    }
}

/// `ln(x^{nu-1/2} e^{(1-beta)x} / sqrt(2 pi))`.
fn ln_large_x_weight(nu: f64, beta: f64, x: f64) -> f64 {
    (nu - 0.5) * x.ln() + (1.0 - beta) * x - 0.5 * (2.0 * PI).ln()
}

/// Checks each limiting form at a designated `x` with a tolerance set above
/// its first neglected term:
///
/// - `F ~ x^{nu-1/2} e^{(1-beta)x} / (sqrt(2 pi)(1-beta))`: 2% at `x = 400`
///   (`x = 2000` for `nu = 5`, where the `1/x` correction is 4.3% at 400).
/// - `e^{-beta x} x^nu L_{nu+n} ~ x^{nu-1/2} e^{(1-beta)x} / sqrt(2 pi)`: 1%
///   for `n = 0, 1` at `x = 400` and `n = 3` at `x = 1000` (its `1/x`
///   correction is 1.09% at 400).
/// - `L_nu ~ x^{nu+1} (1 + x^2/(3(2nu+3))) / (sqrt(pi) 2^nu Gamma(nu+3/2))`:
///   1e-4 at `x = 1e-2`.
/// - `L_nu ~ e^x (1 - (4nu^2-1)/(8x)) / sqrt(2 pi x)`: 1e-4 at `x = 400`.
/// - `K_nu ~ 2^{nu-1} Gamma(nu) / x^nu`: 1e-3 at `x = 1e-4`.
/// - `K_nu ~ sqrt(pi/(2x)) e^{-x} (1 + (4nu^2-1)/(8x))`: 1e-4 at `x = 400`.
pub fn asymptotic_check() -> Result<Vec<AsymptoticRow>> {
    let mut rows = Vec::new();

    for &(nu, beta, x) in &[
        (0.0, 0.25, 400.0),
        (0.0, 0.5, 400.0),
        (1.0, 0.25, 400.0),
        (1.0, 0.5, 400.0),
        (5.0, 0.5, 2000.0),
    ] {
        let f = f_integral(nu, beta, x)?;
        let ln_form = ln_large_x_weight(nu, beta, x) - (1.0 - beta).ln();
        rows.push(row("F large x", nu, Some(beta), x, f.ln_abs() - ln_form, 0.02));
    }

    let (nu, beta) = (0.0, 0.5);
    for &(n, x) in &[(0.0, 400.0), (1.0, 400.0), (3.0, 1000.0)] {
        let lhs = struve_l_wide(nu + n, x)?.ln_abs() - beta * x + nu * x.ln();
        let law = match n as u8 {
            0 => "weighted L_nu large x",
            1 => "weighted L_nu+1 large x",
            _ => "weighted L_nu+3 large x",
        };
        rows.push(row(law, nu, Some(beta), x, lhs - ln_large_x_weight(nu, beta, x), 0.01));
    }

    let x: f64 = 1e-2;
    for &nu in &[-0.5, 0.0, 1.0, 2.5] {
        let ln_form = (nu + 1.0) * x.ln() + (x * x / (3.0 * (2.0 * nu + 3.0))).ln_1p()
            - 0.5 * PI.ln()
            - nu * 2f64.ln()
            - ln_gamma(nu + 1.5)?;
        rows.push(row("L small x", nu, None, x, struve_l_wide(nu, x)?.ln_abs() - ln_form, 1e-4));
    }

    let x = 400.0;
    for &nu in &[0.0, 1.0, 2.5] {
        let corr = (4.0 * nu * nu - 1.0) / (8.0 * x);
        let ln_form = x - 0.5 * (2.0 * PI * x).ln() + (-corr).ln_1p();
        rows.push(row("L large x", nu, None, x, struve_l_wide(nu, x)?.ln_abs() - ln_form, 1e-4));
    }

    let x: f64 = 1e-4;
    for &nu in &[0.5, 1.0, 2.0] {
        let ln_form = (nu - 1.0) * 2f64.ln() + ln_gamma(nu)? - nu * x.ln();
        rows.push(row("K small x", nu, None, x, bessel_k_wide(nu, x)?.ln_abs() - ln_form, 1e-3));
    }

    let x = 400.0;
    for &nu in &[0.0, 1.0, 2.5] {
        let corr = (4.0 * nu * nu - 1.0) / (8.0 * x);
        let ln_form = 0.5 * (PI / (2.0 * x)).ln() - x + corr.ln_1p();
        rows.push(row("K large x", nu, None, x, bessel_k_wide(nu, x)?.ln_abs() - ln_form, 1e-4));
    }

    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_limiting_form_holds() {
        let rows = asymptotic_check().unwrap();
        for r in &rows {
            assert!(r.pass(), "{r:?}");
        }
        assert_eq!(rows.iter().filter(|r| r.law == "K small x" && r.nu == 2.0).count(), 1);
    }

    #[test]
    fn upper_bound_blows_up_at_small_x() {
        // U/F ~ 2(nu+1)/((1-beta)x) = 533.3 at nu=1, beta=0.25, x=1e-2
        let p = tightness_profile(BoundId::UpperSameOrder, 1.0, 0.25, &[1e-2], BoundOptions::default()).unwrap();
        assert!((p[0].ratio / (4.0 / (0.75 * 1e-2)) - 1.0).abs() < 0.05, "{}", p[0].ratio);
    }

    #[test]
    fn truncated_series_limits() {
        let opts = BoundOptions {
            x_star: None,
            truncation: Some(5),
        };
        let large = tightness_profile(BoundId::LowerStruveSeries, 1.0, 0.75, &[1000.0], opts).unwrap();
        assert!((1.0 - large[0].ratio - 0.75f64.powi(5)).abs() < 0.01);
        let small = tightness_profile(BoundId::LowerStruveSeries, 1.0, 0.25, &[1e-3], opts).unwrap();
        assert!((1.0 - small[0].ratio - 0.2).abs() < 1e-3);
    }

    #[test]
    fn crossover_of_negative_lower_bound() {
        let xs = crate::harness::grid::log_spaced(1e-3, 200.0, 40);
        let p = tightness_profile(BoundId::LowerGammaMidOrder, 2.5, 0.5, &xs, BoundOptions::default()).unwrap();
        assert!(!p[0].bound.is_positive());
        let cross = sign_crossover(&p).expect("turns positive");
        assert!(cross > 50.0 && cross < 200.0);
        assert!(p.last().unwrap().ratio > 0.0);
    }

    #[test]
    fn errors_carry_the_point() {
        let err = tightness_profile(BoundId::LowerGammaSmallOrder, 1.0, 0.5, &[2.0], BoundOptions::default()).unwrap_err();
        assert!(err.to_string().contains("x=2"), "{err}");
    }
}
