//! Bound evaluation, reference values and margins.

use std::f64::consts::{LN_2, PI};

use super::catalog::{BoundId, Side, Target};
use crate::error::{domain, Error, Result};
use crate::integral::{f_integral, g_integral};
use crate::scaled::ScaledReal;
use crate::specfun::{
    bessel_i_wide, bessel_k_wide, gamma_fn, gamma_scaled, ln_gamma, ln_lower_incomplete_gamma, struve_l_wide,
    SERIES_TERM_CAP,
};

/// Relative accuracy of integral-based references.
pub const INTEGRAL_REFERENCE_ACCURACY: f64 = 1e-9;
/// Relative accuracy of references built from `L`, `I` and `K` alone.
pub const SPECFUN_REFERENCE_ACCURACY: f64 = 1e-11;
/// Margins below this multiple of the reference accuracy are inconclusive.
pub const INCONCLUSIVE_FACTOR: f64 = 10.0;
/// Relative stopping threshold for the untruncated Struve-sum lower bound.
pub const SERIES_BOUND_TAIL: f64 = 1e-12;

/// Per-evaluation options.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct BoundOptions {
    /// Threshold for the `x_star` upper bound.
    pub x_star: Option<f64>,
    /// Fixed number of terms for the Struve-sum lower bound.
    pub truncation: Option<usize>,
}

impl BoundOptions {
    /// Options with the conventional threshold `x_star = 2/(1-beta)`.
    pub fn with_default_x_star(beta: f64) -> Self {
        BoundOptions {
            x_star: Some(default_x_star(beta)),
            truncation: None,
        }
    }
}

/// `2/(1-beta)`.
pub fn default_x_star(beta: f64) -> f64 {
    2.0 / (1.0 - beta)
}

/// Value of a bound's right-hand side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundValue {
    Single(ScaledReal),
    /// `lower < target < upper`.
    Pair { lower: ScaledReal, upper: ScaledReal },
    /// `target < inner < outer`.
    Chain { inner: ScaledReal, outer: ScaledReal },
}

impl BoundValue {
    /// The side closest to the target (the only side for single bounds).
    pub fn primary(&self) -> ScaledReal {
        match *self {
            BoundValue::Single(v) => v,
            BoundValue::Pair { lower, .. } => lower,
            BoundValue::Chain { inner, .. } => inner,
        }
    }
}

/// Classification of a margin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Strict,
    Inconclusive,
    Violated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Strict => "strict",
            Status::Inconclusive => "inconclusive",
            Status::Violated => "violated",
        }
    }
}

/// Outcome of comparing a bound against its reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margin {
    /// The binding side of the bound.
    pub bound_value: ScaledReal,
    pub reference_value: ScaledReal,
    /// Relative margin, positive when the inequality holds.
    pub signed_margin: f64,
    pub status: Status,
}

impl Margin {
    /// Whether the inequality holds as computed (`signed_margin > 0`).
    pub fn strict(&self) -> bool {
        self.signed_margin > 0.0
    }
}

fn struve(nu: f64, x: f64) -> Result<ScaledReal> {
    struve_l_wide(nu, x)
}

/// `e^{-beta x} x^nu`.
fn weight(nu: f64, beta: f64, x: f64) -> ScaledReal {
    ScaledReal::powf(x, nu).scale_exp(-beta * x)
}

/// `gamma(2nu+1, beta x) / (sqrt(pi) 2^nu beta^{2nu+1} Gamma(nu+3/2))`.
fn gamma_term(nu: f64, beta: f64, x: f64) -> Result<ScaledReal> {
    let a = 2.0 * nu + 1.0;
    let ln = ln_lower_incomplete_gamma(a, beta * x)?
        - 0.5 * PI.ln()
        - nu * LN_2
        - a * beta.ln()
        - ln_gamma(nu + 1.5)?;
    Ok(ScaledReal::from_ln(ln, false))
}

/// `(factor e^{-beta x} x^nu L_nu(x) - gamma_term) / (1 - beta)`.
fn gamma_corrected_lower(nu: f64, beta: f64, x: f64, factor: f64) -> Result<ScaledReal> {
    let main = weight(nu, beta, x) * struve(nu, x)? * factor;
    Ok((main - gamma_term(nu, beta, x)?) / (1.0 - beta))
}

/// `2 Gamma(nu+2) / (sqrt(pi) Gamma(nu+3/2))`.
pub fn product_upper_constant(nu: f64) -> Result<f64> {
    Ok(2.0 * (ln_gamma(nu + 2.0)? - ln_gamma(nu + 1.5)?).exp() / PI.sqrt())
}

/// `M(x_star) = max{(2nu+3+2x_star)/(2nu+1), x_star/((1-beta)x_star - 1)}`.
pub fn m_factor(nu: f64, beta: f64, x_star: f64) -> Result<f64> {
    if !(nu > -0.5) {
        return Err(domain("m_factor", format!("nu must exceed -1/2, got {nu}")));
    }
    if !(beta > 0.0 && beta < 1.0) {
        return Err(domain("m_factor", format!("beta must lie in (0, 1), got {beta}")));
    }
    let denominator = (1.0 - beta) * x_star - 1.0;
    if !(denominator > 0.0) || !x_star.is_finite() {
        return Err(domain(
            "m_factor",
            format!("x_star must exceed 1/(1-beta) = {}, got {x_star}", 1.0 / (1.0 - beta)),
        ));
    }
    let first = (2.0 * nu + 3.0 + 2.0 * x_star) / (2.0 * nu + 1.0);
    Ok(first.max(x_star / denominator))
}

/// `A_nu = 2(nu+1)` for `nu >= 1/2`, else `2nu + 29`.
pub fn a_factor(nu: f64) -> Result<f64> {
    if !(nu > -0.5) {
        return Err(domain("a_factor", format!("nu must exceed -1/2, got {nu}")));
    }
    Ok(if nu >= 0.5 { 2.0 * (nu + 1.0) } else { 2.0 * nu + 29.0 })
}

/// Limit regime for [`product_asymptote`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoteKind {
    SmallX,
    LargeX,
}

/// Leading behavior of `x K_{nu+1}(x) L_nu(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProductAsymptote {
    /// `~ slope * x` as `x -> 0`.
    SmallX { slope: f64 },
    /// `~ limit + first_order / x` as `x -> inf`.
    LargeX { limit: f64, first_order: f64 },
}

pub fn product_asymptote(kind: AsymptoteKind, nu: f64) -> Result<ProductAsymptote> {
    if !(nu > -0.5) {
        return Err(domain("product_asymptote", format!("nu must exceed -1/2, got {nu}")));
    }
    Ok(match kind {
        AsymptoteKind::SmallX => ProductAsymptote::SmallX {
            slope: gamma_fn(nu + 1.0)? / (PI.sqrt() * gamma_fn(nu + 1.5)?),
        },
        AsymptoteKind::LargeX => ProductAsymptote::LargeX {
            limit: 0.5,
            first_order: (2.0 * nu + 1.0) / 4.0,
        },
    })
}

/// `e^{-beta x} x^nu sum_k beta^k L_{nu+k+1}(x)`.
///
/// With `truncation = Some(K)` exactly `K` terms are summed. Otherwise the
/// sum stops once `beta^k L_{nu+k+1}(x) / (1-beta)`, which bounds the
/// remaining tail because `L_mu` decreases in `mu` for `mu >= -1/2`, falls
/// below `1e-12` of the partial sum.
pub fn struve_sum_lower(nu: f64, beta: f64, x: f64, truncation: Option<usize>) -> Result<ScaledReal> {
    if truncation == Some(0) {
        return Err(domain("struve_sum_lower", "truncation must be at least 1"));
    }
    let mut sum = ScaledReal::ZERO;
    let ln_beta = beta.ln();
    for k in 0..SERIES_TERM_CAP {
        let term = struve(nu + k as f64 + 1.0, x)?.scale_exp(k as f64 * ln_beta);
        if truncation.is_none() && k > 0 && term.ratio(&sum) / (1.0 - beta) < SERIES_BOUND_TAIL {
            sum = sum + term;
            return Ok(sum * weight(nu, beta, x));
        }
        sum = sum + term;
        if truncation == Some(k + 1) {
            return Ok(sum * weight(nu, beta, x));
        }
    }
    Err(Error::NonConvergence {
        what: "Struve-sum lower bound",
        cap: SERIES_TERM_CAP,
    })
}

/// Evaluates the right-hand side of a bound after checking its hypothesis.
pub fn eval_bound(id: BoundId, nu: f64, beta: f64, x: f64, opts: BoundOptions) -> Result<BoundValue> {
    let spec = id.spec();
    spec.check_validity(nu, beta, x, opts.x_star)?;
    use BoundId::*;
    let single = |v: ScaledReal| Ok(BoundValue::Single(v));
    let scalar = |v: f64| Ok(BoundValue::Single(ScaledReal::from_f64(v)));
    let two_nu_1 = 2.0 * nu + 1.0;
    match id {
        LowerGammaSmallOrder | CompanionSmallOrder => single(gamma_corrected_lower(nu, beta, x, 1.0)?),
        LowerGammaLargeOrder | CompanionLargeOrder => {
            let factor = 1.0 - 4.0 * nu * nu / ((2.0 * nu - 1.0) * (1.0 - beta) * x);
            single(gamma_corrected_lower(nu, beta, x, factor)?)
        }
        LowerGammaMidOrder | CompanionMidOrder => {
            let factor = 1.0 - 2.0 * nu * (2.0 * nu + 27.0) / ((2.0 * nu - 1.0) * (1.0 - beta) * x);
            single(gamma_corrected_lower(nu, beta, x, factor)?)
        }
        LowerStruveSeries => single(struve_sum_lower(nu, beta, x, opts.truncation)?),
        LowerFirstTerm => single(weight(nu, beta, x) * struve(nu + 1.0, x)?),
        UpperNextOrderWide => {
            let c = (2.0 * nu + 29.0) / (two_nu_1 * (1.0 - beta));
            single(weight(nu, beta, x) * struve(nu + 1.0, x)? * c)
        }
        UpperSameOrderWide => {
            let c = (2.0 * nu + 15.0) / (two_nu_1 * (1.0 - beta));
            single(weight(nu, beta, x) * struve(nu, x)? * c)
        }
        UpperNextOrder => {
            let c = 2.0 * (nu + 1.0) / (two_nu_1 * (1.0 - beta));
            single(weight(nu, beta, x) * struve(nu + 1.0, x)? * c)
        }
        UpperNextOrderFull => {
            let polynomial = ScaledReal::powf(x, nu + 2.0)
                / (gamma_scaled(nu + 2.5)? * (PI.sqrt() * (nu + 1.0)) * ScaledReal::powf(2.0, nu + 2.0));
            let bracket = struve(nu + 1.0, x)? * (2.0 * (nu + 1.0)) - struve(nu + 3.0, x)? - polynomial;
            single(weight(nu, beta, x) * bracket / (two_nu_1 * (1.0 - beta)))
        }
        UpperSameOrder => single(weight(nu, beta, x) * struve(nu, x)? / (1.0 - beta)),
        UpperPiecewise => {
            let c = a_factor(nu)? / (two_nu_1 * (1.0 - beta));
            single(weight(nu, beta, x) * struve(nu + 1.0, x)? * c)
        }
        UpperXStar => {
            let x_star = opts.x_star.ok_or(Error::MissingXStar(id.as_str()))?;
            let m = m_factor(nu, beta, x_star)?;
            single(weight(nu, beta, x) * struve(nu + 1.0, x)? * m)
        }
        StruveRatioSimple => scalar(x / (two_nu_1 + x)),
        StruveRatioViaBesselI => {
            let inverse = bessel_i_wide(nu - 1.0, x)?.ratio(&bessel_i_wide(nu, x)?) + 1.0 / x;
            scalar(1.0 / inverse)
        }
        BesselIRatioRational => scalar(x / (2.0 * nu + x)),
        BesselKRatioChain => {
            let h = nu - 0.5;
            Ok(BoundValue::Chain {
                inner: ScaledReal::from_f64((h + h.hypot(x)) / x),
                outer: ScaledReal::from_f64(1.0 + (2.0 * nu - 1.0) / x),
            })
        }
        ProductTwoSided => Ok(BoundValue::Pair {
            lower: ScaledReal::from_f64(0.5),
            upper: ScaledReal::from_f64(product_upper_constant(nu)?),
        }),
        ProductShift1 => scalar(1.0),
        ProductShift3 => scalar(product_upper_constant(nu)? * (1.0 + (2.0 * nu + 5.0) / x)),
        ProductShift2Narrow => scalar(1.5),
        ProductShift3Narrow => scalar(1.5 + 9.0 / x),
        ProductNextOrderNarrow => scalar(15.0 / 8.0),
        WeightedShift3 => scalar(14.0 / (two_nu_1 * (1.0 - beta))),
        WeightedShift2 => scalar(7.0 / (two_nu_1 * (1.0 - beta))),
        StruveOrderMonotone => scalar(1.0),
    }
}

/// `x K_{nu+k_shift}(x) L_{nu+l_shift}(x)`.
fn kl_product(nu: f64, x: f64, k_shift: f64, l_shift: f64) -> Result<ScaledReal> {
    Ok(bessel_k_wide(nu + k_shift, x)? * struve(nu + l_shift, x)? * x)
}

/// The quantity a bound is compared against.
pub fn reference_value(id: BoundId, nu: f64, beta: f64, x: f64) -> Result<ScaledReal> {
    use BoundId::*;
    match id {
        StruveRatioSimple | StruveRatioViaBesselI | StruveOrderMonotone => {
            Ok(struve(nu, x)? / struve(nu - 1.0, x)?)
        }
        BesselIRatioRational => Ok(bessel_i_wide(nu, x)? / bessel_i_wide(nu - 1.0, x)?),
        BesselKRatioChain => Ok(bessel_k_wide(nu, x)? / bessel_k_wide(nu - 1.0, x)?),
        ProductTwoSided | ProductShift2Narrow => kl_product(nu, x, 2.0, 0.0),
        ProductShift1 => kl_product(nu, x, 1.0, 0.0),
        ProductShift3 | ProductShift3Narrow => kl_product(nu, x, 3.0, 0.0),
        ProductNextOrderNarrow => kl_product(nu, x, 3.0, 1.0),
        WeightedShift3 | WeightedShift2 => {
            let shift = if id == WeightedShift3 { 3.0 } else { 2.0 };
            let f = f_integral(nu, beta, x)?;
            Ok((bessel_k_wide(nu + shift, x)? * ScaledReal::powf(x, 1.0 - nu) * f).scale_exp(beta * x))
        }
        _ => match id.spec().target {
            Target::GIntegral => g_integral(nu, beta, x),
            _ => f_integral(nu, beta, x),
        },
    }
}

/// Relative accuracy assumed for the reference of a target.
pub fn reference_accuracy(target: Target) -> f64 {
    if target.is_integral() {
        INTEGRAL_REFERENCE_ACCURACY
    } else {
        SPECFUN_REFERENCE_ACCURACY
    }
}

/// Compares a bound against its reference.
///
/// The relative margin is `(reference - bound) / reference` for lower bounds
/// and `(bound - reference) / reference` for upper bounds; two-sided and
/// chained bounds report the smaller of their two margins. A margin whose
/// magnitude is below ten times the reference accuracy is inconclusive.
pub fn check(id: BoundId, nu: f64, beta: f64, x: f64, opts: BoundOptions) -> Result<Margin> {
    let value = eval_bound(id, nu, beta, x, opts)?;
    let reference = reference_value(id, nu, beta, x)?;
    let spec = id.spec();
    let rel = |d: ScaledReal| d.ratio(&reference);
    let (bound_value, signed_margin) = match (value, spec.side) {
        (BoundValue::Single(b), Side::Lower) => (b, rel(reference - b)),
        (BoundValue::Single(b), _) => (b, rel(b - reference)),
        (BoundValue::Pair { lower, upper }, _) => {
            let (ml, mu) = (rel(reference - lower), rel(upper - reference));
            if ml <= mu {
                (lower, ml)
            } else {
                (upper, mu)
            }
        }
        (BoundValue::Chain { inner, outer }, _) => {
            let (mi, mo) = (rel(inner - reference), rel(outer - inner));
            (inner, mi.min(mo))
        }
    };
    let threshold = INCONCLUSIVE_FACTOR * reference_accuracy(spec.target);
    let status = if signed_margin.abs() < threshold {
        Status::Inconclusive
    } else if signed_margin > 0.0 {
        Status::Strict
    } else {
        Status::Violated
    };
    Ok(Margin {
        bound_value,
        reference_value: reference,
        signed_margin,
        status,
    })
}
