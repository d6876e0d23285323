//! The fixed set of bounds, their targets and hypotheses.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Identifier of a catalog bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    LowerGammaSmallOrder,
    LowerGammaLargeOrder,
    LowerStruveSeries,
    LowerGammaMidOrder,
    LowerFirstTerm,
    UpperNextOrderWide,
    UpperSameOrderWide,
    UpperNextOrder,
    UpperNextOrderFull,
    UpperSameOrder,
    UpperPiecewise,
    UpperXStar,
    CompanionSmallOrder,
    CompanionLargeOrder,
    CompanionMidOrder,
    StruveRatioSimple,
    StruveRatioViaBesselI,
    BesselIRatioRational,
    BesselKRatioChain,
    ProductTwoSided,
    ProductShift1,
    ProductShift3,
    ProductShift2Narrow,
    ProductShift3Narrow,
    ProductNextOrderNarrow,
    WeightedShift3,
    WeightedShift2,
    StruveOrderMonotone,
}

impl BoundId {
    pub const ALL: [BoundId; 28] = [
        BoundId::LowerGammaSmallOrder,
        BoundId::LowerGammaLargeOrder,
        BoundId::LowerStruveSeries,
        BoundId::LowerGammaMidOrder,
        BoundId::LowerFirstTerm,
        BoundId::UpperNextOrderWide,
        BoundId::UpperSameOrderWide,
        BoundId::UpperNextOrder,
        BoundId::UpperNextOrderFull,
        BoundId::UpperSameOrder,
        BoundId::UpperPiecewise,
        BoundId::UpperXStar,
        BoundId::CompanionSmallOrder,
        BoundId::CompanionLargeOrder,
        BoundId::CompanionMidOrder,
        BoundId::StruveRatioSimple,
        BoundId::StruveRatioViaBesselI,
        BoundId::BesselIRatioRational,
        BoundId::BesselKRatioChain,
        BoundId::ProductTwoSided,
        BoundId::ProductShift1,
        BoundId::ProductShift3,
        BoundId::ProductShift2Narrow,
        BoundId::ProductShift3Narrow,
        BoundId::ProductNextOrderNarrow,
        BoundId::WeightedShift3,
        BoundId::WeightedShift2,
        BoundId::StruveOrderMonotone,
    ];

    /// The external identifier used on the command line and in reports.
    pub fn as_str(self) -> &'static str {
        use BoundId::*;
        match self {
            LowerGammaSmallOrder => "LB-2.1",
            LowerGammaLargeOrder => "LB-2.2",
            LowerStruveSeries => "LB-2.3",
            LowerGammaMidOrder => "LB-2.6",
            LowerFirstTerm => "LB-PRIOR",
            UpperNextOrderWide => "UB-2.4",
            UpperSameOrderWide => "UB-2.5",
            UpperNextOrder => "UB-GAU1",
            UpperNextOrderFull => "UB-GAU1-FULL",
            UpperSameOrder => "UB-GAU2",
            UpperPiecewise => "UB-ANU",
            UpperXStar => "UB-3.8",
            CompanionSmallOrder => "PB-2.7",
            CompanionLargeOrder => "PB-2.8",
            CompanionMidOrder => "PB-2.9",
            StruveRatioSimple => "RB-3.1",
            StruveRatioViaBesselI => "RB-AUG18",
            BesselIRatioRational => "RB-NASELL",
            BesselKRatioChain => "RB-SEGURA",
            ProductTwoSided => "PRB-KL1",
            ProductShift1 => "PRB-KL0",
            ProductShift3 => "PRB-KL2",
            ProductShift2Narrow => "PRB-G1",
            ProductShift3Narrow => "PRB-G2",
            ProductNextOrderNarrow => "PRB-G3",
            WeightedShift3 => "NB-3.10",
            WeightedShift2 => "NB-3.11",
            StruveOrderMonotone => "IMON",
        }
    }

    pub fn spec(self) -> BoundSpec {
        spec_of(self)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim();
        BoundId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(wanted))
            .ok_or_else(|| domain("BoundId", format!("unknown bound identifier {wanted:?}")))
    }
}

/// Which side of the reference quantity a bound sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Lower,
    Upper,
    TwoSided,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
            Side::TwoSided => "two-sided",
        }
    }
}

/// The quantity a bound is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    /// `F(nu, beta, x)`
    FIntegral,
    /// `G(nu, beta, x)`
    GIntegral,
    /// `L_nu(x) / L_{nu-1}(x)`
    StruveRatio,
    /// `I_nu(x) / I_{nu-1}(x)`
    BesselIRatio,
    /// `K_nu(x) / K_{nu-1}(x)`
    BesselKRatio,
    /// `x K_{nu+s}(x) L_{nu+r}(x)`
    KLProduct,
    /// `e^{beta x} K_{nu+s}(x) x^{1-nu} F(nu, beta, x)`
    KWeightedIntegral,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::FIntegral => "F-integral",
            Target::GIntegral => "G-integral",
            Target::StruveRatio => "Struve-ratio",
            Target::BesselIRatio => "BesselI-ratio",
            Target::BesselKRatio => "BesselK-ratio",
            Target::KLProduct => "KL-product",
            Target::KWeightedIntegral => "K-weighted-integral",
        }
    }

    /// Whether the reference involves one of the integrals.
    pub fn is_integral(self) -> bool {
        matches!(
            self,
            Target::FIntegral | Target::GIntegral | Target::KWeightedIntegral
        )
    }
}

/// One end of an order interval: `(value, inclusive)`.
type End = Option<(f64, bool)>;

/// Allowed interval of `nu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderRange {
    pub lower: End,
    pub upper: End,
}

impl OrderRange {
    const fn above(v: f64, inclusive: bool) -> Self {
        OrderRange {
            lower: Some((v, inclusive)),
            upper: None,
        }
    }

    const fn between(lo: f64, lo_inc: bool, hi: f64, hi_inc: bool) -> Self {
        OrderRange {
            lower: Some((lo, lo_inc)),
            upper: Some((hi, hi_inc)),
        }
    }

    pub fn contains(&self, nu: f64) -> bool {
        let lower_ok = match self.lower {
            Some((v, true)) => nu >= v,
            Some((v, false)) => nu > v,
            None => true,
        };
        let upper_ok = match self.upper {
            Some((v, true)) => nu <= v,
            Some((v, false)) => nu < v,
            None => true,
        };
        nu.is_finite() && lower_ok && upper_ok
    }
}

impl fmt::Display for OrderRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let end = |v: f64| match v {
            -0.5 => "-1/2".to_string(),
            0.5 => "1/2".to_string(),
            1.5 => "3/2".to_string(),
            v => format!("{v}"),
        };
        match (self.lower, self.upper) {
            (Some((lo, li)), Some((hi, hi_inc))) => write!(
                f,
                "{} {} nu {} {}",
                end(lo),
                if li { "<=" } else { "<" },
                if hi_inc { "<=" } else { "<" },
                end(hi)
            ),
            (Some((lo, li)), None) => write!(f, "nu {} {}", if li { ">=" } else { ">" }, end(lo)),
            (None, Some((hi, hi_inc))) => write!(f, "nu {} {}", if hi_inc { "<=" } else { "<" }, end(hi)),
            (None, None) => f.write_str("any nu"),
        }
    }
}

/// A catalog entry.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSpec {
    pub id: BoundId,
    pub side: Side,
    pub target: Target,
    /// Human-readable statement of the inequality.
    pub formula: String,
    pub order_range: OrderRange,
    /// Requires `0 < beta < 1`; bounds without it ignore `beta`.
    pub uses_beta: bool,
    /// Requires a threshold `x_star > 1/(1-beta)` and `x >= x_star`.
    pub needs_x_star: bool,
    /// Limits in which the bound is tight, when any.
    pub tight_limits: Option<&'static str>,
}

impl BoundSpec {
    /// Human-readable hypothesis.
    pub fn hypothesis(&self) -> String {
        let mut parts = vec![self.order_range.to_string()];
        if self.uses_beta {
            parts.push("0 < beta < 1".into());
        }
        if self.needs_x_star {
            parts.push("x >= x_star > 1/(1-beta)".into());
        } else {
            parts.push("x > 0".into());
        }
        parts.join(", ")
    }

    /// Checks the hypothesis at a point; `Err` names the failing condition.
    pub fn check_validity(&self, nu: f64, beta: f64, x: f64, x_star: Option<f64>) -> Result<()> {
        let fail = |reason: String| Error::Validity {
            id: self.id.as_str(),
            nu,
            beta,
            x,
            reason,
        };
        if !self.order_range.contains(nu) {
            return Err(fail(format!("requires {}", self.order_range)));
        }
        if self.uses_beta && !(beta > 0.0 && beta < 1.0) {
            return Err(fail("requires 0 < beta < 1".into()));
        }
        if !(x > 0.0) || !x.is_finite() {
            return Err(fail("requires x > 0".into()));
        }
        if self.needs_x_star {
            let xs = x_star.ok_or(Error::MissingXStar(self.id.as_str()))?;
            if !(xs > 1.0 / (1.0 - beta)) {
                return Err(fail(format!("requires x_star > 1/(1-beta) = {}", 1.0 / (1.0 - beta))));
            }
            if x < xs {
                return Err(fail(format!("requires x >= x_star = {xs}")));
            }
        }
        Ok(())
    }
}

fn spec_of(id: BoundId) -> BoundSpec {
    use BoundId::*;
    use Side::*;
    use Target::*;
    const GAMMA_TERM: &str = "gamma(2nu+1, beta x) / (sqrt(pi) 2^nu beta^(2nu+1) Gamma(nu+3/2))";
    let (side, target, formula, order_range, tight_limits): (_, _, &'static str, _, _) = match id {
        LowerGammaSmallOrder => (
            Lower,
            FIntegral,
            "F > (e^(-beta x) x^nu L_nu(x) - GAMMA_TERM) / (1-beta)",
            OrderRange::between(-0.5, false, 0.0, true),
            Some("x -> inf"),
        ),
        LowerGammaLargeOrder => (
            Lower,
            FIntegral,
            "F > ((1 - 4nu^2/((2nu-1)(1-beta)x)) e^(-beta x) x^nu L_nu(x) - GAMMA_TERM) / (1-beta)",
            OrderRange::above(1.5, true),
            Some("x -> inf"),
        ),
        LowerStruveSeries => (
            Lower,
            FIntegral,
            "F > e^(-beta x) x^nu sum_{k>=0} beta^k L_{nu+k+1}(x)",
            OrderRange::above(-1.0, false),
            Some("x -> inf"),
        ),
        LowerGammaMidOrder => (
            Lower,
            FIntegral,
            "F > ((1 - 2nu(2nu+27)/((2nu-1)(1-beta)x)) e^(-beta x) x^nu L_nu(x) - GAMMA_TERM) / (1-beta)",
            OrderRange::above(0.5, false),
            Some("x -> inf"),
        ),
        LowerFirstTerm => (
            Lower,
            FIntegral,
            "F > e^(-beta x) x^nu L_{nu+1}(x)",
            OrderRange::above(-0.5, false),
            None,
        ),
        UpperNextOrderWide => (
            Upper,
            FIntegral,
            "F < (2nu+29)/((2nu+1)(1-beta)) e^(-beta x) x^nu L_{nu+1}(x)",
            OrderRange::above(-0.5, false),
            None,
        ),
        UpperSameOrderWide => (
            Upper,
            FIntegral,
            "F < (2nu+15)/((2nu+1)(1-beta)) e^(-beta x) x^nu L_nu(x)",
            OrderRange::above(-0.5, false),
            None,
        ),
        UpperNextOrder => (
            Upper,
            FIntegral,
            "F < 2(nu+1)/((2nu+1)(1-beta)) e^(-beta x) x^nu L_{nu+1}(x)",
            OrderRange::above(0.5, true),
            None,
        ),
        UpperNextOrderFull => (
            Upper,
            FIntegral,
            "F < e^(-beta x) x^nu/((2nu+1)(1-beta)) (2(nu+1) L_{nu+1} - L_{nu+3} - x^(nu+2)/(sqrt(pi) 2^(nu+2) (nu+1) Gamma(nu+5/2)))",
            OrderRange::above(0.5, true),
            None,
        ),
        UpperSameOrder => (
            Upper,
            FIntegral,
            "F < e^(-beta x) x^nu L_nu(x) / (1-beta)",
            OrderRange::above(0.5, true),
            Some("x -> inf"),
        ),
        UpperPiecewise => (
            Upper,
            FIntegral,
            "F < A_nu/((2nu+1)(1-beta)) e^(-beta x) x^nu L_{nu+1}(x), A_nu = 2(nu+1) for nu >= 1/2 else 2nu+29",
            OrderRange::above(-0.5, false),
            None,
        ),
        UpperXStar => (
            Upper,
            FIntegral,
            "F < M(x_star) e^(-beta x) x^nu L_{nu+1}(x), M = max{(2nu+3+2x_star)/(2nu+1), x_star/((1-beta)x_star-1)}",
            OrderRange::above(-0.5, false),
            None,
        ),
        CompanionSmallOrder => (
            Lower,
            GIntegral,
            "G > (e^(-beta x) x^nu L_nu(x) - GAMMA_TERM) / (1-beta)",
            OrderRange::between(-0.5, false, 0.0, true),
            None,
        ),
        CompanionLargeOrder => (
            Lower,
            GIntegral,
            "G > ((1 - 4nu^2/((2nu-1)(1-beta)x)) e^(-beta x) x^nu L_nu(x) - GAMMA_TERM) / (1-beta)",
            OrderRange::above(1.5, true),
            None,
        ),
        CompanionMidOrder => (
            Lower,
            GIntegral,
            "G > ((1 - 2nu(2nu+27)/((2nu-1)(1-beta)x)) e^(-beta x) x^nu L_nu(x) - GAMMA_TERM) / (1-beta)",
            OrderRange::above(0.5, false),
            None,
        ),
        StruveRatioSimple => (
            Lower,
            Target::StruveRatio,
            "L_nu(x)/L_{nu-1}(x) > x/(2nu+1+x)",
            OrderRange::above(0.0, false),
            Some("x -> 0 and x -> inf"),
        ),
        StruveRatioViaBesselI => (
            Lower,
            Target::StruveRatio,
            "L_nu(x)/L_{nu-1}(x) > (I_{nu-1}(x)/I_nu(x) + 1/x)^(-1)",
            OrderRange::above(0.0, true),
            None,
        ),
        BesselIRatioRational => (
            Lower,
            Target::BesselIRatio,
            "I_nu(x)/I_{nu-1}(x) > x/(2nu+x)",
            OrderRange::above(0.0, false),
            None,
        ),
        BesselKRatioChain => (
            Upper,
            Target::BesselKRatio,
            "K_nu(x)/K_{nu-1}(x) < (nu-1/2+sqrt((nu-1/2)^2+x^2))/x < 1+(2nu-1)/x",
            OrderRange::above(0.5, false),
            None,
        ),
        ProductTwoSided => (
            TwoSided,
            KLProduct,
            "1/2 < x K_{nu+2}(x) L_nu(x) < 2 Gamma(nu+2)/(sqrt(pi) Gamma(nu+3/2))",
            OrderRange::above(-0.5, true),
            Some("x -> inf (lower), x -> 0 (upper)"),
        ),
        ProductShift1 => (
            Upper,
            KLProduct,
            "x K_{nu+1}(x) L_nu(x) < 1",
            OrderRange::above(-0.5, true),
            None,
        ),
        ProductShift3 => (
            Upper,
            KLProduct,
            "x K_{nu+3}(x) L_nu(x) < 2 Gamma(nu+2)/(sqrt(pi) Gamma(nu+3/2)) (1+(2nu+5)/x)",
            OrderRange::above(-0.5, true),
            None,
        ),
        ProductShift2Narrow => (
            Upper,
            KLProduct,
            "x K_{nu+2}(x) L_nu(x) < 3/2",
            OrderRange::between(-0.5, true, 0.5, true),
            None,
        ),
        ProductShift3Narrow => (
            Upper,
            KLProduct,
            "x K_{nu+3}(x) L_nu(x) < 3/2 + 9/x",
            OrderRange::between(-0.5, true, 0.5, true),
            None,
        ),
        ProductNextOrderNarrow => (
            Upper,
            KLProduct,
            "x K_{nu+3}(x) L_{nu+1}(x) < 15/8",
            OrderRange::between(-0.5, true, 0.5, true),
            None,
        ),
        WeightedShift3 => (
            Upper,
            KWeightedIntegral,
            "e^(beta x) K_{nu+3}(x) x^(1-nu) F < 14/((2nu+1)(1-beta))",
            OrderRange::between(-0.5, false, 0.5, true),
            None,
        ),
        WeightedShift2 => (
            Upper,
            KWeightedIntegral,
            "e^(beta x) K_{nu+2}(x) x^(1-nu) F < 7/((2nu+1)(1-beta))",
            OrderRange::between(-0.5, false, 0.5, true),
            None,
        ),
        StruveOrderMonotone => (
            Upper,
            Target::StruveRatio,
            "L_nu(x)/L_{nu-1}(x) < 1",
            OrderRange::above(0.5, true),
            None,
        ),
    };
    let uses_beta = matches!(target, FIntegral | GIntegral | KWeightedIntegral);
    BoundSpec {
        id,
        side,
        target,
        formula: formula.replace("GAMMA_TERM", GAMMA_TERM),
        order_range,
        uses_beta,
        needs_x_star: id == UpperXStar,
        tight_limits,
    }
}

/// All 28 catalog entries, in identifier order.
pub fn list_bounds() -> Vec<BoundSpec> {
    BoundId::ALL.iter().map(|id| id.spec()).collect()
}
