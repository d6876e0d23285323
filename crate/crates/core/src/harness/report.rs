//! CSV serialization of sweep rows and tightness profiles.

use super::profile::TightnessPoint;
use super::verify::CheckRow;
use crate::bounds::BoundId;
use crate::scaled::ScaledReal;

pub const CHECK_HEADER: &str = "bound_id,nu,beta,x,bound_value_log,reference_value_log,rel_margin,status";
pub const TIGHTNESS_HEADER: &str = "bound_id,nu,beta,x,bound_value_log,reference_value_log,ratio";

/// A float with 17 significant digits.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

/// `ln v` with 17 significant digits, or `-inf` when `v <= 0`.
pub fn fmt_log(v: ScaledReal) -> String {
    if v.is_positive() {
        fmt_float(v.ln_abs())
    } else {
        "-inf".to_string()
    }
}

fn fmt_beta(beta: Option<f64>) -> String {
    beta.map(fmt_float).unwrap_or_default()
}

pub fn check_row_csv(r: &CheckRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        r.id,
        fmt_float(r.nu),
        fmt_beta(r.beta),
        fmt_float(r.x),
        fmt_log(r.margin.bound_value),
        fmt_log(r.margin.reference_value),
        fmt_float(r.margin.signed_margin),
        r.margin.status.as_str()
    )
}

/// Header plus one line per row.
pub fn checks_csv(rows: &[CheckRow]) -> String {
    let mut out = format!("{CHECK_HEADER}\n");
    for r in rows {
        out.push_str(&check_row_csv(r));
        out.push('\n');
    }
    out
}

pub fn tightness_csv(id: BoundId, nu: f64, beta: Option<f64>, points: &[TightnessPoint]) -> String {
    let mut out = format!("{TIGHTNESS_HEADER}\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            id,
            fmt_float(nu),
            fmt_beta(beta),
            fmt_float(p.x),
            fmt_log(p.bound),
            fmt_log(p.reference),
            fmt_float(p.ratio)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{Margin, Status};

    #[test]
    fn row_format() {
        let row = CheckRow {
            id: BoundId::StruveRatioSimple,
            nu: 1.0,
            beta: None,
            x: 0.5,
            margin: Margin {
                bound_value: ScaledReal::from_f64(1.0),
                reference_value: ScaledReal::from_f64(-2.0),
                signed_margin: 0.25,
                status: Status::Strict,
            },
        };
        assert_eq!(
            check_row_csv(&row),
            "RB-3.1,1.0000000000000000e0,,5.0000000000000000e-1,0.0000000000000000e0,-inf,2.5000000000000000e-1,strict"
        );
        assert_eq!(checks_csv(&[row]).lines().count(), 2);
    }
}
