//! Wide-range real numbers stored as `mantissa * exp(exponent)`.
//!
//! Quantities such as `L_nu(x)` grow like `e^x` and overflow `f64` long before
//! `x = 1000`, while `K_nu(x)` underflows just as quickly. A [`ScaledReal`]
//! keeps the growth in a separate natural-log exponent so products and ratios
//! of such values stay exact to working precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A real number `mantissa * exp(exponent)`.
///
/// Normalized form has `|mantissa|` in `[1, e)`, or `mantissa == 0` with
/// `exponent == 0`. The exponent is any finite real, not necessarily an
/// integer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledReal {
    mantissa: f64,
    exponent: f64,
}

impl ScaledReal {
    pub const ZERO: ScaledReal = ScaledReal {
        mantissa: 0.0,
        exponent: 0.0,
    };
    pub const ONE: ScaledReal = ScaledReal {
        mantissa: 1.0,
        exponent: 0.0,
    };

    /// Builds and normalizes `mantissa * exp(exponent)`.
    ///
    /// Panics if either part is not finite.
    pub fn new(mantissa: f64, exponent: f64) -> Self {
        assert!(
            mantissa.is_finite() && exponent.is_finite(),
            "ScaledReal parts must be finite (got {mantissa}, {exponent})"
        );
        ScaledReal { mantissa, exponent }.normalized()
    }

    pub fn from_f64(value: f64) -> Self {
        Self::new(value, 0.0)
    }

    /// `sign * exp(ln_abs)`; `ln_abs = -inf` gives zero.
    pub fn from_ln(ln_abs: f64, negative: bool) -> Self {
        if ln_abs == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        assert!(ln_abs.is_finite(), "ln value must be finite (got {ln_abs})");
        let k = ln_abs.floor();
        let m = (ln_abs - k).exp();
        ScaledReal {
            mantissa: if negative { -m } else { m },
            exponent: k,
        }
        .normalized()
    }

    pub fn mantissa(&self) -> f64 {
        self.mantissa
    }

    pub fn exponent(&self) -> f64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa == 0.0
    }

    pub fn is_positive(&self) -> bool {
        self.mantissa > 0.0
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa < 0.0
    }

    /// Natural log of `|self|`; `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.exponent + self.mantissa.abs().ln()
        }
    }

    /// Plain value; may be `inf` or `0` when out of `f64` range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        // split the exponent so a large mantissa-exponent pair near the
        // boundary does not overflow prematurely
        if self.exponent.abs() < 700.0 {
            self.mantissa * self.exponent.exp()
        } else {
            let half = self.exponent / 2.0;
            self.mantissa * half.exp() * half.exp()
        }
    }

    /// Multiplies by `exp(delta)`.
    pub fn scale_exp(self, delta: f64) -> Self {
        if self.is_zero() {
            return self;
        }
        ScaledReal {
            mantissa: self.mantissa,
            exponent: self.exponent + delta,
        }
    }

    pub fn abs(self) -> Self {
        ScaledReal {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    /// `self / other` as a plain float.
    pub fn ratio(&self, other: &ScaledReal) -> f64 {
        (self.mantissa / other.mantissa) * (self.exponent - other.exponent).exp()
    }

    /// `x^power` for `x > 0`, evaluated through logs.
    pub fn powf(x: f64, power: f64) -> Self {
        debug_assert!(x > 0.0);
        let direct = x.powf(power);
        if direct.is_normal() {
            Self::from_f64(direct)
        } else {
            Self::from_ln(power * x.ln(), false)
        }
    }

    fn normalized(self) -> Self {
        if self.mantissa == 0.0 {
            return Self::ZERO;
        }
        let a = self.mantissa.abs();
        if (1.0..std::f64::consts::E).contains(&a) {
            return self;
        }
        let k = a.ln().floor();
        let mut m = self.mantissa * (-k).exp();
        let mut e = self.exponent + k;
        // ln/exp rounding can leave |m| a hair outside [1, e)
        if m.abs() < 1.0 {
            m *= std::f64::consts::E;
            e -= 1.0;
        } else if m.abs() >= std::f64::consts::E {
            m /= std::f64::consts::E;
            e += 1.0;
        }
        ScaledReal {
            mantissa: m,
            exponent: e,
        }
    }
}

impl Default for ScaledReal {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<f64> for ScaledReal {
    fn from(v: f64) -> Self {
        Self::from_f64(v)
    }
}

impl Mul for ScaledReal {
    type Output = ScaledReal;
    fn mul(self, rhs: ScaledReal) -> ScaledReal {
        if self.is_zero() || rhs.is_zero() {
            return ScaledReal::ZERO;
        }
        ScaledReal {
            mantissa: self.mantissa * rhs.mantissa,
            exponent: self.exponent + rhs.exponent,
        }
        .normalized()
    }
}

impl Mul<f64> for ScaledReal {
    type Output = ScaledReal;
    fn mul(self, rhs: f64) -> ScaledReal {
        self * ScaledReal::from_f64(rhs)
    }
}

impl Div for ScaledReal {
    type Output = ScaledReal;
    fn div(self, rhs: ScaledReal) -> ScaledReal {
        assert!(!rhs.is_zero(), "division of ScaledReal by zero");
        if self.is_zero() {
            return ScaledReal::ZERO;
        }
        ScaledReal {
            mantissa: self.mantissa / rhs.mantissa,
            exponent: self.exponent - rhs.exponent,
        }
        .normalized()
    }
}

impl Div<f64> for ScaledReal {
    type Output = ScaledReal;
    fn div(self, rhs: f64) -> ScaledReal {
        self / ScaledReal::from_f64(rhs)
    }
}

impl Add for ScaledReal {
    type Output = ScaledReal;
    fn add(self, rhs: ScaledReal) -> ScaledReal {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (big, small) = if self.exponent >= rhs.exponent {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let gap = small.exponent - big.exponent;
        // beyond ~40 e-folds the smaller term is below f64 resolution
        if gap < -40.0 {
            return big;
        }
        let m = big.mantissa + small.mantissa * gap.exp();
        if m == 0.0 {
            return ScaledReal::ZERO;
        }
        ScaledReal {
            mantissa: m,
            exponent: big.exponent,
        }
        .normalized()
    }
}

impl Neg for ScaledReal {
    type Output = ScaledReal;
    fn neg(self) -> ScaledReal {
        ScaledReal {
            mantissa: -self.mantissa,
            exponent: self.exponent,
        }
    }
}

impl Sub for ScaledReal {
    type Output = ScaledReal;
    fn sub(self, rhs: ScaledReal) -> ScaledReal {
        self + (-rhs)
    }
}

impl PartialOrd for ScaledReal {
    fn partial_cmp(&self, other: &ScaledReal) -> Option<Ordering> {
        (*self - *other).mantissa.partial_cmp(&0.0)
    }
}

impl fmt::Display for ScaledReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.16e}*exp({})", self.mantissa, self.exponent)
    }
}
