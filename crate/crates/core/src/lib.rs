//! Evaluation of `F_{nu,beta}(x) = int_0^x e^{-beta t} t^nu L_nu(t) dt`, where
//! `L_nu` is the modified Struve function of the first kind, together with a
//! machine-checkable catalog of upper and lower bounds for it and for related
//! Struve/Bessel ratios and products.
//!
//! Layout:
//! - [`specfun`]: `Gamma`, incomplete gamma, `pFq`, `L_nu`, `I_nu`, `K_nu`.
//! - [`integral`]: four independent routes to `F` and a quadrature route to
//!   its companion `G_{nu,beta}(x) = int_0^x e^{-beta t} t^nu L_{nu+1}(t) dt`.
//! - [`bounds`]: the inequality catalog with validity predicates and margins.
//! - [`harness`]: table reproduction, grid sweeps, tightness profiles and
//!   asymptotic checks behind the `struve-bounds` CLI.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod harness;
pub mod integral;
pub mod quad;
pub mod scaled;
pub mod specfun;

pub use error::{Error, Result};
pub use scaled::ScaledReal;
