//! Catalog of inequalities for `F`, `G` and related Struve/Bessel ratios and
//! products, with hypotheses, evaluation and margin computation.

mod catalog;
mod eval;

pub use catalog::{list_bounds, BoundId, BoundSpec, OrderRange, Side, Target};
pub use eval::{
    a_factor, check, default_x_star, eval_bound, m_factor, product_asymptote,
    product_upper_constant, reference_accuracy, reference_value, struve_sum_lower,
    AsymptoteKind, BoundOptions, BoundValue, Margin, ProductAsymptote, Status,
    INCONCLUSIVE_FACTOR, INTEGRAL_REFERENCE_ACCURACY, SERIES_BOUND_TAIL,
    SPECFUN_REFERENCE_ACCURACY,
};

#[cfg(test)]
mod tests;
