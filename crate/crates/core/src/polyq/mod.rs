//! Exact Laurent-polynomial arithmetic and truncated q-series.

mod laurent;
mod series;

pub use laurent::{LaurentPoly, Monomial, Symbol};
pub use series::{
    gaussian_binomial, gaussian_binomial_poly, mono, pochhammer_finite, pochhammer_infinite,
    reciprocal_pochhammer_infinite, reciprocal_q_factorial, relevant_factor_count, triangular,
    QSeries,
};
