//! High-precision evaluation of generalized hypergeometric functions under
//! parameter shifts, together with mechanically checkable sufficient
//! conditions (Muntz nonnegativity, weak supermajorization, elementary
//! symmetric polynomial chains), generalized Turanian sign verification with
//! exact rational series coefficients, extended Laguerre operators and a
//! desk-scale zero finder for the entire cases.

pub mod conditions;
pub mod error;
pub mod eval;
pub mod laguerre;
pub mod params;
pub mod precision;
pub mod series;
pub mod turanian;

pub use error::{Error, Result};
pub use params::{format_rational_list, parse_rational, parse_rational_list, HyperParams};
pub use precision::PrecisionCtx;
pub use rug::{Complex, Float, Rational};
pub use series::{exact_product_series, pochhammer, series_coeff, ExactSeries};
