//! Checkable predicates for the sufficient conditions: Muntz-polynomial
//! nonnegativity, weak supermajorization, elementary symmetric polynomial
//! chains and the positivity cases for the fixed parameter block.

mod esp;
mod majorize;
mod muntz;
mod positivity;

pub use esp::{esp, esp_chain_decr, esp_chain_incr, rpq_eval, rpq_eval_exact, EspChainVerdict};
pub use majorize::weak_supermajorize;
pub use muntz::{muntz_nonneg, muntz_value, MuntzVerdict, MUNTZ_DEFAULT_GRID, MUNTZ_STRICT_TOL_POW10};
pub use positivity::{theorem2_case, theorem2_case_with_horizon, Theorem2Case, POSITIVITY_HORIZON};
