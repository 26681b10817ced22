//! Exact polynomial engine in two variable banks: power sums, the q_r series,
//! Schur Q-functions, expansions in the {Q_λ(x)Q_μ(y)} and {p_κ(x)p_ν(y)}
//! bases, and the ι substitution.

mod expand;
mod poly;
mod qfunc;

pub use expand::{expand_pp, expand_qq, iota_map, iota_two_bank, QQCoefficients};
pub use poly::SymPoly;
pub use qfunc::{power_sum, power_sum_product, q_component, q_series, schur_q, Bank};
