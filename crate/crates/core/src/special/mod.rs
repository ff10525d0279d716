//! Continued special functions: Hurwitz zeta by Euler–Maclaurin summation
//! and a Stirling-series log-gamma.

mod dd;
mod eval;
mod gamma;
mod hurwitz;

pub(crate) use eval::neumaier_sum;
pub use eval::{EvalResult, Truncation};
pub use gamma::log_gamma;
pub use hurwitz::{
    hurwitz_difference, hurwitz_difference_ds, hurwitz_zeta, hurwitz_zeta_ds, hurwitz_zeta_ds_with,
    hurwitz_zeta_with, riemann_zeta, riemann_zeta_ds, riemann_zeta_ds_with, riemann_zeta_with,
    EulerMaclaurin,
};
