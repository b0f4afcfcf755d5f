//! Universal associated Legendre polynomials P_{l'}^{m'} with real order
//! m' >= 0 and degree l' = m' + n (integer n >= 0): evaluation through the
//! defining series and through the Gegenbauer generating-function route,
//! closed-form norms and orthogonality, a closed form for the integral of
//! P_{l'}^{m'} with the composed argument (xt-1)/sqrt(1+t^2-2tx) against
//! P_{k'}^{m'}(x), the analogous Bessel-function integral, and numerical
//! verification of all of these identities by quadrature.
//!
//! The `ualp` binary exposes evaluation, tabulation, and verification sweeps
//! on the command line; reports serialize to JSON or CSV.
//!
//! Every routine in the library is a pure function of its arguments with no
//! shared mutable state, so everything is safe to call from any number of
//! threads at once.
//!
//! ```
//! use ualp::{ualp_eval, PolyParams};
//!
//! // l' = 1, m' = 1: P(x) = sqrt(1 - x^2)
//! let p = PolyParams::new(1.0, 0).unwrap();
//! let v = ualp_eval(p, 0.6).unwrap();
//! assert!((v - 0.8).abs() < 1e-12);
//! ```

// Negated comparisons like !(x > 0.0) are used on purpose: they reject NaN
// along with the out-of-range values, which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod angular;
mod dd;
mod error;
mod identities;
mod poly;
mod quadrature;
mod report;
mod special;

pub use angular::{angular_eigenvalue, effective_order, ode_residual, RingPotentialParams};
pub use error::{Error, Result};
pub use identities::{
    bessel_integral_closed_form, bessel_integral_numeric, default_engine_spec, default_grid,
    main_integral_closed_form, main_integral_numeric, orthogonality_closed_form,
    power_exp_integral_closed_form, power_exp_integral_numeric, verify_identity_grid,
    BesselIntegralParams, GridPoint, Identity, MainIntegralParams, VerificationRecord,
};
pub use poly::{
    ualp_eval, ualp_eval_gegenbauer, ualp_generating_fn, ualp_norm_sq, ualp_shifted_integrand,
    ualp_weighted_norm_sq, PolyParams,
};
pub use quadrature::{
    integrate_finite, integrate_finite_endpoint_aware, integrate_oscillatory_semi_infinite,
    integrate_semi_infinite, IntegralResult, QuadratureSpec,
};
pub use report::{format_f64, utc_timestamp_now, ReportDocument, Summary};
pub use special::{
    bessel_j, bessel_j_zero, gamma_ratio, gegenbauer_c, log_gamma, RealOrder, BESSEL_J_MAX_ARG,
};
