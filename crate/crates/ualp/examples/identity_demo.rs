//! Quick tour: evaluate a fractional-order polynomial, then confirm two of
//! its integral identities numerically.
//!
//! Run with: cargo run --example identity_demo

use ualp::{
    integrate_finite, main_integral_closed_form, main_integral_numeric, ualp_eval,
    ualp_eval_gegenbauer, ualp_norm_sq, MainIntegralParams, PolyParams, QuadratureSpec,
};

fn main() -> Result<(), ualp::Error> {
    // The ring-potential parameters (b = 4.29, m = 1) give the fractional
    // order m' = sqrt(b + m^2) = 2.3.
    let ring = ualp::RingPotentialParams::new(4.29, 1)?;
    let m_prime = ualp::effective_order(ring);
    let params = PolyParams::new(m_prime, 3)?;
    println!(
        "P with m' = {m_prime}, l' = {} at a few abscissae (series vs generating-function route):",
        params.l_prime()
    );
    for x in [-0.8, -0.3, 0.0, 0.4, 0.9] {
        let series = ualp_eval(params, x)?;
        let gegenbauer = ualp_eval_gegenbauer(params, x)?;
        println!("  x = {x:5.2}   {series:18.12}   {gegenbauer:18.12}");
    }

    let spec = QuadratureSpec::default();

    let closed = ualp_norm_sq(params);
    let numeric = integrate_finite(
        |x| {
            let v = ualp_eval(params, x).unwrap_or(f64::NAN);
            v * v
        },
        -1.0,
        1.0,
        &spec,
    )?;
    println!(
        "\nsquared norm: closed form {closed:.12}, quadrature {:.12}",
        numeric.value
    );

    let p = MainIntegralParams::new(m_prime, 3, 2, 0.6)?;
    let closed = main_integral_closed_form(&p);
    let numeric = main_integral_numeric(&p, &spec)?;
    println!(
        "composed-argument integral (n_l = 3, n_k = 2, t = 0.6):\n  closed form {closed:.12}, quadrature {:.12} (error estimate {:.2e})",
        numeric.value, numeric.error_estimate
    );
    Ok(())
}
