//! Connection to the ring-shaped-potential angular equation.
//!
//! A potential with a b / (r^2 sin^2 theta) barrier replaces the integer
//! azimuthal order m by the effective real order m' = sqrt(b + m^2); the
//! polar equation
//!   (1/sin t) d/dt (sin t dH/dt) + (lambda - m'^2 / sin^2 t) H = 0
//! is then solved by H(theta) = P_{l'}^{m'}(cos theta) with
//! lambda = l'(l'+1). [`ode_residual`] checks that statement numerically
//! with finite differences, deliberately independent of the series
//! evaluation it validates.

use crate::error::{Error, Result};
use crate::poly::{ualp_eval, PolyParams};

/// Ring-shape strength b and azimuthal quantum number m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingPotentialParams {
    b: f64,
    m: u32,
}

impl RingPotentialParams {
    /// Requires b >= -m^2 so the effective order stays real.
    pub fn new(b: f64, m: u32) -> Result<Self> {
        let m_sq = (m as f64) * (m as f64);
        if !b.is_finite() || b < -m_sq {
            return Err(Error::Domain(format!(
                "ring strength must satisfy b >= -m^2, got b = {b}, m = {m}"
            )));
        }
        Ok(RingPotentialParams { b, m })
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// Effective order m' = sqrt(b + m^2).
pub fn effective_order(p: RingPotentialParams) -> f64 {
    let m_sq = (p.m as f64) * (p.m as f64);
    (p.b + m_sq).max(0.0).sqrt()
}

/// Angular eigenvalue lambda = l'(l'+1) with l' = m' + n.
pub fn angular_eigenvalue(m_prime: f64, n: u32) -> Result<f64> {
    if !m_prime.is_finite() || m_prime < 0.0 {
        return Err(Error::Domain(format!(
            "order m' must be finite and >= 0, got {m_prime}"
        )));
    }
    let lp = m_prime + n as f64;
    Ok(lp * (lp + 1.0))
}

const FD_STEP: f64 = 1e-4;
const THETA_MARGIN: f64 = 0.05;

/// Maximum normalized residual of the polar angular equation over a theta
/// grid, with H(theta) = P_{l'}^{m'}(cos theta).
///
/// Derivatives come from central differences with one Richardson level at
/// h = 1e-4, so the check shares no code with the series evaluation. The
/// residual is normalized by max(1, max|H|, lambda max|H|) to make one
/// threshold meaningful across parameter magnitudes. Grid points must stay
/// at least 0.05 rad away from the poles, where 1/sin^2 amplifies noise.
pub fn ode_residual(params: PolyParams, theta_grid: &[f64]) -> Result<f64> {
    if theta_grid.is_empty() {
        return Err(Error::Domain("theta grid must not be empty".into()));
    }
    for &theta in theta_grid {
        if !(THETA_MARGIN..=std::f64::consts::PI - THETA_MARGIN).contains(&theta) {
            return Err(Error::Domain(format!(
                "theta = {theta} too close to the poles (need {THETA_MARGIN} <= theta <= pi - {THETA_MARGIN})"
            )));
        }
    }
    let lambda = angular_eigenvalue(params.m_prime(), params.n())?;
    let m_sq = params.m_prime() * params.m_prime();
    let h = FD_STEP;

    let eval = |theta: f64| ualp_eval(params, theta.cos());

    let mut max_residual = 0.0f64;
    let mut max_h = 0.0f64;
    for &theta in theta_grid {
        let center = eval(theta)?;
        let plus = eval(theta + h)?;
        let minus = eval(theta - h)?;
        let plus_half = eval(theta + 0.5 * h)?;
        let minus_half = eval(theta - 0.5 * h)?;

        let d1_full = (plus - minus) / (2.0 * h);
        let d1_half = (plus_half - minus_half) / h;
        let d1 = (4.0 * d1_half - d1_full) / 3.0;

        let d2_full = (plus - 2.0 * center + minus) / (h * h);
        let d2_half = (plus_half - 2.0 * center + minus_half) / (0.25 * h * h);
        let d2 = (4.0 * d2_half - d2_full) / 3.0;

        let sin = theta.sin();
        let residual = d2 + (theta.cos() / sin) * d1 + (lambda - m_sq / (sin * sin)) * center;
        max_residual = max_residual.max(residual.abs());
        max_h = max_h.max(center.abs());
    }
    Ok(max_residual / 1.0f64.max(max_h).max(lambda * max_h))
}
