//! Closed forms of the integral identities satisfied by the polynomial
//! family, paired with quadrature-based verification drivers.
//!
//! The centerpiece is the composed-argument integral
//!   Int_{-1}^{1} P_{l'}^{m'}((xt-1)/sqrt(1+t^2-2tx))
//!                P_{k'}^{m'}(x) (1+t^2-2tx)^{-(l'+1)/2} dx
//!     = (2 t^{k'} / (2k'+1)) (-1)^{l'-m'}
//!       Gamma(k'+l'+1) / (Gamma(l'-m'+1) Gamma(k'-m'+1)),
//! valid for 0 < t < 1 with a shared order m' on both polynomials, plus its
//! Bessel-function analogue on [0, inf).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{ualp_eval, ualp_series_poly, ualp_shifted_integrand, PolyParams};
use crate::quadrature::{
    integrate_finite, integrate_finite_endpoint_aware, integrate_oscillatory_semi_infinite,
    integrate_semi_infinite, IntegralResult, QuadratureSpec,
};
use crate::special::{bessel_j, bessel_j_zero, log_gamma, RealOrder, BESSEL_J_MAX_ARG};

/// Parameters of the composed-argument integral: shared order m', degree
/// offsets n_l, n_k (l' = m' + n_l, k' = m' + n_k), and the deformation
/// parameter t in (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MainIntegralParams {
    m_prime: f64,
    n_l: u32,
    n_k: u32,
    t: f64,
}

impl MainIntegralParams {
    pub fn new(m_prime: f64, n_l: u32, n_k: u32, t: f64) -> Result<Self> {
        if !m_prime.is_finite() || m_prime < 0.0 {
            return Err(Error::Domain(format!(
                "order m' must be finite and >= 0, got {m_prime}"
            )));
        }
        if !(t > 0.0 && t < 1.0) {
            return Err(Error::Domain(format!("t must lie in (0, 1), got {t}")));
        }
        Ok(MainIntegralParams {
            m_prime,
            n_l,
            n_k,
            t,
        })
    }

    pub fn m_prime(&self) -> f64 {
        self.m_prime
    }

    pub fn n_l(&self) -> u32 {
        self.n_l
    }

    pub fn n_k(&self) -> u32 {
        self.n_k
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn l_prime(&self) -> f64 {
        self.m_prime + self.n_l as f64
    }

    pub fn k_prime(&self) -> f64 {
        self.m_prime + self.n_k as f64
    }
}

/// Parameters of the Bessel integral
///   Int_0^inf J_n(alpha sqrt(x^2+z^2)) / (x^2+z^2)^{n/2} x^{2m+1} dx.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselIntegralParams {
    n: u32,
    m: f64,
    alpha: f64,
    z: f64,
}

impl BesselIntegralParams {
    pub fn new(n: u32, m: f64, alpha: f64, z: f64) -> Result<Self> {
        if !m.is_finite() || m <= -1.0 {
            return Err(Error::Domain(format!(
                "moment exponent needs m > -1, got {m}"
            )));
        }
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::Domain(format!(
                "alpha must be positive, got {alpha}"
            )));
        }
        if !z.is_finite() || z <= 0.0 {
            return Err(Error::Domain(format!("z must be positive, got {z}")));
        }
        Ok(BesselIntegralParams { n, m, alpha, z })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// Convergence guard: the integrand envelope decays like
    /// x^{2m + 1/2 - n}, so n > 2m + 1/2 is required for the alternating
    /// segment sums to converge at all. (Below n = 2m + 3/2 the convergence
    /// is conditional, which the oscillatory engine's series acceleration
    /// handles by construction.)
    pub fn converges(&self) -> bool {
        (self.n as f64) > 2.0 * self.m + 0.5
    }
}

/// Orthogonality of the family at fixed m':
///   Int P_{l'}^{m'} P_{k'}^{m'} dx
///     = (2/(2l'+1)) Gamma(l'+m'+1) / Gamma(l'-m'+1) delta_{l'k'}.
pub fn orthogonality_closed_form(m_prime: f64, n_l: u32, n_k: u32) -> Result<f64> {
    if !m_prime.is_finite() || m_prime < 0.0 {
        return Err(Error::Domain(format!(
            "order m' must be finite and >= 0, got {m_prime}"
        )));
    }
    if n_l != n_k {
        return Ok(0.0);
    }
    let lp = m_prime + n_l as f64;
    let log_ratio = log_gamma(lp + m_prime + 1.0)? - log_gamma(n_l as f64 + 1.0)?;
    Ok(2.0 / (2.0 * lp + 1.0) * log_ratio.exp())
}

/// Closed form of the composed-argument integral, in log space with the
/// sign (-1)^{n_l} carried separately.
pub fn main_integral_closed_form(p: &MainIntegralParams) -> f64 {
    let lp = p.l_prime();
    let kp = p.k_prime();
    let sign = if p.n_l % 2 == 1 { -1.0 } else { 1.0 };
    let lg = |x: f64| log_gamma(x).expect("argument >= 1 by construction");
    let log_mag = kp * p.t.ln() + std::f64::consts::LN_2 - (2.0 * kp + 1.0).ln()
        + lg(kp + lp + 1.0)
        - lg(p.n_l as f64 + 1.0)
        - lg(p.n_k as f64 + 1.0);
    sign * log_mag.exp()
}

/// Quadrature of the composed-argument integral over [-1, 1].
pub fn main_integral_numeric(
    p: &MainIntegralParams,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    let params_l = PolyParams::new(p.m_prime, p.n_l)?;
    let params_k = PolyParams::new(p.m_prime, p.n_k)?;
    let t = p.t;
    integrate_finite(
        move |x| {
            let shifted = ualp_shifted_integrand(params_l, x, t).unwrap_or(f64::NAN);
            let plain = ualp_eval(params_k, x).unwrap_or(f64::NAN);
            shifted * plain
        },
        -1.0,
        1.0,
        spec,
    )
}

/// Closed form of the Bessel integral:
///   2^m Gamma(m+1) / (alpha^{m+1} z^{n-m-1}) J_{n-m-1}(alpha z).
///
/// Requires n - m - 1 >= 0 so the Bessel order stays non-negative.
pub fn bessel_integral_closed_form(p: &BesselIntegralParams) -> Result<f64> {
    let nu = p.n as f64 - p.m - 1.0;
    if nu < 0.0 {
        return Err(Error::Domain(format!(
            "closed form needs n - m - 1 >= 0, got {nu} (negative Bessel orders unsupported)"
        )));
    }
    let log_mag = p.m * std::f64::consts::LN_2 + log_gamma(p.m + 1.0)?
        - (p.m + 1.0) * p.alpha.ln()
        - nu * p.z.ln();
    Ok(log_mag.exp() * bessel_j(RealOrder::new(nu)?, p.alpha * p.z)?)
}

/// Quadrature of the Bessel integral over [0, inf).
///
/// Segment boundaries are the zeros of u -> J_n(alpha u) mapped back through
/// u = sqrt(x^2 + z^2); the alternating segment sums are Euler-accelerated.
/// Parameter sets violating the convergence guard n > 2m + 1/2 are rejected
/// outright rather than attempted.
pub fn bessel_integral_numeric(
    p: &BesselIntegralParams,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !p.converges() {
        return Err(Error::Domain(format!(
            "convergence needs n > 2m + 1/2 (n = {}, m = {})",
            p.n, p.m
        )));
    }
    let u_max = BESSEL_J_MAX_ARG / p.alpha;
    if p.z >= u_max {
        return Err(Error::Range(format!(
            "alpha * z = {} leaves no evaluable oscillation range (limit {})",
            p.alpha * p.z,
            BESSEL_J_MAX_ARG
        )));
    }

    let mut boundaries = vec![0.0f64];
    for k in 1..=(spec.max_segments + 1) {
        let u = bessel_j_zero(p.n, k)? / p.alpha;
        if u > u_max {
            break;
        }
        if u <= p.z {
            continue;
        }
        let x = (u * u - p.z * p.z).sqrt();
        if x > boundaries.last().copied().unwrap_or(0.0) + 1e-9 {
            boundaries.push(x);
        }
    }
    if boundaries.len() < 3 {
        return Err(Error::Range(format!(
            "fewer than two oscillation segments fit below the Bessel range limit \
             (n = {}, alpha = {}, z = {})",
            p.n, p.alpha, p.z
        )));
    }

    let order = RealOrder::new(p.n as f64)?;
    let (n_f, m, z) = (p.n as f64, p.m, p.z);
    let alpha = p.alpha;
    integrate_oscillatory_semi_infinite(
        move |x| {
            let u_sq = x * x + z * z;
            let u = u_sq.sqrt();
            match bessel_j(order, alpha * u) {
                Ok(j) => j * u_sq.powf(-0.5 * n_f) * x.powf(2.0 * m + 1.0),
                Err(_) => f64::NAN,
            }
        },
        &boundaries,
        spec,
    )
}

/// Closed form Int_0^inf x^m exp(-beta x^n) dx = Gamma(gamma) / (n beta^gamma)
/// with gamma = (m+1)/n; convergence needs gamma > 0 (i.e. m > -1 for n > 0).
pub fn power_exp_integral_closed_form(m: f64, n: f64, beta: f64) -> Result<f64> {
    if !beta.is_finite() || beta <= 0.0 {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    if !n.is_finite() || n <= 0.0 {
        return Err(Error::Domain(format!(
            "exponent n must be positive, got {n}"
        )));
    }
    if !m.is_finite() || m <= -1.0 {
        return Err(Error::Domain(format!(
            "moment exponent needs m > -1 (so gamma = (m+1)/n > 0), got {m}"
        )));
    }
    let gamma = (m + 1.0) / n;
    Ok((log_gamma(gamma)? - n.ln() - gamma * beta.ln()).exp())
}

/// Quadrature of Int_0^inf x^m exp(-beta x^n) dx by substitution onto [0, 1].
pub fn power_exp_integral_numeric(
    m: f64,
    n: f64,
    beta: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    if !beta.is_finite() || beta <= 0.0 || !n.is_finite() || n <= 0.0 || !m.is_finite() || m <= -1.0
    {
        return Err(Error::Domain(format!(
            "power-exp integrand needs beta > 0, n > 0, m > -1, got ({m}, {n}, {beta})"
        )));
    }
    integrate_semi_infinite(
        move |x| {
            if x == 0.0 {
                return if m == 0.0 { 1.0 } else { 0.0 };
            }
            // exp(m ln x - beta x^n); the combined exponent handles both the
            // x^m endpoint behavior and the decaying tail without overflow.
            (m * x.ln() - beta * (n * x.ln()).exp()).exp()
        },
        spec,
    )
}

/// One identity check at one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub identity_name: String,
    pub parameters: BTreeMap<String, f64>,
    pub closed_form: Option<f64>,
    pub numeric: Option<f64>,
    pub abs_diff: Option<f64>,
    /// None when the closed form is exactly zero (off-diagonal cases).
    pub rel_diff: Option<f64>,
    pub passed: bool,
    pub numeric_error_estimate: Option<f64>,
    /// Set when evaluation failed outright (domain/range violations); such
    /// records count as failed but never abort the sweep.
    pub error: Option<String>,
}

/// The identities the verification driver knows about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Identity {
    Norm,
    WeightedNorm,
    Orthogonality,
    MainIntegral,
    BesselIntegral,
    PowerExp,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Norm,
        Identity::WeightedNorm,
        Identity::Orthogonality,
        Identity::MainIntegral,
        Identity::BesselIntegral,
        Identity::PowerExp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Norm => "norm",
            Identity::WeightedNorm => "weighted-norm",
            Identity::Orthogonality => "orthogonality",
            Identity::MainIntegral => "main-integral",
            Identity::BesselIntegral => "bessel-integral",
            Identity::PowerExp => "power-exp",
        }
    }
}

impl std::str::FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl std::fmt::Display for Identity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One grid point: parameter name -> value.
pub type GridPoint = BTreeMap<String, f64>;

fn point(entries: &[(&str, f64)]) -> GridPoint {
    entries.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

/// Compiled-in default grid for each identity; `verify --grid default`
/// reproduces the acceptance sweeps with no configuration.
pub fn default_grid(identity: Identity) -> Vec<GridPoint> {
    let mut grid = Vec::new();
    match identity {
        Identity::Norm | Identity::WeightedNorm => {
            for &mp in &[0.5, 1.0, 2.3] {
                for n in 0..=5u32 {
                    grid.push(point(&[("m_prime", mp), ("n", n as f64)]));
                }
            }
        }
        Identity::Orthogonality => {
            for &mp in &[0.0, 1.5, 3.2] {
                for n_l in 0..=5u32 {
                    for n_k in 0..=5u32 {
                        grid.push(point(&[
                            ("m_prime", mp),
                            ("n_l", n_l as f64),
                            ("n_k", n_k as f64),
                        ]));
                    }
                }
            }
        }
        Identity::MainIntegral => {
            for &mp in &[0.0, 0.5, 1.0, 2.3] {
                for &n_l in &[0u32, 1, 2, 4] {
                    for &n_k in &[0u32, 1, 3] {
                        for &t in &[0.1, 0.5, 0.9] {
                            grid.push(point(&[
                                ("m_prime", mp),
                                ("n_l", n_l as f64),
                                ("n_k", n_k as f64),
                                ("t", t),
                            ]));
                        }
                    }
                }
            }
        }
        Identity::BesselIntegral => {
            for &(n, m, alpha, z) in &[
                (1u32, 0.0, 1.0, 1.0),
                (2, 0.0, 1.0, 2.0),
                (4, 0.5, 1.5, 0.7),
                (3, 0.0, 2.0, 1.0),
            ] {
                grid.push(point(&[
                    ("n", n as f64),
                    ("m", m),
                    ("alpha", alpha),
                    ("z", z),
                ]));
            }
        }
        Identity::PowerExp => {
            for &(m, n, beta) in &[(1.0, 2.0, 1.0), (0.0, 1.0, 3.0), (2.5, 2.0, 0.8)] {
                grid.push(point(&[("m", m), ("n", n), ("beta", beta)]));
            }
        }
    }
    grid
}

/// Engine tolerances per identity. Finite-interval identities run at 1e-9;
/// the oscillatory Bessel chain runs one order looser per composition layer
/// (series acceleration on top of segment quadrature), and its slowest-
/// decaying admissible integrands exhaust the evaluable Bessel range near
/// a 5e-8 error floor anyway.
pub fn default_engine_spec(identity: Identity) -> QuadratureSpec {
    match identity {
        Identity::BesselIntegral => QuadratureSpec {
            abs_tol: 1e-7,
            rel_tol: 1e-7,
            ..QuadratureSpec::default()
        },
        _ => QuadratureSpec::default(),
    }
}

fn grid_value(p: &GridPoint, key: &str) -> Result<f64> {
    p.get(key)
        .copied()
        .ok_or_else(|| Error::MalformedGrid(format!("missing key '{key}'")))
}

fn grid_index(p: &GridPoint, key: &str) -> Result<u32> {
    let v = grid_value(p, key)?;
    if v.fract() != 0.0 || v < 0.0 || v > u32::MAX as f64 {
        return Err(Error::MalformedGrid(format!(
            "key '{key}' must be a non-negative integer, got {v}"
        )));
    }
    Ok(v as u32)
}

fn evaluate_point(
    identity: Identity,
    p: &GridPoint,
    spec: &QuadratureSpec,
) -> std::result::Result<(f64, IntegralResult), EvalFailure> {
    match identity {
        Identity::Norm => {
            let params = PolyParams::new(grid_value(p, "m_prime")?, grid_index(p, "n")?)?;
            let closed = crate::poly::ualp_norm_sq(params);
            let numeric = integrate_finite(
                move |x| {
                    let v = ualp_eval(params, x).unwrap_or(f64::NAN);
                    v * v
                },
                -1.0,
                1.0,
                spec,
            )?;
            Ok((closed, numeric))
        }
        Identity::WeightedNorm => {
            let params = PolyParams::new(grid_value(p, "m_prime")?, grid_index(p, "n")?)?;
            let closed = crate::poly::ualp_weighted_norm_sq(params)?;
            let s = params.m_prime() - 1.0;
            // [P]^2/(1-x^2) = (1-x^2)^{m'-1} [series part]^2, with the
            // algebraic endpoint factor built from exact distances.
            let numeric = integrate_finite_endpoint_aware(
                move |x, from, to| {
                    let poly = ualp_series_poly(params, x).unwrap_or(f64::NAN);
                    poly * poly * (from * to).powf(s)
                },
                -1.0,
                1.0,
                spec,
            )?;
            Ok((closed, numeric))
        }
        Identity::Orthogonality => {
            let mp = grid_value(p, "m_prime")?;
            let n_l = grid_index(p, "n_l")?;
            let n_k = grid_index(p, "n_k")?;
            let closed = orthogonality_closed_form(mp, n_l, n_k)?;
            let params_l = PolyParams::new(mp, n_l)?;
            let params_k = PolyParams::new(mp, n_k)?;
            let numeric = integrate_finite(
                move |x| {
                    let a = ualp_eval(params_l, x).unwrap_or(f64::NAN);
                    let b = ualp_eval(params_k, x).unwrap_or(f64::NAN);
                    a * b
                },
                -1.0,
                1.0,
                spec,
            )?;
            Ok((closed, numeric))
        }
        Identity::MainIntegral => {
            let params = MainIntegralParams::new(
                grid_value(p, "m_prime")?,
                grid_index(p, "n_l")?,
                grid_index(p, "n_k")?,
                grid_value(p, "t")?,
            )?;
            let closed = main_integral_closed_form(&params);
            let numeric = main_integral_numeric(&params, spec)?;
            Ok((closed, numeric))
        }
        Identity::BesselIntegral => {
            let params = BesselIntegralParams::new(
                grid_index(p, "n")?,
                grid_value(p, "m")?,
                grid_value(p, "alpha")?,
                grid_value(p, "z")?,
            )?;
            let closed = bessel_integral_closed_form(&params)?;
            let numeric = bessel_integral_numeric(&params, spec)?;
            Ok((closed, numeric))
        }
        Identity::PowerExp => {
            let m = grid_value(p, "m")?;
            let n = grid_value(p, "n")?;
            let beta = grid_value(p, "beta")?;
            let closed = power_exp_integral_closed_form(m, n, beta)?;
            let numeric = power_exp_integral_numeric(m, n, beta, spec)?;
            Ok((closed, numeric))
        }
    }
}

// Distinguishes structural grid problems (abort the sweep) from per-point
// math failures (isolate into a failed record).
enum EvalFailure {
    Malformed(Error),
    PointError(Error),
}

impl From<Error> for EvalFailure {
    fn from(e: Error) -> Self {
        match e {
            Error::MalformedGrid(_) => EvalFailure::Malformed(e),
            other => EvalFailure::PointError(other),
        }
    }
}

/// Run one identity over a parameter grid, producing one record per point in
/// input order. Per-point evaluation failures (for example a convergence
/// guard firing) are recorded as failed entries; they never abort the sweep.
pub fn verify_identity_grid(
    identity: Identity,
    grid: &[GridPoint],
    spec: &QuadratureSpec,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<Vec<VerificationRecord>> {
    spec.validate()?;
    if !(abs_tol > 0.0) || !(rel_tol > 0.0) {
        return Err(Error::Domain(format!(
            "verification tolerances must be positive, got abs {abs_tol} rel {rel_tol}"
        )));
    }
    let mut records = Vec::with_capacity(grid.len());
    for p in grid {
        match evaluate_point(identity, p, spec) {
            Ok((closed, numeric)) => {
                let abs_diff = (closed - numeric.value).abs();
                let rel_diff = if closed != 0.0 {
                    Some(abs_diff / closed.abs())
                } else {
                    None
                };
                let passed = abs_diff <= abs_tol || rel_diff.is_some_and(|r| r <= rel_tol);
                records.push(VerificationRecord {
                    identity_name: identity.name().to_string(),
                    parameters: p.clone(),
                    closed_form: Some(closed),
                    numeric: Some(numeric.value),
                    abs_diff: Some(abs_diff),
                    rel_diff,
                    passed,
                    numeric_error_estimate: Some(numeric.error_estimate),
                    error: None,
                });
            }
            Err(EvalFailure::Malformed(e)) => return Err(e),
            Err(EvalFailure::PointError(e)) => {
                records.push(VerificationRecord {
                    identity_name: identity.name().to_string(),
                    parameters: p.clone(),
                    closed_form: None,
                    numeric: None,
                    abs_diff: None,
                    rel_diff: None,
                    passed: false,
                    numeric_error_estimate: None,
                    error: Some(e.to_string()),
                });
            }
        }
    }
    Ok(records)
}
