//! Closed-form single-photon steady state, susceptibility, transmission and
//! phase spectra, and the susceptibility-curvature estimate of the
//! polariton mass.

use num_complex::Complex64;
use serde::Serialize;

use crate::params::PhysicalParams;
use crate::special::erf;
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// EIT denominator D = Gamma - i Delta + Omega^2 / (gamma - i delta) at the
/// probe detuning implied by `delta_s` with the control detuning held fixed.
pub fn eit_denominator(p: &PhysicalParams, delta_s: f64) -> Complex64 {
    let delta_p = delta_s - p.delta_c();
    Complex64::new(p.gamma_p, -delta_p)
        + p.omega_c * p.omega_c / Complex64::new(p.gamma_s, -delta_s)
}

/// Two-level (blockaded) denominator Gamma - i Delta.
pub fn two_level_denominator(p: &PhysicalParams, delta_s: f64) -> Complex64 {
    let delta_p = delta_s - p.delta_c();
    Complex64::new(p.gamma_p, -delta_p)
}

/// Single-photon susceptibility, proportionality fixed such that
/// ln E(out) = (i OD / 2) chi. With this constant Im chi >= 0 for
/// absorbing media and the transmitted phase is (OD/2) Re chi.
pub fn susceptibility(p: &PhysicalParams, delta_s: f64) -> Complex64 {
    I * p.gamma_p / eit_denominator(p, delta_s)
}

/// Two-level susceptibility (control off), same normalization.
pub fn susceptibility_two_level(p: &PhysicalParams, delta_s: f64) -> Complex64 {
    I * p.gamma_p / two_level_denominator(p, delta_s)
}

/// Steady-state single-photon amplitudes on a position grid.
#[derive(Debug, Clone)]
pub struct SinglePhotonState {
    pub x: Vec<f64>,
    pub e: Vec<Complex64>,
    pub p: Vec<Complex64>,
    pub s: Vec<Complex64>,
}

impl SinglePhotonState {
    pub fn transmission(&self) -> f64 {
        self.e.last().map(|c| c.norm_sqr()).unwrap_or(1.0)
    }
}

/// Fraction of the density integral accumulated up to x:
/// int_{-inf}^{x} rho / int rho = (1 + erf(x / (sqrt(2) sigma))) / 2.
pub fn density_cdf(p: &PhysicalParams, x: f64) -> f64 {
    0.5 * (1.0 + erf(x / (std::f64::consts::SQRT_2 * p.sigma)))
}

/// Logarithmic derivative of the steady-state photon amplitude,
/// mu(x) = d ln E / dx = -kappa(x) Gamma / D, 1/μm.
pub fn log_derivative(p: &PhysicalParams, x: f64) -> Complex64 {
    -p.kappa_at(x) * p.gamma_p / eit_denominator(p, p.delta_s)
}

/// Steady-state amplitude E(x) from the error-function closed form of the
/// Gaussian density integral; E(-inf) = 1.
pub fn amplitude_e(p: &PhysicalParams, x: f64) -> Complex64 {
    let f = p.gamma_p / eit_denominator(p, p.delta_s);
    (-f * (0.5 * p.od * density_cdf(p, x))).exp()
}

/// Closed-form steady state on a grid. The grid must be sorted ascending
/// and span at least [-5 sigma, +5 sigma].
pub fn steady_state(p: &PhysicalParams, x_grid: &[f64]) -> Result<SinglePhotonState> {
    p.validate()?;
    if x_grid.len() < 2 || x_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParams { name: "x_grid", reason: "not ascending".into() });
    }
    let span_ok = x_grid[0] <= -5.0 * p.sigma + 1e-9 * p.sigma
        && *x_grid.last().unwrap() >= 5.0 * p.sigma - 1e-9 * p.sigma;
    if !span_ok {
        return Err(Error::InvalidParams {
            name: "x_grid",
            reason: format!("must span [-5 sigma, 5 sigma]; got [{}, {}]", x_grid[0], x_grid.last().unwrap()),
        });
    }
    let d = eit_denominator(p, p.delta_s);
    let p_coeff = I / d; // P = i G(x)/D * E
    let s_coeff = -p.omega_c / (Complex64::new(p.gamma_s, -p.delta_s) * d); // S = -Omega G/((gamma-i delta) D) E
    let mut e = Vec::with_capacity(x_grid.len());
    let mut pp = Vec::with_capacity(x_grid.len());
    let mut ss = Vec::with_capacity(x_grid.len());
    for &x in x_grid {
        let ex = amplitude_e(p, x);
        let g = p.coupling_at(x);
        e.push(ex);
        pp.push(p_coeff * g * ex);
        ss.push(s_coeff * g * ex);
    }
    Ok(SinglePhotonState { x: x_grid.to_vec(), e, p: pp, s: ss })
}

/// One row of a transmission/phase spectrum.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SpectrumPoint {
    /// Two-photon detuning, rad/μs.
    pub delta_s: f64,
    /// Three-level (EIT) intensity transmission.
    pub t3: f64,
    /// Two-level (blockaded) intensity transmission.
    pub t2: f64,
    /// Three-level transmitted phase, rad.
    pub phase3: f64,
    /// Two-level transmitted phase, rad.
    pub phase2: f64,
}

/// Transmission and phase spectra over a two-photon detuning range, for the
/// three-level system and the two-level (control off) reference.
pub fn transmission_spectrum(p: &PhysicalParams, delta_range: &[f64]) -> Vec<SpectrumPoint> {
    delta_range
        .iter()
        .map(|&ds| {
            let chi3 = susceptibility(p, ds);
            let chi2 = susceptibility_two_level(p, ds);
            SpectrumPoint {
                delta_s: ds,
                t3: (-p.od * chi3.im).exp(),
                t2: (-p.od * chi2.im).exp(),
                phase3: 0.5 * p.od * chi3.re,
                phase2: 0.5 * p.od * chi2.re,
            }
        })
        .collect()
}

/// Result of the susceptibility-curvature mass estimate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct MassEstimate {
    /// m = (1/4) (d Re chi / d delta)^2 / (d^2 Re chi / d delta^2) at the
    /// work point, in the susceptibility normalization of this module
    /// (units (rad/μs)^-... the absolute scale cancels in q).
    pub mass: f64,
    /// q = m(delta) / m(0), the refined enhancement factor.
    pub q_numeric: f64,
    /// Closed-form q = 1/(1 - delta Delta/Omega^2 + 2 delta/Delta
    /// - 4 delta^2/Omega^2) for comparison.
    pub q_closed_form: f64,
}

/// Curvature threshold below which the mass is reported as degenerate.
pub const CURVATURE_MIN: f64 = 1e-12;

fn mass_at(p: &PhysicalParams, delta_s: f64, step: f64) -> Result<f64> {
    let re_chi = |ds: f64| susceptibility(p, ds).re;
    let d1 = (re_chi(delta_s + step) - re_chi(delta_s - step)) / (2.0 * step);
    let d2 =
        (re_chi(delta_s + step) - 2.0 * re_chi(delta_s) + re_chi(delta_s - step)) / (step * step);
    if d2.abs() < CURVATURE_MIN {
        return Err(Error::DegenerateCurvature { delta: delta_s, min: CURVATURE_MIN });
    }
    Ok(0.25 * d1 * d1 / d2)
}

/// Polariton mass from the susceptibility curvature, differentiated by
/// central differences with step 1e-3 Omega, plus the enhancement factor
/// q = m(delta)/m(0) and its closed-form approximation.
pub fn mass_from_susceptibility(p: &PhysicalParams) -> Result<MassEstimate> {
    let step = 1e-3 * p.omega_c;
    let m_work = mass_at(p, p.delta_s, step)?;
    let m_eit = mass_at(p, 0.0, step)?;
    let (om2, dp, ds) = (p.omega_c * p.omega_c, p.delta_p, p.delta_s);
    let q_closed_form = 1.0 / (1.0 - ds * dp / om2 + 2.0 * ds / dp - 4.0 * ds * ds / om2);
    Ok(MassEstimate { mass: m_work, q_numeric: m_work / m_eit, q_closed_form })
}
