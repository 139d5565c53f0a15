//! Physical constants and derived quantities, in one unit convention:
//! lengths in μm, times in μs, angular frequencies in rad/μs. A frequency
//! quoted as f MHz is stored as 2π·f rad/μs.

use serde::{Deserialize, Serialize};
use std::f64::consts::{PI, TAU};

use crate::{single_photon, Error, Result};

/// Reference peak density used only to report the bare coupling g;
/// every solver consumes g and the density solely through the collective
/// coupling g*sqrt(rho(x)), which is fixed by OD and sigma alone.
pub const REFERENCE_PEAK_DENSITY: f64 = 5.0; // atoms / um^3

/// Vacuum light speed in μm/μs.
pub const LIGHT_SPEED: f64 = 2.99792458e8;

/// Atomic and optical constants of the medium. All angular frequencies in
/// rad/μs, lengths in μm.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PhysicalParams {
    /// Half-width of the intermediate (5P) level, rad/μs.
    pub gamma_p: f64,
    /// Rydberg decoherence half-width, rad/μs.
    pub gamma_s: f64,
    /// Control Rabi frequency, rad/μs.
    pub omega_c: f64,
    /// Probe one-photon detuning, rad/μs.
    pub delta_p: f64,
    /// Two-photon detuning from the Rydberg level, rad/μs.
    pub delta_s: f64,
    /// Van-der-Waals coefficient C6/hbar, rad/μs · μm^6 (negative for an
    /// attractive photon-photon interaction in this configuration).
    pub c6_over_hbar: f64,
    /// Total optical depth of the medium.
    pub od: f64,
    /// Gaussian 1-sigma of the cloud density along the optical axis, μm.
    pub sigma: f64,
    /// Vacuum light speed, μm/μs.
    pub c: f64,
}

/// The same constants with frequencies in MHz (2π-free), as they appear in
/// configuration files.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicalParamsMhz {
    pub gamma_p_mhz: f64,
    pub gamma_s_mhz: f64,
    pub omega_c_mhz: f64,
    pub delta_p_mhz: f64,
    pub delta_s_mhz: f64,
    pub c6_over_hbar_mhz_um6: f64,
    pub od: f64,
    pub sigma_um: f64,
}

impl PhysicalParamsMhz {
    /// The work point of the vortex dataset: OD 73 with the cloud and
    /// coupling configuration of the companion measurements.
    pub fn reference() -> Self {
        Self {
            gamma_p_mhz: 3.03,
            gamma_s_mhz: 0.07,
            omega_c_mhz: 9.5,
            delta_p_mhz: 28.5,
            delta_s_mhz: 1.03,
            c6_over_hbar_mhz_um6: -5.617e7,
            od: 73.0,
            sigma_um: 75.0 / (2.0 * PI).sqrt(),
        }
    }

    pub fn to_angular(self) -> PhysicalParams {
        PhysicalParams {
            gamma_p: TAU * self.gamma_p_mhz,
            gamma_s: TAU * self.gamma_s_mhz,
            omega_c: TAU * self.omega_c_mhz,
            delta_p: TAU * self.delta_p_mhz,
            delta_s: TAU * self.delta_s_mhz,
            c6_over_hbar: TAU * self.c6_over_hbar_mhz_um6,
            od: self.od,
            sigma: self.sigma_um,
            c: LIGHT_SPEED,
        }
    }
}

impl PhysicalParams {
    pub fn reference() -> Self {
        PhysicalParamsMhz::reference().to_angular()
    }

    pub fn with_od(mut self, od: f64) -> Self {
        self.od = od;
        self
    }

    pub fn with_delta_s(mut self, delta_s: f64) -> Self {
        self.delta_s = delta_s;
        self
    }

    /// Control-field detuning Delta_c = delta - Delta, rad/μs. Held fixed
    /// when the two-photon detuning is swept in spectra.
    pub fn delta_c(&self) -> f64 {
        self.delta_s - self.delta_p
    }

    /// Effective cloud length L = sqrt(2 pi) sigma, μm.
    pub fn cloud_length(&self) -> f64 {
        (2.0 * PI).sqrt() * self.sigma
    }

    /// Peak collective coupling G0 = g sqrt(rho0), rad/μs; the x-dependent
    /// coupling is G0 exp(-x^2 / 4 sigma^2).
    pub fn coupling_peak(&self) -> f64 {
        (self.od * self.gamma_p * self.c / (2.0 * self.cloud_length())).sqrt()
    }

    /// Collective coupling g sqrt(rho(x)) at position x, rad/μs.
    pub fn coupling_at(&self, x: f64) -> f64 {
        self.coupling_peak() * (-x * x / (4.0 * self.sigma * self.sigma)).exp()
    }

    /// Resonant attenuation coefficient kappa(x) = g^2 rho(x) / (Gamma c),
    /// 1/μm; integrates to OD/2 across the cloud.
    pub fn kappa_at(&self, x: f64) -> f64 {
        self.od / (2.0 * self.cloud_length()) * (-x * x / (2.0 * self.sigma * self.sigma)).exp()
    }

    pub fn validate(&self) -> Result<()> {
        let checks: [(&'static str, f64, bool); 6] = [
            ("gamma_p", self.gamma_p, self.gamma_p > 0.0),
            ("gamma_s", self.gamma_s, self.gamma_s >= 0.0),
            ("omega_c", self.omega_c, self.omega_c > 0.0),
            ("sigma", self.sigma, self.sigma > 0.0),
            ("od", self.od, self.od >= 0.0),
            ("c", self.c, self.c > 0.0),
        ];
        for (name, v, ok) in checks {
            if !ok || !v.is_finite() {
                return Err(Error::InvalidParams { name, reason: format!("value {v}") });
            }
        }
        Ok(())
    }
}

/// Derived quantities. Angular frequencies in rad/μs, lengths in μm,
/// everything else dimensionless unless noted.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct DerivedParams {
    /// Single-photon single-atom Rabi frequency, rad/μs, reported for the
    /// reference peak density.
    pub g: f64,
    /// Effective cloud length L = sqrt(2 pi) sigma, μm.
    pub cloud_length: f64,
    /// Blockade radius, μm.
    pub r_b: f64,
    /// Blockaded optical depth OD r_b / L.
    pub od_b: f64,
    /// Closed-form enhancement factor q0 = Omega^2 / (Omega^2 - delta Delta).
    pub q0: f64,
    /// Refined enhancement factor from the susceptibility curvature.
    pub q: f64,
    /// The q value used in the blockade-radius definition (the refined q).
    pub q_used_for_rb: f64,
    /// Interaction strength lambda = (q0 Gamma OD_b / (2 Delta))^2.
    pub lambda: f64,
    /// Single-photon interaction phase phi = (OD/2)(q Gamma / Delta), rad.
    pub phi: f64,
    /// Transmission-equality two-photon detuning, rad/μs.
    pub delta_te: f64,
    /// Potential depth U = (OD/L)(q Gamma / Delta), 1/μm.
    pub u_depth: f64,
    /// Effective mass m = -U/8 in the uniform approximation, 1/μm.
    pub mass: f64,
}

/// Compute every derived quantity from the physical constants.
pub fn derive_params(p: &PhysicalParams) -> Result<DerivedParams> {
    p.validate()?;
    let (gamma, omega, delta_p, delta_s) = (p.gamma_p, p.omega_c, p.delta_p, p.delta_s);

    let pole = omega * omega - delta_s * delta_p;
    if pole.abs() < 1e-9 * omega * omega {
        return Err(Error::QZeroPole);
    }
    let q0 = omega * omega / pole;

    let mass_est = single_photon::mass_from_susceptibility(p)?;
    let q = mass_est.q_numeric;

    let full_eit_linewidth = p.gamma_s + omega * omega / delta_p.abs();
    let r_b = (q / 2.0 * p.c6_over_hbar.abs() / full_eit_linewidth).powf(1.0 / 6.0);

    let cloud_length = p.cloud_length();
    let od_b = p.od * r_b / cloud_length;
    let lambda = (q0 * gamma / (2.0 * delta_p) * od_b).powi(2);
    let phi = 0.5 * p.od * q * gamma / delta_p;
    let u_depth = p.od / cloud_length * q * gamma / delta_p;
    let mass = -u_depth / 8.0;

    // OD = 2 sqrt(2 pi) g^2 rho0 sigma / (Gamma c) at the reference density.
    let g = (p.od * gamma * p.c / (2.0 * cloud_length * REFERENCE_PEAK_DENSITY)).sqrt();

    let delta_te = transmission_equality_detuning(p);

    Ok(DerivedParams {
        g,
        cloud_length,
        r_b,
        od_b,
        q0,
        q,
        q_used_for_rb: q,
        lambda,
        phi,
        delta_te,
        u_depth,
        mass,
    })
}

/// Two-photon detuning at which blockaded (two-level) and unblockaded
/// (three-level) transmissions coincide, rad/μs, at fixed control detuning.
pub fn transmission_equality_detuning(p: &PhysicalParams) -> f64 {
    let (g, gs, om) = (p.gamma_p, p.gamma_s, p.omega_c);
    let dc = p.delta_c();
    ((g + gs) * dc
        + (g * g * dc * dc + g * (2.0 * g + gs) * (g * gs + om * om)).sqrt())
        / (2.0 * g + gs)
}
