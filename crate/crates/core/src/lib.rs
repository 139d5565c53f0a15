//! Propagation of few strongly interacting photons through a Rydberg-EIT medium.
//!
//! The crate is organized around the pipeline used to produce the data
//! products of a photon-vortex experiment:
//!
//! - [`params`]: physical constants in a single unit convention
//!   (lengths in μm, times in μs, angular frequencies in rad/μs) and the
//!   derived dimensionless quantities (blockade radius, enhancement
//!   factors, interaction strength, interaction phase).
//! - [`single_photon`]: closed-form single-photon steady state,
//!   susceptibility, transmission spectra, and the susceptibility-curvature
//!   polariton mass.
//! - [`two_photon`]: steady-state solver for the nine coupled two-photon
//!   amplitude equations with the van-der-Waals interaction.
//! - [`conditional`]: propagation of the second photon after detection of
//!   the first, producing g2(tau) and phi2(tau).
//! - [`effective`]: effective Schrödinger and Dirac-like two-photon models,
//!   delta-potential analytics, bound states, and the vortex phase diagram.
//! - [`three_photon`]: Jacobi coordinates, the three-photon wavefunction
//!   ansatz, and the g3 connected/disconnected decomposition.
//! - [`topology`]: phase-singularity detection and 2-D phase unwrapping.

pub mod conditional;
pub mod effective;
pub mod field;
pub mod numeric;
pub mod params;
pub mod single_photon;
pub mod special;
pub mod three_photon;
pub mod topology;
pub mod two_photon;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter {name}: {reason}")]
    InvalidParams { name: &'static str, reason: String },
    #[error("q0 pole: Omega^2 = delta * Delta (enhancement factor diverges)")]
    QZeroPole,
    #[error("susceptibility curvature below {min:e} at delta = {delta} rad/us; mass undefined")]
    DegenerateCurvature { delta: f64, min: f64 },
    #[error("singular per-node linear system at node ({i}, {j})")]
    SingularSystem { i: usize, j: usize },
    #[error("grid too coarse: spacing {h} exceeds limit {max} um")]
    GridTooCoarse { h: f64, max: f64 },
    #[error("|E(x)| = {emin:e} below 1e-30; normalization undefined")]
    VanishingField { emin: f64 },
    #[error("time step {dt} us too large; limit {max} us for this integrator")]
    TimeStepTooLarge { dt: f64, max: f64 },
    #[error("effective mass diverges at |R| = {r} um beyond mass cutoff {cutoff} um")]
    MassDivergence { r: f64, cutoff: f64 },
    #[error("no bound state resolved: ground level {e2:e} above resolution threshold {threshold:e}")]
    NoBoundState { e2: f64, threshold: f64 },
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
