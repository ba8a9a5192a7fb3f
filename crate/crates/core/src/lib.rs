//! Simulation of an atomic Mach-Zehnder interferometer with two which-path
//! cavity detectors, and causal analysis of the classical Markov chains its
//! intervention and measurement statistics induce.
//!
//! The crate is layered:
//!
//! - [`quantum`]: state vectors, the interferometer evolution, the
//!   parametrized cavity observable, and Born-rule projective measurement.
//! - [`causal`]: transition matrices under interventions, Kullback-Leibler
//!   divergence, effect and effective information, determinism and degeneracy
//!   coefficients, and classical coarse-graining.
//! - [`experiments`]: the fine-grained and coarse-grained models of the
//!   interferometer, the closed-form effective information, parameter sweeps,
//!   and the emergence comparison between descriptions.
//!
//! Angles are radians and information quantities are bits throughout.
//!
//! ```
//! use causal_mzi::experiments::{coarse_grained_model, Branch, ScenarioParams};
//!
//! let params = ScenarioParams::new(std::f64::consts::FRAC_PI_4, 0.0, 0.0, Branch::Fringes)?;
//! let tpm = coarse_grained_model(&params)?;
//! let report = tpm.effective_information()?;
//! assert!((report.effective_information - 1.0).abs() < 1e-12);
//! # Ok::<(), causal_mzi::Error>(())
//! ```

pub mod causal;
pub mod error;
pub mod experiments;
pub mod quantum;

pub use error::{Error, Result};
