//! Browser bindings for the interferometer demo page.
//!
//! Exposes three flat-array entry points that the static page in `www/`
//! plots: an effective-information sweep over theta, a summary of the
//! coarse-grained transition matrix at one parameter point, and the
//! emergence comparison between descriptions. Arrays of f64 cross the
//! boundary as JavaScript Float64Array values.
//!
//! Each export is a thin wrapper over a `*_values` function that returns a
//! plain library result. The wrappers only translate errors to JsError,
//! which can exist solely inside a wasm runtime, so all numeric behavior is
//! testable on the host.

use wasm_bindgen::prelude::*;

use causal_mzi::experiments::{
    coarse_grained_model, emergence_comparison, sweep_ei, theta_grid, Branch, ScenarioParams,
};
use causal_mzi::quantum::which_way_knowledge;

fn branch_of(fringes: bool) -> Branch {
    if fringes {
        Branch::Fringes
    } else {
        Branch::AntiFringes
    }
}

/// Sweep backing [`ei_sweep`]: flat [theta, ei_bits, k_sigma] triples over
/// `steps` points spanning [0, pi/2]. A point whose branch is impossible
/// reports NaN for ei_bits.
pub fn ei_sweep_values(
    phi: f64,
    gamma: f64,
    fringes: bool,
    steps: u32,
) -> causal_mzi::Result<Vec<f64>> {
    let grid = theta_grid(std::f64::consts::FRAC_PI_2, steps as usize)?;
    let points = sweep_ei(&grid, &[phi], gamma, branch_of(fringes))?;
    let mut out = Vec::with_capacity(points.len() * 3);
    for p in points {
        out.push(p.theta);
        out.push(p.ei.unwrap_or(f64::NAN));
        out.push(p.k_sigma);
    }
    Ok(out)
}

/// Summary backing [`coarse_summary`]: [p11, p12, p21, p22, ei_bits,
/// determinism, degeneracy, k_sigma] for the coarse-grained model.
pub fn coarse_summary_values(
    theta: f64,
    gamma: f64,
    phi: f64,
    fringes: bool,
) -> causal_mzi::Result<Vec<f64>> {
    let params = ScenarioParams::new(theta, gamma, phi, branch_of(fringes))?;
    let tpm = coarse_grained_model(&params)?;
    let report = tpm.effective_information()?;
    Ok(vec![
        tpm.row(0)[0],
        tpm.row(0)[1],
        tpm.row(1)[0],
        tpm.row(1)[1],
        report.effective_information,
        report.determinism,
        report.degeneracy,
        which_way_knowledge(theta)?,
    ])
}

/// Comparison backing [`emergence_summary`]: [ei_fine, ei_coarse,
/// ei_classical_aggregate, delta] at one parameter point.
pub fn emergence_summary_values(
    theta: f64,
    gamma: f64,
    phi: f64,
    fringes: bool,
) -> causal_mzi::Result<Vec<f64>> {
    let params = ScenarioParams::new(theta, gamma, phi, branch_of(fringes))?;
    let cmp = emergence_comparison(&params)?;
    Ok(vec![
        cmp.ei_fine,
        cmp.ei_coarse,
        cmp.ei_classical_aggregate,
        cmp.delta,
    ])
}

/// Sweeps theta over [0, pi/2] in `steps` points and returns flat triples
/// [theta, ei_bits, k_sigma] per point.
#[wasm_bindgen]
pub fn ei_sweep(phi: f64, gamma: f64, fringes: bool, steps: u32) -> Result<Vec<f64>, JsError> {
    Ok(ei_sweep_values(phi, gamma, fringes, steps)?)
}

/// Returns [p11, p12, p21, p22, ei_bits, determinism, degeneracy, k_sigma]
/// for the coarse-grained model at one parameter point.
#[wasm_bindgen]
pub fn coarse_summary(
    theta: f64,
    gamma: f64,
    phi: f64,
    fringes: bool,
) -> Result<Vec<f64>, JsError> {
    Ok(coarse_summary_values(theta, gamma, phi, fringes)?)
}

/// Returns [ei_fine, ei_coarse, ei_classical_aggregate, delta] at one
/// parameter point.
#[wasm_bindgen]
pub fn emergence_summary(
    theta: f64,
    gamma: f64,
    phi: f64,
    fringes: bool,
) -> Result<Vec<f64>, JsError> {
    Ok(emergence_summary_values(theta, gamma, phi, fringes)?)
}
