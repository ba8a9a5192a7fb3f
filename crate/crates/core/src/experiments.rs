//! Builds the classical causal models induced by intervening on the
//! interferometer preparation and measuring the cavities, and sweeps the
//! causal metrics over the measurement parameters.
//!
//! The fine-grained model reads out the path record with a which-alternative
//! measurement (theta = 0) and keeps both cavity variables; every transition
//! probability is 1/4 and the model carries no effective information. The
//! coarse-grained model keeps a single excitation variable, measures the
//! cavities at an arbitrary (theta, gamma), and conditions the atomic
//! detection statistics on one outcome branch; at theta = pi/4 (full erasure)
//! it becomes the identity chain with one full bit of effective information.
//! Comparing the two exhibits causal emergence.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_8};
use std::str::FromStr;

use crate::causal::{binary_entropy, Partition, StateLabel, TransitionMatrix};
use crate::error::{Error, Result};
use crate::quantum::{
    check_theta, which_way_knowledge, BasisLabel, CavityObservable, Interferometer, Outcome,
};

/// Conditioning branch of the cavity measurement: the +1 outcome selects the
/// fringe pattern, the -1 outcome the anti-fringe pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Fringes,
    AntiFringes,
}

impl Branch {
    pub const BOTH: [Branch; 2] = [Branch::Fringes, Branch::AntiFringes];

    pub fn outcome(self) -> Outcome {
        match self {
            Branch::Fringes => Outcome::Plus,
            Branch::AntiFringes => Outcome::Minus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::Fringes => "fringes",
            Branch::AntiFringes => "anti-fringes",
        }
    }

    pub fn sign(self) -> f64 {
        match self {
            Branch::Fringes => 1.0,
            Branch::AntiFringes => -1.0,
        }
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fringes" => Ok(Branch::Fringes),
            "anti-fringes" | "anti_fringes" => Ok(Branch::AntiFringes),
            other => Err(Error::UnknownBranch(other.to_string())),
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// One parameter point of the coarse-grained experiment. Angles in radians,
/// theta in [0, pi/2].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioParams {
    pub theta: f64,
    pub gamma: f64,
    pub phi: f64,
    pub branch: Branch,
}

impl ScenarioParams {
    pub fn new(theta: f64, gamma: f64, phi: f64, branch: Branch) -> Result<Self> {
        check_theta(theta)?;
        for (name, value) in [("gamma", gamma), ("phi", phi)] {
            if !value.is_finite() {
                return Err(Error::InvalidParameter { name, value });
            }
        }
        Ok(Self {
            theta,
            gamma,
            phi,
            branch,
        })
    }
}

fn preparations() -> [(BasisLabel, StateLabel); 2] {
    [
        (
            BasisLabel::PREP_PATH_1,
            StateLabel::from_variables(&[("a", 1), ("c1", 0), ("c2", 0)]),
        ),
        (
            BasisLabel::PREP_PATH_2,
            StateLabel::from_variables(&[("a", 2), ("c1", 0), ("c2", 0)]),
        ),
    ]
}

/// The fine-grained causal model for arm phase `phi`.
///
/// Sources are the two preparations (a, c1=0, c2=0) under the uniform
/// intervention distribution; targets are the four (a, c1, c2) states with
/// one excitation. Each entry is the joint probability of the cavity readout
/// (theta = 0, so the +1 outcome puts the photon in C1) and the atomic
/// detection. The result is the flat 1/4 matrix for every phi.
pub fn fine_grained_model(phi: f64) -> Result<TransitionMatrix> {
    let iso = Interferometer::new(phi)?;
    let obs = CavityObservable::new(0.0, 0.0)?;
    let sources: Vec<StateLabel> = preparations().iter().map(|(_, l)| l.clone()).collect();
    let targets = vec![
        StateLabel::from_variables(&[("a", 1), ("c1", 1), ("c2", 0)]),
        StateLabel::from_variables(&[("a", 1), ("c1", 0), ("c2", 1)]),
        StateLabel::from_variables(&[("a", 2), ("c1", 1), ("c2", 0)]),
        StateLabel::from_variables(&[("a", 2), ("c1", 0), ("c2", 1)]),
    ];
    let mut rows = Vec::with_capacity(2);
    for (prep, _) in preparations() {
        let state = iso.evolve(prep)?;
        let mut row = vec![0.0; 4];
        for outcome in Outcome::BOTH {
            let (branch_prob, post) = obs.measure(&state, outcome)?;
            let (d1, d2) = post.atomic_detection_probs();
            // Column layout: [(a=1,C1), (a=1,C2), (a=2,C1), (a=2,C2)].
            let cavity_offset = match outcome {
                Outcome::Plus => 0,
                Outcome::Minus => 1,
            };
            row[cavity_offset] = branch_prob * d1;
            row[2 + cavity_offset] = branch_prob * d2;
        }
        rows.push(row);
    }
    TransitionMatrix::with_uniform_do(sources, targets, rows)
}

/// The coarse-grained causal model at one parameter point.
///
/// Sources are the two preparations (a, c=0) under the uniform intervention
/// distribution; targets are (a=1, c=1) and (a=2, c=1). Each row holds the
/// atomic detection probabilities conditioned on the selected measurement
/// branch, i.e. renormalized by the branch probability.
pub fn coarse_grained_model(params: &ScenarioParams) -> Result<TransitionMatrix> {
    coarse_model_rows(params.theta, params.gamma, params.phi, |state, obs| {
        let (_, post) = obs.measure(state, params.branch.outcome())?;
        let (d1, d2) = post.atomic_detection_probs();
        Ok(vec![d1, d2])
    })
}

/// Branch-averaged variant of the coarse-grained model: detection
/// probabilities mixed over both outcomes instead of conditioned on one.
/// An exploratory baseline; erasure no longer helps here, so its effective
/// information is zero everywhere.
pub fn coarse_grained_model_averaged(theta: f64, gamma: f64, phi: f64) -> Result<TransitionMatrix> {
    coarse_model_rows(theta, gamma, phi, |state, obs| {
        let mut d1 = 0.0;
        let mut d2 = 0.0;
        for outcome in Outcome::BOTH {
            match obs.measure(state, outcome) {
                Ok((p, post)) => {
                    let (a, b) = post.atomic_detection_probs();
                    d1 += p * a;
                    d2 += p * b;
                }
                Err(Error::ImpossibleOutcome { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
        Ok(vec![d1, d2])
    })
}

fn coarse_model_rows(
    theta: f64,
    gamma: f64,
    phi: f64,
    row_of: impl Fn(&crate::quantum::StateVector, &CavityObservable) -> Result<Vec<f64>>,
) -> Result<TransitionMatrix> {
    let iso = Interferometer::new(phi)?;
    let obs = CavityObservable::new(theta, gamma)?;
    let sources = vec![
        StateLabel::from_variables(&[("a", 1), ("c", 0)]),
        StateLabel::from_variables(&[("a", 2), ("c", 0)]),
    ];
    let targets = vec![
        StateLabel::from_variables(&[("a", 1), ("c", 1)]),
        StateLabel::from_variables(&[("a", 2), ("c", 1)]),
    ];
    let mut rows = Vec::with_capacity(2);
    for prep in [BasisLabel::PREP_PATH_1, BasisLabel::PREP_PATH_2] {
        let state = iso.evolve(prep)?;
        rows.push(row_of(&state, &obs)?);
    }
    TransitionMatrix::with_uniform_do(sources, targets, rows)
}

/// Closed form of the coarse-grained model's effective information:
/// EI = 1 - H2((1 + V) / 2) with V = sin(2 theta) cos(phi + gamma) on the
/// fringe branch and -V on the anti-fringe branch. Both branches give the
/// same value since binary entropy is symmetric. The measurement pipeline is
/// checked against this expression in the test suites.
pub fn ei_closed_form(params: &ScenarioParams) -> f64 {
    let v = params.branch.sign() * (2.0 * params.theta).sin() * (params.phi + params.gamma).cos();
    1.0 - binary_entropy((1.0 + v) / 2.0)
}

/// One evaluated point of a parameter sweep. Metric fields are `None` when
/// the selected branch has vanishing probability at this point, which leaves
/// the conditioned model undefined.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub theta: f64,
    pub phi: f64,
    pub gamma: f64,
    pub branch: Branch,
    pub ei: Option<f64>,
    pub determinism: Option<f64>,
    pub degeneracy: Option<f64>,
    pub k_sigma: f64,
}

/// Evaluates the coarse-grained model over a theta grid for each phi,
/// reporting EI, both coefficients, and the which-way knowledge K.
/// Points are ordered theta-major, phi-minor.
pub fn sweep_ei(
    theta_grid: &[f64],
    phi_list: &[f64],
    gamma: f64,
    branch: Branch,
) -> Result<Vec<SweepPoint>> {
    if theta_grid.is_empty() {
        return Err(Error::EmptyGrid("theta grid"));
    }
    if phi_list.is_empty() {
        return Err(Error::EmptyGrid("phi list"));
    }
    let mut points = Vec::with_capacity(theta_grid.len() * phi_list.len());
    for &theta in theta_grid {
        let k_sigma = which_way_knowledge(theta)?;
        for &phi in phi_list {
            let params = ScenarioParams::new(theta, gamma, phi, branch)?;
            let point = match coarse_grained_model(&params) {
                Ok(tpm) => {
                    let report = tpm.effective_information()?;
                    SweepPoint {
                        theta,
                        phi,
                        gamma,
                        branch,
                        ei: Some(report.effective_information),
                        determinism: Some(report.determinism),
                        degeneracy: Some(report.degeneracy),
                        k_sigma,
                    }
                }
                Err(Error::ImpossibleOutcome { .. }) => SweepPoint {
                    theta,
                    phi,
                    gamma,
                    branch,
                    ei: None,
                    determinism: None,
                    degeneracy: None,
                    k_sigma,
                },
                Err(e) => return Err(e),
            };
            points.push(point);
        }
    }
    Ok(points)
}

/// Evenly spaced theta grid from 0 to `theta_max` inclusive.
pub fn theta_grid(theta_max: f64, steps: usize) -> Result<Vec<f64>> {
    check_theta(theta_max)?;
    if steps == 0 {
        return Err(Error::EmptyGrid("theta grid"));
    }
    if steps == 1 {
        return Ok(vec![0.0]);
    }
    Ok((0..steps)
        .map(|i| theta_max * i as f64 / (steps - 1) as f64)
        .collect())
}

/// Default sweep grid: 181 points covering [0, pi/2].
pub fn default_theta_grid() -> Vec<f64> {
    theta_grid(FRAC_PI_2, 181).expect("static grid parameters are valid")
}

/// Default phi values: multiples of pi/8 from 0 to pi/2.
pub fn default_phi_list() -> Vec<f64> {
    (0..5).map(|i| FRAC_PI_8 * i as f64).collect()
}

/// Effective information of the three descriptions at one parameter point,
/// and the emergence delta between the quantum-conditioned coarse model and
/// the fine model. `delta > 0` is causal emergence.
#[derive(Debug, Clone, Copy)]
pub struct EmergenceComparison {
    pub ei_fine: f64,
    pub ei_coarse: f64,
    /// EI of the fine model after classically merging (c1, c2) into c.
    pub ei_classical_aggregate: f64,
    /// ei_coarse - ei_fine.
    pub delta: f64,
}

/// Compares the fine model, the branch-conditioned coarse model, and the
/// classical aggregate of the fine model at the same parameter point.
///
/// The aggregate merges the fine matrix's cavity variables by summing target
/// columns, which keeps EI at zero; only the quantum conditioning raises it.
pub fn emergence_comparison(params: &ScenarioParams) -> Result<EmergenceComparison> {
    let fine = fine_grained_model(params.phi)?;
    let ei_fine = fine.effective_information()?.effective_information;
    let coarse = coarse_grained_model(params)?;
    let ei_coarse = coarse.effective_information()?.effective_information;
    let aggregate = fine.coarse_grain(&cavity_merge_partition(&fine)?)?;
    let ei_classical_aggregate = aggregate.effective_information()?.effective_information;
    Ok(EmergenceComparison {
        ei_fine,
        ei_coarse,
        ei_classical_aggregate,
        delta: ei_coarse - ei_fine,
    })
}

/// Partition that replaces the cavity variables (c1, c2) of a fine-model
/// label with their sum c, keeping the atom variable.
pub fn cavity_merge_partition(fine: &TransitionMatrix) -> Result<Partition> {
    let merge = |label: &StateLabel| -> Result<StateLabel> {
        let missing = || Error::UnknownState(label.name.clone());
        let a = label.variable("a").ok_or_else(missing)?;
        let c1 = label.variable("c1").ok_or_else(missing)?;
        let c2 = label.variable("c2").ok_or_else(missing)?;
        Ok(StateLabel::from_variables(&[("a", a), ("c", c1 + c2)]))
    };
    let source_map = fine.sources().iter().map(merge).collect::<Result<_>>()?;
    let target_map = fine.targets().iter().map(merge).collect::<Result<_>>()?;
    Ok(Partition::new(source_map, target_map))
}
