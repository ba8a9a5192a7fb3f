//! Classical causal-model layer: transition-probability matrices under
//! interventions, Kullback-Leibler divergence, effect and effective
//! information, determinism and degeneracy coefficients, and coarse-graining
//! of a matrix under a state partition.
//!
//! A [`TransitionMatrix`] holds p(s_F | do(s_0)) together with an intervention
//! distribution p(do(s_0)). These are ordinary classical Markov chains whose
//! entries happen to be produced by quantum statistics upstream; nothing in
//! this module knows about amplitudes. All information quantities are in bits.

use crate::error::{Error, Result};

/// Tolerance for row sums, distribution sums, and entry range checks.
pub const PROB_TOL: f64 = 1e-12;

/// Shannon entropy in bits, with the 0 log 0 = 0 convention.
///
/// Assumes `p` is a probability distribution; entries at or below zero
/// contribute nothing.
pub fn shannon_entropy(p: &[f64]) -> f64 {
    p.iter()
        .map(|&x| if x > 0.0 { -x * x.log2() } else { 0.0 })
        .sum()
}

/// Entropy in bits of a two-outcome distribution (p, 1 - p).
pub fn binary_entropy(p: f64) -> f64 {
    shannon_entropy(&[p, 1.0 - p])
}

/// Kullback-Leibler divergence D(p || q) in bits.
///
/// Validates that both arguments are distributions of equal length and that
/// the support of `p` is contained in the support of `q`.
pub fn kl_divergence(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    validate_distribution(p)?;
    validate_distribution(q)?;
    kl_core(p, q)
}

/// Divergence without distribution validation, for rows already checked on
/// construction. Still enforces the support condition.
fn kl_core(p: &[f64], q: &[f64]) -> Result<f64> {
    let mut acc = 0.0;
    for (i, (&pi, &qi)) in p.iter().zip(q).enumerate() {
        if pi <= 0.0 {
            continue;
        }
        if qi <= 0.0 {
            return Err(Error::InfiniteDivergence(i));
        }
        acc += pi * (pi / qi).log2();
    }
    // The divergence is nonnegative; rounding can leave a tiny negative residue.
    Ok(acc.max(0.0))
}

fn validate_distribution(p: &[f64]) -> Result<()> {
    let mut sum = 0.0;
    for (index, &value) in p.iter().enumerate() {
        if !(-PROB_TOL..=1.0 + PROB_TOL).contains(&value) {
            return Err(Error::ProbabilityOutOfRange { index, value });
        }
        sum += value;
    }
    if (sum - 1.0).abs() > PROB_TOL {
        return Err(Error::NotADistribution(sum));
    }
    Ok(())
}

/// A named state of the classical model, optionally carrying the variable
/// assignment it stands for, e.g. a=1, c1=0, c2=0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StateLabel {
    pub name: String,
    pub variables: Vec<(String, i64)>,
}

impl StateLabel {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            variables: Vec::new(),
        }
    }

    /// Builds a label from variable assignments; the name is synthesized as
    /// "a=1,c1=0,c2=0" style text.
    pub fn from_variables(vars: &[(&str, i64)]) -> Self {
        let name = vars
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",");
        Self {
            name,
            variables: vars.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    pub fn variable(&self, key: &str) -> Option<i64> {
        self.variables
            .iter()
            .find(|(k, _)| k == key)
            .map(|&(_, v)| v)
    }
}

impl std::fmt::Display for StateLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name)
    }
}

/// Row-stochastic matrix of transition probabilities p(s_F | do(s_0)) with an
/// intervention distribution p(do(s_0)) over the source states.
///
/// Source and target state spaces are kept distinct; no stationarity is
/// assumed. Validation happens on construction and violations are errors, not
/// silent renormalizations.
#[derive(Debug, Clone)]
pub struct TransitionMatrix {
    sources: Vec<StateLabel>,
    targets: Vec<StateLabel>,
    rows: Vec<Vec<f64>>,
    do_dist: Vec<f64>,
}

impl TransitionMatrix {
    pub fn new(
        sources: Vec<StateLabel>,
        targets: Vec<StateLabel>,
        rows: Vec<Vec<f64>>,
        do_dist: Vec<f64>,
    ) -> Result<Self> {
        check_distinct_names(&sources)?;
        check_distinct_names(&targets)?;
        if rows.len() != sources.len() {
            return Err(Error::LengthMismatch {
                left: rows.len(),
                right: sources.len(),
            });
        }
        if do_dist.len() != sources.len() {
            return Err(Error::LengthMismatch {
                left: do_dist.len(),
                right: sources.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != targets.len() {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: targets.len(),
                });
            }
            let mut sum = 0.0;
            for (index, &value) in row.iter().enumerate() {
                if !(-PROB_TOL..=1.0 + PROB_TOL).contains(&value) {
                    return Err(Error::ProbabilityOutOfRange { index, value });
                }
                sum += value;
            }
            if (sum - 1.0).abs() > PROB_TOL {
                return Err(Error::RowNotStochastic { row: i, sum });
            }
        }
        validate_distribution(&do_dist)?;
        Ok(Self {
            sources,
            targets,
            rows,
            do_dist,
        })
    }

    /// Convenience constructor for the uniform intervention distribution.
    pub fn with_uniform_do(
        sources: Vec<StateLabel>,
        targets: Vec<StateLabel>,
        rows: Vec<Vec<f64>>,
    ) -> Result<Self> {
        if sources.is_empty() {
            return Err(Error::EmptyGrid("source states"));
        }
        let n = sources.len();
        let do_dist = vec![1.0 / n as f64; n];
        Self::new(sources, targets, rows, do_dist)
    }

    pub fn sources(&self) -> &[StateLabel] {
        &self.sources
    }

    pub fn targets(&self) -> &[StateLabel] {
        &self.targets
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.rows[i]
    }

    pub fn do_distribution(&self) -> &[f64] {
        &self.do_dist
    }

    pub fn source_index(&self, label: &StateLabel) -> Option<usize> {
        self.sources.iter().position(|s| s.name == label.name)
    }

    /// Unconstrained final distribution p(s_F), the do-weighted column sums.
    pub fn marginal_final(&self) -> Vec<f64> {
        let mut marginal = vec![0.0; self.targets.len()];
        for (row, &w) in self.rows.iter().zip(&self.do_dist) {
            for (m, &x) in marginal.iter_mut().zip(row) {
                *m += w * x;
            }
        }
        marginal
    }

    /// Effect information Ei(s_0) in bits: the divergence between the
    /// transition distribution of `s0` and the unconstrained final
    /// distribution.
    pub fn effect_information(&self, s0: &StateLabel) -> Result<f64> {
        let i = self
            .source_index(s0)
            .ok_or_else(|| Error::UnknownState(s0.name.clone()))?;
        kl_core(&self.rows[i], &self.marginal_final())
    }

    /// Mean row entropy weighted by the intervention distribution, normalized
    /// by log2 of the number of targets, subtracted from one. High values
    /// mean an intervention reliably fixes the outcome.
    pub fn determinism_coefficient(&self) -> Result<f64> {
        let log_n = self.log_target_count()?;
        let mean_row_entropy: f64 = self
            .rows
            .iter()
            .zip(&self.do_dist)
            .map(|(row, &w)| w * shannon_entropy(row))
            .sum();
        Ok((1.0 - mean_row_entropy / log_n).clamp(0.0, 1.0))
    }

    /// Entropy of the final marginal normalized by log2 of the number of
    /// targets, subtracted from one. High values mean distinct causes
    /// converge on the same effects.
    pub fn degeneracy_coefficient(&self) -> Result<f64> {
        let log_n = self.log_target_count()?;
        Ok((1.0 - shannon_entropy(&self.marginal_final()) / log_n).clamp(0.0, 1.0))
    }

    /// Effective information and its companions: per-state Ei, the
    /// do-weighted average EI, both coefficients, and the final marginal.
    ///
    /// EI satisfies EI = H(marginal) - <H(row)> and
    /// EI = log2(n_targets) * (determinism - degeneracy).
    /// A source with zero intervention weight may have infinite effect
    /// information; it contributes nothing to the average.
    pub fn effective_information(&self) -> Result<CausalReport> {
        let marginal = self.marginal_final();
        let mut ei_per_state = Vec::with_capacity(self.sources.len());
        let mut ei = 0.0;
        for (row, &w) in self.rows.iter().zip(&self.do_dist) {
            let e = match kl_core(row, &marginal) {
                Ok(v) => v,
                Err(Error::InfiniteDivergence(_)) if w == 0.0 => f64::INFINITY,
                Err(e) => return Err(e),
            };
            if w > 0.0 {
                ei += w * e;
            }
            ei_per_state.push(e);
        }
        Ok(CausalReport {
            ei_per_state,
            effective_information: ei,
            determinism: self.determinism_coefficient()?,
            degeneracy: self.degeneracy_coefficient()?,
            marginal_final: marginal,
        })
    }

    /// Merges micro states into macro states per `partition`.
    ///
    /// The macro intervention weight is the sum of its members' weights, a
    /// macro row is the do-weighted average of its member rows renormalized
    /// by that weight, and target columns are summed per macro target.
    pub fn coarse_grain(&self, partition: &Partition) -> Result<TransitionMatrix> {
        if partition.source_map.len() != self.sources.len() {
            return Err(Error::PartialPartition {
                axis: "source",
                expected: self.sources.len(),
                found: partition.source_map.len(),
            });
        }
        if partition.target_map.len() != self.targets.len() {
            return Err(Error::PartialPartition {
                axis: "target",
                expected: self.targets.len(),
                found: partition.target_map.len(),
            });
        }
        let (macro_sources, src_of) = index_macro(&partition.source_map);
        let (macro_targets, tgt_of) = index_macro(&partition.target_map);

        let mut macro_do = vec![0.0; macro_sources.len()];
        for (i, &m) in src_of.iter().enumerate() {
            macro_do[m] += self.do_dist[i];
        }
        let mut macro_rows = vec![vec![0.0; macro_targets.len()]; macro_sources.len()];
        for (i, row) in self.rows.iter().enumerate() {
            let w = self.do_dist[i];
            for (j, &x) in row.iter().enumerate() {
                macro_rows[src_of[i]][tgt_of[j]] += w * x;
            }
        }
        for (m, row) in macro_rows.iter_mut().enumerate() {
            let w = macro_do[m];
            if w <= 0.0 {
                return Err(Error::ZeroWeightMacroSource(macro_sources[m].name.clone()));
            }
            for x in row.iter_mut() {
                *x /= w;
            }
        }
        TransitionMatrix::new(macro_sources, macro_targets, macro_rows, macro_do)
    }

    fn log_target_count(&self) -> Result<f64> {
        let n = self.targets.len();
        if n < 2 {
            return Err(Error::DegenerateModel(n));
        }
        Ok((n as f64).log2())
    }
}

/// Causal metrics of one transition matrix, all in bits except the
/// dimensionless coefficients.
#[derive(Debug, Clone)]
pub struct CausalReport {
    /// Ei(s_0) per source state, ordered as the matrix sources.
    pub ei_per_state: Vec<f64>,
    /// EI, the do-weighted average of `ei_per_state`.
    pub effective_information: f64,
    pub determinism: f64,
    pub degeneracy: f64,
    /// Unconstrained final distribution p(s_F).
    pub marginal_final: Vec<f64>,
}

/// Micro-to-macro relabeling for both axes of a matrix, index-aligned with
/// the matrix's source and target lists. Micro states mapped to equal labels
/// are merged; macro axes keep first-appearance order.
#[derive(Debug, Clone)]
pub struct Partition {
    pub source_map: Vec<StateLabel>,
    pub target_map: Vec<StateLabel>,
}

impl Partition {
    pub fn new(source_map: Vec<StateLabel>, target_map: Vec<StateLabel>) -> Self {
        Self {
            source_map,
            target_map,
        }
    }

    /// The partition that merges nothing.
    pub fn identity(tpm: &TransitionMatrix) -> Self {
        Self {
            source_map: tpm.sources().to_vec(),
            target_map: tpm.targets().to_vec(),
        }
    }
}

fn index_macro(map: &[StateLabel]) -> (Vec<StateLabel>, Vec<usize>) {
    let mut macros: Vec<StateLabel> = Vec::new();
    let mut idx = Vec::with_capacity(map.len());
    for label in map {
        let k = match macros.iter().position(|m| m == label) {
            Some(k) => k,
            None => {
                macros.push(label.clone());
                macros.len() - 1
            }
        };
        idx.push(k);
    }
    (macros, idx)
}

fn check_distinct_names(labels: &[StateLabel]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for label in labels {
        if !seen.insert(label.name.as_str()) {
            return Err(Error::DuplicateState(label.name.clone()));
        }
    }
    Ok(())
}
