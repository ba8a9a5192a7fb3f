//! Command-line front end for the interferometer causal models.
//!
//! Subcommands build the fine or coarse transition matrix, sweep the
//! effective information over theta, trace the which-way knowledge curve, or
//! compare descriptions at one parameter point, then emit plot-ready CSV or
//! JSON. All angles are radians. Exit codes: 0 success, 2 argument error,
//! 3 I/O or numeric failure.

mod emit;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use causal_mzi::experiments::{
    coarse_grained_model, coarse_grained_model_averaged, default_phi_list, emergence_comparison,
    fine_grained_model, sweep_ei, theta_grid, Branch, ScenarioParams, SweepPoint,
};
use causal_mzi::quantum::which_way_knowledge;
use causal_mzi::Error as CoreError;

use emit::{
    compare_csv, compare_json, report_csv, report_json, CompareRow, ParamValue, Params, ReportRow,
};

#[derive(Parser)]
#[command(
    name = "causal-mzi",
    version,
    about = "Causal-emergence metrics of a Mach-Zehnder interferometer with which-path cavities",
    long_about = "Builds classical transition matrices from interventions on an atomic \
Mach-Zehnder interferometer with two which-path cavities, and reports effect and effective \
information, determinism, degeneracy, and which-way knowledge.\n\n\
All angles are radians; there is no degree mode. Exit codes: 0 success, 2 argument error, \
3 I/O or numeric failure."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Fringes,
    AntiFringes,
}

impl BranchArg {
    fn core(self) -> Branch {
        match self {
            BranchArg::Fringes => Branch::Fringes,
            BranchArg::AntiFringes => Branch::AntiFringes,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Fine-grained model: which-alternative cavity readout, four final states
    ///
    /// The cavity observable is fixed at theta = 0, so the reported k_sigma
    /// is 1 and gamma does not apply.
    Fine {
        /// Interferometer arm phase in radians
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
    },
    /// Coarse-grained model at one parameter point, conditioned on a branch
    Coarse {
        /// Cavity measurement mixing angle in radians, within [0, pi/2]
        #[arg(long)]
        theta: f64,
        /// Cavity measurement phase in radians
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        /// Interferometer arm phase in radians
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Measurement branch to condition on
        #[arg(long, value_enum, default_value_t = BranchArg::Fringes)]
        branch: BranchArg,
        /// Mix both branches by their probabilities instead of conditioning
        #[arg(long)]
        averaged_branches: bool,
    },
    /// Effective information swept over theta for several phi values
    Sweep {
        /// Number of evenly spaced theta points from 0 to theta-max
        #[arg(long, default_value_t = 181)]
        theta_steps: usize,
        /// Largest theta in radians, within [0, pi/2]
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        theta_max: f64,
        /// Comma-separated phi values in radians; defaults to multiples of
        /// pi/8 from 0 to pi/2
        #[arg(long)]
        phi_list: Option<String>,
        /// Cavity measurement phase in radians
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        /// Measurement branch to condition on
        #[arg(long, value_enum, default_value_t = BranchArg::Fringes)]
        branch: BranchArg,
        /// Mix both branches by their probabilities instead of conditioning
        #[arg(long)]
        averaged_branches: bool,
    },
    /// Which-way knowledge K = |cos 2 theta| over a theta grid
    Kcurve {
        /// Number of evenly spaced theta points from 0 to theta-max
        #[arg(long, default_value_t = 181)]
        theta_steps: usize,
        /// Largest theta in radians, within [0, pi/2]
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_2)]
        theta_max: f64,
    },
    /// Fine, coarse, and classical-aggregate effective information side by side
    Compare {
        /// Cavity measurement mixing angle in radians, within [0, pi/2]
        #[arg(long)]
        theta: f64,
        /// Cavity measurement phase in radians
        #[arg(long, default_value_t = 0.0)]
        gamma: f64,
        /// Interferometer arm phase in radians
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Measurement branch to condition on
        #[arg(long, value_enum, default_value_t = BranchArg::Fringes)]
        branch: BranchArg,
    },
}

#[derive(Debug)]
enum AppError {
    Usage(String),
    Runtime(String),
}

/// Errors caused by argument-derived values are usage errors; everything
/// downstream of validated inputs is a runtime failure.
fn classify(e: CoreError) -> AppError {
    match e {
        CoreError::InvalidParameter { .. }
        | CoreError::EmptyGrid(_)
        | CoreError::UnknownBranch(_) => AppError::Usage(e.to_string()),
        other => AppError::Runtime(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let text = match cli.command {
        Command::Compare {
            theta,
            gamma,
            phi,
            branch,
        } => {
            let params = ScenarioParams::new(theta, gamma, phi, branch.core()).map_err(classify)?;
            let cmp = emergence_comparison(&params).map_err(classify)?;
            let row = CompareRow {
                theta,
                phi,
                gamma,
                branch: branch.core().label(),
                cmp,
            };
            let run_params: Params = vec![
                ("command", ParamValue::Text("compare")),
                ("theta", ParamValue::Float(theta)),
                ("gamma", ParamValue::Float(gamma)),
                ("phi", ParamValue::Float(phi)),
                ("branch", ParamValue::Text(branch.core().label())),
            ];
            match cli.format {
                Format::Csv => compare_csv(&row),
                Format::Json => compare_json(&row, &run_params),
            }
        }
        other => {
            let (rows, run_params) = build_rows(other)?;
            match cli.format {
                Format::Csv => report_csv(&rows),
                Format::Json => report_json(&rows, &run_params),
            }
        }
    };
    write_output(&text, cli.out.as_deref())
}

fn build_rows(command: Command) -> Result<(Vec<ReportRow>, Params), AppError> {
    match command {
        Command::Fine { phi } => {
            let tpm = fine_grained_model(phi).map_err(classify)?;
            let report = tpm.effective_information().map_err(classify)?;
            let rows = vec![ReportRow {
                theta: Some(0.0),
                phi: Some(phi),
                gamma: None,
                branch: None,
                ei: Some(report.effective_information),
                determinism: Some(report.determinism),
                degeneracy: Some(report.degeneracy),
                k_sigma: Some(which_way_knowledge(0.0).map_err(classify)?),
            }];
            let params: Params = vec![
                ("command", ParamValue::Text("fine")),
                ("phi", ParamValue::Float(phi)),
            ];
            Ok((rows, params))
        }
        Command::Coarse {
            theta,
            gamma,
            phi,
            branch,
            averaged_branches,
        } => {
            let core_branch = branch.core();
            let scenario = ScenarioParams::new(theta, gamma, phi, core_branch).map_err(classify)?;
            let tpm = if averaged_branches {
                coarse_grained_model_averaged(theta, gamma, phi)
            } else {
                coarse_grained_model(&scenario)
            }
            .map_err(classify)?;
            let report = tpm.effective_information().map_err(classify)?;
            let branch_label = if averaged_branches {
                "averaged"
            } else {
                core_branch.label()
            };
            let rows = vec![ReportRow {
                theta: Some(theta),
                phi: Some(phi),
                gamma: Some(gamma),
                branch: Some(branch_label),
                ei: Some(report.effective_information),
                determinism: Some(report.determinism),
                degeneracy: Some(report.degeneracy),
                k_sigma: Some(which_way_knowledge(theta).map_err(classify)?),
            }];
            let params: Params = vec![
                ("command", ParamValue::Text("coarse")),
                ("theta", ParamValue::Float(theta)),
                ("gamma", ParamValue::Float(gamma)),
                ("phi", ParamValue::Float(phi)),
                ("branch", ParamValue::Text(branch_label)),
                ("averaged_branches", ParamValue::Bool(averaged_branches)),
            ];
            Ok((rows, params))
        }
        Command::Sweep {
            theta_steps,
            theta_max,
            phi_list,
            gamma,
            branch,
            averaged_branches,
        } => {
            let grid = theta_grid(theta_max, theta_steps).map_err(classify)?;
            let phis = match phi_list {
                Some(text) => parse_phi_list(&text)?,
                None => default_phi_list(),
            };
            let core_branch = branch.core();
            let rows = if averaged_branches {
                let mut rows = Vec::with_capacity(grid.len() * phis.len());
                for &theta in &grid {
                    let k_sigma = which_way_knowledge(theta).map_err(classify)?;
                    for &phi in &phis {
                        let tpm =
                            coarse_grained_model_averaged(theta, gamma, phi).map_err(classify)?;
                        let report = tpm.effective_information().map_err(classify)?;
                        rows.push(ReportRow {
                            theta: Some(theta),
                            phi: Some(phi),
                            gamma: Some(gamma),
                            branch: Some("averaged"),
                            ei: Some(report.effective_information),
                            determinism: Some(report.determinism),
                            degeneracy: Some(report.degeneracy),
                            k_sigma: Some(k_sigma),
                        });
                    }
                }
                rows
            } else {
                let points = sweep_ei(&grid, &phis, gamma, core_branch).map_err(classify)?;
                points.iter().map(sweep_row).collect()
            };
            let branch_label = if averaged_branches {
                "averaged"
            } else {
                core_branch.label()
            };
            let params: Params = vec![
                ("command", ParamValue::Text("sweep")),
                ("theta_steps", ParamValue::Int(theta_steps as u64)),
                ("theta_max", ParamValue::Float(theta_max)),
                ("phi_list", ParamValue::Floats(phis)),
                ("gamma", ParamValue::Float(gamma)),
                ("branch", ParamValue::Text(branch_label)),
                ("averaged_branches", ParamValue::Bool(averaged_branches)),
            ];
            Ok((rows, params))
        }
        Command::Kcurve {
            theta_steps,
            theta_max,
        } => {
            let grid = theta_grid(theta_max, theta_steps).map_err(classify)?;
            let rows = grid
                .iter()
                .map(|&theta| {
                    Ok(ReportRow {
                        theta: Some(theta),
                        phi: None,
                        gamma: None,
                        branch: None,
                        ei: None,
                        determinism: None,
                        degeneracy: None,
                        k_sigma: Some(which_way_knowledge(theta).map_err(classify)?),
                    })
                })
                .collect::<Result<Vec<_>, AppError>>()?;
            let params: Params = vec![
                ("command", ParamValue::Text("kcurve")),
                ("theta_steps", ParamValue::Int(theta_steps as u64)),
                ("theta_max", ParamValue::Float(theta_max)),
            ];
            Ok((rows, params))
        }
        Command::Compare { .. } => unreachable!("compare is handled in run"),
    }
}

fn sweep_row(point: &SweepPoint) -> ReportRow {
    ReportRow {
        theta: Some(point.theta),
        phi: Some(point.phi),
        gamma: Some(point.gamma),
        branch: Some(point.branch.label()),
        ei: point.ei,
        determinism: point.determinism,
        degeneracy: point.degeneracy,
        k_sigma: Some(point.k_sigma),
    }
}

fn parse_phi_list(text: &str) -> Result<Vec<f64>, AppError> {
    let mut phis = Vec::new();
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let value: f64 = trimmed
            .parse()
            .map_err(|_| AppError::Usage(format!("malformed phi value: {trimmed:?}")))?;
        if !value.is_finite() {
            return Err(AppError::Usage(format!("phi must be finite, got {value}")));
        }
        phis.push(value);
    }
    if phis.is_empty() {
        return Err(AppError::Usage("phi list is empty".to_string()));
    }
    Ok(phis)
}

fn write_output(text: &str, out: Option<&Path>) -> Result<(), AppError> {
    use std::io::Write;
    let result = match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    result.map_err(|e| AppError::Runtime(e.to_string()))
}
