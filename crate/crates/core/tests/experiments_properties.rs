//! Grid properties of the experiment layer: the measurement pipeline against
//! the closed form, branch symmetry, phase dependence through phi + gamma
//! only, and the flatness of the fine and classically aggregated models.

use causal_mzi::experiments::{
    cavity_merge_partition, coarse_grained_model, default_phi_list, default_theta_grid,
    ei_closed_form, fine_grained_model, sweep_ei, Branch, ScenarioParams,
};

fn pipeline_ei(params: &ScenarioParams) -> f64 {
    coarse_grained_model(params)
        .unwrap()
        .effective_information()
        .unwrap()
        .effective_information
}

#[test]
fn pipeline_matches_the_closed_form_on_the_default_grid() {
    for branch in Branch::BOTH {
        for &theta in &default_theta_grid() {
            for &phi in &default_phi_list() {
                let params = ScenarioParams::new(theta, 0.0, phi, branch).unwrap();
                let diff = (pipeline_ei(&params) - ei_closed_form(&params)).abs();
                assert!(diff < 1e-9, "theta {theta}, phi {phi}, {branch}: {diff}");
            }
        }
    }
}

#[test]
fn branches_carry_equal_effective_information() {
    let thetas: Vec<f64> = (0..=12)
        .map(|i| std::f64::consts::FRAC_PI_2 * i as f64 / 12.0)
        .collect();
    for &theta in &thetas {
        for &phi in &default_phi_list() {
            let fringes = ScenarioParams::new(theta, 0.4, phi, Branch::Fringes).unwrap();
            let anti = ScenarioParams::new(theta, 0.4, phi, Branch::AntiFringes).unwrap();
            assert!((pipeline_ei(&fringes) - pipeline_ei(&anti)).abs() <= 1e-9);
        }
    }
}

#[test]
fn phases_enter_only_through_their_sum() {
    let thetas: Vec<f64> = (0..=6)
        .map(|i| std::f64::consts::FRAC_PI_2 * i as f64 / 6.0)
        .collect();
    for &theta in &thetas {
        for (gamma, phi) in [(0.0, 0.9), (0.5, 1.3), (-0.7, 0.2)] {
            for delta in [0.3, 1.1] {
                let base = ScenarioParams::new(theta, gamma, phi, Branch::Fringes).unwrap();
                let shifted =
                    ScenarioParams::new(theta, gamma + delta, phi - delta, Branch::Fringes)
                        .unwrap();
                assert!((pipeline_ei(&base) - pipeline_ei(&shifted)).abs() <= 1e-9);
            }
        }
    }
}

#[test]
fn fine_model_has_no_effective_information_at_any_phase() {
    for &phi in default_phi_list().iter().chain(&[1.234, 2.9, -0.8]) {
        let report = fine_grained_model(phi)
            .unwrap()
            .effective_information()
            .unwrap();
        assert!(report.effective_information <= 1e-12, "phi {phi}");
    }
}

#[test]
fn classical_aggregation_gains_nothing_while_conditioning_gains_a_bit() {
    for &phi in &default_phi_list() {
        let fine = fine_grained_model(phi).unwrap();
        let aggregate = fine
            .coarse_grain(&cavity_merge_partition(&fine).unwrap())
            .unwrap();
        let report = aggregate.effective_information().unwrap();
        assert!(report.effective_information <= 1e-12, "phi {phi}");
    }
    let erasure =
        ScenarioParams::new(std::f64::consts::FRAC_PI_4, 0.0, 0.0, Branch::Fringes).unwrap();
    assert!((pipeline_ei(&erasure) - 1.0).abs() <= 1e-12);
}

#[test]
fn sweep_points_come_back_theta_major() {
    let grid = [0.0, 0.5, 1.0];
    let phis = [0.0, 0.25];
    let points = sweep_ei(&grid, &phis, 0.0, Branch::Fringes).unwrap();
    assert_eq!(points.len(), 6);
    let mut k = 0;
    for &theta in &grid {
        for &phi in &phis {
            assert_eq!(points[k].theta, theta);
            assert_eq!(points[k].phi, phi);
            assert!(points[k].ei.is_some());
            k += 1;
        }
    }
}
