//! Randomized invariants of the quantum layer: isometry, orthogonality,
//! measurement completeness, global-phase insensitivity, agreement with an
//! explicit projector computation, and the detection closed form.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use causal_mzi::quantum::{
    BasisLabel, CavityObservable, Interferometer, Outcome, Path, StateVector,
};
use causal_mzi::Error;

const CASES: usize = 1000;
const TOL: f64 = 1e-12;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x1A2B3C4D)
}

fn random_state(rng: &mut ChaCha8Rng) -> StateVector {
    loop {
        let amps: [Complex64; 4] = std::array::from_fn(|_| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if norm_sqr > 1e-6 {
            let scale = norm_sqr.sqrt();
            return StateVector::new(amps.map(|a| a / scale)).unwrap();
        }
    }
}

fn random_observable(rng: &mut ChaCha8Rng) -> CavityObservable {
    let theta = rng.random_range(0.0..=std::f64::consts::FRAC_PI_2);
    let gamma = rng.random_range(-6.3..6.3);
    CavityObservable::new(theta, gamma).unwrap()
}

fn outcome_probability(obs: &CavityObservable, state: &StateVector, outcome: Outcome) -> f64 {
    match obs.measure(state, outcome) {
        Ok((p, _)) => p,
        Err(Error::ImpossibleOutcome { probability, .. }) => probability,
        Err(e) => panic!("unexpected measurement error: {e}"),
    }
}

#[test]
fn isometry_columns_stay_orthonormal_for_random_phases() {
    let mut rng = rng();
    for _ in 0..CASES {
        let phi = rng.random_range(-6.3..6.3);
        let iso = Interferometer::new(phi).unwrap();
        for (k, pk) in Path::ALL.into_iter().enumerate() {
            for (l, pl) in Path::ALL.into_iter().enumerate() {
                let dot: Complex64 = iso
                    .column(pk)
                    .iter()
                    .zip(iso.column(pl))
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let expect = if k == l { 1.0 } else { 0.0 };
                assert!(
                    (dot - expect).norm() <= TOL,
                    "phi {phi}: gram[{k}][{l}] = {dot}"
                );
            }
        }
    }
}

#[test]
fn evolved_preparations_stay_orthonormal() {
    let mut rng = rng();
    for _ in 0..CASES {
        let phi = rng.random_range(-6.3..6.3);
        let iso = Interferometer::new(phi).unwrap();
        let one = iso.evolve(BasisLabel::PREP_PATH_1).unwrap();
        let two = iso.evolve(BasisLabel::PREP_PATH_2).unwrap();
        assert!(one.inner(&two).norm() <= TOL);
        assert!((one.inner(&one).re - 1.0).abs() <= TOL);
        assert!((two.inner(&two).re - 1.0).abs() <= TOL);
    }
}

#[test]
fn outcome_probabilities_sum_to_one_on_random_states() {
    let mut rng = rng();
    for _ in 0..CASES {
        let state = random_state(&mut rng);
        let obs = random_observable(&mut rng);
        let total = outcome_probability(&obs, &state, Outcome::Plus)
            + outcome_probability(&obs, &state, Outcome::Minus);
        assert!((total - 1.0).abs() <= TOL, "total {total}");
    }
}

#[test]
fn probabilities_ignore_a_global_phase() {
    let mut rng = rng();
    for _ in 0..CASES {
        let state = random_state(&mut rng);
        let phase = Complex64::from_polar(1.0, rng.random_range(-6.3..6.3));
        let phased = StateVector::new(state.amplitudes().map(|a| a * phase)).unwrap();
        let obs = random_observable(&mut rng);
        for outcome in Outcome::BOTH {
            let p = outcome_probability(&obs, &state, outcome);
            let q = outcome_probability(&obs, &phased, outcome);
            assert!((p - q).abs() <= TOL);
        }
        let (d1, d2) = state.atomic_detection_probs();
        let (e1, e2) = phased.atomic_detection_probs();
        assert!((d1 - e1).abs() <= TOL);
        assert!((d2 - e2).abs() <= TOL);
    }
}

#[test]
fn measurement_agrees_with_an_explicit_projector() {
    let mut rng = rng();
    for _ in 0..CASES {
        let state = random_state(&mut rng);
        let obs = random_observable(&mut rng);
        for outcome in Outcome::BOTH {
            let m = obs.eigenvector(outcome);
            // P = identity on paths, tensor |M><M| on the cavities.
            let mm = [
                [m.c1 * m.c1.conj(), m.c1 * m.c2.conj()],
                [m.c2 * m.c1.conj(), m.c2 * m.c2.conj()],
            ];
            let mut projector = [[Complex64::new(0.0, 0.0); 4]; 4];
            for block in 0..2 {
                for r in 0..2 {
                    for c in 0..2 {
                        projector[2 * block + r][2 * block + c] = mm[r][c];
                    }
                }
            }
            let a = state.amplitudes();
            let mut projected = [Complex64::new(0.0, 0.0); 4];
            for r in 0..4 {
                for c in 0..4 {
                    projected[r] += projector[r][c] * a[c];
                }
            }
            let prob: f64 = projected.iter().map(|z| z.norm_sqr()).sum();
            match obs.measure(&state, outcome) {
                Ok((p, post)) => {
                    assert!((p - prob).abs() <= TOL);
                    let scale = prob.sqrt();
                    for (got, want) in post.amplitudes().iter().zip(projected) {
                        assert!((got - want / scale).norm() <= TOL);
                    }
                }
                Err(Error::ImpossibleOutcome { probability, .. }) => {
                    assert!(prob < 1e-12);
                    assert!((probability - prob).abs() <= TOL);
                }
                Err(e) => panic!("unexpected measurement error: {e}"),
            }
        }
    }
}

#[test]
fn detection_probabilities_follow_the_closed_form() {
    // For preparation path 1 on the +1 branch, p(D1) = (1 + V) / 2 with
    // V = sin(2 theta) cos(phi + gamma); the complementary combinations flip
    // the sign of V.
    let thetas: Vec<f64> = (0..=12)
        .map(|i| std::f64::consts::FRAC_PI_2 * i as f64 / 12.0)
        .collect();
    let phases: Vec<f64> = (0..9).map(|i| -3.0 + 0.75 * i as f64).collect();
    for &theta in &thetas {
        for &gamma in &phases {
            for &phi in &phases {
                let iso = Interferometer::new(phi).unwrap();
                let obs = CavityObservable::new(theta, gamma).unwrap();
                let v = (2.0 * theta).sin() * (phi + gamma).cos();
                for (prep, prep_sign) in [
                    (BasisLabel::PREP_PATH_1, 1.0),
                    (BasisLabel::PREP_PATH_2, -1.0),
                ] {
                    let state = iso.evolve(prep).unwrap();
                    for outcome in Outcome::BOTH {
                        let outcome_sign = f64::from(outcome.sign());
                        let (_, post) = obs.measure(&state, outcome).unwrap();
                        let (d1, _) = post.atomic_detection_probs();
                        let expect = (1.0 + prep_sign * outcome_sign * v) / 2.0;
                        assert!(
                            (d1 - expect).abs() <= 1e-9,
                            "theta {theta}, gamma {gamma}, phi {phi}: {d1} vs {expect}"
                        );
                    }
                }
            }
        }
    }
}
