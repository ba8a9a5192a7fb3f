//! Randomized properties of the causal layer: divergence nonnegativity, the
//! two effective-information identities, bounds, permutation equivariance,
//! and stochasticity preservation under coarse-graining.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use causal_mzi::causal::{kl_divergence, shannon_entropy, Partition, StateLabel, TransitionMatrix};

const CASES: usize = 1000;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5E5E5E5E)
}

fn labels(prefix: &str, n: usize) -> Vec<StateLabel> {
    (0..n)
        .map(|i| StateLabel::new(format!("{prefix}{i}")))
        .collect()
}

fn random_row(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let mut row: Vec<f64> = (0..n)
            .map(|_| {
                if rng.random_bool(0.2) {
                    0.0
                } else {
                    rng.random_range(0.0..1.0)
                }
            })
            .collect();
        let sum: f64 = row.iter().sum();
        if sum > 1e-6 {
            for x in &mut row {
                *x /= sum;
            }
            return row;
        }
    }
}

fn random_tpm(rng: &mut ChaCha8Rng) -> TransitionMatrix {
    let ns = rng.random_range(2..=6);
    let nt = rng.random_range(2..=6);
    let rows = (0..ns).map(|_| random_row(rng, nt)).collect();
    TransitionMatrix::with_uniform_do(labels("s", ns), labels("t", nt), rows).unwrap()
}

fn random_distribution(rng: &mut ChaCha8Rng, n: usize, full_support: bool) -> Vec<f64> {
    let mut p: Vec<f64> = (0..n)
        .map(|_| {
            if full_support {
                rng.random_range(0.05..1.0)
            } else if rng.random_bool(0.2) {
                0.0
            } else {
                rng.random_range(0.0..1.0)
            }
        })
        .collect();
    let sum: f64 = p.iter().sum();
    if sum <= 1e-6 {
        p[0] = 1.0;
        return p;
    }
    for x in &mut p {
        *x /= sum;
    }
    p
}

#[test]
fn effective_information_identities_hold_on_random_matrices() {
    let mut rng = rng();
    for _ in 0..CASES {
        let tpm = random_tpm(&mut rng);
        let report = tpm.effective_information().unwrap();
        // Every per-state divergence is nonnegative and finite under the
        // uniform intervention distribution.
        for (s, &e) in tpm.sources().iter().zip(&report.ei_per_state) {
            assert!(e >= 0.0);
            assert!(e.is_finite());
            let direct = tpm.effect_information(s).unwrap();
            assert!((e - direct).abs() <= 1e-12);
        }
        // EI is the do-weighted mean of the per-state values.
        let weighted: f64 = report
            .ei_per_state
            .iter()
            .zip(tpm.do_distribution())
            .map(|(e, w)| e * w)
            .sum();
        assert!((report.effective_information - weighted).abs() <= 1e-12);
        // EI equals the entropy gap between the marginal and the mean row.
        let mean_row_entropy: f64 = tpm
            .rows()
            .iter()
            .zip(tpm.do_distribution())
            .map(|(row, &w)| w * shannon_entropy(row))
            .sum();
        let gap = shannon_entropy(&tpm.marginal_final()) - mean_row_entropy;
        assert!((report.effective_information - gap).abs() <= 1e-9);
        // EI equals log2(n_targets) times the coefficient difference.
        let n = tpm.targets().len() as f64;
        let via = n.log2() * (report.determinism - report.degeneracy);
        assert!((report.effective_information - via).abs() <= 1e-9);
        // Bounds for the uniform intervention distribution.
        let cap = (tpm.sources().len().min(tpm.targets().len()) as f64).log2();
        assert!(report.effective_information <= cap + 1e-9);
        assert!((0.0..=1.0).contains(&report.determinism));
        assert!((0.0..=1.0).contains(&report.degeneracy));
    }
}

#[test]
fn divergence_is_nonnegative_and_zero_on_itself() {
    let mut rng = rng();
    for _ in 0..CASES {
        let n = rng.random_range(2..=8);
        let p = random_distribution(&mut rng, n, false);
        let q = random_distribution(&mut rng, n, true);
        assert!(kl_divergence(&p, &q).unwrap() >= 0.0);
        assert!(kl_divergence(&p, &p).unwrap().abs() <= 1e-12);
    }
}

#[test]
fn metrics_are_invariant_under_state_relabeling() {
    let mut rng = rng();
    for _ in 0..CASES {
        let tpm = random_tpm(&mut rng);
        let ns = tpm.sources().len();
        let nt = tpm.targets().len();
        let src_perm = random_permutation(&mut rng, ns);
        let tgt_perm = random_permutation(&mut rng, nt);
        let sources: Vec<StateLabel> = src_perm.iter().map(|&i| tpm.sources()[i].clone()).collect();
        let targets: Vec<StateLabel> = tgt_perm.iter().map(|&j| tpm.targets()[j].clone()).collect();
        let rows: Vec<Vec<f64>> = src_perm
            .iter()
            .map(|&i| tgt_perm.iter().map(|&j| tpm.row(i)[j]).collect())
            .collect();
        let do_dist: Vec<f64> = src_perm.iter().map(|&i| tpm.do_distribution()[i]).collect();
        let permuted = TransitionMatrix::new(sources, targets, rows, do_dist).unwrap();

        let a = tpm.effective_information().unwrap();
        let b = permuted.effective_information().unwrap();
        assert!((a.effective_information - b.effective_information).abs() <= 1e-12);
        assert!((a.determinism - b.determinism).abs() <= 1e-12);
        assert!((a.degeneracy - b.degeneracy).abs() <= 1e-12);
        for (k, &i) in src_perm.iter().enumerate() {
            assert!((a.ei_per_state[i] - b.ei_per_state[k]).abs() <= 1e-12);
        }
    }
}

#[test]
fn coarse_graining_preserves_row_stochasticity() {
    let mut rng = rng();
    for _ in 0..CASES {
        let tpm = random_tpm(&mut rng);
        let partition = Partition::new(
            random_macro_map(&mut rng, tpm.sources().len()),
            random_macro_map(&mut rng, tpm.targets().len()),
        );
        let macro_tpm = tpm.coarse_grain(&partition).unwrap();
        for row in macro_tpm.rows() {
            let sum: f64 = row.iter().sum();
            assert!((sum - 1.0).abs() <= 1e-12);
        }
        let do_sum: f64 = macro_tpm.do_distribution().iter().sum();
        assert!((do_sum - 1.0).abs() <= 1e-12);
    }
}

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

fn random_macro_map(rng: &mut ChaCha8Rng, n: usize) -> Vec<StateLabel> {
    let groups = rng.random_range(1..=n);
    (0..n)
        .map(|_| StateLabel::new(format!("m{}", rng.random_range(0..groups))))
        .collect()
}
