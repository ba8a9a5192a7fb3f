//! States, evolution, and projective measurement for an atom traversing a
//! Mach-Zehnder interferometer whose arms each hold a single-mode cavity.
//!
//! The atom enters along one of two paths with both cavities in vacuum. A
//! resonant pi-pulse interaction transfers the atomic excitation to whichever
//! cavity sits in the traversed arm, so after the second beam splitter the
//! joint system lives in the four-dimensional space spanned by
//! (atom exit path, which cavity holds the photon). The basis ordering used
//! everywhere is [(1, C1), (1, C2), (2, C1), (2, C2)].
//!
//! All amplitudes are double-precision complex numbers and every angle is in
//! radians. Operations are pure; nothing here holds mutable state.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for normalization, orthogonality, and outcome-probability checks.
pub const NORM_TOL: f64 = 1e-12;

/// Interferometer arm, which is also the detector (D1 or D2) the atom exits toward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Path {
    One,
    Two,
}

impl Path {
    pub const ALL: [Path; 2] = [Path::One, Path::Two];

    pub fn index(self) -> usize {
        match self {
            Path::One => 0,
            Path::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Path::One => 1,
            Path::Two => 2,
        }
    }
}

/// Photon configuration of the two cavities, restricted to at most one excitation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CavityConfig {
    /// Both cavities empty: the preparation stage.
    Vacuum,
    /// One photon in cavity 1.
    C1,
    /// One photon in cavity 2.
    C2,
}

/// A labeled basis state of the atom-plus-cavities system.
///
/// Preparation states carry `Vacuum`; post-evolution states carry `C1` or `C2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub path: Path,
    pub cavity: CavityConfig,
}

impl BasisLabel {
    pub const PREP_PATH_1: BasisLabel = BasisLabel {
        path: Path::One,
        cavity: CavityConfig::Vacuum,
    };
    pub const PREP_PATH_2: BasisLabel = BasisLabel {
        path: Path::Two,
        cavity: CavityConfig::Vacuum,
    };

    /// The ordered basis of the one-excitation space after the interferometer.
    pub const POST_EVOLUTION: [BasisLabel; 4] = [
        BasisLabel {
            path: Path::One,
            cavity: CavityConfig::C1,
        },
        BasisLabel {
            path: Path::One,
            cavity: CavityConfig::C2,
        },
        BasisLabel {
            path: Path::Two,
            cavity: CavityConfig::C1,
        },
        BasisLabel {
            path: Path::Two,
            cavity: CavityConfig::C2,
        },
    ];

    pub fn is_preparation(self) -> bool {
        self.cavity == CavityConfig::Vacuum
    }

    /// Index into [`BasisLabel::POST_EVOLUTION`], or `None` for vacuum labels.
    pub fn post_index(self) -> Option<usize> {
        let offset = match self.cavity {
            CavityConfig::Vacuum => return None,
            CavityConfig::C1 => 0,
            CavityConfig::C2 => 1,
        };
        Some(2 * self.path.index() + offset)
    }
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cavity = match self.cavity {
            CavityConfig::Vacuum => "vacuum",
            CavityConfig::C1 => "C1",
            CavityConfig::C2 => "C2",
        };
        write!(f, "(path {}, {})", self.path.number(), cavity)
    }
}

/// A normalized state of the post-evolution space, ordered per
/// [`BasisLabel::POST_EVOLUTION`].
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: [Complex64; 4],
}

impl StateVector {
    /// Builds a state and checks normalization within [`NORM_TOL`].
    pub fn new(amps: [Complex64; 4]) -> Result<Self> {
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self { amps })
    }

    pub fn amplitudes(&self) -> &[Complex64; 4] {
        &self.amps
    }

    /// Amplitude on a post-evolution label; `None` for vacuum labels.
    pub fn amplitude(&self, label: BasisLabel) -> Option<Complex64> {
        label.post_index().map(|i| self.amps[i])
    }

    /// Inner product, conjugating `self`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amps
            .iter()
            .zip(other.amps.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Probabilities of the atom firing detector D1 or D2: the squared
    /// amplitude collected over each exit path, tracing out the cavities.
    pub fn atomic_detection_probs(&self) -> (f64, f64) {
        let a = &self.amps;
        (
            a[0].norm_sqr() + a[1].norm_sqr(),
            a[2].norm_sqr() + a[3].norm_sqr(),
        )
    }
}

/// The end-to-end interferometer evolution for one relative phase phi:
/// a norm-preserving map from the two preparation states to the
/// four-dimensional post-evolution space.
#[derive(Debug, Clone)]
pub struct Interferometer {
    phi: f64,
    /// Images of the two preparations, indexed by entry path.
    columns: [[Complex64; 4]; 2],
}

impl Interferometer {
    /// Builds the evolution for relative arm phase `phi` (radians).
    pub fn new(phi: f64) -> Result<Self> {
        if !phi.is_finite() {
            return Err(Error::InvalidParameter {
                name: "phi",
                value: phi,
            });
        }
        let e = Complex64::from_polar(1.0, phi);
        let i = Complex64::i();
        let half = Complex64::new(0.5, 0.0);
        // Entry path 1: -(1/2)|1>(e^{i phi}|C1> + |C2>) + (i/2)|2>(e^{i phi}|C1> - |C2>)
        let col1 = [-half * e, -half, i * half * e, -i * half];
        // Entry path 2: (i/2)|1>(-e^{i phi}|C1> + |C2>) - (1/2)|2>(e^{i phi}|C1> + |C2>)
        let col2 = [-i * half * e, i * half, -half * e, -half];
        Ok(Self {
            phi,
            columns: [col1, col2],
        })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Image of the preparation that enters along `path`.
    pub fn column(&self, path: Path) -> &[Complex64; 4] {
        &self.columns[path.index()]
    }

    /// Applies the evolution to a preparation label.
    pub fn evolve(&self, prep: BasisLabel) -> Result<StateVector> {
        if !prep.is_preparation() {
            return Err(Error::NotPreparation(prep.to_string()));
        }
        StateVector::new(*self.column(prep.path))
    }
}

/// Measurement outcome of the cavity observable, eigenvalue +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const BOTH: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    pub fn sign(self) -> i8 {
        match self {
            Outcome::Plus => 1,
            Outcome::Minus => -1,
        }
    }
}

/// A vector on the one-excitation cavity subspace, basis [C1, C2].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityVector {
    pub c1: Complex64,
    pub c2: Complex64,
}

impl CavityVector {
    /// Inner product, conjugating `self`.
    pub fn inner(&self, other: &CavityVector) -> Complex64 {
        self.c1.conj() * other.c1 + self.c2.conj() * other.c2
    }
}

/// The two-outcome observable on the cavity subsystem, parametrized by a
/// mixing angle theta in [0, pi/2] and a relative phase gamma.
///
/// Its eigenvectors are
/// `|M+> = cos(theta)|C1> + e^{i gamma} sin(theta)|C2>` (eigenvalue +1) and
/// `|M-> = sin(theta)|C1> - e^{i gamma} cos(theta)|C2>` (eigenvalue -1).
/// theta = 0 or pi/2 reads out the path record (a which-alternative
/// measurement); theta = pi/4 erases it (a quantum-erasure measurement).
#[derive(Debug, Clone)]
pub struct CavityObservable {
    theta: f64,
    gamma: f64,
    m_plus: CavityVector,
    m_minus: CavityVector,
}

impl CavityObservable {
    pub fn new(theta: f64, gamma: f64) -> Result<Self> {
        check_theta(theta)?;
        if !gamma.is_finite() {
            return Err(Error::InvalidParameter {
                name: "gamma",
                value: gamma,
            });
        }
        let alpha = Complex64::new(theta.cos(), 0.0);
        let beta = Complex64::new(theta.sin(), 0.0);
        let phase = Complex64::from_polar(1.0, gamma);
        Ok(Self {
            theta,
            gamma,
            m_plus: CavityVector {
                c1: alpha,
                c2: phase * beta,
            },
            m_minus: CavityVector {
                c1: beta,
                c2: -phase * alpha,
            },
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn eigenvector(&self, outcome: Outcome) -> &CavityVector {
        match outcome {
            Outcome::Plus => &self.m_plus,
            Outcome::Minus => &self.m_minus,
        }
    }

    /// Projective measurement of the observable on the cavity factor of a
    /// four-dimensional state, leaving the atomic factor untouched.
    ///
    /// Returns the Born probability of `outcome` and the renormalized
    /// post-measurement state, i.e. the image of the projector
    /// (identity on paths) tensor |M><M|. The probabilities of the two
    /// outcomes always sum to one. Requesting an outcome whose probability
    /// is below [`NORM_TOL`] is an error, as it has no post-state.
    pub fn measure(&self, state: &StateVector, outcome: Outcome) -> Result<(f64, StateVector)> {
        let m = self.eigenvector(outcome);
        let a = state.amplitudes();
        // Overlap of each path block with |M>.
        let o1 = m.c1.conj() * a[0] + m.c2.conj() * a[1];
        let o2 = m.c1.conj() * a[2] + m.c2.conj() * a[3];
        let probability = o1.norm_sqr() + o2.norm_sqr();
        if probability < NORM_TOL {
            return Err(Error::ImpossibleOutcome {
                outcome: outcome.sign(),
                probability,
            });
        }
        let scale = Complex64::new(1.0 / probability.sqrt(), 0.0);
        let post = StateVector::new([
            o1 * m.c1 * scale,
            o1 * m.c2 * scale,
            o2 * m.c1 * scale,
            o2 * m.c2 * scale,
        ])?;
        Ok((probability, post))
    }
}

/// Which-way knowledge K = |cos(2 theta)| extractable from measuring the
/// cavity observable: 1 at theta = 0 or pi/2 (full path information) and 0 at
/// theta = pi/4 (none).
pub fn which_way_knowledge(theta: f64) -> Result<f64> {
    check_theta(theta)?;
    Ok((2.0 * theta).cos().abs())
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if !theta.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&theta) {
        return Err(Error::InvalidParameter {
            name: "theta",
            value: theta,
        });
    }
    Ok(())
}
