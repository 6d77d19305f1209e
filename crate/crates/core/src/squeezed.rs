//! Pure squeezed-vacuum inputs `S(ζ1) ⊗ S(ζ2) |0,0⟩` on a beam splitter.

use core::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::beam_splitter::BeamSplitter;
use crate::entanglement::{gaussian_entropy, EntropyValue};
use crate::error::{Error, Result};
use crate::fock::Mode;
use crate::gaussian::GaussianState;

const PHASE_GRID_TOL: f64 = 1e-12;

/// Squeezing `ζ_k = s_k e^{iφ_k}` of the two inputs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezeParams {
    pub s1: f64,
    pub s2: f64,
    pub varphi1: f64,
    pub varphi2: f64,
}

impl SqueezeParams {
    pub fn real(s1: f64, s2: f64) -> Self {
        Self {
            s1,
            s2,
            varphi1: 0.0,
            varphi2: 0.0,
        }
    }

    pub fn input(&self) -> Result<GaussianState> {
        GaussianState::tensor(
            &GaussianState::squeezed_vacuum(self.s1, self.varphi1)?,
            &GaussianState::squeezed_vacuum(self.s2, self.varphi2)?,
        )
    }

    pub fn output(&self, bs: &BeamSplitter) -> Result<GaussianState> {
        self.input()?.beam_split(bs)
    }
}

/// An equivalent configuration with real squeezing.
///
/// The original output equals `e^{iϑa n_a} e^{iϑb n_b}` applied to the
/// output of `params` through `bs`, with `(ϑa, ϑb) = local_rotations`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Canonical {
    pub params: SqueezeParams,
    pub bs: BeamSplitter,
    pub local_rotations: (f64, f64),
}

impl Canonical {
    /// Rebuilds the original output state from the canonical one.
    pub fn output(&self) -> Result<GaussianState> {
        self.params
            .output(&self.bs)?
            .rotated(Mode::A, self.local_rotations.0)?
            .rotated(Mode::B, self.local_rotations.1)
    }
}

/// Moves the squeezing phases into the splitter phase.
///
/// `S(s e^{iφ}) = R(φ/2) S(s) R†(φ/2)`, the trailing `R†` acts on vacuum, and
/// `B(φ) e^{iδ(n_a − n_b)} = e^{iδ(n_a − n_b)} B(φ − 2δ)` carries the relative
/// rotation through the splitter. Negative magnitudes are absorbed as a phase
/// of π.
pub fn canonicalize_phases(params: SqueezeParams, bs: BeamSplitter) -> Canonical {
    let unsigned = |s: f64, v: f64| if s < 0.0 { (-s, v + PI) } else { (s, v) };
    let (s1, v1) = unsigned(params.s1, params.varphi1);
    let (s2, v2) = unsigned(params.s2, params.varphi2);
    Canonical {
        params: SqueezeParams::real(s1, s2),
        bs: bs.with_phi(bs.phi() - 0.5 * (v1 - v2)),
        local_rotations: (0.5 * v1, 0.5 * v2),
    }
}

/// Two-mode squeezing `ζ_ab = (s1 e^{iφ} − s2 e^{−iφ})/2` left after a 50:50
/// splitter once the local squeezers are discarded.
///
/// Only defined for `φ` a multiple of π/2, where the decomposition holds.
pub fn effective_two_mode_squeezing(s1: f64, s2: f64, phi: f64) -> Result<Complex64> {
    let quarter = phi / FRAC_PI_2;
    if !quarter.is_finite() || (quarter - quarter.round()).abs() > PHASE_GRID_TOL {
        return Err(Error::Precondition("φ must be a multiple of π/2"));
    }
    let ell = quarter.round() as i64;
    let e = match ell.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    Ok((e * s1 - e.conj() * s2) * 0.5)
}

/// Output covariance for real squeezings `s1`, `s2`.
pub fn squeezed_output_state(s1: f64, s2: f64, bs: &BeamSplitter) -> Result<GaussianState> {
    SqueezeParams::real(s1, s2).output(bs)
}

/// Entanglement entropy of the output for real squeezings, in nats.
pub fn squeezed_output_entropy(s1: f64, s2: f64, bs: &BeamSplitter) -> Result<EntropyValue> {
    gaussian_entropy(&squeezed_output_state(s1, s2, bs)?)
}
