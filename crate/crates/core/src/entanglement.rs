//! Entanglement entropy of pure bipartite states.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::fock::{Mode, TwoModeFockState};
use crate::gaussian::GaussianState;
use crate::linalg::{entropy_nats, hermitian_eigenvalues};

/// Accepted deviation of `Σ|ψ|²` from 1.
pub const NORM_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyMethod {
    FockSchmidt,
    GaussianSymplectic,
}

/// Von Neumann entropy of a reduced state, in nats.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyValue {
    pub nats: f64,
    pub method: EntropyMethod,
}

impl EntropyValue {
    pub fn bits(&self) -> f64 {
        self.nats / core::f64::consts::LN_2
    }
}

fn check_norm(state: &TwoModeFockState) -> Result<()> {
    let norm = state.norm_sqr();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(Error::NotNormalized { norm });
    }
    Ok(())
}

/// Entropy of the reduced state of mode a, from the Schmidt coefficients
/// (squared singular values of the `N1 × N2` amplitude grid).
pub fn von_neumann_entropy(state: &TwoModeFockState) -> Result<EntropyValue> {
    check_norm(state)?;
    let svd = state.to_grid().svd(false, false);
    Ok(EntropyValue {
        nats: entropy_nats(svd.singular_values.iter().map(|s| s * s)),
        method: EntropyMethod::FockSchmidt,
    })
}

/// Entropy of the reduced state of `keep`, by diagonalizing the reduced
/// density matrix directly.
pub fn reduced_entropy(state: &TwoModeFockState, keep: Mode) -> Result<f64> {
    check_norm(state)?;
    Ok(entropy_nats(hermitian_eigenvalues(
        state.reduced_density_matrix(keep),
    )))
}

/// Entropy `g(ν)` of a single-mode Gaussian state with symplectic eigenvalue `ν ≥ 1`.
pub fn symplectic_entropy(nu: f64) -> f64 {
    if nu <= 1.0 {
        return 0.0;
    }
    let up = 0.5 * (nu + 1.0);
    let down = 0.5 * (nu - 1.0);
    up * up.ln() - down * down.ln()
}

/// Entanglement of a two-mode squeezed vacuum `S_ab(r)|0,0⟩`:
/// `cosh²r ln cosh²r − sinh²r ln sinh²r`.
pub fn two_mode_squeezed_entropy(r: f64) -> f64 {
    let (c2, s2) = (r.cosh().powi(2), r.sinh().powi(2));
    let tail = if s2 > 0.0 { s2 * s2.ln() } else { 0.0 };
    c2 * c2.ln() - tail
}

/// Entanglement entropy of a pure two-mode Gaussian state, `g(√det A)` with
/// `A` the mode-a block.
pub fn gaussian_entropy(state: &GaussianState) -> Result<EntropyValue> {
    let m = state.two_mode_matrix()?;
    let det = m.determinant();
    if (det - 1.0).abs() > 1e-8 {
        return Err(Error::NotPure { det });
    }
    let det_a = state.block(Mode::A).determinant();
    if det_a < 1.0 - 1e-9 {
        return Err(Error::Unphysical(
            "reduced state violates the uncertainty bound",
        ));
    }
    Ok(EntropyValue {
        nats: symplectic_entropy(det_a.max(1.0).sqrt()),
        method: EntropyMethod::GaussianSymplectic,
    })
}
