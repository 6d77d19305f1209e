//! Brute-force reference computations in a truncated Fock space, and the
//! partial-transpose test for Gaussian states.
//!
//! Two-mode operators live on the basis `N1 + N2 ≤ cutoff` indexed by
//! [`basis_index`]; the beam splitter conserves `N1 + N2`, so this space is
//! closed under it and truncation only happens when inputs are prepared.

use alloc::vec::Vec;

use nalgebra::{DMatrix, Matrix4};
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::beam_splitter::BeamSplitter;
use crate::error::{Error, Result};
use crate::fock::{
    apply_blocks, basis_index, basis_len, bs_unitary_blocks, bs_unitary_matrix, Mode,
    TwoModeFockState,
};
use crate::gaussian::{GaussianState, PHYSICALITY_TOL};
use crate::linalg::{entropy_nats, expm, hermitian_eigenvalues, ln_factorial};
use crate::separability::Separability;

/// Smallest kept probability before a truncated input is rejected.
pub const TRUNCATION_GUARD: f64 = 1e-4;
/// Slack on the partial-transpose eigenvalue bound.
pub const PPT_TOL: f64 = 1e-10;

/// A single-mode input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InputSpec {
    Fock(usize),
    Coherent(Complex64),
    Thermal(f64),
    /// `S(s e^{iφ})|0⟩`.
    SqueezedVacuum {
        s: f64,
        varphi: f64,
    },
    SqueezedThermal {
        nbar: f64,
        s: f64,
    },
}

fn complex(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl InputSpec {
    pub fn is_pure(&self) -> bool {
        match *self {
            Self::Fock(_) | Self::Coherent(_) | Self::SqueezedVacuum { .. } => true,
            Self::Thermal(nbar) | Self::SqueezedThermal { nbar, .. } => nbar == 0.0,
        }
    }

    /// First `dim` amplitudes of a pure input, in closed form (not renormalized).
    pub fn ket(&self, dim: usize) -> Option<Vec<Complex64>> {
        let mut out = alloc::vec![Complex64::new(0.0, 0.0); dim];
        match *self {
            Self::Fock(n) => {
                if n < dim {
                    out[n] = complex(1.0);
                }
            }
            Self::Coherent(alpha) => {
                let lead = (-0.5 * alpha.norm_sqr()).exp();
                let mut term = complex(lead);
                for (n, slot) in out.iter_mut().enumerate() {
                    if n > 0 {
                        term *= alpha / (n as f64).sqrt();
                    }
                    *slot = term;
                }
            }
            Self::SqueezedVacuum { s, varphi } => squeezed_vacuum_ket(s, varphi, &mut out),
            Self::Thermal(nbar) | Self::SqueezedThermal { nbar, .. } if nbar == 0.0 => {
                let s = match *self {
                    Self::SqueezedThermal { s, .. } => s,
                    _ => 0.0,
                };
                squeezed_vacuum_ket(s, 0.0, &mut out);
            }
            _ => return None,
        }
        Some(out)
    }

    /// Single-mode density matrix on `n < dim` (not renormalized).
    ///
    /// Squeezed thermal states are prepared by exponentiating the squeezing
    /// generator in a larger space and cutting back to `dim`.
    pub fn density(&self, dim: usize) -> Result<DMatrix<Complex64>> {
        if let Some(ket) = self.ket(dim) {
            let v = DMatrix::from_column_slice(dim, 1, &ket);
            return Ok(&v * v.adjoint());
        }
        match *self {
            Self::Thermal(nbar) => {
                check_nbar(nbar)?;
                Ok(DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                    dim,
                    (0..dim).map(|n| complex(thermal_population(nbar, n))),
                )))
            }
            Self::SqueezedThermal { nbar, s } => {
                check_nbar(nbar)?;
                let big = 2 * dim + 60;
                let rho_th = DMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
                    big,
                    (0..big).map(|n| complex(thermal_population(nbar, n))),
                ));
                // S(s) = exp[(s/2)(a² − a†²)]
                let mut g = DMatrix::zeros(big, big);
                for n in 2..big {
                    let w = 0.5 * s * ((n * (n - 1)) as f64).sqrt();
                    g[(n - 2, n)] = complex(w);
                    g[(n, n - 2)] = complex(-w);
                }
                let u = expm(&g);
                let rho = &u * rho_th * u.adjoint();
                Ok(rho.view((0, 0), (dim, dim)).into_owned())
            }
            _ => unreachable!("pure inputs are handled by ket"),
        }
    }
}

fn check_nbar(nbar: f64) -> Result<()> {
    if nbar >= 0.0 && nbar.is_finite() {
        Ok(())
    } else {
        Err(Error::Precondition("n̄ must be finite and non-negative"))
    }
}

/// `n̄^n / (1 + n̄)^{n+1}`.
pub fn thermal_population(nbar: f64, n: usize) -> f64 {
    if nbar == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    (n as f64 * nbar.ln() - (n as f64 + 1.0) * (1.0 + nbar).ln()).exp()
}

/// `c_{2m} = (−e^{iφ} tanh s)^m √((2m)!) / (2^m m! √cosh s)`.
fn squeezed_vacuum_ket(s: f64, varphi: f64, out: &mut [Complex64]) {
    let lead = 1.0 / s.cosh().sqrt();
    let ratio = Complex64::from_polar(-s.tanh(), varphi);
    for m in 0..out.len().div_ceil(2) {
        let n = 2 * m;
        if n >= out.len() {
            break;
        }
        let mag =
            (0.5 * ln_factorial(n) - m as f64 * core::f64::consts::LN_2 - ln_factorial(m)).exp();
        out[n] = ratio.powu(m as u32) * (lead * mag);
    }
}

fn guard(retained: f64) -> Result<()> {
    if retained < 1.0 - TRUNCATION_GUARD || !retained.is_finite() {
        Err(Error::TruncationGuard { retained })
    } else {
        Ok(())
    }
}

/// Normalized product ket of two pure inputs on `N1 + N2 ≤ cutoff`.
pub fn build_pure(a: &InputSpec, b: &InputSpec, cutoff: usize) -> Result<TwoModeFockState> {
    let (ka, kb) = match (a.ket(cutoff + 1), b.ket(cutoff + 1)) {
        (Some(ka), Some(kb)) => (ka, kb),
        _ => return Err(Error::Precondition("pure inputs required")),
    };
    let mut state = TwoModeFockState::product(&ka, &kb, cutoff);
    guard(state.normalize())?;
    Ok(state)
}

/// Beam splitter applied through the exponentiated generator.
pub fn apply_bs_pure(state: &TwoModeFockState, bs: &BeamSplitter) -> TwoModeFockState {
    apply_blocks(&bs_unitary_blocks(state.cutoff(), bs), state)
}

/// A two-mode density matrix on `N1 + N2 ≤ cutoff`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedDensityMatrix {
    cutoff: usize,
    rho: DMatrix<Complex64>,
    retained: f64,
}

impl TruncatedDensityMatrix {
    /// Product input `ρ_a ⊗ ρ_b`, truncated and renormalized.
    pub fn build_state(a: &InputSpec, b: &InputSpec, cutoff: usize) -> Result<Self> {
        let d = cutoff + 1;
        let (ra, rb) = (a.density(d)?, b.density(d)?);
        let dim = basis_len(cutoff);
        let mut rho = DMatrix::zeros(dim, dim);
        for (i, (n1, n2)) in pairs(cutoff).enumerate() {
            for (j, (m1, m2)) in pairs(cutoff).enumerate() {
                rho[(i, j)] = ra[(n1, m1)] * rb[(n2, m2)];
            }
        }
        let retained = rho.trace().re;
        guard(retained)?;
        rho /= complex(retained);
        Ok(Self {
            cutoff,
            rho,
            retained,
        })
    }

    pub fn from_pure(state: &TwoModeFockState) -> Self {
        let v = DMatrix::from_column_slice(state.amplitudes().len(), 1, state.amplitudes());
        Self {
            cutoff: state.cutoff(),
            rho: &v * v.adjoint(),
            retained: state.norm_sqr(),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn rho(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    /// Probability kept by the truncation before renormalizing.
    pub fn retained(&self) -> f64 {
        self.retained
    }

    pub fn trace(&self) -> f64 {
        self.rho.trace().re
    }

    pub fn population(&self, n1: usize, n2: usize) -> f64 {
        if n1 + n2 > self.cutoff {
            0.0
        } else {
            let i = basis_index(n1, n2);
            self.rho[(i, i)].re
        }
    }

    /// `U ρ U†` with `U` the exponentiated beam-splitter generator.
    pub fn apply_bs(&self, bs: &BeamSplitter) -> Self {
        let u = bs_unitary_matrix(self.cutoff, bs);
        Self {
            cutoff: self.cutoff,
            rho: &u * &self.rho * u.adjoint(),
            retained: self.retained,
        }
    }

    /// Reduced density matrix of `keep` on `n ≤ cutoff`.
    pub fn reduced(&self, keep: Mode) -> DMatrix<Complex64> {
        let d = self.cutoff + 1;
        let mut out = DMatrix::zeros(d, d);
        for (i, (n1, n2)) in pairs(self.cutoff).enumerate() {
            for (j, (m1, m2)) in pairs(self.cutoff).enumerate() {
                match keep {
                    Mode::A if n2 == m2 => out[(n1, m1)] += self.rho[(i, j)],
                    Mode::B if n1 == m1 => out[(n2, m2)] += self.rho[(i, j)],
                    _ => {}
                }
            }
        }
        out
    }

    /// Von Neumann entropy of one reduced state, in nats.
    pub fn reduced_entropy(&self, keep: Mode) -> f64 {
        entropy_nats(hermitian_eigenvalues(self.reduced(keep)))
    }

    /// Partial transpose on mode b, on the square grid `N1, N2 ≤ cutoff`
    /// with index `N1 (cutoff+1) + N2`.
    pub fn partial_transpose(&self) -> DMatrix<Complex64> {
        let d = self.cutoff + 1;
        let mut out = DMatrix::zeros(d * d, d * d);
        for (i, (n1, n2)) in pairs(self.cutoff).enumerate() {
            for (j, (m1, m2)) in pairs(self.cutoff).enumerate() {
                out[(n1 * d + m2, m1 * d + n2)] = self.rho[(i, j)];
            }
        }
        out
    }

    /// Sum of the magnitudes of the negative eigenvalues of the partial transpose.
    pub fn negativity(&self) -> f64 {
        hermitian_eigenvalues(self.partial_transpose())
            .into_iter()
            .filter(|&x| x < 0.0)
            .map(|x| -x)
            .sum()
    }
}

fn pairs(cutoff: usize) -> impl Iterator<Item = (usize, usize)> + Clone {
    (0..=cutoff).flat_map(|total| (0..=total).map(move |n1| (n1, total - n1)))
}

/// Symplectic eigenvalues of a two-mode matrix as `√eig(−(M^{1/2} Ω M^{1/2})²)`,
/// ascending.
pub fn numeric_symplectic_eigenvalues(m: &Matrix4<f64>) -> Result<[f64; 2]> {
    let eig = m.symmetric_eigen();
    if eig.eigenvalues.min() <= 0.0 {
        return Err(Error::Unphysical(
            "covariance matrix is not positive definite",
        ));
    }
    let root = eig.eigenvectors
        * Matrix4::from_diagonal(&eig.eigenvalues.map(f64::sqrt))
        * eig.eigenvectors.transpose();
    let mut omega = Matrix4::zeros();
    for k in [0, 2] {
        omega[(k, k + 1)] = 1.0;
        omega[(k + 1, k)] = -1.0;
    }
    let a = root * omega * root;
    let k = a.transpose() * a;
    let mut vals: Vec<f64> = k
        .symmetric_eigenvalues()
        .iter()
        .map(|x| x.max(0.0).sqrt())
        .collect();
    vals.sort_by(|x, y| x.total_cmp(y));
    Ok([0.5 * (vals[0] + vals[1]), 0.5 * (vals[2] + vals[3])])
}

/// Result of the partial-transpose test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptVerdict {
    pub min_symplectic: f64,
    pub decision: Separability,
}

/// Simon's criterion: flip the sign of mode b's momentum and require the
/// smallest symplectic eigenvalue to stay at or above 1.
pub fn ppt_separability(state: &GaussianState) -> Result<PptVerdict> {
    let m = state.two_mode_matrix()?;
    if numeric_symplectic_eigenvalues(&m)?[0] < 1.0 - PHYSICALITY_TOL * m.amax().max(1.0) {
        return Err(Error::Unphysical("uncertainty bound violated"));
    }
    let flip = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, 1.0, 1.0, -1.0));
    let min_symplectic = numeric_symplectic_eigenvalues(&(flip * m * flip))?[0];
    let decision = if min_symplectic >= 1.0 - PPT_TOL {
        Separability::Separable
    } else {
        Separability::Entangled
    };
    Ok(PptVerdict {
        min_symplectic,
        decision,
    })
}

fn lowered(state: &TwoModeFockState, mode: Mode) -> Vec<Complex64> {
    let mut out = alloc::vec![Complex64::new(0.0, 0.0); state.amplitudes().len()];
    for (n1, n2, amp) in state.iter() {
        match mode {
            Mode::A if n1 > 0 => out[basis_index(n1 - 1, n2)] += amp * (n1 as f64).sqrt(),
            Mode::B if n2 > 0 => out[basis_index(n1, n2 - 1)] += amp * (n2 as f64).sqrt(),
            _ => {}
        }
    }
    out
}

fn inner(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    x.iter().zip(y).map(|(a, b)| a.conj() * b).sum()
}

fn lowered_twice(state: &TwoModeFockState, first: Mode, second: Mode) -> Vec<Complex64> {
    let once = TwoModeFockState::from_amplitudes(state.cutoff(), lowered(state, first))
        .expect("lowering preserves the basis length");
    lowered(&once, second)
}

/// Covariance of `(X_a, −P_a, X_b, −P_b)` of a normalized ket, built only
/// from `⟨a_i⟩`, `⟨a_i a_j⟩` and `⟨a_i† a_j⟩`.
pub fn covariance_from_ket(state: &TwoModeFockState) -> Matrix4<f64> {
    let modes = [Mode::A, Mode::B];
    let psi = state.amplitudes();
    let low: Vec<Vec<Complex64>> = modes.iter().map(|&m| lowered(state, m)).collect();
    let mean: Vec<Complex64> = low.iter().map(|l| inner(psi, l)).collect();
    let mut m = Matrix4::zeros();
    // quadrature q = u a + ū a†, with u = 1 for X and u = i for −P
    let weights = [complex(1.0), Complex64::new(0.0, 1.0)];
    for i in 0..2 {
        for j in 0..2 {
            let pair = inner(psi, &lowered_twice(state, modes[j], modes[i])) - mean[i] * mean[j];
            let number = inner(&low[j], &low[i]) - mean[j].conj() * mean[i];
            let sym = number + if i == j { 0.5 } else { 0.0 };
            for (ki, u) in weights.iter().enumerate() {
                for (kj, w) in weights.iter().enumerate() {
                    m[(2 * i + ki, 2 * j + kj)] =
                        2.0 * (u * w * pair).re + 2.0 * (u * w.conj() * sym).re;
                }
            }
        }
    }
    m
}
