//! Exact beam-splitter action on two-mode Fock states.
//!
//! States live in the triangle `N1 + N2 ≤ cutoff`. Storage is grouped by
//! total photon number `N` (block of `N + 1` entries, `N1` ascending), which
//! is the block structure the beam splitter preserves.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::beam_splitter::BeamSplitter;
use crate::error::{Error, Result};
use crate::linalg::{binomial, expm, factorial, ln_factorial};

/// Above this many photons the coefficient sum switches to log-factorials.
const DIRECT_LIMIT: usize = 20;

/// One of the two optical modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    A,
    B,
}

/// Number of basis states with `N1 + N2 ≤ cutoff`.
pub const fn basis_len(cutoff: usize) -> usize {
    (cutoff + 1) * (cutoff + 2) / 2
}

/// Position of `|n1, n2⟩` in block-ordered storage.
pub const fn basis_index(n1: usize, n2: usize) -> usize {
    let total = n1 + n2;
    total * (total + 1) / 2 + n1
}

/// Pure two-mode state as a grid of Fock amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoModeFockState {
    cutoff: usize,
    amplitudes: Vec<Complex64>,
}

impl TwoModeFockState {
    pub fn zeros(cutoff: usize) -> Self {
        Self {
            cutoff,
            amplitudes: vec![Complex64::new(0.0, 0.0); basis_len(cutoff)],
        }
    }

    /// The product Fock state `|n1⟩ ⊗ |n2⟩`.
    pub fn basis(n1: usize, n2: usize, cutoff: usize) -> Result<Self> {
        if n1 + n2 > cutoff {
            return Err(Error::CutoffOverflow {
                total: n1 + n2,
                cutoff,
            });
        }
        let mut state = Self::zeros(cutoff);
        state.amplitudes[basis_index(n1, n2)] = Complex64::new(1.0, 0.0);
        Ok(state)
    }

    /// Wraps block-ordered amplitudes (see [`basis_index`]).
    pub fn from_amplitudes(cutoff: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        let expected = basis_len(cutoff);
        if amplitudes.len() != expected {
            return Err(Error::ShapeMismatch {
                cutoff,
                expected,
                got: amplitudes.len(),
            });
        }
        Ok(Self { cutoff, amplitudes })
    }

    /// Product of two single-mode kets, keeping only `n1 + n2 ≤ cutoff`.
    /// The result is not renormalized.
    pub fn product(a: &[Complex64], b: &[Complex64], cutoff: usize) -> Self {
        let mut state = Self::zeros(cutoff);
        for (n1, &x) in a.iter().enumerate().take(cutoff + 1) {
            for (n2, &y) in b.iter().enumerate().take(cutoff + 1 - n1) {
                state.amplitudes[basis_index(n1, n2)] = x * y;
            }
        }
        state
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude of `|n1, n2⟩`; zero outside the truncation.
    pub fn amplitude(&self, n1: usize, n2: usize) -> Complex64 {
        if n1 + n2 > self.cutoff {
            Complex64::new(0.0, 0.0)
        } else {
            self.amplitudes[basis_index(n1, n2)]
        }
    }

    /// `(n1, n2, amplitude)` for every stored basis state, block order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..=self.cutoff)
            .flat_map(|total| (0..=total).map(move |n1| (n1, total - n1)))
            .map(move |(n1, n2)| (n1, n2, self.amplitudes[basis_index(n1, n2)]))
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Rescales to unit norm; returns the norm squared found before scaling.
    pub fn normalize(&mut self) -> f64 {
        let n2 = self.norm_sqr();
        if n2 > 0.0 {
            let s = 1.0 / n2.sqrt();
            self.amplitudes.iter_mut().for_each(|z| *z *= s);
        }
        n2
    }

    /// Amplitudes as a `(cutoff+1) × (cutoff+1)` matrix, rows `N1`, columns `N2`.
    pub fn to_grid(&self) -> DMatrix<Complex64> {
        let d = self.cutoff + 1;
        let mut grid = DMatrix::zeros(d, d);
        for (n1, n2, amp) in self.iter() {
            grid[(n1, n2)] = amp;
        }
        grid
    }

    /// Applies the local phase rotation `e^{iϑ n}` to one mode.
    pub fn with_local_phase(&self, mode: Mode, angle: f64) -> Self {
        let mut out = self.clone();
        for (n1, n2, amp) in self.iter() {
            let n = match mode {
                Mode::A => n1,
                Mode::B => n2,
            };
            out.amplitudes[basis_index(n1, n2)] =
                amp * Complex64::from_polar(1.0, angle * n as f64);
        }
        out
    }

    /// Reduced density operator of `keep`, tracing out the other mode.
    pub fn reduced_density_matrix(&self, keep: Mode) -> DMatrix<Complex64> {
        let grid = self.to_grid();
        match keep {
            Mode::A => &grid * grid.adjoint(),
            Mode::B => grid.transpose() * grid.conjugate(),
        }
    }
}

fn signed_ln_pow(x: f64, e: usize) -> Option<(f64, f64)> {
    if e == 0 {
        Some((1.0, 0.0))
    } else if x == 0.0 {
        None
    } else {
        let sign = if x < 0.0 && e % 2 == 1 { -1.0 } else { 1.0 };
        Some((sign, e as f64 * x.abs().ln()))
    }
}

/// `⟨N1, N2| B |n1, n2⟩`, the closed-form output amplitude.
///
/// Exactly zero unless `N1 + N2 = n1 + n2`. The phase convention is that of
/// the exponential in [`BeamSplitter`]; [`bs_unitary_matrix`] reproduces it
/// entry for entry.
pub fn bs_coefficient(
    n1: usize,
    n2: usize,
    out1: usize,
    out2: usize,
    bs: &BeamSplitter,
) -> Complex64 {
    let total = n1 + n2;
    if out1 + out2 != total {
        return Complex64::new(0.0, 0.0);
    }
    let (t, r) = (bs.t(), bs.r());
    // Terms are indexed by k; l is pinned by out1 = n2 + k - l.
    let terms = (0..=n1).filter_map(|k| {
        let l = (n2 + k).checked_sub(out1)?;
        (l <= n2).then_some((k, l))
    });

    let magnitude: f64 = if total <= DIRECT_LIMIT {
        let prefactor = (factorial(n1) * factorial(n2) * factorial(out1) * factorial(out2)).sqrt();
        terms
            .map(|(k, l)| {
                let sign = if (n1 - k).is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                let denom = factorial(k) * factorial(n1 - k) * factorial(l) * factorial(n2 - l);
                sign * r.powi((total - k - l) as i32) * t.powi((k + l) as i32) * prefactor / denom
            })
            .sum()
    } else {
        let ln_prefactor =
            0.5 * (ln_factorial(n1) + ln_factorial(n2) + ln_factorial(out1) + ln_factorial(out2));
        terms
            .filter_map(|(k, l)| {
                let (sr, lr) = signed_ln_pow(r, total - k - l)?;
                let (st, lt) = signed_ln_pow(t, k + l)?;
                let sign = if (n1 - k).is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                };
                let ln_denom =
                    ln_factorial(k) + ln_factorial(n1 - k) + ln_factorial(l) + ln_factorial(n2 - l);
                Some(sign * sr * st * (lr + lt + ln_prefactor - ln_denom).exp())
            })
            .sum()
    };
    let phase = -bs.phi() * (n1 as f64 - out1 as f64);
    Complex64::from_polar(magnitude, phase)
}

/// `B |n1, n2⟩` stored with the given cutoff.
pub fn fock_output(
    n1: usize,
    n2: usize,
    bs: &BeamSplitter,
    cutoff: usize,
) -> Result<TwoModeFockState> {
    let total = n1 + n2;
    let mut state = TwoModeFockState::basis(n1, n2, cutoff)?;
    state.amplitudes[basis_index(n1, n2)] = Complex64::new(0.0, 0.0);
    for out1 in 0..=total {
        let out2 = total - out1;
        state.amplitudes[basis_index(out1, out2)] = bs_coefficient(n1, n2, out1, out2, bs);
    }
    Ok(state)
}

/// Coefficients `c_k = √C(N,k) r^k t^{N−k} e^{ikφ}` of `B|0, N⟩ = Σ c_k |k, N−k⟩`.
pub fn su2_coefficients(total: usize, bs: &BeamSplitter) -> Vec<Complex64> {
    let (t, r) = (bs.t(), bs.r());
    (0..=total)
        .map(|k| {
            let mag = binomial(total, k).sqrt() * r.powi(k as i32) * t.powi((total - k) as i32);
            Complex64::from_polar(mag, k as f64 * bs.phi())
        })
        .collect()
}

/// Generator `(θ/2)(a†b e^{iφ} − a b† e^{−iφ})` on the `N`-photon block.
fn generator_block(total: usize, bs: &BeamSplitter) -> DMatrix<Complex64> {
    let half = 0.5 * bs.theta();
    let up = Complex64::from_polar(half, bs.phi());
    let down = Complex64::from_polar(half, -bs.phi());
    let mut g = DMatrix::zeros(total + 1, total + 1);
    for n1 in 0..=total {
        let n2 = total - n1;
        if n2 > 0 {
            // a†b |n1, n2⟩ = √((n1+1) n2) |n1+1, n2−1⟩
            g[(n1 + 1, n1)] += up * (((n1 + 1) * n2) as f64).sqrt();
        }
        if n1 > 0 {
            // a b† |n1, n2⟩ = √(n1 (n2+1)) |n1−1, n2+1⟩
            g[(n1 - 1, n1)] -= down * ((n1 * (n2 + 1)) as f64).sqrt();
        }
    }
    g
}

/// The beam-splitter unitary on each fixed-photon-number block, `N = 0..=cutoff`,
/// computed by exponentiating the generator.
pub fn bs_unitary_blocks(cutoff: usize, bs: &BeamSplitter) -> Vec<DMatrix<Complex64>> {
    (0..=cutoff)
        .map(|total| expm(&generator_block(total, bs)))
        .collect()
}

/// Dense matrix of the beam splitter on `N1 + N2 ≤ cutoff`, indexed by
/// [`basis_index`].
pub fn bs_unitary_matrix(cutoff: usize, bs: &BeamSplitter) -> DMatrix<Complex64> {
    let dim = basis_len(cutoff);
    let mut u = DMatrix::zeros(dim, dim);
    for (total, block) in bs_unitary_blocks(cutoff, bs).into_iter().enumerate() {
        let offset = basis_index(0, total);
        u.view_mut((offset, offset), (total + 1, total + 1))
            .copy_from(&block);
    }
    u
}

/// Applies block unitaries from [`bs_unitary_blocks`] to a state of the same cutoff.
pub fn apply_blocks(blocks: &[DMatrix<Complex64>], state: &TwoModeFockState) -> TwoModeFockState {
    let mut out = TwoModeFockState::zeros(state.cutoff);
    for (total, block) in blocks.iter().enumerate().take(state.cutoff + 1) {
        let offset = basis_index(0, total);
        for i in 0..=total {
            out.amplitudes[offset + i] = (0..=total)
                .map(|j| block[(i, j)] * state.amplitudes[offset + j])
                .sum();
        }
    }
    out
}
