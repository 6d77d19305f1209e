//! Separability of two-mode Gaussian states via the Duan criterion.
//!
//! The state is first brought by local symplectic maps to the standard form
//!
//! ```text
//!     | b1  0  c1  0 |
//!     |  0 b2   0 c2 |
//!     | c1  0  d1  0 |
//!     |  0 c2   0 d2 |
//! ```
//!
//! with `(b1−1)/(d1−1) = (b2−1)/(d2−1)` and
//! `|c1| − |c2| = √((b1−1)(d1−1)) − √((b2−1)(d2−1))`. The EPR-type pair
//! `u = q0 X_a − sgn(c1) X_b / q0`, `v = q0 P_a − sgn(c2) P_b / q0` (scaled by
//! `1/√2`) with `q0² = √((d−1)/(b−1))` then decides separability through
//! `⟨Δu²⟩ + ⟨Δv²⟩ ≥ q0² + 1/q0²`.

use nalgebra::{Matrix2, Matrix4};
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::oracle;

/// Slack on `lhs ≥ rhs` before a state is called entangled.
pub const DECISION_TOL: f64 = 1e-10;
const CONSTRAINT_TOL: f64 = 1e-9;
const ZERO_CORRELATION: f64 = 1e-12;
const PURE_MARGINAL: f64 = 1e-12;
const LOG_RATIO_SPAN: f64 = 60.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardForm {
    pub b1: f64,
    pub b2: f64,
    pub d1: f64,
    pub d2: f64,
    pub c1: f64,
    pub c2: f64,
}

impl StandardForm {
    pub fn matrix(&self) -> Matrix4<f64> {
        Matrix4::new(
            self.b1, 0.0, self.c1, 0.0, //
            0.0, self.b2, 0.0, self.c2, //
            self.c1, 0.0, self.d1, 0.0, //
            0.0, self.c2, 0.0, self.d2,
        )
    }

    /// Reads the six parameters of a matrix, ignoring the entries the
    /// standard form requires to vanish.
    pub fn from_matrix(m: &Matrix4<f64>) -> Self {
        Self {
            b1: m[(0, 0)],
            b2: m[(1, 1)],
            d1: m[(2, 2)],
            d2: m[(3, 3)],
            c1: m[(0, 2)],
            c2: m[(1, 3)],
        }
    }

    /// `(b1−1)(d2−1) − (b2−1)(d1−1)`: zero when the two ratios agree.
    pub fn ratio_residual(&self) -> f64 {
        (self.b1 - 1.0) * (self.d2 - 1.0) - (self.b2 - 1.0) * (self.d1 - 1.0)
    }

    /// `|c1| − |c2| − [√((b1−1)(d1−1)) − √((b2−1)(d2−1))]`.
    pub fn correlation_residual(&self) -> f64 {
        let p1 = ((self.b1 - 1.0) * (self.d1 - 1.0)).max(0.0).sqrt();
        let p2 = ((self.b2 - 1.0) * (self.d2 - 1.0)).max(0.0).sqrt();
        self.c1.abs() - self.c2.abs() - (p1 - p2)
    }

    /// Both defining constraints hold: the correlation residual within `tol`,
    /// the cross-multiplied ratio residual (a product of two entries) within
    /// `tol · max(1, max |entry|)`.
    pub fn satisfies_constraints(&self, tol: f64) -> bool {
        let scale = self.matrix().amax().max(1.0);
        self.ratio_residual().abs() <= tol * scale && self.correlation_residual().abs() <= tol
    }

    fn is_product(&self) -> bool {
        self.c1.abs() <= ZERO_CORRELATION && self.c2.abs() <= ZERO_CORRELATION
    }

    /// `q0² = √((d_i−1)/(b_i−1))`.
    ///
    /// Both indices must give the same ratio; this is checked in the
    /// cross-multiplied form and the better-conditioned index is used.
    pub fn q0_squared(&self) -> Result<f64> {
        let scale = self.matrix().amax().max(1.0);
        if self.ratio_residual().abs() > CONSTRAINT_TOL * scale * scale {
            return Err(Error::StandardForm("the two variance ratios differ"));
        }
        let (b, d) = if (self.b1 - 1.0).abs() >= (self.b2 - 1.0).abs() {
            (self.b1, self.d1)
        } else {
            (self.b2, self.d2)
        };
        if (b - 1.0).abs() <= PURE_MARGINAL {
            return Err(Error::Degenerate);
        }
        let kappa = (d - 1.0) / (b - 1.0);
        if kappa.is_nan() || kappa <= 0.0 {
            return Err(Error::StandardForm("variance ratio is not positive"));
        }
        Ok(kappa.sqrt())
    }

    /// `(⟨Δu²⟩ + ⟨Δv²⟩, q0² + 1/q0²)`.
    pub fn duan_sides(&self) -> Result<(f64, f64)> {
        let q = if self.is_product() {
            1.0
        } else {
            match self.q0_squared() {
                Ok(q) => q,
                Err(Error::Degenerate) => 1.0,
                Err(e) => return Err(e),
            }
        };
        let lhs = 0.5 * (q * (self.b1 + self.b2) + (self.d1 + self.d2) / q)
            - (self.c1.abs() + self.c2.abs());
        Ok((lhs, q + 1.0 / q))
    }

    /// `Σ_i sgn(b_i − 1) √((b_i−1)(d_i−1)) − |c1| − |c2|`; non-negative
    /// exactly for separable states. Equal to `lhs − rhs` of the criterion.
    pub fn branch_margin(&self) -> f64 {
        let term = |b: f64, d: f64| (b - 1.0).signum() * ((b - 1.0) * (d - 1.0)).max(0.0).sqrt();
        term(self.b1, self.d1) + term(self.b2, self.d2) - self.c1.abs() - self.c2.abs()
    }
}

/// Local symplectic maps with `M' = Lᵀ M L`, `L = diag(mode_a, mode_b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalTransform {
    pub mode_a: Matrix2<f64>,
    pub mode_b: Matrix2<f64>,
}

impl LocalTransform {
    pub fn matrix(&self) -> Matrix4<f64> {
        let mut l = Matrix4::zeros();
        l.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.mode_a);
        l.fixed_view_mut::<2, 2>(2, 2).copy_from(&self.mode_b);
        l
    }
}

/// Rotation `R` (det +1) and eigenvalues with `A = R diag(λ) Rᵀ`.
fn rotation_eigen(a: &Matrix2<f64>) -> (Matrix2<f64>, [f64; 2]) {
    let eig = a.symmetric_eigen();
    let mut r = eig.eigenvectors;
    if r.determinant() < 0.0 {
        r.set_column(1, &(-r.column(1)));
    }
    (r, [eig.eigenvalues[0], eig.eigenvalues[1]])
}

/// Local symplectic `S` with `Sᵀ A S = n I`, and `n = √det A`.
fn williamson(a: &Matrix2<f64>) -> (Matrix2<f64>, f64) {
    let (r, [l1, l2]) = rotation_eigen(a);
    let n = (l1 * l2).sqrt();
    (
        r * Matrix2::new((n / l1).sqrt(), 0.0, 0.0, (n / l2).sqrt()),
        n,
    )
}

/// `C = U diag(σ1, σ2) Vᵀ` with `U`, `V` rotations, `σ1 ≥ |σ2|`.
fn signed_svd(c: &Matrix2<f64>) -> (Matrix2<f64>, [f64; 2], Matrix2<f64>) {
    let svd = c.svd(true, true);
    let (mut u, vt) = (svd.u.unwrap(), svd.v_t.unwrap());
    let mut v = vt.transpose();
    let mut s = [svd.singular_values[0], svd.singular_values[1]];
    if s[0] < s[1] {
        s.swap(0, 1);
        u.swap_columns(0, 1);
        v.swap_columns(0, 1);
    }
    if u.determinant() < 0.0 {
        u.set_column(1, &(-u.column(1)));
        s[1] = -s[1];
    }
    if v.determinant() < 0.0 {
        v.set_column(1, &(-v.column(1)));
        s[1] = -s[1];
    }
    (u, s, v)
}

/// Positive root `x` of `n x² + (τ−1) x − τ n = 0`, i.e. the squeeze whose
/// variance ratio `(n x − 1)/(n/x − 1)` equals `τ`.
fn squeeze_for_ratio(tau: f64, n: f64) -> f64 {
    let disc = ((tau - 1.0) * (tau - 1.0) + 4.0 * n * n * tau).sqrt();
    if tau <= 1.0 {
        (disc - (tau - 1.0)) / (2.0 * n)
    } else {
        2.0 * n * tau / ((tau - 1.0) + disc)
    }
}

/// Reduces a two-mode state to standard form by local operations only.
///
/// Steps: a Williamson normalization of each diagonal block to `n I`,
/// `m I`; rotations that diagonalize the correlation block into `(c, c')`;
/// then local squeezes `diag(√x, 1/√x)`, `diag(√y, 1/√y)`. The ratio
/// constraint ties `y` to `x` through a common ratio `τ`, which leaves a
/// single equation in `ln τ` solved by bisection. A final π turn of mode b
/// makes `c1 ≤ 0` (the sign of `c1 c2` is a local invariant).
pub fn to_standard_form(state: &GaussianState) -> Result<(StandardForm, LocalTransform)> {
    let m = state.two_mode_matrix()?;
    let a = m.fixed_view::<2, 2>(0, 0).into_owned();
    let b = m.fixed_view::<2, 2>(2, 2).into_owned();
    let c = m.fixed_view::<2, 2>(0, 2).into_owned();

    let (sa, n) = williamson(&a);
    let (sb, nb) = williamson(&b);
    let (u, [cc, cp], v) = signed_svd(&(sa.transpose() * c * sb));
    let scale = n.max(nb);
    let product = cc.abs() <= ZERO_CORRELATION * scale && cp.abs() <= ZERO_CORRELATION * scale;

    if product && n - 1.0 <= PURE_MARGINAL && nb - 1.0 <= PURE_MARGINAL {
        return Err(Error::Degenerate);
    }
    if !product && (n - 1.0 <= PURE_MARGINAL || nb - 1.0 <= PURE_MARGINAL) {
        return Err(Error::Unphysical("pure marginal with nonzero correlations"));
    }

    // A joint quarter turn of both modes exchanges which quadrature pair
    // carries the larger correlation; the squeeze equation may only have a
    // root for one of the two assignments.
    let quarter = Matrix2::new(0.0, -1.0, 1.0, 0.0);
    let assignments = [(u, v, cc, cp), (u * quarter, v * quarter, cp, cc)];
    let mut failure = Error::StandardForm("local squeeze equation has no root");
    for (u, v, c1, c2) in assignments {
        let squeezes = if product {
            Some((1.0, 1.0))
        } else {
            solve_squeezes(n, nb, c1, c2)
        };
        if let Some((x, y)) = squeezes {
            let transform = LocalTransform {
                mode_a: sa * u * Matrix2::new(x.sqrt(), 0.0, 0.0, 1.0 / x.sqrt()),
                mode_b: sb * v * Matrix2::new(y.sqrt(), 0.0, 0.0, 1.0 / y.sqrt()),
            };
            match finish(&m, transform) {
                Ok(done) => return Ok(done),
                Err(e) => failure = e,
            }
        }
    }
    Err(failure)
}

/// Solves the correlation constraint for the local squeezes `(x, y)` once
/// the ratio constraint ties them through `τ`, bisecting in `ln τ`.
fn solve_squeezes(n: f64, m: f64, c1: f64, c2: f64) -> Option<(f64, f64)> {
    let at = |log_tau: f64| {
        let tau = log_tau.exp();
        (squeeze_for_ratio(tau, n), squeeze_for_ratio(tau, m))
    };
    let residual = |log_tau: f64| {
        let (x, y) = at(log_tau);
        let p = (x * y).sqrt();
        c1.abs() * p - c2.abs() / p - ((n * x - 1.0) * (m * y - 1.0)).max(0.0).sqrt()
            + ((n / x - 1.0) * (m / y - 1.0)).max(0.0).sqrt()
    };
    let (mut lo, mut hi) = (-LOG_RATIO_SPAN, LOG_RATIO_SPAN);
    let (f_lo, f_hi) = (residual(lo), residual(hi));
    let slack = CONSTRAINT_TOL * n.max(m);
    if f_lo * f_hi > 0.0 {
        // A root at the edge of the range: one quadrature pair is exactly
        // at the vacuum level with no correlation.
        return if f_lo.abs() <= slack {
            Some(at(lo))
        } else if f_hi.abs() <= slack {
            Some(at(hi))
        } else {
            None
        };
    }
    let lo_positive = f_lo > 0.0;
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if (residual(mid) > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(at(0.5 * (lo + hi)))
}

/// Applies the transform, fixes `c1 ≤ 0` with a π turn of mode b, and checks
/// the result.
fn finish(
    m: &Matrix4<f64>,
    mut transform: LocalTransform,
) -> Result<(StandardForm, LocalTransform)> {
    let trial = transform.matrix();
    if (trial.transpose() * m * trial)[(0, 2)] > 0.0 {
        transform.mode_b = -transform.mode_b;
    }
    let l = transform.matrix();
    let reduced = l.transpose() * m * l;
    let off_block = [(0, 1), (0, 3), (1, 2), (2, 3)]
        .iter()
        .map(|&(i, j)| reduced[(i, j)].abs())
        .fold(0.0, f64::max);
    let form = StandardForm::from_matrix(&reduced);
    let scale = reduced.amax().max(1.0);
    if off_block > CONSTRAINT_TOL * scale || !form.satisfies_constraints(CONSTRAINT_TOL * scale) {
        return Err(Error::StandardForm("constraints not met after reduction"));
    }
    Ok((form, transform))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separability {
    Separable,
    Entangled,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeparabilityVerdict {
    pub decision: Separability,
    /// `⟨Δu²⟩ + ⟨Δv²⟩` in standard form.
    pub duan_lhs: f64,
    /// `q0² + 1/q0²`.
    pub duan_rhs: f64,
    /// Smallest symplectic eigenvalue of the partial transpose.
    pub ppt_min_symplectic: f64,
}

impl SeparabilityVerdict {
    pub fn is_entangled(&self) -> bool {
        self.decision == Separability::Entangled
    }
}

/// Decides whether a two-mode Gaussian state is separable.
pub fn duan_separability(state: &GaussianState) -> Result<SeparabilityVerdict> {
    let ppt = oracle::ppt_separability(state)?;
    let (duan_lhs, duan_rhs) = match to_standard_form(state) {
        Ok((form, _)) => form.duan_sides()?,
        Err(Error::Degenerate) => (2.0, 2.0),
        Err(e) => return Err(e),
    };
    let decision = if duan_lhs >= duan_rhs - DECISION_TOL {
        Separability::Separable
    } else {
        Separability::Entangled
    };
    Ok(SeparabilityVerdict {
        decision,
        duan_lhs,
        duan_rhs,
        ppt_min_symplectic: ppt.min_symplectic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beam_splitter::BeamSplitter;
    use crate::fock::Mode;
    use crate::gaussian::CaseStudy;
    use core::f64::consts::FRAC_PI_2;

    fn two_mode_squeezed(r: f64) -> GaussianState {
        let (ch, sh) = ((2.0 * r).cosh(), (2.0 * r).sinh());
        GaussianState::two_mode(Matrix4::new(
            ch, 0.0, sh, 0.0, //
            0.0, ch, 0.0, -sh, //
            sh, 0.0, ch, 0.0, //
            0.0, -sh, 0.0, ch,
        ))
        .unwrap()
    }

    fn pair_block(nbar: f64, s: f64) -> Matrix4<f64> {
        let w = 2.0 * nbar + 1.0;
        let b = 0.5 * w * ((2.0 * s).exp() + (-2.0 * s).exp());
        let c1 = 0.5 * w * ((-2.0 * s).exp() - (2.0 * s).exp());
        StandardForm {
            b1: b,
            b2: b,
            d1: b,
            d2: b,
            c1,
            c2: -c1,
        }
        .matrix()
    }

    #[test]
    fn vacuum_is_degenerate_and_separable() {
        let vac =
            GaussianState::tensor(&GaussianState::vacuum(), &GaussianState::vacuum()).unwrap();
        assert_eq!(to_standard_form(&vac).unwrap_err(), Error::Degenerate);
        let verdict = duan_separability(&vac).unwrap();
        assert_eq!(verdict.decision, Separability::Separable);
        assert!((verdict.ppt_min_symplectic - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pair_block_is_already_standard() {
        let (nbar, s) = (0.3, 0.4);
        let m = pair_block(nbar, s);
        let (form, _) = to_standard_form(&GaussianState::two_mode(m).unwrap()).unwrap();
        let expected = StandardForm::from_matrix(&m);
        assert!(
            (form.matrix() - expected.matrix()).amax() < 1e-9,
            "{form:?}"
        );
    }

    #[test]
    fn standard_form_is_invariant_under_local_rotations() {
        let m = pair_block(0.2, 0.6);
        let base = GaussianState::two_mode(m).unwrap();
        let (reference, _) = to_standard_form(&base).unwrap();
        for (ta, tb) in [(0.3, 1.7), (2.0, -0.4), (FRAC_PI_2, 0.9)] {
            let rotated = base
                .rotated(Mode::A, ta)
                .unwrap()
                .rotated(Mode::B, tb)
                .unwrap();
            let (form, _) = to_standard_form(&rotated).unwrap();
            assert!(
                (form.matrix() - reference.matrix()).amax() < 1e-9,
                "{form:?} vs {reference:?}"
            );
        }
    }

    #[test]
    fn transform_record_reproduces_the_form() {
        let st = CaseStudy::SqueezedVacuumThermal
            .output(0.7, 0.5, &BeamSplitter::from_reflectance(0.3, 0.4))
            .unwrap();
        let (form, tr) = to_standard_form(&st).unwrap();
        let l = tr.matrix();
        let reduced = l.transpose() * st.two_mode_matrix().unwrap() * l;
        assert!((reduced - form.matrix()).amax() < 1e-9);
        assert!((tr.mode_a.determinant() - 1.0).abs() < 1e-10);
        assert!((tr.mode_b.determinant() - 1.0).abs() < 1e-10);
        assert!(form.c1 <= 0.0);
    }

    #[test]
    fn two_mode_squeezed_vacuum_is_entangled() {
        let verdict = duan_separability(&two_mode_squeezed(0.5)).unwrap();
        assert_eq!(verdict.decision, Separability::Entangled);
        assert!((verdict.ppt_min_symplectic - (-1.0f64).exp()).abs() < 1e-10);
        assert!(verdict.duan_lhs < verdict.duan_rhs);
    }

    #[test]
    fn classical_product_is_separable() {
        let pair = GaussianState::tensor(
            &GaussianState::thermal(1.0).unwrap(),
            &GaussianState::thermal(2.0).unwrap(),
        )
        .unwrap();
        for bs in [BeamSplitter::balanced(0.0), BeamSplitter::new(0.7, 2.0)] {
            let verdict = duan_separability(&pair.beam_split(&bs).unwrap()).unwrap();
            assert_eq!(verdict.decision, Separability::Separable);
        }
    }

    #[test]
    fn printed_vacuum_block_uses_both_branches() {
        // Elements of squeezed thermal light mixed with vacuum, evaluated
        // directly (b1 − 1 < 0 exactly when the input is nonclassical).
        let block = |nbar: f64, s: f64, r: f64| {
            let t = (1.0 - r * r).sqrt();
            let w = 2.0 * nbar + 1.0;
            let (lo, hi) = (w * (-2.0 * s).exp(), w * (2.0 * s).exp());
            StandardForm {
                b1: r * r * lo + t * t,
                b2: r * r * hi + t * t,
                d1: t * t * lo + r * r,
                d2: t * t * hi + r * r,
                c1: t * r * (lo - 1.0),
                c2: t * r * (hi - 1.0),
            }
        };
        for &(nbar, s, entangled) in &[(0.0, 0.3, true), (1.0, 0.2, false), (0.5, 0.6, true)] {
            for &r in &[0.2, 0.5, 0.9] {
                let form = block(nbar, s, r);
                assert!(form.satisfies_constraints(1e-12));
                let (lhs, rhs) = form.duan_sides().unwrap();
                assert_eq!(lhs < rhs - DECISION_TOL, entangled);
                assert!((lhs - rhs - form.branch_margin()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn verdict_fields_are_consistent() {
        let st = CaseStudy::SqueezedThermalPair
            .output(0.5, 0.2, &BeamSplitter::balanced(FRAC_PI_2))
            .unwrap();
        let v = duan_separability(&st).unwrap();
        assert_eq!(
            v.decision == Separability::Separable,
            v.duan_lhs >= v.duan_rhs - DECISION_TOL
        );
    }
}
