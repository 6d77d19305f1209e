//! Small dense helpers shared by the engines: matrix exponential, Hermitian
//! spectra and entropy sums.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Largest absolute column sum.
fn norm_1(a: &DMatrix<Complex64>) -> f64 {
    a.column_iter()
        .map(|col| col.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(A)` by scaling and squaring around a truncated Taylor series.
///
/// `A` is scaled by `2^-s` until its 1-norm is at most 1/2; at that radius
/// the series reaches double precision in under 20 terms.
pub fn expm(a: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    assert!(a.is_square(), "expm needs a square matrix");
    let n = a.nrows();
    if n == 0 {
        return DMatrix::zeros(0, 0);
    }
    let norm = norm_1(a);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = a * Complex64::new(0.5f64.powi(squarings), 0.0);

    let mut sum = DMatrix::<Complex64>::identity(n, n);
    let mut term = DMatrix::<Complex64>::identity(n, n);
    for k in 1..=40 {
        term = &term * &scaled * Complex64::new(1.0 / k as f64, 0.0);
        sum += &term;
        if norm_1(&term) < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: DMatrix<Complex64>) -> Vec<f64> {
    let mut vals: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(|a, b| a.total_cmp(b));
    vals
}

/// `-Σ p ln p` with `0 ln 0 = 0`; tiny negative roundoff is dropped.
pub fn entropy_nats<I: IntoIterator<Item = f64>>(probs: I) -> f64 {
    let total = probs
        .into_iter()
        .filter(|&p| p > 0.0)
        .map(|p| -p * p.ln())
        .sum::<f64>();
    // eigenvalues a hair above 1 would otherwise give -0 or -1e-16
    if total > 0.0 {
        total
    } else {
        0.0
    }
}

/// `ln n!`, exact summation (n stays small here).
pub fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// `n!` as a float; exact through 22!.
pub fn factorial(n: usize) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}
