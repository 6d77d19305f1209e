use core::f64::consts::FRAC_PI_2;

#[cfg(not(feature = "std"))]
use num_traits::Float;

/// Lossless two-mode beam splitter `exp[(θ/2)(a†b e^{iφ} − a b† e^{−iφ})]`.
///
/// This is the single source of the transform convention for both engines:
/// in the Heisenberg picture `B† a B = t a + r e^{iφ} b` and
/// `B† b B = t b − r e^{−iφ} a`, so coherent inputs `|α, β⟩` leave as
/// `|tα + r e^{iφ}β, tβ − r e^{−iφ}α⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamSplitter {
    theta: f64,
    phi: f64,
}

impl BeamSplitter {
    pub fn new(theta: f64, phi: f64) -> Self {
        Self { theta, phi }
    }

    /// Splitter with intensity reflectance `R = r²`, clamped to `[0, 1]`.
    pub fn from_reflectance(reflectance: f64, phi: f64) -> Self {
        let r = reflectance.clamp(0.0, 1.0).sqrt();
        Self::new(2.0 * r.asin(), phi)
    }

    /// The 50:50 splitter, `θ = π/2`.
    pub fn balanced(phi: f64) -> Self {
        Self::new(FRAC_PI_2, phi)
    }

    pub fn identity() -> Self {
        Self::new(0.0, 0.0)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Amplitude transmission `t = cos(θ/2)`.
    pub fn t(&self) -> f64 {
        (0.5 * self.theta).cos()
    }

    /// Amplitude reflection `r = sin(θ/2)`.
    pub fn r(&self) -> f64 {
        (0.5 * self.theta).sin()
    }

    pub fn reflectance(&self) -> f64 {
        let r = self.r();
        r * r
    }

    pub fn with_phi(self, phi: f64) -> Self {
        Self { phi, ..self }
    }
}
