//! Beam-splitter entanglement: exact Fock-space propagation, pure-state
//! entanglement entropy, and Gaussian covariance methods with a
//! separability decision.
//!
//! The crate is `no_std` with `alloc` when the default `std` feature is off.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod beam_splitter;
pub mod entanglement;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod linalg;
pub mod oracle;
pub mod separability;
pub mod squeezed;

pub use beam_splitter::BeamSplitter;
pub use entanglement::{gaussian_entropy, von_neumann_entropy, EntropyMethod, EntropyValue};
pub use error::{Error, Result};
pub use fock::{bs_coefficient, fock_output, su2_coefficients, Mode, TwoModeFockState};
pub use gaussian::{CaseStudy, GaussianState};
pub use num_complex::Complex64;
pub use separability::{
    duan_separability, to_standard_form, Separability, SeparabilityVerdict, StandardForm,
};
pub use squeezed::{
    canonicalize_phases, effective_two_mode_squeezing, squeezed_output_entropy, SqueezeParams,
};
