//! Numerical library for convolution-type singular integral operators
//! S_φ on the Fock space F²(C^n).
//!
//! The crate converts between bounded Fourier multipliers m on R^n and
//! entire symbols φ ∈ F²(C^n), builds truncated matrix representations of
//! S_φ, and checks the operator-theoretic identities those operators
//! satisfy (norm equality with ‖m‖_∞, normality, C*-multiplicativity,
//! spectra from essential ranges, non-compactness, reducing projections)
//! at desk scale.

pub mod error;
pub mod quad;
pub mod hermite;

pub use error::{FockError, Result};
pub use hermite::{FockVector, HermiteVector, MultiIndex, TruncationBasis};
pub use quad::QuadratureRule;
