//! Numerics for the spin double cover of the restricted Lorentz group.
//!
//! The crate connects two matrix groups in both directions:
//!
//! * unit-determinant 2×2 complex matrices, represented by
//!   [`UnitSpinMatrix`], acting on Minkowski vectors through their
//!   Hermitian-matrix embedding, and
//! * restricted (proper orthochronous) Lorentz matrices, represented by
//!   [`LorentzMatrix`], acting on the vectors directly.
//!
//! [`covering::to_lorentz`] maps a spin matrix A to the Lorentz matrix with
//! entries Tⁱⱼ = ½tr(σᵢAσⱼA†). The map is a group homomorphism, exactly
//! two-to-one (A and -A share an image), and onto the restricted component.
//! [`covering::to_spin`] inverts it: for each index i a recovery matrix
//! built from T collapses back to a multiple of A, and its weight both
//! selects a numerically safe index and fixes the normalization. The
//! remaining sign freedom is resolved by a deterministic canonical-sign
//! rule, so round trips are exact up to floating-point error.
//!
//! Supporting modules provide the σ-basis algebra ([`pauli`]), the
//! Minkowski vector space and its Hermitian embedding ([`minkowski`]),
//! validation and classification of Lorentz matrices ([`lorentz`]), and
//! boost/rotation generator pairs ([`generators`]).
//!
//! Everything is generic over the floating-point scalar through the
//! [`Scalar`] trait, which bundles the per-precision tolerances; aliases
//! for the common instantiations sit at the crate root.
//!
//! # Example
//!
//! ```
//! use spincover::{covering, generators::Rapidity};
//!
//! let boost = Rapidity::new(1.0_f64, [0.0, 0.0, 1.0]).unwrap();
//! let t = covering::to_lorentz(&boost.spin_matrix());
//! assert!((t.entry(0, 0) - 1.0_f64.cosh()).abs() < 1e-12);
//!
//! let back = covering::to_spin(&t).unwrap();
//! let gap = (back.matrix().entry(0, 0) - boost.spin_matrix().matrix().entry(0, 0)).norm();
//! assert!(gap < 1e-12);
//! ```

pub mod covering;
pub mod error;
pub mod generators;
pub mod lorentz;
pub mod minkowski;
pub mod pauli;
pub mod scalar;

pub use error::Error;
pub use scalar::{rel_eq, rel_eq_c, Scalar};

/// Double-precision aliases; the default choice.
pub type SpinMatrixF64 = pauli::SpinMatrix<f64>;
pub type PauliCoefficientsF64 = pauli::PauliCoefficients<f64>;
pub type UnitSpinMatrixF64 = covering::UnitSpinMatrix<f64>;
pub type RecoveryMatrixF64 = covering::RecoveryMatrix<f64>;
pub type LorentzMatrixF64 = lorentz::LorentzMatrix<f64>;
pub type FourVectorF64 = minkowski::FourVector<f64>;
pub type HermitianMatrixF64 = minkowski::HermitianMatrix<f64>;
pub type RapidityF64 = generators::Rapidity<f64>;
pub type AxisAngleF64 = generators::AxisAngle<f64>;

/// Single-precision aliases, with correspondingly looser tolerances.
pub type SpinMatrixF32 = pauli::SpinMatrix<f32>;
pub type PauliCoefficientsF32 = pauli::PauliCoefficients<f32>;
pub type UnitSpinMatrixF32 = covering::UnitSpinMatrix<f32>;
pub type RecoveryMatrixF32 = covering::RecoveryMatrix<f32>;
pub type LorentzMatrixF32 = lorentz::LorentzMatrix<f32>;
pub type FourVectorF32 = minkowski::FourVector<f32>;
pub type HermitianMatrixF32 = minkowski::HermitianMatrix<f32>;
pub type RapidityF32 = generators::Rapidity<f32>;
pub type AxisAngleF32 = generators::AxisAngle<f32>;

#[doc(inline)]
pub use covering::UnitSpinMatrix;
#[doc(inline)]
pub use lorentz::LorentzMatrix;

/// Compiles the workspace README's code example as a doctest.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme_doctests {}
