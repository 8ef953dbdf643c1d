//! Scalar abstraction and the tolerance profile attached to each float width.
//!
//! All numeric code in this crate is generic over [`Scalar`]. The trait adds
//! nothing to `num_traits::Float` except a set of named tolerances, since the
//! sensible thresholds for determinant checks, degeneracy tests and sign scans
//! depend on the precision of the underlying type.

use num_complex::Complex;
use num_traits::Float;

/// Floating-point scalar with the tolerance profile used across the crate.
///
/// The `f64` profile is the reference one; `f32` uses correspondingly looser
/// thresholds. All values are positive and small compared to 1.
pub trait Scalar: Float + core::fmt::Debug + core::fmt::Display + 'static {
    /// Default tolerance for arithmetic comparisons.
    fn arith_tol() -> Self;
    /// Tolerance on |det A - 1| accepted by the unit-determinant constructor.
    fn unit_det_tol() -> Self;
    /// Default tolerance for metric-orthogonality validation.
    fn validate_tol() -> Self;
    /// Entrywise tolerance for the Hermitian symmetrization constructor.
    fn hermitian_tol() -> Self;
    /// Weight magnitude at or below which an inversion index is rejected.
    fn degeneracy_threshold() -> Self;
    /// Magnitude below which a coefficient component is skipped by the
    /// canonical sign scan.
    fn sign_scan_tol() -> Self;
    /// Accepted deviation of an axis norm from 1 before normalization.
    fn axis_norm_tol() -> Self;
}

impl Scalar for f64 {
    fn arith_tol() -> Self {
        1e-12
    }
    fn unit_det_tol() -> Self {
        1e-10
    }
    fn validate_tol() -> Self {
        1e-9
    }
    fn hermitian_tol() -> Self {
        1e-12
    }
    fn degeneracy_threshold() -> Self {
        1e-6
    }
    fn sign_scan_tol() -> Self {
        1e-10
    }
    fn axis_norm_tol() -> Self {
        1e-6
    }
}

impl Scalar for f32 {
    fn arith_tol() -> Self {
        1e-5
    }
    fn unit_det_tol() -> Self {
        1e-4
    }
    fn validate_tol() -> Self {
        1e-4
    }
    fn hermitian_tol() -> Self {
        1e-5
    }
    fn degeneracy_threshold() -> Self {
        1e-3
    }
    fn sign_scan_tol() -> Self {
        1e-5
    }
    fn axis_norm_tol() -> Self {
        1e-3
    }
}

/// Converts an `f64` constant into the working scalar type.
///
/// Panics only if the target type cannot represent the value at all, which
/// does not happen for the constants used in this crate.
#[inline]
pub(crate) fn cast<T: Scalar>(x: f64) -> T {
    T::from(x).expect("constant representable in scalar type")
}

/// Componentwise finiteness; `Complex::is_finite` needs a different
/// float-trait bound than the one [`Scalar`] carries.
#[inline]
pub(crate) fn complex_is_finite<T: Scalar>(z: &Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Relative comparison `|x - y| <= tol * max(1, |x|, |y|)`.
#[inline]
pub fn rel_eq<T: Scalar>(x: T, y: T, tol: T) -> bool {
    (x - y).abs() <= tol * T::one().max(x.abs()).max(y.abs())
}

/// Relative comparison of complex values by modulus, same scaling as [`rel_eq`].
#[inline]
pub fn rel_eq_c<T: Scalar>(x: Complex<T>, y: Complex<T>, tol: T) -> bool {
    (x - y).norm() <= tol * T::one().max(x.norm()).max(y.norm())
}
