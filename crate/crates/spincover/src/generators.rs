//! Boost and rotation generators on both sides of the cover.
//!
//! Each generator produces a matched pair: a unit-determinant 2×2 matrix
//! carrying the half angle, and the restricted Lorentz matrix carrying the
//! full angle. The pairs are consistent with the covering map, which is how
//! the half-angle convention shows up as the double cover: advancing a
//! rotation angle by 2π returns the Lorentz side to the identity but lands
//! the spin side on -σ₀.

use num_complex::Complex;

use crate::covering::UnitSpinMatrix;
use crate::error::Error;
use crate::lorentz::LorentzMatrix;
use crate::pauli::{basis, SpinMatrix};
use crate::scalar::{cast, Scalar};

fn unit_axis<T: Scalar>(axis: [T; 3]) -> Result<[T; 3], Error> {
    if !axis.iter().all(|v| v.is_finite()) {
        return Err(Error::NonFinite);
    }
    let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    if (norm - T::one()).abs() > T::axis_norm_tol() {
        return Err(Error::AxisNotUnit {
            norm: norm.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok([axis[0] / norm, axis[1] / norm, axis[2] / norm])
}

/// n·σ for a spatial direction n.
fn axis_matrix<T: Scalar>(n: [T; 3]) -> SpinMatrix<T> {
    let mut m = SpinMatrix::zero();
    for (j, nj) in n.iter().enumerate() {
        m = m + basis(j + 1).scale(Complex::new(*nj, T::zero()));
    }
    m
}

/// Boost of rapidity α along a unit spatial axis.
///
/// The axis must have Euclidean norm within the scalar type's axis
/// tolerance of 1; it is renormalized before use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rapidity<T> {
    alpha: T,
    axis: [T; 3],
}

impl<T: Scalar> Rapidity<T> {
    pub fn new(alpha: T, axis: [T; 3]) -> Result<Self, Error> {
        if !alpha.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            alpha,
            axis: unit_axis(axis)?,
        })
    }

    /// Rapidity α.
    pub fn alpha(&self) -> T {
        self.alpha
    }

    /// Unit axis n.
    pub fn axis(&self) -> [T; 3] {
        self.axis
    }

    /// Half-angle form cosh(α/2)σ₀ + sinh(α/2) n·σ.
    pub fn spin_matrix(&self) -> UnitSpinMatrix<T> {
        let half = self.alpha / cast::<T>(2.0);
        let m = basis(0).scale(Complex::new(half.cosh(), T::zero()))
            + axis_matrix(self.axis).scale(Complex::new(half.sinh(), T::zero()));
        UnitSpinMatrix::raw(m)
    }

    /// Full-angle form: T⁰₀ = cosh α, T⁰ⱼ = Tʲ₀ = sinh α·nʲ, and the
    /// spatial block δⱼₖ + (cosh α - 1)nʲnᵏ.
    pub fn lorentz_matrix(&self) -> LorentzMatrix<T> {
        let (ch, sh) = (self.alpha.cosh(), self.alpha.sinh());
        let n = self.axis;
        let mut t = [[T::zero(); 4]; 4];
        t[0][0] = ch;
        for j in 0..3 {
            t[0][j + 1] = sh * n[j];
            t[j + 1][0] = sh * n[j];
            for k in 0..3 {
                let kron = if j == k { T::one() } else { T::zero() };
                t[j + 1][k + 1] = kron + (ch - T::one()) * n[j] * n[k];
            }
        }
        LorentzMatrix::raw(t)
    }
}

/// Rotation of angle θ about a unit spatial axis, right-handed and active.
///
/// The axis must have Euclidean norm within the scalar type's axis
/// tolerance of 1; it is renormalized before use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngle<T> {
    theta: T,
    axis: [T; 3],
}

impl<T: Scalar> AxisAngle<T> {
    pub fn new(theta: T, axis: [T; 3]) -> Result<Self, Error> {
        if !theta.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(Self {
            theta,
            axis: unit_axis(axis)?,
        })
    }

    /// Rotation angle θ.
    pub fn theta(&self) -> T {
        self.theta
    }

    /// Unit axis n.
    pub fn axis(&self) -> [T; 3] {
        self.axis
    }

    /// Half-angle form cos(θ/2)σ₀ - i·sin(θ/2) n·σ.
    pub fn spin_matrix(&self) -> UnitSpinMatrix<T> {
        let half = self.theta / cast::<T>(2.0);
        let m = basis(0).scale(Complex::new(half.cos(), T::zero()))
            + axis_matrix(self.axis).scale(Complex::new(T::zero(), -half.sin()));
        UnitSpinMatrix::raw(m)
    }

    /// Full-angle form diag(1, R) with the spatial rotation
    /// R = cos θ·I + sin θ·[n]ₓ + (1 - cos θ)nnᵀ.
    pub fn lorentz_matrix(&self) -> LorentzMatrix<T> {
        let (co, si) = (self.theta.cos(), self.theta.sin());
        let n = self.axis;
        // Cross-product matrix [n]ₓ: ([n]ₓ)ⱼₖ = -Σₗ ε_jkl nₗ.
        let cross = [
            [T::zero(), -n[2], n[1]],
            [n[2], T::zero(), -n[0]],
            [-n[1], n[0], T::zero()],
        ];
        let mut t = [[T::zero(); 4]; 4];
        t[0][0] = T::one();
        for j in 0..3 {
            for k in 0..3 {
                let kron = if j == k { T::one() } else { T::zero() };
                t[j + 1][k + 1] = co * kron + si * cross[j][k] + (T::one() - co) * n[j] * n[k];
            }
        }
        LorentzMatrix::raw(t)
    }
}
