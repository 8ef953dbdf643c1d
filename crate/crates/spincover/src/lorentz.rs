//! 4×4 real matrices acting on ℝ³·¹: metric validation, component
//! classification, and the group operations.
//!
//! A matrix T is accepted when TᵀgT = g within tolerance. The four connected
//! components of that group are told apart by the signs of det T and of the
//! time-time entry T⁰₀; only the proper orthochronous component has spin
//! preimages.

use crate::error::Error;
use crate::minkowski::FourVector;
use crate::pauli::EPS_I;
use crate::scalar::{cast, Scalar};

/// Signs of (det T, T⁰₀), naming one of the four connected components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentClass {
    /// det T > 0.
    pub proper: bool,
    /// T⁰₀ > 0 (preserves time orientation).
    pub orthochronous: bool,
}

impl ComponentClass {
    /// True for the identity component, the domain of the spin cover.
    pub fn is_restricted(&self) -> bool {
        self.proper && self.orthochronous
    }
}

impl core::fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let p = if self.proper { "proper" } else { "improper" };
        let o = if self.orthochronous {
            "orthochronous"
        } else {
            "antichronous"
        };
        write!(f, "{p} {o}")
    }
}

/// Matrix with TᵀgT = g within the tolerance given at construction.
///
/// Row-major; the action on a vector is (Tx)ⁱ = Σⱼ Tⁱⱼ xʲ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzMatrix<T> {
    t: [[T; 4]; 4],
}

/// Largest entrywise violation of TᵀgT = g.
pub fn orthogonality_defect<T: Scalar>(rows: &[[T; 4]; 4]) -> T {
    let mut worst = T::zero();
    for j in 0..4 {
        for l in 0..4 {
            let mut s = T::zero();
            for i in 0..4 {
                s = s + cast::<T>(EPS_I[i] as f64) * rows[i][j] * rows[i][l];
            }
            let target = if j == l { cast(EPS_I[j] as f64) } else { T::zero() };
            worst = worst.max((s - target).abs());
        }
    }
    worst
}

impl<T: Scalar> LorentzMatrix<T> {
    /// Accepts `rows` when finite and metric-orthogonal within `tol`.
    ///
    /// `tol` must be positive.
    pub fn validate(rows: [[T; 4]; 4], tol: T) -> Result<Self, Error> {
        assert!(tol > T::zero(), "validation tolerance must be positive");
        if !rows.iter().flatten().all(|v| v.is_finite()) {
            return Err(Error::NonFinite);
        }
        let defect = orthogonality_defect(&rows);
        if defect <= tol {
            Ok(Self { t: rows })
        } else {
            Err(Error::NotLorentz {
                max_violation: defect.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    #[inline]
    pub(crate) fn raw(rows: [[T; 4]; 4]) -> Self {
        Self { t: rows }
    }

    /// Identity matrix.
    pub fn identity() -> Self {
        let mut t = [[T::zero(); 4]; 4];
        for i in 0..4 {
            t[i][i] = T::one();
        }
        Self { t }
    }

    /// Entry Tⁱⱼ (row i, column j).
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> T {
        self.t[i][j]
    }

    /// Row-major entries.
    #[inline]
    pub fn rows(&self) -> &[[T; 4]; 4] {
        &self.t
    }

    /// Matrix trace.
    pub fn trace(&self) -> T {
        self.t[0][0] + self.t[1][1] + self.t[2][2] + self.t[3][3]
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> T {
        let t = &self.t;
        let minor = |r: [usize; 3], c: [usize; 3]| -> T {
            t[r[0]][c[0]] * (t[r[1]][c[1]] * t[r[2]][c[2]] - t[r[1]][c[2]] * t[r[2]][c[1]])
                - t[r[0]][c[1]] * (t[r[1]][c[0]] * t[r[2]][c[2]] - t[r[1]][c[2]] * t[r[2]][c[0]])
                + t[r[0]][c[2]] * (t[r[1]][c[0]] * t[r[2]][c[1]] - t[r[1]][c[1]] * t[r[2]][c[0]])
        };
        let r = [1, 2, 3];
        t[0][0] * minor(r, [1, 2, 3]) - t[0][1] * minor(r, [0, 2, 3])
            + t[0][2] * minor(r, [0, 1, 3])
            - t[0][3] * minor(r, [0, 1, 2])
    }

    /// Component classification by the strict signs of det T and T⁰₀.
    pub fn classify(&self) -> ComponentClass {
        ComponentClass {
            proper: self.det() > T::zero(),
            orthochronous: self.t[0][0] > T::zero(),
        }
    }

    /// Action on a vector: (Tx)ⁱ = Σⱼ Tⁱⱼ xʲ.
    pub fn apply(&self, v: &FourVector<T>) -> FourVector<T> {
        let x = v.components();
        let mut y = [T::zero(); 4];
        for i in 0..4 {
            for j in 0..4 {
                y[i] = y[i] + self.t[i][j] * x[j];
            }
        }
        FourVector::raw(y)
    }

    /// Inverse from the metric relation: (T⁻¹)ⁱⱼ = ε_i ε_j Tʲᵢ.
    pub fn inverse(&self) -> Self {
        let mut t = [[T::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                t[i][j] = cast::<T>((EPS_I[i] * EPS_I[j]) as f64) * self.t[j][i];
            }
        }
        Self { t }
    }

    /// Row-sign twist: row j scaled by ε_ij. Index 0 leaves the matrix
    /// unchanged. The result is generally not metric-orthogonal, so it is
    /// returned raw.
    ///
    /// Panics if `i > 3`.
    pub fn sign_twist(&self, i: usize) -> [[T; 4]; 4] {
        assert!(i < 4, "sign twist index out of range: {i}");
        let mut t = self.t;
        for (j, row) in t.iter_mut().enumerate() {
            let f = cast::<T>(crate::pauli::EPS_IJ[i][j] as f64);
            for v in row {
                *v = *v * f;
            }
        }
        t
    }

    /// Absolute defect of the quadratic trace identity
    /// Σ_{k,j≥1}(Tᵏⱼ)² - Σ_{j≥1}(Tʲ₀)² - Σ_{j≥1}(T⁰ⱼ)² = 4 - (T⁰₀)²,
    /// which holds exactly on the group.
    pub fn trace_identity_defect(&self) -> T {
        let t = &self.t;
        let mut lhs = T::zero();
        for k in 1..4 {
            for j in 1..4 {
                lhs = lhs + t[k][j] * t[k][j];
            }
        }
        for j in 1..4 {
            lhs = lhs - t[j][0] * t[j][0] - t[0][j] * t[0][j];
        }
        let rhs = cast::<T>(4.0) - t[0][0] * t[0][0];
        (lhs - rhs).abs()
    }
}

/// Composition S·T: apply T first, then S.
impl<T: Scalar> core::ops::Mul for LorentzMatrix<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut t = [[T::zero(); 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let mut s = T::zero();
                for k in 0..4 {
                    s = s + self.t[i][k] * rhs.t[k][j];
                }
                t[i][j] = s;
            }
        }
        Self { t }
    }
}
