//! Four-vectors with signature (+,-,-,-) and their Hermitian 2×2 images.
//!
//! The embedding x ↦ Σᵢ xⁱσᵢ identifies ℝ³·¹ with Hermitian 2×2 matrices and
//! turns the Minkowski squared norm into the determinant.

use num_complex::Complex;

use crate::error::Error;
use crate::pauli::{SpinMatrix, EPS_I};
use crate::scalar::{cast, Scalar};

/// Metric matrix g = diag(1, -1, -1, -1).
pub fn metric<T: Scalar>() -> [[T; 4]; 4] {
    let mut g = [[T::zero(); 4]; 4];
    for i in 0..4 {
        g[i][i] = cast(EPS_I[i] as f64);
    }
    g
}

/// Point of ℝ³·¹, components (x⁰, x¹, x², x³).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector<T> {
    x: [T; 4],
}

impl<T: Scalar> FourVector<T> {
    /// Builds a vector, rejecting non-finite components.
    pub fn new(x: [T; 4]) -> Result<Self, Error> {
        if x.iter().all(|v| v.is_finite()) {
            Ok(Self { x })
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub(crate) fn raw(x: [T; 4]) -> Self {
        Self { x }
    }

    /// Component for index 0..=3.
    #[inline]
    pub fn get(&self, i: usize) -> T {
        self.x[i]
    }

    /// All four components.
    #[inline]
    pub fn components(&self) -> [T; 4] {
        self.x
    }

    /// Minkowski squared norm (x⁰)² - (x¹)² - (x²)² - (x³)².
    pub fn norm2(&self) -> T {
        let [x0, x1, x2, x3] = self.x;
        x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3
    }

    /// Hermitian image Σᵢ xⁱσᵢ; its determinant equals [`Self::norm2`].
    pub fn to_hermitian(&self) -> HermitianMatrix<T> {
        let [x0, x1, x2, x3] = self.x;
        let c = Complex::new;
        HermitianMatrix {
            m: SpinMatrix::raw([
                [c(x0 + x3, T::zero()), c(x1, -x2)],
                [c(x1, x2), c(x0 - x3, T::zero())],
            ]),
        }
    }

    /// Componentwise scaling.
    pub fn scaled(&self, f: T) -> Self {
        Self {
            x: self.x.map(|v| v * f),
        }
    }
}

impl<T: Scalar> core::ops::Add for FourVector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut x = self.x;
        for i in 0..4 {
            x[i] = x[i] + rhs.x[i];
        }
        Self { x }
    }
}

impl<T: Scalar> core::ops::Sub for FourVector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut x = self.x;
        for i in 0..4 {
            x[i] = x[i] - rhs.x[i];
        }
        Self { x }
    }
}

/// Hermitian 2×2 matrix (a, w̄; w, b) with a, b real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix<T> {
    m: SpinMatrix<T>,
}

impl<T: Scalar> HermitianMatrix<T> {
    /// Accepts a matrix that is Hermitian within tolerance and symmetrizes it
    /// to (M + M†)/2; larger deviations are rejected with the defect.
    pub fn new(m: SpinMatrix<T>) -> Result<Self, Error> {
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let tol = T::hermitian_tol();
        let d = m.dagger();
        let mut defect = T::zero();
        for r in 0..2 {
            for c in 0..2 {
                let gap = (m.entry(r, c) - d.entry(r, c)).norm();
                let scale = T::one().max(m.entry(r, c).norm());
                defect = defect.max(gap / scale);
            }
        }
        if defect > tol {
            return Err(Error::NotHermitian {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        let half = Complex::new(cast::<T>(0.5), T::zero());
        Ok(Self {
            m: (m + d).scale(half),
        })
    }

    /// Underlying matrix.
    #[inline]
    pub fn matrix(&self) -> &SpinMatrix<T> {
        &self.m
    }

    /// Inverse of the embedding: (½(a+b), Re w, Im w, ½(a-b)) where w is the
    /// lower-left entry.
    pub fn to_vector(&self) -> FourVector<T> {
        let half = cast::<T>(0.5);
        let a = self.m.entry(0, 0).re;
        let b = self.m.entry(1, 1).re;
        let w = self.m.entry(1, 0);
        FourVector {
            x: [(a + b) * half, w.re, w.im, (a - b) * half],
        }
    }
}

/// Coefficient split of the product of two Hermitian images.
///
/// Returns (x₀y₀ + x·y, x₀y + y₀x + x×y): the real symmetric part carries the
/// Euclidean dot product, the skew part carries the cross product on the
/// imaginary axis. The time coefficient has no skew part; any residue there is
/// rounding noise and is discarded.
pub fn geometric_product<T: Scalar>(x: &FourVector<T>, y: &FourVector<T>) -> FourVector<T> {
    let p = *x.to_hermitian().matrix() * *y.to_hermitian().matrix();
    let a = p.coefficients();
    debug_assert!(a.a(0).im.abs() <= T::arith_tol() * T::one().max(a.a(0).norm()));
    FourVector {
        x: [
            a.a(0).re,
            a.a(1).re + a.a(1).im,
            a.a(2).re + a.a(2).im,
            a.a(3).re + a.a(3).im,
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::basis;

    type V = FourVector<f64>;

    fn v(x: [f64; 4]) -> V {
        V::new(x).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn metric_is_signature_diagonal() {
        let g = metric::<f64>();
        for i in 0..4 {
            for j in 0..4 {
                let expect = if i == j { EPS_I[i] as f64 } else { 0.0 };
                assert_eq!(g[i][j], expect);
            }
        }
    }

    #[test]
    fn norm2_examples() {
        assert_eq!(v([1.0, 0.0, 0.0, 0.0]).norm2(), 1.0);
        assert_eq!(v([1.0, 1.0, 0.0, 0.0]).norm2(), 0.0);
        assert_eq!(v([2.0, 1.0, 0.0, 1.0]).norm2(), 2.0);
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(*v([1.0, 0.0, 0.0, 0.0]).to_hermitian().matrix(), basis(0));
        assert_eq!(*v([0.0, 0.0, 1.0, 0.0]).to_hermitian().matrix(), basis(2));
        let h = v([2.0, 1.0, 0.0, 1.0]).to_hermitian();
        assert_eq!(
            h.matrix().entries(),
            [[c(3.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(1.0, 0.0)]]
        );
        // det ∘ embedding = Minkowski norm².
        assert_eq!(h.matrix().det(), c(2.0, 0.0));
    }

    #[test]
    fn inverse_embedding_examples() {
        let id = HermitianMatrix::new(basis(0)).unwrap();
        assert_eq!(id.to_vector(), v([1.0, 0.0, 0.0, 0.0]));
        let s3 = HermitianMatrix::new(basis(3)).unwrap();
        assert_eq!(s3.to_vector(), v([0.0, 0.0, 0.0, 1.0]));
        let m = SpinMatrix::new([[c(3.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(1.0, 0.0)]]).unwrap();
        assert_eq!(HermitianMatrix::new(m).unwrap().to_vector(), v([2.0, 1.0, 0.0, 1.0]));
    }

    #[test]
    fn hermitian_constructor_symmetrizes_or_rejects() {
        // Rounding-level deviation is symmetrized away.
        let m = SpinMatrix::new([[c(1.0, 1e-15), c(2.0, 1.0)], [c(2.0, -1.0 - 1e-15), c(0.5, 0.0)]])
            .unwrap();
        let h = HermitianMatrix::new(m).unwrap();
        assert_eq!(h.matrix().entry(0, 0).im, 0.0);
        assert_eq!(h.matrix().entry(0, 1), h.matrix().entry(1, 0).conj());
        // A nilpotent matrix is not Hermitian at all.
        let n = SpinMatrix::new([[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert!(matches!(HermitianMatrix::new(n), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn geometric_product_examples() {
        let e1 = v([0.0, 1.0, 0.0, 0.0]);
        let e2 = v([0.0, 0.0, 1.0, 0.0]);
        // Orthogonal spatial vectors: pure cross product.
        assert_eq!(geometric_product(&e1, &e2), v([0.0, 0.0, 0.0, 1.0]));
        // Equal spatial vectors: pure dot product.
        assert_eq!(geometric_product(&e1, &e1), v([1.0, 0.0, 0.0, 0.0]));
        let x = v([1.0, 2.0, 0.0, 0.0]);
        let y = v([3.0, 0.0, 1.0, 0.0]);
        assert_eq!(geometric_product(&x, &y), v([3.0, 6.0, 1.0, 2.0]));
    }

    #[test]
    fn constructors_reject_non_finite() {
        assert_eq!(V::new([f64::NAN, 0.0, 0.0, 0.0]), Err(Error::NonFinite));
        assert_eq!(V::new([0.0, f64::INFINITY, 0.0, 0.0]), Err(Error::NonFinite));
    }
}
