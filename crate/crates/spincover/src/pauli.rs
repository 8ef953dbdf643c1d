//! 2×2 complex matrices over the σ-basis.
//!
//! σ₀ is the identity and σ₁, σ₂, σ₃ are the Pauli matrices. Every 2×2
//! complex matrix decomposes uniquely as A = Σᵢ aⁱσᵢ with complex
//! coefficients aⁱ = ½tr(σᵢA). The conjugate A′ flips the sign of the three
//! spatial coefficients, coincides with the adjugate, and satisfies
//! A′A = AA′ = det(A)·σ₀.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::Error;
use crate::scalar::{cast, complex_is_finite, Scalar};

/// Signature signs ε_i = (1, -1, -1, -1); also the diagonal of the metric.
pub const EPS_I: [i8; 4] = [1, -1, -1, -1];

/// Commutation signs: σᵢσⱼ = ε_ij σⱼσᵢ. Row i, column j.
pub const EPS_IJ: [[i8; 4]; 4] = [
    [1, 1, 1, 1],
    [1, 1, -1, -1],
    [1, -1, 1, -1],
    [1, -1, -1, 1],
];

/// Totally antisymmetric symbol on indices 1..=3 with ε₁₂₃ = 1.
///
/// Panics if any index lies outside 1..=3.
#[inline]
pub fn levi_civita(j: usize, k: usize, l: usize) -> i8 {
    assert!(
        (1..=3).contains(&j) && (1..=3).contains(&k) && (1..=3).contains(&l),
        "levi_civita indices must lie in 1..=3, got ({j}, {k}, {l})"
    );
    match (j, k, l) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// σ-basis matrix for index 0..=3.
///
/// Panics if `i > 3`.
pub fn basis<T: Scalar>(i: usize) -> SpinMatrix<T> {
    let o = T::zero();
    let l = T::one();
    let c = Complex::new;
    let e = match i {
        0 => [[c(l, o), c(o, o)], [c(o, o), c(l, o)]],
        1 => [[c(o, o), c(l, o)], [c(l, o), c(o, o)]],
        2 => [[c(o, o), c(o, -l)], [c(o, l), c(o, o)]],
        3 => [[c(l, o), c(o, o)], [c(o, o), c(-l, o)]],
        _ => panic!("basis index out of range: {i}"),
    };
    SpinMatrix { e }
}

/// 2×2 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinMatrix<T> {
    e: [[Complex<T>; 2]; 2],
}

impl<T: Scalar> SpinMatrix<T> {
    /// Builds a matrix from row-major entries, rejecting non-finite values.
    pub fn new(entries: [[Complex<T>; 2]; 2]) -> Result<Self, Error> {
        if entries.iter().flatten().all(complex_is_finite) {
            Ok(Self { e: entries })
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub(crate) fn raw(entries: [[Complex<T>; 2]; 2]) -> Self {
        Self { e: entries }
    }

    /// σ₀.
    pub fn identity() -> Self {
        basis(0)
    }

    /// Zero matrix.
    pub fn zero() -> Self {
        Self {
            e: [[Complex::zero(); 2]; 2],
        }
    }

    /// Entry at row `r`, column `c` (0-based).
    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> Complex<T> {
        self.e[r][c]
    }

    /// Row-major entries.
    #[inline]
    pub fn entries(&self) -> [[Complex<T>; 2]; 2] {
        self.e
    }

    /// σ-basis coefficients aⁱ = ½tr(σᵢ A).
    pub fn coefficients(&self) -> PauliCoefficients<T> {
        let half = Complex::new(cast::<T>(0.5), T::zero());
        let i = Complex::<T>::i();
        let [[e00, e01], [e10, e11]] = self.e;
        PauliCoefficients {
            a: [
                (e00 + e11) * half,
                (e01 + e10) * half,
                i * (e01 - e10) * half,
                (e00 - e11) * half,
            ],
        }
    }

    /// Rebuilds Σᵢ aⁱσᵢ from coefficients; entries are
    /// (a⁰+a³, a¹-ia²; a¹+ia², a⁰-a³).
    pub fn from_coefficients(c: &PauliCoefficients<T>) -> Self {
        let i = Complex::<T>::i();
        let [a0, a1, a2, a3] = c.a;
        Self {
            e: [[a0 + a3, a1 - i * a2], [a1 + i * a2, a0 - a3]],
        }
    }

    /// Conjugate A′: spatial coefficients negated. Equals the adjugate, so
    /// `a.conjugate() * a == a.det() * σ₀`.
    pub fn conjugate(&self) -> Self {
        let [[e00, e01], [e10, e11]] = self.e;
        Self {
            e: [[e11, -e01], [-e10, e00]],
        }
    }

    /// Conjugate transpose A†.
    pub fn dagger(&self) -> Self {
        let [[e00, e01], [e10, e11]] = self.e;
        Self {
            e: [[e00.conj(), e10.conj()], [e01.conj(), e11.conj()]],
        }
    }

    /// Determinant; in coefficients, (a⁰)² - (a¹)² - (a²)² - (a³)².
    #[inline]
    pub fn det(&self) -> Complex<T> {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Matrix trace.
    #[inline]
    pub fn trace(&self) -> Complex<T> {
        self.e[0][0] + self.e[1][1]
    }

    /// Entrywise scaling by a complex factor.
    pub fn scale(&self, f: Complex<T>) -> Self {
        let mut e = self.e;
        for row in &mut e {
            for z in row {
                *z = *z * f;
            }
        }
        Self { e }
    }

    /// True when every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.e.iter().flatten().all(complex_is_finite)
    }
}

impl<T: Scalar> core::ops::Add for SpinMatrix<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut e = self.e;
        for r in 0..2 {
            for c in 0..2 {
                e[r][c] = e[r][c] + rhs.e[r][c];
            }
        }
        Self { e }
    }
}

impl<T: Scalar> core::ops::Sub for SpinMatrix<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut e = self.e;
        for r in 0..2 {
            for c in 0..2 {
                e[r][c] = e[r][c] - rhs.e[r][c];
            }
        }
        Self { e }
    }
}

impl<T: Scalar> core::ops::Neg for SpinMatrix<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(Complex::new(-T::one(), T::zero()))
    }
}

/// Standard 2×2 matrix product.
impl<T: Scalar> core::ops::Mul for SpinMatrix<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let a = self.e;
        let b = rhs.e;
        let mut e = [[Complex::zero(); 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                e[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Self { e }
    }
}

impl<T: Scalar> core::ops::Mul<Complex<T>> for SpinMatrix<T> {
    type Output = Self;
    fn mul(self, rhs: Complex<T>) -> Self {
        self.scale(rhs)
    }
}

/// σ-basis coefficient 4-tuple (a⁰, a¹, a², a³).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PauliCoefficients<T> {
    a: [Complex<T>; 4],
}

impl<T: Scalar> PauliCoefficients<T> {
    /// Builds a coefficient tuple, rejecting non-finite values.
    pub fn new(a: [Complex<T>; 4]) -> Result<Self, Error> {
        if a.iter().all(complex_is_finite) {
            Ok(Self { a })
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub(crate) fn raw(a: [Complex<T>; 4]) -> Self {
        Self { a }
    }

    /// Coefficient aⁱ for index 0..=3.
    #[inline]
    pub fn a(&self, i: usize) -> Complex<T> {
        self.a[i]
    }

    /// All four coefficients.
    #[inline]
    pub fn as_array(&self) -> &[Complex<T>; 4] {
        &self.a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = SpinMatrix<f64>;
    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn s(i: usize) -> M {
        basis(i)
    }

    const I: C = Complex::new(0.0, 1.0);

    #[test]
    fn basis_values() {
        assert_eq!(s(0).entries(), [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        assert_eq!(s(1).entries(), [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        assert_eq!(s(2).entries(), [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]]);
        assert_eq!(s(3).entries(), [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]]);
    }

    #[test]
    #[should_panic(expected = "basis index out of range")]
    fn basis_rejects_index_4() {
        let _ = basis::<f64>(4);
    }

    #[test]
    fn levi_civita_values() {
        assert_eq!(levi_civita(1, 2, 3), 1);
        assert_eq!(levi_civita(2, 3, 1), 1);
        assert_eq!(levi_civita(3, 1, 2), 1);
        assert_eq!(levi_civita(2, 1, 3), -1);
        assert_eq!(levi_civita(1, 3, 2), -1);
        assert_eq!(levi_civita(3, 2, 1), -1);
        assert_eq!(levi_civita(1, 1, 2), 0);
        assert_eq!(levi_civita(3, 3, 3), 0);
        // Antisymmetry in every adjacent pair.
        for j in 1..=3 {
            for k in 1..=3 {
                for l in 1..=3 {
                    assert_eq!(levi_civita(j, k, l), -levi_civita(k, j, l));
                    assert_eq!(levi_civita(j, k, l), -levi_civita(j, l, k));
                }
            }
        }
    }

    #[test]
    #[should_panic(expected = "levi_civita indices")]
    fn levi_civita_rejects_index_0() {
        let _ = levi_civita(0, 1, 2);
    }

    #[test]
    fn products_match_multiplication_table() {
        // σ₁σ₂ = iσ₃ and cyclic; squares are σ₀.
        assert_eq!(s(1) * s(2), s(3) * I);
        assert_eq!(s(2) * s(3), s(1) * I);
        assert_eq!(s(3) * s(1), s(2) * I);
        assert_eq!(s(2) * s(1), s(3) * c(0.0, -1.0));
        for i in 0..4 {
            assert_eq!(s(i) * s(i), s(0));
            assert_eq!(s(0) * s(i), s(i));
            assert_eq!(s(i) * s(0), s(i));
        }
    }

    #[test]
    fn product_identities_hold_exactly() {
        // σᵢσⱼ = δᵢⱼσ₀ + iΣₖ εᵢⱼₖσₖ on spatial indices.
        for i in 1..=3 {
            for j in 1..=3 {
                let mut expect = if i == j { s(0) } else { M::zero() };
                for k in 1..=3 {
                    let f = levi_civita(i, j, k) as f64;
                    expect = expect + s(k) * c(0.0, f);
                }
                assert_eq!(s(i) * s(j), expect, "i={i} j={j}");
            }
        }
        // Orthogonality ½tr(σᵢσⱼ) = δᵢⱼ over all sixteen pairs.
        for i in 0..4 {
            for j in 0..4 {
                let tr = (s(i) * s(j)).trace() * c(0.5, 0.0);
                let expect = if i == j { c(1.0, 0.0) } else { c(0.0, 0.0) };
                assert_eq!(tr, expect);
            }
        }
        // Σⱼ₌₁³ σⱼσᵢσⱼ = -σᵢ and Σⱼ₌₀³ σⱼσᵢσⱼ = 0 for spatial i.
        for i in 1..=3 {
            let spatial = s(1) * s(i) * s(1) + s(2) * s(i) * s(2) + s(3) * s(i) * s(3);
            assert_eq!(spatial, -s(i));
            assert_eq!(s(0) * s(i) * s(0) + spatial, M::zero());
        }
    }

    #[test]
    fn sign_tables_are_consistent() {
        assert_eq!(EPS_I, [1, -1, -1, -1]);
        for i in 0..4 {
            assert_eq!(EPS_IJ[0][i], 1);
            assert_eq!(EPS_IJ[i][0], 1);
            assert_eq!(EPS_IJ[i][i], 1);
            for j in 0..4 {
                assert_eq!(EPS_IJ[i][j], EPS_IJ[j][i]);
                // σᵢσⱼ = ε_ij σⱼσᵢ, exactly.
                assert_eq!(s(i) * s(j), s(j) * s(i) * c(EPS_IJ[i][j] as f64, 0.0));
            }
            // σᵢ′ = ε_i σᵢ.
            assert_eq!(s(i).conjugate(), s(i) * c(EPS_I[i] as f64, 0.0));
        }
    }

    #[test]
    fn decompose_examples() {
        let a = s(3).coefficients();
        assert_eq!(*a.as_array(), [c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        let m = M::new([[c(2.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert_eq!(*m.coefficients().as_array(), [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        // Boost-shaped matrix: coefficients (cosh, sinh, 0, 0).
        let (ch, sh) = (0.5_f64.cosh(), 0.5_f64.sinh());
        let b = M::new([[c(ch, 0.0), c(sh, 0.0)], [c(sh, 0.0), c(ch, 0.0)]]).unwrap();
        assert_eq!(*b.coefficients().as_array(), [c(ch, 0.0), c(sh, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
    }

    #[test]
    fn reconstruct_entry_pattern() {
        for i in 0..4 {
            let mut a = [C::from(0.0); 4];
            a[i] = c(1.0, 0.0);
            assert_eq!(M::from_coefficients(&PauliCoefficients::new(a).unwrap()), s(i));
        }
        let a = PauliCoefficients::new([c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)]).unwrap();
        let m = M::from_coefficients(&a);
        assert_eq!(m.entries(), [[c(5.0, 0.0), c(2.0, -3.0)], [c(2.0, 3.0), c(-3.0, 0.0)]]);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(s(0).conjugate(), s(0));
        assert_eq!(s(3).conjugate(), -s(3));
        // A′A = det(A)·σ₀ for a generic matrix.
        let a = M::new([[c(1.0, 2.0), c(0.5, -1.0)], [c(-2.0, 0.25), c(3.0, 1.0)]]).unwrap();
        let d = a.det();
        assert_eq!(a.conjugate() * a, s(0) * d);
        assert_eq!(a * a.conjugate(), s(0) * d);
    }

    #[test]
    fn dagger_examples() {
        assert_eq!(s(2).dagger(), s(2));
        let n = M::new([[c(0.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]).unwrap();
        assert_eq!(n.dagger().entries(), [[c(0.0, 0.0), c(0.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        assert_eq!((s(1) * I).dagger(), s(1) * c(0.0, -1.0));
    }

    #[test]
    fn det_examples() {
        assert_eq!(s(0).det(), c(1.0, 0.0));
        assert_eq!(s(2).det(), c(-1.0, 0.0));
        let (ch, sh) = (1.0_f64.cosh(), 1.0_f64.sinh());
        let b = M::new([[c(ch, 0.0), c(sh, 0.0)], [c(sh, 0.0), c(ch, 0.0)]]).unwrap();
        assert!((b.det() - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn constructors_reject_non_finite() {
        assert_eq!(
            M::new([[c(f64::NAN, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, 0.0)]]),
            Err(Error::NonFinite)
        );
        assert_eq!(
            PauliCoefficients::new([c(0.0, f64::INFINITY), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
            Err(Error::NonFinite)
        );
    }

    #[test]
    fn coefficient_round_trip_is_tight() {
        let m = M::new([[c(0.3, -1.7), c(2.5, 0.125)], [c(-0.75, 4.0), c(1.0, -0.5)]]).unwrap();
        let back = M::from_coefficients(&m.coefficients());
        for r in 0..2 {
            for col in 0..2 {
                assert!((back.entry(r, col) - m.entry(r, col)).norm() < 1e-15);
            }
        }
    }
}
