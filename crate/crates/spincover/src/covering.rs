//! Forward and inverse maps of the spin double cover.
//!
//! Forward: a unit-determinant matrix A sends each σⱼ to AσⱼA†, and the
//! σ-coefficients of the four images assemble a real matrix
//! Tⁱⱼ = ½tr(σᵢAσⱼA†) that is always restricted Lorentz. The map is
//! two-to-one: A and -A land on the same T.
//!
//! Inverse: for each index i the recovery matrix
//! τ = Σⱼₖ Tʲₖ σᵢ′σⱼσᵢσₖ collapses to 4āⁱσᵢ′A whenever T is the image of A,
//! with signed weight ½tr(τ′τ) = 16ε_i(āⁱ)². Normalizing σᵢ′τ by
//! √(ε_i · weight) therefore recovers ±A. The weights satisfy
//! Σᵢ|wᵢ| = 16·T⁰₀ ≥ 16, so at least one index is usable for every
//! restricted matrix.

use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Error;
use crate::lorentz::LorentzMatrix;
use crate::pauli::{basis, levi_civita, PauliCoefficients, SpinMatrix, EPS_I, EPS_IJ};
use crate::scalar::{cast, Scalar};

/// 2×2 complex matrix with determinant 1 within the tolerance given at
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSpinMatrix<T> {
    m: SpinMatrix<T>,
}

impl<T: Scalar> UnitSpinMatrix<T> {
    /// Accepts `m` when |det m - 1| is within the default tolerance.
    pub fn new(m: SpinMatrix<T>) -> Result<Self, Error> {
        Self::with_tolerance(m, T::unit_det_tol())
    }

    /// Accepts `m` when |det m - 1| <= `tol`.
    ///
    /// `tol` must be positive.
    pub fn with_tolerance(m: SpinMatrix<T>, tol: T) -> Result<Self, Error> {
        assert!(tol > T::zero(), "determinant tolerance must be positive");
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        let defect = (m.det() - Complex::new(T::one(), T::zero())).norm();
        if defect <= tol {
            Ok(Self { m })
        } else {
            Err(Error::NonUnitDeterminant {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            })
        }
    }

    #[inline]
    pub(crate) fn raw(m: SpinMatrix<T>) -> Self {
        debug_assert!(
            (m.det() - Complex::new(T::one(), T::zero())).norm() <= T::degeneracy_threshold(),
            "raw unit matrix with determinant far from 1"
        );
        Self { m }
    }

    /// σ₀.
    pub fn identity() -> Self {
        Self {
            m: SpinMatrix::identity(),
        }
    }

    /// The underlying matrix.
    #[inline]
    pub fn matrix(&self) -> &SpinMatrix<T> {
        &self.m
    }

    /// The representative of {A, -A} whose first σ-coefficient component
    /// exceeding the scan tolerance, in the order
    /// (Re a⁰, Im a⁰, Re a¹, Im a¹, ...), is positive.
    ///
    /// Unit determinant forces at least one coefficient of modulus ≥ ½, so
    /// the scan always resolves.
    pub fn canonical_sign(&self) -> Self {
        let c = self.m.coefficients();
        for i in 0..4 {
            let z = c.a(i);
            for v in [z.re, z.im] {
                if v.abs() > T::sign_scan_tol() {
                    return if v > T::zero() { *self } else { -*self };
                }
            }
        }
        *self
    }
}

/// Matrix product; determinants multiply, so the product stays unit.
impl<T: Scalar> core::ops::Mul for UnitSpinMatrix<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self { m: self.m * rhs.m }
    }
}

/// The other point of the fiber {A, -A}.
impl<T: Scalar> core::ops::Neg for UnitSpinMatrix<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { m: -self.m }
    }
}

/// Image of `a` under the covering map, column j holding the
/// σ-coefficients of A σⱼ A†.
pub fn to_lorentz<T: Scalar>(a: &UnitSpinMatrix<T>) -> LorentzMatrix<T> {
    let m = *a.matrix();
    let d = m.dagger();
    let mut t = [[T::zero(); 4]; 4];
    for j in 0..4 {
        // A σⱼ A† is Hermitian, so its coefficients are real up to rounding.
        let col = (m * basis(j) * d).coefficients();
        for i in 0..4 {
            t[i][j] = col.a(i).re;
        }
    }
    LorentzMatrix::raw(t)
}

/// Same map as [`to_lorentz`], written out as the sixteen bilinear
/// expressions in the σ-coefficients aⁱ of A. Kept as an independent
/// formulation for cross-checking.
pub fn to_lorentz_expanded<T: Scalar>(a: &UnitSpinMatrix<T>) -> LorentzMatrix<T> {
    let c = a.matrix().coefficients();
    let [a0, a1, a2, a3] = *c.as_array();
    let two = cast::<T>(2.0);
    // 2Re(x·ȳ) and 2Im(x·ȳ).
    let rp = |x: Complex<T>, y: Complex<T>| two * (x * y.conj()).re;
    let ip = |x: Complex<T>, y: Complex<T>| two * (x * y.conj()).im;
    let [n0, n1, n2, n3] = [a0.norm_sqr(), a1.norm_sqr(), a2.norm_sqr(), a3.norm_sqr()];
    let t = [
        [
            n0 + n1 + n2 + n3,
            rp(a0, a1) + ip(a2, a3),
            rp(a0, a2) - ip(a1, a3),
            rp(a0, a3) + ip(a1, a2),
        ],
        [
            rp(a0, a1) - ip(a2, a3),
            n0 + n1 - n2 - n3,
            rp(a1, a2) - ip(a0, a3),
            rp(a1, a3) + ip(a0, a2),
        ],
        [
            rp(a0, a2) + ip(a1, a3),
            rp(a1, a2) + ip(a0, a3),
            n0 - n1 + n2 - n3,
            rp(a2, a3) - ip(a0, a1),
        ],
        [
            rp(a0, a3) - ip(a1, a2),
            rp(a1, a3) - ip(a0, a2),
            rp(a2, a3) + ip(a0, a1),
            n0 - n1 - n2 + n3,
        ],
    ];
    LorentzMatrix::raw(t)
}

/// Recovery matrix τ = Σⱼₖ Tʲₖ σᵢ′σⱼσᵢσₖ for one index, together with its
/// signed weight ½tr(τ′τ).
#[derive(Debug, Clone, Copy)]
pub struct RecoveryMatrix<T> {
    matrix: SpinMatrix<T>,
    index: usize,
    weight: Complex<T>,
}

impl<T: Scalar> RecoveryMatrix<T> {
    /// The matrix τ.
    #[inline]
    pub fn matrix(&self) -> &SpinMatrix<T> {
        &self.matrix
    }

    /// The index i the recovery was built with.
    #[inline]
    pub fn index(&self) -> usize {
        self.index
    }

    /// Signed weight ½tr(τ′τ); equals 16ε_i(āⁱ)² on images of the covering
    /// map and 0 exactly when the i-th coefficient of the preimage vanishes.
    #[inline]
    pub fn weight(&self) -> Complex<T> {
        self.weight
    }

    /// The preimage pair (±A): σᵢ′τ scaled by 1/√(ε_i · weight).
    ///
    /// Fails with [`Error::DegenerateIndex`] when |weight| falls below the
    /// scalar type's degeneracy threshold.
    pub fn normalized(&self) -> Result<(UnitSpinMatrix<T>, UnitSpinMatrix<T>), Error> {
        let magnitude = self.weight.norm();
        if magnitude < T::degeneracy_threshold() {
            return Err(Error::DegenerateIndex {
                index: self.index,
                weight_magnitude: magnitude.to_f64().unwrap_or(f64::NAN),
            });
        }
        // The ε_i factor keeps the normalized determinant at +1 rather
        // than ε_i.
        let root = self.weight.scale(cast::<T>(EPS_I[self.index] as f64)).sqrt();
        let plus = UnitSpinMatrix::raw((basis(self.index).conjugate() * self.matrix).scale(root.inv()));
        Ok((plus, -plus))
    }
}

/// Builds the recovery matrix of `t` for index `i`.
///
/// Panics if `i > 3`.
pub fn recovery_matrix<T: Scalar>(t: &LorentzMatrix<T>, i: usize) -> RecoveryMatrix<T> {
    assert!(i < 4, "recovery index out of range: {i}");
    let si = basis::<T>(i);
    let sip = si.conjugate();
    let mut tau = SpinMatrix::zero();
    for j in 0..4 {
        // Σₖ Tʲₖσₖ collapses the inner sum to one matrix per row.
        let row = PauliCoefficients::raw([
            Complex::new(t.entry(j, 0), T::zero()),
            Complex::new(t.entry(j, 1), T::zero()),
            Complex::new(t.entry(j, 2), T::zero()),
            Complex::new(t.entry(j, 3), T::zero()),
        ]);
        tau = tau + sip * basis(j) * si * SpinMatrix::from_coefficients(&row);
    }
    let weight = (tau.conjugate() * tau).trace().scale(cast::<T>(0.5));
    RecoveryMatrix {
        matrix: tau,
        index: i,
        weight,
    }
}

/// Preimage pair of `t` through the index-`i` recovery matrix.
///
/// Panics if `i > 3`; fails with [`Error::DegenerateIndex`] when the weight
/// at `i` is negligible.
pub fn to_spin_indexed<T: Scalar>(
    t: &LorentzMatrix<T>,
    i: usize,
) -> Result<(UnitSpinMatrix<T>, UnitSpinMatrix<T>), Error> {
    recovery_matrix(t, i).normalized()
}

/// Preimage pair of `t` for index `i` by the closed-form entry expressions,
/// bypassing the σ-product sums. Kept as an independent formulation for
/// cross-checking [`to_spin_indexed`]; the two agree up to a shared overall
/// sign.
///
/// Panics if `i > 3`; fails with [`Error::DegenerateIndex`] when the
/// normalizer at `i` is negligible.
pub fn to_spin_entrywise<T: Scalar>(
    t: &LorentzMatrix<T>,
    i: usize,
) -> Result<(UnitSpinMatrix<T>, UnitSpinMatrix<T>), Error> {
    assert!(i < 4, "recovery index out of range: {i}");
    let re = |x: T| Complex::new(x, T::zero());
    let im = |x: T| Complex::new(T::zero(), x);
    let eps = |a: usize, b: usize| cast::<T>(EPS_IJ[a][b] as f64);
    let lc = |a: usize, b: usize, c: usize| cast::<T>(levi_civita(a, b, c) as f64);

    // Unnormalized preimage coefficients nⁱ of σᵢ′τ.
    let mut n = [Complex::<T>::zero(); 4];
    if i == 0 {
        n[0] = re(t.trace());
        for j in 1..4 {
            let mut s = T::zero();
            for k in 1..4 {
                for l in 1..4 {
                    if levi_civita(j, k, l) != 0 {
                        s = s + lc(j, k, l) * t.entry(k, l);
                    }
                }
            }
            n[j] = re(t.entry(j, 0) + t.entry(0, j)) + im(s);
        }
    } else {
        let mut s = T::zero();
        for j in 1..4 {
            for k in 1..4 {
                if levi_civita(i, j, k) != 0 {
                    s = s + eps(i, j) * lc(i, j, k) * t.entry(j, k);
                }
            }
        }
        n[0] = re(t.entry(i, 0) + t.entry(0, i)) + im(s);
        let mut twisted_trace = T::zero();
        for j in 0..4 {
            twisted_trace = twisted_trace + eps(i, j) * t.entry(j, j);
        }
        n[i] = re(twisted_trace);
        for j in 1..4 {
            if j == i {
                continue;
            }
            let mut s = T::zero();
            for k in 1..4 {
                if levi_civita(i, k, j) != 0 {
                    s = s + lc(i, k, j) * (eps(i, k) * t.entry(k, 0) + t.entry(0, k));
                }
            }
            n[j] = re(t.entry(i, j) - eps(i, j) * t.entry(j, i)) + im(s);
        }
    }

    // Normalizer² = 4 + (tr M)² - tr(M²) - 2iΣ ε_jkl(ε_ij Tʲ₀ + T⁰ⱼ)ε_ik Tᵏₗ
    // with M the row-sign twist of T; it reproduces the recovery weight.
    let m = t.sign_twist(i);
    let mut tr_m = T::zero();
    let mut tr_m2 = T::zero();
    for j in 0..4 {
        tr_m = tr_m + m[j][j];
        for k in 0..4 {
            tr_m2 = tr_m2 + m[j][k] * m[k][j];
        }
    }
    let mut cross = T::zero();
    for j in 1..4 {
        for k in 1..4 {
            for l in 1..4 {
                if levi_civita(j, k, l) != 0 {
                    cross = cross
                        + lc(j, k, l)
                            * (eps(i, j) * t.entry(j, 0) + t.entry(0, j))
                            * eps(i, k)
                            * t.entry(k, l);
                }
            }
        }
    }
    let normalizer2 = Complex::new(cast::<T>(4.0) + tr_m * tr_m - tr_m2, -(cast::<T>(2.0) * cross));

    let magnitude = normalizer2.norm();
    if magnitude < T::degeneracy_threshold() {
        return Err(Error::DegenerateIndex {
            index: i,
            weight_magnitude: magnitude.to_f64().unwrap_or(f64::NAN),
        });
    }
    let root = normalizer2.scale(cast::<T>(EPS_I[i] as f64)).sqrt();
    let plus = UnitSpinMatrix::raw(
        SpinMatrix::from_coefficients(&PauliCoefficients::raw(n)).scale(root.inv()),
    );
    Ok((plus, -plus))
}

/// Canonical preimage of `t`: rejects matrices outside the restricted
/// component, recovers through the index of largest weight magnitude, and
/// fixes the fiber sign with [`UnitSpinMatrix::canonical_sign`].
pub fn to_spin<T: Scalar>(t: &LorentzMatrix<T>) -> Result<UnitSpinMatrix<T>, Error> {
    let class = t.classify();
    if !class.is_restricted() {
        return Err(Error::NotProperOrthochronous {
            proper: class.proper,
            orthochronous: class.orthochronous,
            det: t.det().to_f64().unwrap_or(f64::NAN),
            t00: t.entry(0, 0).to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut best = recovery_matrix(t, 0);
    for i in 1..4 {
        let rec = recovery_matrix(t, i);
        if rec.weight().norm() > best.weight().norm() {
            best = rec;
        }
    }
    let (plus, _) = best.normalized()?;
    Ok(plus.canonical_sign())
}

/// Draws a pseudo-random unit-determinant matrix: four complex standard
/// normal entries, resampled while |det| < 10⁻³, then scaled by the
/// principal root of 1/det.
pub fn sample_unit_spin<T, R>(rng: &mut R) -> UnitSpinMatrix<T>
where
    T: Scalar,
    R: Rng + ?Sized,
    StandardNormal: Distribution<T>,
{
    loop {
        let mut draw = || {
            Complex::new(
                rng.sample::<T, _>(StandardNormal),
                rng.sample::<T, _>(StandardNormal),
            )
        };
        let m = SpinMatrix::raw([[draw(), draw()], [draw(), draw()]]);
        let d = m.det();
        if d.norm() < cast::<T>(1e-3) {
            continue;
        }
        return UnitSpinMatrix::raw(m.scale(d.sqrt().inv()));
    }
}
