//! Error type shared by all modules.
//!
//! Diagnostic payloads are reported as `f64` regardless of the working scalar
//! so the messages stay uniform and machine-parsable: one code word followed
//! by `key=value` pairs.

/// Failure cases surfaced by constructors and by the inverse covering maps.
#[derive(Debug, Clone, Copy, PartialEq, thiserror::Error)]
pub enum Error {
    /// A component was NaN or infinite.
    #[error("NonFinite")]
    NonFinite,
    /// Input matrix is not Hermitian within tolerance.
    #[error("NotHermitian defect={defect:e}")]
    NotHermitian {
        /// Largest entrywise deviation from the conjugate transpose.
        defect: f64,
    },
    /// Metric orthogonality fails: some entry of TᵀgT - g exceeds tolerance.
    #[error("NotLorentz max_violation={max_violation:e}")]
    NotLorentz {
        /// Largest entrywise violation of TᵀgT = g.
        max_violation: f64,
    },
    /// Determinant differs from 1 beyond tolerance.
    #[error("NonUnitDeterminant defect={defect:e}")]
    NonUnitDeterminant {
        /// |det - 1|.
        defect: f64,
    },
    /// The matrix lies outside the identity component of the Lorentz group,
    /// so no spin preimage exists.
    #[error("NotProperOrthochronous class={} det={det} t00={t00}", class_name(*.proper, *.orthochronous))]
    NotProperOrthochronous {
        /// Sign of the determinant (det > 0).
        proper: bool,
        /// Sign of the time-time entry (T⁰₀ > 0).
        orthochronous: bool,
        /// Determinant of the rejected matrix.
        det: f64,
        /// Time-time entry of the rejected matrix.
        t00: f64,
    },
    /// The requested inversion index carries no usable weight for this matrix.
    #[error("DegenerateIndex index={index} weight_magnitude={weight_magnitude:e}")]
    DegenerateIndex {
        /// Index 0..3 whose weight vanished.
        index: usize,
        /// Magnitude of the weight ½tr(τ′τ) at that index.
        weight_magnitude: f64,
    },
    /// Axis vector is not within tolerance of unit norm.
    #[error("AxisNotUnit norm={norm}")]
    AxisNotUnit {
        /// Euclidean norm of the rejected axis.
        norm: f64,
    },
}

fn class_name(proper: bool, orthochronous: bool) -> &'static str {
    match (proper, orthochronous) {
        (true, true) => "proper-orthochronous",
        (true, false) => "proper-antichronous",
        (false, true) => "improper-orthochronous",
        (false, false) => "improper-antichronous",
    }
}
