//! JSON document model shared by every subcommand.
//!
//! A document is `{"kind": ..., "payload": ..., "meta": ...}` where the
//! payload shape must match the kind: a 2×2 array of `[re, im]` pairs for
//! spin matrices, a 4×4 real array for Lorentz matrices, and a flat
//! 4-array ordered (x⁰, x¹, x², x³) for vectors. Numbers render in the
//! shortest form that parses back to the same 64-bit float, so serialized
//! documents are stable byte-for-byte.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use spincover::{FourVectorF64, SpinMatrixF64};

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocKind {
    Spin,
    Lorentz,
    Fourvector,
}

impl core::fmt::Display for DocKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            DocKind::Spin => "spin",
            DocKind::Lorentz => "lorentz",
            DocKind::Fourvector => "fourvector",
        })
    }
}

/// Raw payload arrays; the variants have disjoint JSON shapes, so untagged
/// deserialization is unambiguous.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Spin([[[f64; 2]; 2]; 2]),
    Lorentz([[f64; 4]; 4]),
    Fourvector([f64; 4]),
}

impl Payload {
    fn kind(&self) -> DocKind {
        match self {
            Payload::Spin(_) => DocKind::Spin,
            Payload::Lorentz(_) => DocKind::Lorentz,
            Payload::Fourvector(_) => DocKind::Fourvector,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub kind: DocKind,
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<BTreeMap<String, String>>,
}

impl Document {
    pub fn spin(m: &SpinMatrixF64) -> Self {
        let e = m.entries();
        let pair = |r: usize, c: usize| [e[r][c].re, e[r][c].im];
        Document {
            kind: DocKind::Spin,
            payload: Payload::Spin([[pair(0, 0), pair(0, 1)], [pair(1, 0), pair(1, 1)]]),
            meta: None,
        }
    }

    pub fn lorentz(rows: &[[f64; 4]; 4]) -> Self {
        Document {
            kind: DocKind::Lorentz,
            payload: Payload::Lorentz(*rows),
            meta: None,
        }
    }

    pub fn fourvector(v: &FourVectorF64) -> Self {
        Document {
            kind: DocKind::Fourvector,
            payload: Payload::Fourvector(v.components()),
            meta: None,
        }
    }

    /// Parses a document and enforces the kind/payload consistency
    /// invariant. JSON-level failures exit 2, a payload whose shape
    /// contradicts the declared kind exits 1.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: Document = serde_json::from_str(text)
            .map_err(|e| CliError::parse(format!("ParseError {e}")))?;
        let got = doc.payload.kind();
        if got != doc.kind {
            return Err(CliError::domain(format!(
                "KindMismatch expected={} got={}",
                doc.kind, got
            )));
        }
        Ok(doc)
    }

    /// Rejects documents of the wrong kind for a command slot.
    pub fn expect_kind(&self, want: DocKind) -> Result<(), CliError> {
        if self.kind == want {
            Ok(())
        } else {
            Err(CliError::domain(format!(
                "KindMismatch expected={} got={}",
                want, self.kind
            )))
        }
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self).expect("document serializes")
        } else {
            serde_json::to_string(self).expect("document serializes")
        }
    }
}

/// Entry pairs back to a complex matrix. Parsed JSON numbers are always
/// finite, so the constructor cannot fail on this path.
pub fn spin_from_payload(e: &[[[f64; 2]; 2]; 2]) -> Result<SpinMatrixF64, CliError> {
    let c = |r: usize, col: usize| num_complex::Complex::new(e[r][col][0], e[r][col][1]);
    SpinMatrixF64::new([[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]]).map_err(CliError::from)
}
