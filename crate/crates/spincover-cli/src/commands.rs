//! Subcommand implementations.
//!
//! Each command takes already-read input text and returns the full stdout
//! payload, so the logic is callable in-process by tests; the binary wraps
//! these in argument parsing and file I/O. Errors carry the process exit
//! code (1 for domain and validation failures, 2 for parse and usage
//! failures) and a single-line message beginning with a code word.

use clap::ValueEnum;
use serde::Serialize;

use spincover::covering;
use spincover::generators::{AxisAngle, Rapidity};
use spincover::lorentz::orthogonality_defect;
use spincover::minkowski::HermitianMatrix;
use spincover::{Error, FourVectorF64, LorentzMatrixF64, UnitSpinMatrixF64};

use crate::document::{spin_from_payload, DocKind, Document, Payload};

/// Failure with its process exit code and one-line message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    /// Domain or validation failure: exit 1.
    pub fn domain(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }

    /// Parse or usage failure: exit 2.
    pub fn parse(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::domain(e.to_string())
    }
}

/// Recovery index selection for `to-spin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexChoice {
    /// Use the index with the largest weight magnitude.
    Auto,
    /// Force one index; may hit a degenerate weight.
    Fixed(usize),
}

/// Clap value parser for `--index auto|0|1|2|3`.
pub fn parse_index(s: &str) -> Result<IndexChoice, String> {
    match s {
        "auto" => Ok(IndexChoice::Auto),
        "0" | "1" | "2" | "3" => Ok(IndexChoice::Fixed(s.parse().unwrap())),
        _ => Err(String::from("expected auto, 0, 1, 2, or 3")),
    }
}

/// Clap value parser for `--axis x,y,z`.
pub fn parse_axis(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(String::from("expected three comma-separated components"));
    }
    let mut axis = [0.0_f64; 3];
    for (slot, part) in axis.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|e| format!("bad axis component {part:?}: {e}"))?;
    }
    Ok(axis)
}

/// Clap value parser for `--tol`: a positive finite float.
pub fn parse_tolerance(s: &str) -> Result<f64, String> {
    let tol: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(String::from("tolerance must be positive and finite"))
    }
}

/// Fiber sign selection for `to-spin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignChoice {
    /// The canonical-sign representative only.
    Canonical,
    /// Two documents, canonical first, then its negation.
    Both,
}

/// Which side of the cover a command works on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Spin,
    Lorentz,
}

/// Generator request for `generate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Generator {
    Boost { alpha: f64, axis: [f64; 3] },
    Rotation { theta: f64, axis: [f64; 3] },
}

fn parse_spin(text: &str, tol: f64) -> Result<UnitSpinMatrixF64, CliError> {
    let doc = Document::parse(text)?;
    doc.expect_kind(DocKind::Spin)?;
    let Payload::Spin(e) = &doc.payload else {
        unreachable!("kind/payload consistency enforced by parse")
    };
    Ok(UnitSpinMatrixF64::with_tolerance(spin_from_payload(e)?, tol)?)
}

fn parse_lorentz(text: &str, tol: f64) -> Result<LorentzMatrixF64, CliError> {
    let doc = Document::parse(text)?;
    doc.expect_kind(DocKind::Lorentz)?;
    let Payload::Lorentz(rows) = &doc.payload else {
        unreachable!("kind/payload consistency enforced by parse")
    };
    Ok(LorentzMatrixF64::validate(*rows, tol)?)
}

fn parse_fourvector(text: &str) -> Result<FourVectorF64, CliError> {
    let doc = Document::parse(text)?;
    doc.expect_kind(DocKind::Fourvector)?;
    let Payload::Fourvector(x) = &doc.payload else {
        unreachable!("kind/payload consistency enforced by parse")
    };
    Ok(FourVectorF64::new(*x)?)
}

fn restricted_gate(t: &LorentzMatrixF64) -> Result<(), CliError> {
    let class = t.classify();
    if class.is_restricted() {
        Ok(())
    } else {
        Err(Error::NotProperOrthochronous {
            proper: class.proper,
            orthochronous: class.orthochronous,
            det: t.det(),
            t00: t.entry(0, 0),
        }
        .into())
    }
}

/// spin document → its Lorentz image.
pub fn cmd_to_lorentz(input: &str, tol: f64, pretty: bool) -> Result<String, CliError> {
    let a = parse_spin(input, tol)?;
    let t = covering::to_lorentz(&a);
    Ok(Document::lorentz(t.rows()).to_json(pretty))
}

/// lorentz document → preimage document(s) under the cover.
pub fn cmd_to_spin(
    input: &str,
    tol: f64,
    index: IndexChoice,
    sign: SignChoice,
    pretty: bool,
) -> Result<String, CliError> {
    let t = parse_lorentz(input, tol)?;
    restricted_gate(&t)?;
    let canonical = match index {
        IndexChoice::Auto => covering::to_spin(&t)?,
        IndexChoice::Fixed(i) => covering::to_spin_indexed(&t, i)?.0.canonical_sign(),
    };
    let first = Document::spin(canonical.matrix()).to_json(pretty);
    match sign {
        SignChoice::Canonical => Ok(first),
        SignChoice::Both => {
            let second = Document::spin((-canonical).matrix()).to_json(pretty);
            Ok(format!("{first}\n{second}"))
        }
    }
}

/// Left-to-right product of two or more documents of one kind.
pub fn cmd_compose(
    inputs: &[String],
    level: Level,
    tol: f64,
    pretty: bool,
) -> Result<String, CliError> {
    if inputs.len() < 2 {
        return Err(CliError::parse("UsageError compose needs at least 2 inputs"));
    }
    match level {
        Level::Spin => {
            let mut acc = parse_spin(&inputs[0], tol)?;
            for text in &inputs[1..] {
                acc = acc * parse_spin(text, tol)?;
            }
            Ok(Document::spin(acc.matrix()).to_json(pretty))
        }
        Level::Lorentz => {
            let mut acc = parse_lorentz(&inputs[0], tol)?;
            for text in &inputs[1..] {
                acc = acc * parse_lorentz(text, tol)?;
            }
            Ok(Document::lorentz(acc.rows()).to_json(pretty))
        }
    }
}

/// Act on a four-vector: directly for a lorentz operator, through the
/// Hermitian embedding x ↦ AΨ(x)A† for a spin operator.
pub fn cmd_apply(
    operator: &str,
    vector: &str,
    tol: f64,
    pretty: bool,
) -> Result<String, CliError> {
    let v = parse_fourvector(vector)?;
    let doc = Document::parse(operator)?;
    let moved = match &doc.payload {
        Payload::Spin(e) => {
            let a = UnitSpinMatrixF64::with_tolerance(spin_from_payload(e)?, tol)?;
            let h = *a.matrix() * *v.to_hermitian().matrix() * a.matrix().dagger();
            HermitianMatrix::new(h)?.to_vector()
        }
        Payload::Lorentz(rows) => {
            let t = LorentzMatrixF64::validate(*rows, tol)?;
            t.apply(&v)
        }
        Payload::Fourvector(_) => {
            return Err(CliError::domain(format!(
                "KindMismatch expected=spin|lorentz got={}",
                doc.kind
            )))
        }
    };
    Ok(Document::fourvector(&moved).to_json(pretty))
}

/// Validation and classification report for `check`.
#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub orthogonality_defect: f64,
    pub det: f64,
    pub t00: f64,
    pub proper: bool,
    pub orthochronous: bool,
    pub class: String,
    pub trace_identity_defect: f64,
}

/// lorentz document → validation report; exits nonzero when the matrix is
/// not metric-orthogonal within tolerance, printing nothing on stdout.
pub fn cmd_check(input: &str, tol: f64, pretty: bool) -> Result<String, CliError> {
    let doc = Document::parse(input)?;
    doc.expect_kind(DocKind::Lorentz)?;
    let Payload::Lorentz(rows) = &doc.payload else {
        unreachable!("kind/payload consistency enforced by parse")
    };
    let t = LorentzMatrixF64::validate(*rows, tol)?;
    let class = t.classify();
    let report = CheckReport {
        orthogonality_defect: orthogonality_defect(t.rows()),
        det: t.det(),
        t00: t.entry(0, 0),
        proper: class.proper,
        orthochronous: class.orthochronous,
        class: class.to_string(),
        trace_identity_defect: t.trace_identity_defect(),
    };
    Ok(if pretty {
        serde_json::to_string_pretty(&report).expect("report serializes")
    } else {
        serde_json::to_string(&report).expect("report serializes")
    })
}

/// Boost or rotation document at either level.
pub fn cmd_generate(generator: Generator, level: Level, pretty: bool) -> Result<String, CliError> {
    let doc = match generator {
        Generator::Boost { alpha, axis } => {
            let b = Rapidity::new(alpha, axis)?;
            match level {
                Level::Spin => Document::spin(b.spin_matrix().matrix()),
                Level::Lorentz => Document::lorentz(b.lorentz_matrix().rows()),
            }
        }
        Generator::Rotation { theta, axis } => {
            let r = AxisAngle::new(theta, axis)?;
            match level {
                Level::Spin => Document::spin(r.spin_matrix().matrix()),
                Level::Lorentz => Document::lorentz(r.lorentz_matrix().rows()),
            }
        }
    };
    Ok(doc.to_json(pretty))
}
