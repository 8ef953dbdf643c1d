//! End-to-end pipeline tests driving the command layer in process.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spincover::covering::sample_unit_spin;
use spincover::pauli::SpinMatrix;
use spincover_cli::commands::{
    cmd_apply, cmd_check, cmd_compose, cmd_generate, cmd_to_lorentz, cmd_to_spin, Generator,
    IndexChoice, Level, SignChoice,
};
use spincover_cli::document::{spin_from_payload, DocKind, Document, Payload};

type M = SpinMatrix<f64>;

fn matrix_gap(x: &M, y: &M) -> f64 {
    let mut worst = 0.0_f64;
    for r in 0..2 {
        for c in 0..2 {
            worst = worst.max((x.entry(r, c) - y.entry(r, c)).norm());
        }
    }
    worst
}

fn parse_spin_doc(text: &str) -> (Document, M) {
    let doc = Document::parse(text).unwrap();
    assert_eq!(doc.kind, DocKind::Spin);
    let Payload::Spin(e) = &doc.payload else {
        panic!("spin document expected");
    };
    let m = spin_from_payload(e).unwrap();
    (doc, m)
}

/// The documented pipeline invariant: `to-spin` after `to-lorentz` returns
/// the canonical-sign representative of the input's fiber.
#[test]
fn pipeline_round_trip_lands_on_the_canonical_representative() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..100 {
        let a = sample_unit_spin::<f64, _>(&mut rng);
        let text = Document::spin(a.matrix()).to_json(false);
        let lorentz = cmd_to_lorentz(&text, 1e-9, false).unwrap();
        let spin = cmd_to_spin(&lorentz, 1e-9, IndexChoice::Auto, SignChoice::Canonical, false)
            .unwrap();
        let (doc, back) = parse_spin_doc(&spin);
        assert!(doc.meta.is_none(), "pipeline output carries no metadata");
        let gap = matrix_gap(&back, a.canonical_sign().matrix());
        assert!(gap <= 1e-9, "pipeline gap {gap:e}");
    }
}

/// Forcing either live index of a boost image returns the same preimage as
/// the automatic choice.
#[test]
fn forced_indices_agree_with_automatic_choice_on_boosts() {
    let lorentz = cmd_generate(
        Generator::Boost {
            alpha: 1.3,
            axis: [0.0, 1.0, 0.0],
        },
        Level::Lorentz,
        false,
    )
    .unwrap();
    let auto = cmd_to_spin(&lorentz, 1e-9, IndexChoice::Auto, SignChoice::Canonical, false).unwrap();
    for index in [0, 2] {
        let forced = cmd_to_spin(
            &lorentz,
            1e-9,
            IndexChoice::Fixed(index),
            SignChoice::Canonical,
            false,
        )
        .unwrap();
        let (_, x) = parse_spin_doc(&auto);
        let (_, y) = parse_spin_doc(&forced);
        let gap = matrix_gap(&x, &y);
        assert!(gap <= 1e-12, "index {index} disagrees with auto: {gap:e}");
    }
    // The dead indices of this boost refuse with the documented failure.
    for index in [1, 3] {
        let err = cmd_to_spin(
            &lorentz,
            1e-9,
            IndexChoice::Fixed(index),
            SignChoice::Both,
            false,
        )
        .unwrap_err();
        assert_eq!(err.code, 1);
        assert!(err.message.starts_with(&format!("DegenerateIndex index={index}")));
    }
}

/// `--sign both` prints the canonical representative and its negation, in
/// that order, as two parseable documents.
#[test]
fn both_signs_are_two_documents_covering_the_fiber() {
    let lorentz = cmd_generate(
        Generator::Rotation {
            theta: 1.1,
            axis: [0.0, 0.0, 1.0],
        },
        Level::Lorentz,
        false,
    )
    .unwrap();
    let both = cmd_to_spin(&lorentz, 1e-9, IndexChoice::Auto, SignChoice::Both, false).unwrap();
    let lines: Vec<&str> = both.lines().collect();
    assert_eq!(lines.len(), 2);
    let (_, first) = parse_spin_doc(lines[0]);
    let (_, second) = parse_spin_doc(lines[1]);
    assert_eq!(matrix_gap(&first, &(-second)), 0.0);
    let canonical = cmd_to_spin(&lorentz, 1e-9, IndexChoice::Auto, SignChoice::Canonical, false)
        .unwrap();
    assert_eq!(lines[0], canonical);
}

/// Pretty output parses back to the same document as compact output.
#[test]
fn pretty_and_compact_forms_parse_identically() {
    let compact = cmd_generate(
        Generator::Boost {
            alpha: 0.4,
            axis: [0.0, 0.0, 1.0],
        },
        Level::Spin,
        false,
    )
    .unwrap();
    let pretty = cmd_generate(
        Generator::Boost {
            alpha: 0.4,
            axis: [0.0, 0.0, 1.0],
        },
        Level::Spin,
        true,
    )
    .unwrap();
    assert_ne!(compact, pretty);
    assert!(pretty.contains('\n'));
    assert_eq!(
        Document::parse(&compact).unwrap(),
        Document::parse(&pretty).unwrap()
    );
    // Pretty documents are accepted as command input.
    assert_eq!(
        cmd_to_lorentz(&compact, 1e-9, false).unwrap(),
        cmd_to_lorentz(&pretty, 1e-9, false).unwrap()
    );
}

/// Composition at the two levels commutes with the covering map.
#[test]
fn composition_commutes_with_the_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(78);
    for _ in 0..50 {
        let a = sample_unit_spin::<f64, _>(&mut rng);
        let b = sample_unit_spin::<f64, _>(&mut rng);
        let spin_docs = vec![
            Document::spin(a.matrix()).to_json(false),
            Document::spin(b.matrix()).to_json(false),
        ];
        let composed_spin = cmd_compose(&spin_docs, Level::Spin, 1e-9, false).unwrap();
        let image_of_product = cmd_to_lorentz(&composed_spin, 1e-9, false).unwrap();

        let lorentz_docs = vec![
            cmd_to_lorentz(&spin_docs[0], 1e-9, false).unwrap(),
            cmd_to_lorentz(&spin_docs[1], 1e-9, false).unwrap(),
        ];
        let product_of_images = cmd_compose(&lorentz_docs, Level::Lorentz, 1e-9, false).unwrap();

        let x = Document::parse(&image_of_product).unwrap();
        let y = Document::parse(&product_of_images).unwrap();
        let (Payload::Lorentz(xr), Payload::Lorentz(yr)) = (&x.payload, &y.payload) else {
            panic!("lorentz documents expected");
        };
        for i in 0..4 {
            for j in 0..4 {
                let scale = 1.0_f64.max(xr[i][j].abs()).max(yr[i][j].abs());
                assert!(
                    (xr[i][j] - yr[i][j]).abs() <= 1e-10 * scale,
                    "composition mismatch at ({i},{j})"
                );
            }
        }
    }
}

/// The perpendicular-boost composition is no longer a boost, but its image
/// still validates and classifies as restricted.
#[test]
fn perpendicular_boosts_compose_into_a_restricted_image() {
    let x = cmd_generate(
        Generator::Boost {
            alpha: 0.6,
            axis: [1.0, 0.0, 0.0],
        },
        Level::Spin,
        false,
    )
    .unwrap();
    let y = cmd_generate(
        Generator::Boost {
            alpha: 0.9,
            axis: [0.0, 1.0, 0.0],
        },
        Level::Spin,
        false,
    )
    .unwrap();
    let composed = cmd_compose(&[x, y], Level::Spin, 1e-9, false).unwrap();
    let image = cmd_to_lorentz(&composed, 1e-9, false).unwrap();
    let report = cmd_check(&image, 1e-9, false).unwrap();
    assert!(report.contains(r#""class":"proper orthochronous""#), "{report}");
}

#[test]
fn usage_and_kind_errors_carry_documented_codes() {
    let spin = r#"{"kind":"spin","payload":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[1.0,0.0]]]}"#;
    let vector = r#"{"kind":"fourvector","payload":[1.0,0.0,0.0,0.0]}"#;

    let err = cmd_compose(&[spin.to_string()], Level::Spin, 1e-9, false).unwrap_err();
    assert_eq!(err.code, 2);
    assert!(err.message.starts_with("UsageError "));

    let err = cmd_to_lorentz(vector, 1e-9, false).unwrap_err();
    assert_eq!(err.code, 1);
    assert_eq!(err.message, "KindMismatch expected=spin got=fourvector");

    let err = cmd_apply(vector, vector, 1e-9, false).unwrap_err();
    assert_eq!(err.code, 1);
    assert_eq!(err.message, "KindMismatch expected=spin|lorentz got=fourvector");

    let err = cmd_check("{", 1e-9, false).unwrap_err();
    assert_eq!(err.code, 2);
    assert!(err.message.starts_with("ParseError "));
}

/// Tightening the tolerance flips acceptance of a slightly-off input, and
/// the refusal names the defect.
#[test]
fn tolerance_flag_governs_validation() {
    let near = Complex::new(1.0 + 3e-8, 0.0);
    let m = M::new([
        [near, Complex::new(0.0, 0.0)],
        [Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)],
    ])
    .unwrap();
    let text = Document::spin(&m).to_json(false);
    assert!(cmd_to_lorentz(&text, 1e-6, false).is_ok());
    let err = cmd_to_lorentz(&text, 1e-9, false).unwrap_err();
    assert_eq!(err.code, 1);
    assert!(err.message.starts_with("NonUnitDeterminant defect="));
}

/// Reading a missing file is a parse-level failure at the binary boundary.
#[test]
fn missing_file_exits_with_parse_code() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_spincover"))
        .args(["check", "/nonexistent/input.json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.starts_with("ParseError cannot read /nonexistent/input.json"),
        "{stderr}"
    );
}
