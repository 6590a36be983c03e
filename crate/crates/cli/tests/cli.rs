mod common;

use std::collections::BTreeSet;
use std::fs;
use std::process::Command;

use common::{coverage_runs, fixtures, golden_dir, homcat, ids, uncovered, write};
use homcat_cli::{parse_structure, run, serialize_structure, Structure, StructureFile};
use homcat_core::generators::gen_kz2_qt;
use homcat_core::qt_braiding::RMatrix;
use homcat_core::rep_theory::HModule;
use homcat_core::{Field, LinMap};
use serde_json::Value;
use tempfile::TempDir;

#[test]
fn golden_files_round_trip_byte_for_byte() {
    let mut kinds = BTreeSet::new();
    for entry in fs::read_dir(golden_dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        let parsed = parse_structure(&text).unwrap();
        assert_eq!(serialize_structure(&parsed), text, "{}", path.display());
        kinds.insert(parsed.body.kind());
    }
    let all = [
        "algebra",
        "bialgebra",
        "coalgebra",
        "comodule",
        "linmap",
        "module",
        "rmatrix",
        "yd",
    ];
    assert_eq!(kinds, all.into_iter().collect());
}

#[test]
fn golden_files_pass_their_checks() {
    let g = |n: &str| golden_dir().join(n).to_str().unwrap().to_string();
    for (kind, file) in [
        ("algebra", "algebra.json"),
        ("coalgebra", "coalgebra.json"),
        ("bialgebra", "bialgebra.json"),
        ("module", "module.json"),
        ("comodule", "comodule.json"),
        ("yd", "yd.json"),
    ] {
        let (code, rep) = homcat(&["check", kind, &g(file)]);
        assert_eq!(code, 0, "{kind}: {rep}");
    }
}

#[test]
fn fmt_canonicalizes_scalars() {
    let dir = TempDir::new().unwrap();
    let raw = dir.path().join("m.json");
    fs::write(
        &raw,
        r#"{"kind":"linmap","field":"Q","rows":1,"cols":2,"entries":[["2/4","-6/3"]]}"#,
    )
    .unwrap();
    let mut out = Vec::new();
    let code = run(["homcat", "fmt", raw.to_str().unwrap()], &mut out, &mut Vec::new());
    assert_eq!(code, 0);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains(r#"["1/2", "-2"]"#));
    assert_eq!(serialize_structure(&parse_structure(&text).unwrap()), text);
}

/// The three documented invocations, run through the real binary.
#[test]
fn example_exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let bin = env!("CARGO_BIN_EXE_homcat");
    let h = d.join("H.json");
    let status = Command::new(bin)
        .args([
            "gen",
            "group-bialgebra",
            "--n",
            "2",
            "--k",
            "1",
            "--out",
            h.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));

    let out = Command::new(bin)
        .args(["check", "bialgebra", h.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let q = Field::Rational;
    let flip = write(
        d,
        "B.json",
        StructureFile::new(q, Structure::LinMap(homcat_core::flip_map(q, 2, 2))),
    );
    let id = write(
        d,
        "A.json",
        StructureFile::new(q, Structure::LinMap(LinMap::identity(q, 2))),
    );
    let out = Command::new(bin)
        .args(["ybe", "--map", &flip, "--alpha", &id])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let bad = RMatrix::from_ints(q, 2, &[0, 1, 0, 0]).unwrap();
    let r = write(d, "Rbad.json", StructureFile::new(q, Structure::RMatrix(bad)));
    let out = Command::new(bin)
        .args(["check", "qt", "--bialgebra", h.to_str().unwrap(), "--r", &r])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let rep: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rep["pass"], Value::Bool(false));
    let eq39 = rep["axioms"]
        .as_array()
        .unwrap()
        .iter()
        .find(|a| a["axiom_id"] == "eq39")
        .unwrap();
    assert_eq!(eq39["pass"], Value::Bool(false));
    assert!(eq39["counterexample"].is_object());
    assert!(!out.stderr.is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let path = |n: &str| d.join(n).to_str().unwrap().to_string();
    assert_eq!(homcat(&["check", "bialgebra", &path("missing.json")]).0, 2);
    fs::write(d.join("bad.json"), "{not json").unwrap();
    assert_eq!(homcat(&["check", "bialgebra", &path("bad.json")]).0, 2);
    fs::write(
        d.join("short.json"),
        r#"{"field":"Q","kind":"linmap","rows":2,"cols":2,"entries":[["1","0"]]}"#,
    )
    .unwrap();
    assert_eq!(
        homcat(&["ybe", "--map", &path("short.json"), "--alpha", &path("short.json")]).0,
        2
    );
    assert_eq!(homcat(&["frobnicate"]).0, 2);
    assert_eq!(homcat(&["gen", "kz2-qt", "--field", "2"]).0, 2);
    assert_eq!(homcat(&["gen", "kz2-qt", "--field", "4"]).0, 2);
}

#[test]
fn report_lists_axioms_in_order_and_overall_pass() {
    let (code, rep) = homcat(&["gen", "group-bialgebra", "--n", "3", "--k", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        ids(&rep),
        [
            "eq1",
            "eq2",
            "eq3",
            "eq4",
            "eq5",
            "alpha_psi",
            "eq6",
            "eq7",
            "eq7111",
            "eq7112"
        ]
    );
    assert_eq!(rep["pass"], Value::Bool(true));
    assert_eq!(rep["command"][0], "gen");
    assert!(rep["timing"]["elapsed_ms"].is_number());
}

/// Every identity family in scope appears in some report, and every
/// reported id is documented.
#[test]
fn reports_cover_every_identity() {
    let f = fixtures();
    let (failing, seen) = coverage_runs(&f);
    assert!(failing.is_empty(), "{failing:?}");
    assert!(uncovered(&seen).is_empty(), "uncovered ids: {:?}", uncovered(&seen));
    for id in &seen {
        assert!(homcat_core::axioms::describe(id).is_some(), "undocumented id {id}");
    }
    let table = fs::read_to_string(golden_dir().join("../axioms.md")).unwrap();
    for (id, _) in homcat_core::axioms::AXIOMS {
        assert!(
            table.contains(&format!("| `{id}` |")),
            "{id} missing from docs/axioms.md"
        );
    }
}

#[test]
fn artifacts_are_written_and_reloadable() {
    let f = fixtures();
    let d = f._dir.path();
    let out = d.join("MM.json");
    let (code, _) = homcat(&["tensor", &f.regular, &f.regular, "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, rep) = homcat(&["check", "module", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{rep}");

    let b = d.join("B.json");
    let (code, _) = homcat(&["bmap", &f.regular, "--r", &f.r, "--out", b.to_str().unwrap()]);
    assert_eq!(code, 0);
    let id = write(
        d,
        "I.json",
        StructureFile::new(Field::Rational, Structure::LinMap(LinMap::identity(Field::Rational, 2))),
    );
    let (code, _) = homcat(&["ybe", "--map", b.to_str().unwrap(), "--alpha", &id]);
    assert_eq!(code, 0);
}

#[test]
fn yau_twist_of_a_bialgebra_via_cli() {
    let f = fixtures();
    let d = f._dir.path();
    let q = Field::Rational;
    let alpha = write(
        d,
        "alpha.json",
        StructureFile::new(q, Structure::LinMap(LinMap::identity(q, 2))),
    );
    let out = d.join("tw.json");
    let (code, _) = homcat(&["twist", &f.h, "--alpha", &alpha, "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _) = homcat(&["check", "bialgebra", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let not_endo = write(
        d,
        "ne.json",
        StructureFile::new(q, Structure::LinMap(LinMap::from_ints(q, &[&[1, 1], &[0, 1]]))),
    );
    assert_eq!(homcat(&["twist", &f.h, "--alpha", &not_endo]).0, 2);
}

#[test]
fn bialgebra_override_replaces_parent_reference() {
    let f = fixtures();
    let d = f._dir.path();
    let q = Field::Rational;
    let (h, _) = gen_kz2_qt(q).unwrap();
    let orphan = write(
        d,
        "orphan.json",
        StructureFile::new(
            q,
            Structure::Module {
                hdim: 2,
                module: HModule::regular(&h),
            },
        ),
    );
    assert_eq!(homcat(&["check", "module", &orphan]).0, 2);
    assert_eq!(homcat(&["check", "module", &orphan, "--bialgebra", &f.h]).0, 0);
}
