//! Shared helpers for the command-line test targets.
#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};

use homcat_cli::{run, serialize_structure, Structure, StructureFile};
use homcat_core::generators::{gen_cyclic_yd_fixtures, gen_kz2_qt, trivial_action};
use homcat_core::hom_structures::{AlgebraLike, HomAlgebra};
use homcat_core::rep_theory::{HComodule, HModule};
use homcat_core::{Field, LinMap};
use serde_json::Value;
use tempfile::TempDir;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/golden")
}

pub fn homcat(args: &[&str]) -> (i32, Value) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("homcat").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    let report = serde_json::from_slice(&out).unwrap_or(Value::Null);
    (code, report)
}

pub fn ids(report: &Value) -> Vec<String> {
    report["axioms"]
        .as_array()
        .map(|a| a.iter().map(|e| e["axiom_id"].as_str().unwrap().to_string()).collect())
        .unwrap_or_default()
}

pub fn write(dir: &Path, name: &str, file: StructureFile) -> String {
    let path = dir.join(name);
    fs::write(&path, serialize_structure(&file)).unwrap();
    path.to_str().unwrap().to_string()
}

pub struct Fixtures {
    pub _dir: TempDir,
    pub h: String,
    pub r: String,
    pub regular: String,
    pub comodule: String,
    pub algebra: String,
    pub trivial: String,
    pub yd: Vec<String>,
}

pub fn fixtures() -> Fixtures {
    let dir = TempDir::new().unwrap();
    let d = dir.path().to_path_buf();
    let q = Field::Rational;
    let (h, r) = gen_kz2_qt(q).unwrap();
    let over = |f: StructureFile| f.with_over(Some("H.json".into()));
    let regular = HModule::regular(&h);
    let comodule = HComodule::regular(&h);
    let trivial = HModule::new(trivial_action(q, 2, 2), LinMap::identity(q, 2)).unwrap();
    let algebra = HomAlgebra::new(h.mul().clone(), h.alpha().clone()).unwrap();
    let (yb, yds) = gen_cyclic_yd_fixtures(q, 3, 2).unwrap();
    write(
        &d,
        "Y.json",
        StructureFile::new(q, Structure::Bialgebra(yb.bialgebra().clone())),
    );
    let yd = yds
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            let file = StructureFile::new(q, Structure::Yd { hdim: 3, module: m }).with_over(Some("Y.json".into()));
            write(&d, &format!("yd{i}.json"), file)
        })
        .collect();
    Fixtures {
        h: write(&d, "H.json", StructureFile::new(q, Structure::Bialgebra(h.clone()))),
        r: write(&d, "R.json", StructureFile::new(q, Structure::RMatrix(r))),
        regular: write(
            &d,
            "M.json",
            over(StructureFile::new(
                q,
                Structure::Module {
                    hdim: 2,
                    module: regular,
                },
            )),
        ),
        comodule: write(
            &d,
            "C.json",
            over(StructureFile::new(q, Structure::Comodule { hdim: 2, comodule })),
        ),
        algebra: write(&d, "A.json", StructureFile::new(q, Structure::Algebra(algebra))),
        trivial: write(
            &d,
            "T.json",
            over(StructureFile::new(
                q,
                Structure::Module {
                    hdim: 2,
                    module: trivial,
                },
            )),
        ),
        yd,
        _dir: dir,
    }
}

pub const IN_SCOPE: [&str; 30] = [
    "eq1",
    "eq2",
    "eq3",
    "eq4",
    "eq5",
    "eq6",
    "eq7",
    "eq7111",
    "eq7112",
    "eq8",
    "eq9",
    "comodul1",
    "comodul2",
    "eq29",
    "eq30",
    "eq31",
    "eq38",
    "eq39",
    "eq60",
    "compmodulealgebra",
    "eq27",
    "eq45",
    "eq50",
    "eq145",
    "fig59",
    "homYD",
    "defB",
    "hYBeB",
    "eq3333c",
    "eq9999d",
];

/// Runs one invocation of every command over the fixtures and returns the
/// failing invocations together with every reported axiom id.
pub fn coverage_runs(f: &Fixtures) -> (Vec<String>, Vec<String>) {
    let out = f._dir.path().join("out.json");
    let out = out.to_str().unwrap();
    let (m, y) = (&f.regular, &f.yd);
    let runs: Vec<Vec<&str>> = vec![
        vec!["check", "bialgebra", &f.h],
        vec!["check", "module", m],
        vec!["check", "comodule", &f.comodule],
        vec!["check", "mha", "--algebra", &f.algebra, "--module", &f.trivial],
        vec!["check", "qt", "--bialgebra", &f.h, "--r", &f.r],
        vec!["check", "yd", &y[0]],
        vec!["twist", m, "--functor", "f", "--out", out],
        vec!["tensor", m, m, "--out", out],
        vec!["tensor", &y[0], &y[1], "--out", out],
        vec!["braiding", m, m, "--r", &f.r, "--out", out],
        vec!["hexagons", m, m, m, "--r", &f.r],
        vec!["bmap", m, "--r", &f.r, "--out", out],
        vec!["bmap", &y[0], &y[1], "--out", out],
        vec!["mixed-ybe", &y[0], &y[1], &y[2]],
        vec!["dehomify", "pentagon", &y[0], &y[1], &y[2], &y[3]],
        vec!["dehomify", "hexagons", &y[0], &y[1], &y[2]],
        vec!["dehomify", "cross-check", &y[0], &y[1], &y[2]],
    ];
    let mut failing = Vec::new();
    let mut seen = Vec::new();
    for args in &runs {
        let (code, rep) = homcat(args);
        if code != 0 {
            failing.push(format!("{args:?} exited {code}"));
        }
        seen.extend(ids(&rep));
    }
    (failing, seen)
}

/// In-scope ids with no reported axiom id equal to them or below them.
pub fn uncovered(seen: &[String]) -> Vec<&'static str> {
    let covered = |id: &str| seen.iter().any(|s| s == id || s.starts_with(&format!("{id}.")));
    IN_SCOPE.into_iter().filter(|id| !covered(id)).collect()
}
