//! JSON structure files: parsing, validation and canonical rendering.
//!
//! Scalars are strings (`"a"` or `"a/b"` over `Q`, residues over `F_p`).
//! Matrices are arrays of rows. Structure constants are cubes:
//! `mul[i][j][k]` is the coefficient of `e_k` in `e_i e_j`,
//! `comul[k][i][j]` that of `e_i ⊗ e_j` in `Δ(e_k)`,
//! `action[h][m][k]` that of `e_k` in `e_h · e_m`, and
//! `coaction[m][h][k]` that of `e_h ⊗ e_k` in `λ(e_m)`.

use std::fs;
use std::path::{Path, PathBuf};

use homcat_core::hom_structures::{
    comul_from_cube, comul_to_cube, mul_from_cube, mul_to_cube, AlgebraLike, CoalgebraLike, HomAlgebra, HomBialgebra,
    HomCoalgebra, Space,
};
use homcat_core::qt_braiding::RMatrix;
use homcat_core::rep_theory::{HComodule, HModule};
use homcat_core::yetter_drinfeld::YdModule;
use homcat_core::{flatten, Field, FieldElem, LinMap};
use serde_json::{json, Map, Value};

use crate::error::CliError;

type Cube = Vec<Vec<Vec<FieldElem>>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(HomBialgebra),
    Module { hdim: usize, module: HModule },
    Comodule { hdim: usize, comodule: HComodule },
    Yd { hdim: usize, module: YdModule },
    RMatrix(RMatrix),
    LinMap(LinMap),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Coalgebra(_) => "coalgebra",
            Structure::Bialgebra(_) => "bialgebra",
            Structure::Module { .. } => "module",
            Structure::Comodule { .. } => "comodule",
            Structure::Yd { .. } => "yd",
            Structure::RMatrix(_) => "rmatrix",
            Structure::LinMap(_) => "linmap",
        }
    }
}

/// A parsed file: the field, the structure and, for modules, comodules and
/// Yetter-Drinfeld modules, the name of the parent bialgebra file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureFile {
    pub field: Field,
    pub over: Option<String>,
    pub body: Structure,
}

impl StructureFile {
    pub fn new(field: Field, body: Structure) -> StructureFile {
        StructureFile {
            field,
            over: None,
            body,
        }
    }

    pub fn with_over(mut self, over: Option<String>) -> StructureFile {
        self.over = over;
        self
    }
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn field_from_json(v: &Value) -> Result<Field, CliError> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rational),
        Value::Object(o) if o.len() == 1 => {
            let p = o
                .get("Fp")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("field must be \"Q\" or {\"Fp\": p}"))?;
            Ok(Field::prime(p)?)
        }
        _ => Err(bad("field must be \"Q\" or {\"Fp\": p}")),
    }
}

fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rational => json!("Q"),
        Field::Prime(p) => json!({ "Fp": p }),
    }
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| bad(format!("missing field {key:?}")))
}

fn get_usize(obj: &Map<String, Value>, key: &str) -> Result<usize, CliError> {
    get(obj, key)?
        .as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| bad(format!("{key:?} must be a natural number")))
}

fn scalar(field: Field, v: &Value, what: &str) -> Result<FieldElem, CliError> {
    let s = v.as_str().ok_or_else(|| bad(format!("{what}: scalars are strings")))?;
    Ok(field.parse(s)?)
}

fn array<'a>(v: &'a Value, len: usize, what: &str) -> Result<&'a Vec<Value>, CliError> {
    let a = v.as_array().ok_or_else(|| bad(format!("{what} must be an array")))?;
    if a.len() != len {
        return Err(bad(format!("{what} has length {}, expected {len}", a.len())));
    }
    Ok(a)
}

fn matrix_from_json(field: Field, v: &Value, rows: usize, cols: usize, what: &str) -> Result<LinMap, CliError> {
    let mut m = LinMap::zeros(field, rows, cols);
    for (r, row) in array(v, rows, what)?.iter().enumerate() {
        for (c, x) in array(row, cols, what)?.iter().enumerate() {
            m.set(r, c, scalar(field, x, what)?);
        }
    }
    Ok(m)
}

fn cube_from_json(field: Field, v: &Value, dims: [usize; 3], what: &str) -> Result<Cube, CliError> {
    array(v, dims[0], what)?
        .iter()
        .map(|plane| {
            array(plane, dims[1], what)?
                .iter()
                .map(|line| {
                    array(line, dims[2], what)?
                        .iter()
                        .map(|x| scalar(field, x, what))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn strings(xs: &[FieldElem]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn matrix_to_json(m: &LinMap) -> Value {
    Value::Array((0..m.rows()).map(|r| strings(m.row(r))).collect())
}

fn cube_to_json(c: &Cube) -> Value {
    Value::Array(
        c.iter()
            .map(|plane| Value::Array(plane.iter().map(|line| strings(line)).collect()))
            .collect(),
    )
}

/// `action[h][m][k]` as a `d x (hdim · d)` map.
fn action_from_cube(field: Field, cube: &Cube, hdim: usize, d: usize) -> LinMap {
    let mut act = LinMap::zeros(field, d, hdim * d);
    for (h, plane) in cube.iter().enumerate() {
        for (m, line) in plane.iter().enumerate() {
            for (k, x) in line.iter().enumerate() {
                act.set(k, flatten(h, m, d), x.clone());
            }
        }
    }
    act
}

fn action_to_cube(act: &LinMap, hdim: usize, d: usize) -> Cube {
    (0..hdim)
        .map(|h| {
            (0..d)
                .map(|m| (0..d).map(|k| act.get(k, flatten(h, m, d)).clone()).collect())
                .collect()
        })
        .collect()
}

/// `coaction[m][h][k]` as a `(hdim · d) x d` map.
fn coaction_from_cube(field: Field, cube: &Cube, hdim: usize, d: usize) -> LinMap {
    let mut lam = LinMap::zeros(field, hdim * d, d);
    for (m, plane) in cube.iter().enumerate() {
        for (h, line) in plane.iter().enumerate() {
            for (k, x) in line.iter().enumerate() {
                lam.set(flatten(h, k, d), m, x.clone());
            }
        }
    }
    lam
}

fn coaction_to_cube(lam: &LinMap, hdim: usize, d: usize) -> Cube {
    (0..d)
        .map(|m| {
            (0..hdim)
                .map(|h| (0..d).map(|k| lam.get(flatten(h, k, d), m).clone()).collect())
                .collect()
        })
        .collect()
}

/// Parses the text of a structure file.
pub fn parse_structure(text: &str) -> Result<StructureFile, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    let obj = v.as_object().ok_or_else(|| bad("a structure file is a JSON object"))?;
    let field = field_from_json(get(obj, "field")?)?;
    let kind = get(obj, "kind")?.as_str().ok_or_else(|| bad("kind must be a string"))?;
    let over = match obj.get("over") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(bad("over must be a file name")),
    };
    let body = match kind {
        "algebra" => {
            let n = get_usize(obj, "dim")?;
            let mul = mul_from_cube(field, &cube_from_json(field, get(obj, "mul")?, [n, n, n], "mul")?)?;
            let alpha = matrix_from_json(field, get(obj, "alpha")?, n, n, "alpha")?;
            Structure::Algebra(HomAlgebra::new(mul, alpha)?)
        }
        "coalgebra" => {
            let n = get_usize(obj, "dim")?;
            let comul = comul_from_cube(field, &cube_from_json(field, get(obj, "comul")?, [n, n, n], "comul")?)?;
            let psi = matrix_from_json(field, get(obj, "psi")?, n, n, "psi")?;
            Structure::Coalgebra(HomCoalgebra::new(comul, psi)?)
        }
        "bialgebra" => {
            let n = get_usize(obj, "dim")?;
            let mul = mul_from_cube(field, &cube_from_json(field, get(obj, "mul")?, [n, n, n], "mul")?)?;
            let comul = comul_from_cube(field, &cube_from_json(field, get(obj, "comul")?, [n, n, n], "comul")?)?;
            let alpha = matrix_from_json(field, get(obj, "alpha")?, n, n, "alpha")?;
            let psi = matrix_from_json(field, get(obj, "psi")?, n, n, "psi")?;
            Structure::Bialgebra(HomBialgebra::new(mul, comul, alpha, psi)?)
        }
        "module" => {
            let (d, hdim) = (get_usize(obj, "dim")?, get_usize(obj, "hdim")?);
            let cube = cube_from_json(field, get(obj, "action")?, [hdim, d, d], "action")?;
            let alpha = matrix_from_json(field, get(obj, "alpha")?, d, d, "alpha")?;
            let module = HModule::new(action_from_cube(field, &cube, hdim, d), alpha)?;
            Structure::Module { hdim, module }
        }
        "comodule" => {
            let (d, hdim) = (get_usize(obj, "dim")?, get_usize(obj, "hdim")?);
            let cube = cube_from_json(field, get(obj, "coaction")?, [d, hdim, d], "coaction")?;
            let psi = matrix_from_json(field, get(obj, "psi")?, d, d, "psi")?;
            let comodule = HComodule::new(coaction_from_cube(field, &cube, hdim, d), psi)?;
            Structure::Comodule { hdim, comodule }
        }
        "yd" => {
            let (d, hdim) = (get_usize(obj, "dim")?, get_usize(obj, "hdim")?);
            let act = cube_from_json(field, get(obj, "action")?, [hdim, d, d], "action")?;
            let coact = cube_from_json(field, get(obj, "coaction")?, [d, hdim, d], "coaction")?;
            let alpha = matrix_from_json(field, get(obj, "alpha")?, d, d, "alpha")?;
            let module = YdModule::new(
                action_from_cube(field, &act, hdim, d),
                coaction_from_cube(field, &coact, hdim, d),
                alpha,
            )?;
            Structure::Yd { hdim, module }
        }
        "rmatrix" => {
            let n = get_usize(obj, "dim")?;
            let m = matrix_from_json(field, get(obj, "coeffs")?, n, n, "coeffs")?;
            Structure::RMatrix(RMatrix::new(field, n, m.entries().to_vec())?)
        }
        "linmap" => {
            let (r, c) = (get_usize(obj, "rows")?, get_usize(obj, "cols")?);
            Structure::LinMap(matrix_from_json(field, get(obj, "entries")?, r, c, "entries")?)
        }
        other => return Err(bad(format!("unknown kind {other:?}"))),
    };
    let takes_over = matches!(
        body,
        Structure::Module { .. } | Structure::Comodule { .. } | Structure::Yd { .. }
    );
    if over.is_some() && !takes_over {
        return Err(bad(format!("a {kind} file has no parent bialgebra")));
    }
    Ok(StructureFile { field, over, body })
}

/// The JSON value of a structure file.
pub fn structure_to_json(file: &StructureFile) -> Value {
    let mut obj = Map::new();
    obj.insert("field".into(), field_to_json(file.field));
    obj.insert("kind".into(), json!(file.body.kind()));
    if let Some(over) = &file.over {
        obj.insert("over".into(), json!(over));
    }
    match &file.body {
        Structure::Algebra(a) => {
            obj.insert("dim".into(), json!(a.dim()));
            obj.insert("mul".into(), cube_to_json(&mul_to_cube(a.mul())));
            obj.insert("alpha".into(), matrix_to_json(a.alpha()));
        }
        Structure::Coalgebra(c) => {
            obj.insert("dim".into(), json!(c.dim()));
            obj.insert("comul".into(), cube_to_json(&comul_to_cube(c.comul())));
            obj.insert("psi".into(), matrix_to_json(c.psi()));
        }
        Structure::Bialgebra(h) => {
            obj.insert("dim".into(), json!(h.dim()));
            obj.insert("mul".into(), cube_to_json(&mul_to_cube(h.mul())));
            obj.insert("comul".into(), cube_to_json(&comul_to_cube(h.comul())));
            obj.insert("alpha".into(), matrix_to_json(h.alpha()));
            obj.insert("psi".into(), matrix_to_json(h.psi()));
        }
        Structure::Module { hdim, module } => {
            let d = module.dim();
            obj.insert("dim".into(), json!(d));
            obj.insert("hdim".into(), json!(hdim));
            obj.insert(
                "action".into(),
                cube_to_json(&action_to_cube(module.action(), *hdim, d)),
            );
            obj.insert("alpha".into(), matrix_to_json(module.alpha()));
        }
        Structure::Comodule { hdim, comodule } => {
            let d = comodule.dim();
            obj.insert("dim".into(), json!(d));
            obj.insert("hdim".into(), json!(hdim));
            obj.insert(
                "coaction".into(),
                cube_to_json(&coaction_to_cube(comodule.coaction(), *hdim, d)),
            );
            obj.insert("psi".into(), matrix_to_json(comodule.psi()));
        }
        Structure::Yd { hdim, module } => {
            let d = module.dim();
            obj.insert("dim".into(), json!(d));
            obj.insert("hdim".into(), json!(hdim));
            obj.insert(
                "action".into(),
                cube_to_json(&action_to_cube(module.action(), *hdim, d)),
            );
            obj.insert(
                "coaction".into(),
                cube_to_json(&coaction_to_cube(module.coaction(), *hdim, d)),
            );
            obj.insert("alpha".into(), matrix_to_json(module.alpha()));
        }
        Structure::RMatrix(r) => {
            let n = r.dim();
            obj.insert("dim".into(), json!(n));
            let rows = (0..n).map(|a| strings(&r.coeffs()[a * n..(a + 1) * n])).collect();
            obj.insert("coeffs".into(), Value::Array(rows));
        }
        Structure::LinMap(m) => {
            obj.insert("rows".into(), json!(m.rows()));
            obj.insert("cols".into(), json!(m.cols()));
            obj.insert("entries".into(), matrix_to_json(m));
        }
    }
    Value::Object(obj)
}

/// Canonical text: sorted keys, two-space indentation, arrays of scalars
/// on one line, trailing newline.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Object(obj) if !obj.is_empty() => {
            let mut keys: Vec<&String> = obj.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&Value::String((*k).clone()).to_string());
                out.push_str(": ");
                write_value(&obj[*k], indent + 1, out);
                if i + 1 < keys.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(item, indent + 1, out);
                if i + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

/// Canonical text of a structure file.
pub fn serialize_structure(file: &StructureFile) -> String {
    render(&structure_to_json(file))
}

pub fn load(path: &Path) -> Result<StructureFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    parse_structure(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn save(path: &Path, file: &StructureFile) -> Result<(), CliError> {
    fs::write(path, serialize_structure(file)).map_err(|e| CliError::Io(path.display().to_string(), e))
}

/// Resolves a parent reference against the directory of the referring file.
pub fn resolve_over(referrer: &Path, over: &str) -> PathBuf {
    let p = Path::new(over);
    if p.is_absolute() {
        return p.to_path_buf();
    }
    referrer.parent().unwrap_or(Path::new("")).join(p)
}

/// The reference to write into a file at `target` pointing at `parent`:
/// the bare file name when both share a directory, else an absolute path.
pub fn over_reference(target: &Path, parent: &Path) -> String {
    let dir = |p: &Path| {
        let d = p.parent().unwrap_or(Path::new(""));
        let d = if d.as_os_str().is_empty() { Path::new(".") } else { d };
        fs::canonicalize(d).unwrap_or_else(|_| d.to_path_buf())
    };
    match parent.file_name() {
        Some(name) if dir(target) == dir(parent) => name.to_string_lossy().into_owned(),
        _ => fs::canonicalize(parent)
            .unwrap_or_else(|_| parent.to_path_buf())
            .display()
            .to_string(),
    }
}
