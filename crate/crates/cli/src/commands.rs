//! Command-line grammar and dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homcat_core::dehomify::{
    check_hexagons, check_pentagon, cross_check_yd, cross_check_yd_associator, ConstraintFamily, Obj,
};
use homcat_core::generators::{gen_group_bialgebra, gen_kz2_qt};
use homcat_core::hom_structures::{
    check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, yau_twist_algebra, yau_twist_bialgebra, AlgebraLike,
    CoalgebraLike, HomAlgebra, HomBialgebra, Space,
};
use homcat_core::qt_braiding::{
    b_from_qt, braiding_from_r, check_braiding_morphism, check_hexagon_instances, check_hom_ybe, check_r_conditions,
    check_weak_hom_ybe_instance, ybe_yau_twist, RMatrix,
};
use homcat_core::rep_theory::{
    check_comodule, check_module, check_module_hom_algebra, tensor_module, twist_module, HComodule, HModule, Twist,
};
use homcat_core::yetter_drinfeld::{b_yd, check_b_yd, check_yd, check_yd_mixed_ybe, yd_tensor, YdBase, YdModule};
use homcat_core::{CheckReport, Error, Field, LinMap};

use crate::error::CliError;
use crate::format::{load, over_reference, render, resolve_over, save, serialize_structure, Structure, StructureFile};
use crate::report::ReportFile;

#[derive(Debug, Parser)]
#[command(
    name = "homcat",
    version,
    about = "Exact checks for hom-algebras, hom-bialgebras, their modules and braidings",
    after_help = "Exit status: 0 when every axiom holds, 1 when one fails, 2 on invalid input."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a structure file.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Yau twist of an algebra or bialgebra, or F/G twist of a module.
    Twist(TwistArgs),
    /// Tensor product of two modules or two Yetter-Drinfeld modules.
    Tensor(TensorArgs),
    /// Braiding c_{U,V} from an R-matrix, checked as a module morphism.
    Braiding(BraidingArgs),
    /// The map B of a module over a quasitriangular hom-bialgebra or of two
    /// Yetter-Drinfeld modules.
    Bmap(BmapArgs),
    /// Check the hom-Yang-Baxter equation for a map and a twisting map.
    Ybe(YbeArgs),
    /// Mixed hom-Yang-Baxter equation for three Yetter-Drinfeld modules.
    MixedYbe(MixedYbeArgs),
    /// Hexagon instances of the braiding on three modules.
    Hexagons(HexagonArgs),
    /// Coherence of the dehomified associator and braiding.
    #[command(subcommand)]
    Dehomify(DehomifyCmd),
    /// Generate example structures.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Rewrite a structure file in canonical form.
    Fmt(FmtArgs),
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    Algebra {
        file: PathBuf,
    },
    Coalgebra {
        file: PathBuf,
    },
    Bialgebra {
        file: PathBuf,
    },
    Module {
        file: PathBuf,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
    },
    Comodule {
        file: PathBuf,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
    },
    /// Module hom-algebra: a module structure on the space of an algebra.
    Mha {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
    },
    /// Quasitriangular structure.
    Qt {
        #[arg(long)]
        bialgebra: PathBuf,
        #[arg(long)]
        r: PathBuf,
    },
    /// Yetter-Drinfeld module.
    Yd {
        file: PathBuf,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FunctorArg {
    F,
    G,
}

#[derive(Debug, Args)]
pub struct TwistArgs {
    pub file: PathBuf,
    /// Twisting map for a Yau twist of an algebra or bialgebra.
    #[arg(long, conflicts_with = "functor")]
    pub alpha: Option<PathBuf>,
    /// Twisting functor applied to a module.
    #[arg(long, value_enum)]
    pub functor: Option<FunctorArg>,
    #[arg(long)]
    pub bialgebra: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TensorArgs {
    pub left: PathBuf,
    pub right: PathBuf,
    #[arg(long)]
    pub bialgebra: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BraidingArgs {
    pub u: PathBuf,
    pub v: PathBuf,
    #[arg(long)]
    pub r: PathBuf,
    #[arg(long)]
    pub bialgebra: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BmapArgs {
    /// One module with --r, or two Yetter-Drinfeld modules.
    #[arg(num_args = 1..=2, required = true)]
    pub files: Vec<PathBuf>,
    #[arg(long)]
    pub r: Option<PathBuf>,
    #[arg(long)]
    pub bialgebra: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct YbeArgs {
    #[arg(long)]
    pub map: PathBuf,
    #[arg(long)]
    pub alpha: PathBuf,
    /// Replace a classical solution commuting with α ⊗ α by (α ⊗ α)B first.
    #[arg(long)]
    pub twist: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MixedYbeArgs {
    pub m: PathBuf,
    pub n: PathBuf,
    pub p: PathBuf,
    #[arg(long)]
    pub bialgebra: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HexagonArgs {
    pub u: PathBuf,
    pub v: PathBuf,
    pub w: PathBuf,
    #[arg(long)]
    pub r: PathBuf,
    #[arg(long)]
    pub bialgebra: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum DehomifyCmd {
    /// Pentagon for four Yetter-Drinfeld modules.
    Pentagon {
        #[arg(num_args = 4, required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
    },
    /// Both hexagons for three Yetter-Drinfeld modules.
    Hexagons {
        #[arg(num_args = 3, required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
    },
    /// Compare the built constraints with the Yetter-Drinfeld ones.
    CrossCheck {
        #[arg(num_args = 2..=3, required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        bialgebra: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCmd {
    /// Group bialgebra of Z_n twisted along g ↦ g^k.
    GroupBialgebra {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// "Q" or a prime p.
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: Field,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Group algebra of Z_2 with its triangular R-matrix.
    Kz2Qt {
        #[arg(long, default_value = "Q", value_parser = parse_field)]
        field: Field,
        /// Where to write the bialgebra.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the R-matrix.
        #[arg(long)]
        r_out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct FmtArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    if s == "Q" {
        return Ok(Field::Rational);
    }
    let p: u64 = s.parse().map_err(|_| format!("{s:?} is neither Q nor a prime"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

/// What a command produced.
enum Outcome {
    Report(ReportFile),
    Text(String),
}

fn wrong_kind(path: &Path, expected: &str, found: &StructureFile) -> CliError {
    CliError::Input(format!(
        "{}: expected a {expected} file, found {}",
        path.display(),
        found.body.kind()
    ))
}

fn load_bialgebra(path: &Path) -> Result<HomBialgebra, CliError> {
    let f = load(path)?;
    match f.body {
        Structure::Bialgebra(h) => Ok(h),
        _ => Err(wrong_kind(path, "bialgebra", &f)),
    }
}

fn load_rmatrix(path: &Path) -> Result<RMatrix, CliError> {
    let f = load(path)?;
    match f.body {
        Structure::RMatrix(r) => Ok(r),
        _ => Err(wrong_kind(path, "rmatrix", &f)),
    }
}

fn load_linmap(path: &Path) -> Result<LinMap, CliError> {
    let f = load(path)?;
    match f.body {
        Structure::LinMap(m) => Ok(m),
        _ => Err(wrong_kind(path, "linmap", &f)),
    }
}

/// The parent file of a module-like file: the override if given, else the
/// file's own reference.
fn parent_path(path: &Path, file: &StructureFile, over: Option<&Path>) -> Result<PathBuf, CliError> {
    match (over, &file.over) {
        (Some(p), _) => Ok(p.to_path_buf()),
        (None, Some(name)) => Ok(resolve_over(path, name)),
        (None, None) => Err(CliError::Input(format!(
            "{}: no parent bialgebra (set \"over\" or pass --bialgebra)",
            path.display()
        ))),
    }
}

struct WithParent<T> {
    value: T,
    hdim: usize,
    parent: PathBuf,
    bialgebra: HomBialgebra,
}

fn load_module(path: &Path, over: Option<&Path>) -> Result<WithParent<HModule>, CliError> {
    let f = load(path)?;
    let parent = parent_path(path, &f, over)?;
    match f.body {
        Structure::Module { hdim, module } => Ok(WithParent {
            value: module,
            hdim,
            bialgebra: load_bialgebra(&parent)?,
            parent,
        }),
        _ => Err(wrong_kind(path, "module", &f)),
    }
}

fn load_yd(path: &Path, over: Option<&Path>) -> Result<WithParent<YdModule>, CliError> {
    let f = load(path)?;
    let parent = parent_path(path, &f, over)?;
    match f.body {
        Structure::Yd { hdim, module } => Ok(WithParent {
            value: module,
            hdim,
            bialgebra: load_bialgebra(&parent)?,
            parent,
        }),
        _ => Err(wrong_kind(path, "yd", &f)),
    }
}

fn same_parent<T>(items: &[WithParent<T>]) -> Result<HomBialgebra, CliError> {
    let first = &items[0];
    for other in &items[1..] {
        if other.bialgebra != first.bialgebra {
            return Err(CliError::Input(format!(
                "{} and {} are different bialgebras",
                first.parent.display(),
                other.parent.display()
            )));
        }
    }
    Ok(first.bialgebra.clone())
}

fn load_modules(paths: &[&PathBuf], over: Option<&Path>) -> Result<(HomBialgebra, Vec<WithParent<HModule>>), CliError> {
    let items = paths
        .iter()
        .map(|p| load_module(p, over))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((same_parent(&items)?, items))
}

fn load_yds(paths: &[PathBuf], over: Option<&Path>) -> Result<(YdBase, Vec<WithParent<YdModule>>), CliError> {
    let items = paths.iter().map(|p| load_yd(p, over)).collect::<Result<Vec<_>, _>>()?;
    let base = YdBase::new(same_parent(&items)?)?;
    Ok((base, items))
}

fn require_bialgebra(h: &HomBialgebra) -> Result<(), CliError> {
    let rep = check_hom_bialgebra(h)?;
    if !rep.pass() {
        return Err(Error::Precondition {
            what: "the parent structure is not a hom-bialgebra".into(),
            report: Some(Box::new(rep)),
        }
        .into());
    }
    Ok(())
}

fn write_artifact(out: Option<&PathBuf>, file: &StructureFile) -> Result<(), CliError> {
    if let Some(path) = out {
        save(path, file)?;
    }
    Ok(())
}

fn with_parent_ref(file: StructureFile, out: Option<&PathBuf>, parent: &Path) -> StructureFile {
    let reference = match out {
        Some(o) => over_reference(o, parent),
        None => parent.display().to_string(),
    };
    file.with_over(Some(reference))
}

fn single(command: &[String], report: &CheckReport) -> ReportFile {
    let mut rep = ReportFile::new(command.to_vec());
    rep.absorb(None, report);
    rep
}

fn name(p: &Path) -> String {
    p.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn check(cmd: CheckCmd, command: &[String]) -> Result<Outcome, CliError> {
    let report = match cmd {
        CheckCmd::Algebra { file } => {
            let f = load(&file)?;
            match &f.body {
                Structure::Algebra(a) => check_hom_algebra(a)?,
                Structure::Bialgebra(h) => check_hom_algebra(&h.algebra())?,
                _ => return Err(wrong_kind(&file, "algebra", &f)),
            }
        }
        CheckCmd::Coalgebra { file } => {
            let f = load(&file)?;
            match &f.body {
                Structure::Coalgebra(c) => check_hom_coalgebra(c)?,
                Structure::Bialgebra(h) => check_hom_coalgebra(&h.coalgebra())?,
                _ => return Err(wrong_kind(&file, "coalgebra", &f)),
            }
        }
        CheckCmd::Bialgebra { file } => check_hom_bialgebra(&load_bialgebra(&file)?)?,
        CheckCmd::Module { file, bialgebra } => {
            let f = load(&file)?;
            let parent = load(&parent_path(&file, &f, bialgebra.as_deref())?)?;
            let m = match f.body {
                Structure::Module { module, .. } => module,
                _ => return Err(wrong_kind(&file, "module", &f)),
            };
            match &parent.body {
                Structure::Algebra(a) => check_module(a, &m)?,
                Structure::Bialgebra(h) => check_module(h, &m)?,
                _ => return Err(CliError::Input("a module lives over an algebra or bialgebra".into())),
            }
        }
        CheckCmd::Comodule { file, bialgebra } => {
            let f = load(&file)?;
            let parent = load(&parent_path(&file, &f, bialgebra.as_deref())?)?;
            let m: HComodule = match f.body {
                Structure::Comodule { comodule, .. } => comodule,
                _ => return Err(wrong_kind(&file, "comodule", &f)),
            };
            match &parent.body {
                Structure::Coalgebra(c) => check_comodule(c, &m)?,
                Structure::Bialgebra(h) => check_comodule(h, &m)?,
                _ => return Err(CliError::Input("a comodule lives over a coalgebra or bialgebra".into())),
            }
        }
        CheckCmd::Mha {
            algebra,
            module,
            bialgebra,
        } => {
            let af = load(&algebra)?;
            let a: HomAlgebra = match af.body {
                Structure::Algebra(a) => a,
                _ => return Err(wrong_kind(&algebra, "algebra", &af)),
            };
            let m = load_module(&module, bialgebra.as_deref())?;
            let mut rep = check_hom_algebra(&a)?;
            rep.merge(check_module(&m.bialgebra, &m.value)?);
            rep.merge(check_module_hom_algebra(&m.bialgebra, &a, &m.value)?);
            rep
        }
        CheckCmd::Qt { bialgebra, r } => {
            let h = load_bialgebra(&bialgebra)?;
            require_bialgebra(&h)?;
            check_r_conditions(&h, &load_rmatrix(&r)?)?
        }
        CheckCmd::Yd { file, bialgebra } => {
            let (base, items) = load_yds(&[file], bialgebra.as_deref())?;
            check_yd(&base, &items[0].value)?
        }
    };
    Ok(Outcome::Report(single(command, &report)))
}

fn twist(args: TwistArgs, command: &[String]) -> Result<Outcome, CliError> {
    let f = load(&args.file)?;
    let field = f.field;
    let (artifact, report) = match (&f.body, &args.alpha, args.functor) {
        (Structure::Algebra(a), Some(alpha), None) => {
            let t = yau_twist_algebra(a.mul(), &load_linmap(alpha)?)?;
            let rep = check_hom_algebra(&t)?;
            (StructureFile::new(field, Structure::Algebra(t)), rep)
        }
        (Structure::Bialgebra(h), Some(alpha), None) => {
            let t = yau_twist_bialgebra(h.mul(), h.comul(), &load_linmap(alpha)?)?;
            let rep = check_hom_bialgebra(&t)?;
            (StructureFile::new(field, Structure::Bialgebra(t)), rep)
        }
        (Structure::Module { .. }, None, Some(functor)) => {
            let m = load_module(&args.file, args.bialgebra.as_deref())?;
            let which = match functor {
                FunctorArg::F => Twist::F,
                FunctorArg::G => Twist::G,
            };
            let t = twist_module(&m.bialgebra, &m.value, which)?;
            let rep = check_module(&m.bialgebra, &t)?;
            let file = StructureFile::new(
                field,
                Structure::Module {
                    hdim: m.hdim,
                    module: t,
                },
            );
            (with_parent_ref(file, args.out.as_ref(), &m.parent), rep)
        }
        _ => {
            return Err(CliError::Input(
                "twist takes an algebra or bialgebra with --alpha, or a module with --functor".into(),
            ))
        }
    };
    write_artifact(args.out.as_ref(), &artifact)?;
    Ok(Outcome::Report(single(command, &report)))
}

fn tensor(args: TensorArgs, command: &[String]) -> Result<Outcome, CliError> {
    let f = load(&args.left)?;
    let over = args.bialgebra.as_deref();
    let (artifact, report) = match f.body {
        Structure::Module { .. } => {
            let (h, items) = load_modules(&[&args.left, &args.right], over)?;
            let t = tensor_module(&h, &items[0].value, &items[1].value)?;
            let rep = check_module(&h, &t)?;
            let file = StructureFile::new(
                f.field,
                Structure::Module {
                    hdim: h.dim(),
                    module: t,
                },
            );
            (with_parent_ref(file, args.out.as_ref(), &items[0].parent), rep)
        }
        Structure::Yd { .. } => {
            let (base, items) = load_yds(&[args.left.clone(), args.right.clone()], over)?;
            let t = yd_tensor(&base, &items[0].value, &items[1].value)?;
            let rep = check_yd(&base, &t)?;
            let file = StructureFile::new(
                f.field,
                Structure::Yd {
                    hdim: base.dim(),
                    module: t,
                },
            );
            (with_parent_ref(file, args.out.as_ref(), &items[0].parent), rep)
        }
        _ => return Err(wrong_kind(&args.left, "module or yd", &f)),
    };
    write_artifact(args.out.as_ref(), &artifact)?;
    Ok(Outcome::Report(single(command, &report)))
}

fn braiding(args: BraidingArgs, command: &[String]) -> Result<Outcome, CliError> {
    let (h, items) = load_modules(&[&args.u, &args.v], args.bialgebra.as_deref())?;
    let r = load_rmatrix(&args.r)?;
    let (u, v) = (&items[0].value, &items[1].value);
    let c = braiding_from_r(&h, &r, u, v)?;
    let report = check_braiding_morphism(&h, &r, u, v, &[])?;
    write_artifact(
        args.out.as_ref(),
        &StructureFile::new(h.field(), Structure::LinMap(c.map)),
    )?;
    Ok(Outcome::Report(single(command, &report)))
}

fn bmap(args: BmapArgs, command: &[String]) -> Result<Outcome, CliError> {
    let over = args.bialgebra.as_deref();
    let (field, map, report) = match (&args.r, args.files.as_slice()) {
        (Some(r), [m]) => {
            let (h, items) = load_modules(&[m], over)?;
            let m = &items[0].value;
            let b = b_from_qt(&h, &load_rmatrix(r)?, m)?;
            let rep = check_hom_ybe(&b, m.alpha())?;
            (h.field(), b, rep)
        }
        (None, [_, _]) => {
            let (base, items) = load_yds(&args.files, over)?;
            let (m, n) = (&items[0].value, &items[1].value);
            let b = b_yd(&base, m, n)?;
            let mut rep = check_yd(&base, m)?;
            rep.merge(check_yd(&base, n)?);
            rep.merge(check_b_yd(&base, m, n)?);
            (base.field(), b, rep)
        }
        _ => {
            return Err(CliError::Input(
                "bmap takes one module with --r, or two Yetter-Drinfeld modules".into(),
            ))
        }
    };
    write_artifact(args.out.as_ref(), &StructureFile::new(field, Structure::LinMap(map)))?;
    Ok(Outcome::Report(single(command, &report)))
}

fn ybe(args: YbeArgs, command: &[String]) -> Result<Outcome, CliError> {
    let b = load_linmap(&args.map)?;
    let alpha = load_linmap(&args.alpha)?;
    let b = if args.twist { ybe_yau_twist(&b, &alpha)? } else { b };
    let report = check_hom_ybe(&b, &alpha)?;
    write_artifact(args.out.as_ref(), &StructureFile::new(b.field(), Structure::LinMap(b)))?;
    Ok(Outcome::Report(single(command, &report)))
}

fn mixed_ybe(args: MixedYbeArgs, command: &[String]) -> Result<Outcome, CliError> {
    let files = [args.m, args.n, args.p];
    let (base, items) = load_yds(&files, args.bialgebra.as_deref())?;
    let report = check_yd_mixed_ybe(&base, &items[0].value, &items[1].value, &items[2].value)?;
    Ok(Outcome::Report(single(command, &report)))
}

fn hexagons(args: HexagonArgs, command: &[String]) -> Result<Outcome, CliError> {
    let (h, items) = load_modules(&[&args.u, &args.v, &args.w], args.bialgebra.as_deref())?;
    let r = load_rmatrix(&args.r)?;
    let (u, v, w) = (&items[0].value, &items[1].value, &items[2].value);
    let mut report = check_hexagon_instances(&h, &r, u, v, w)?;
    report.merge(check_weak_hom_ybe_instance(&h, &r, u, v, w)?);
    Ok(Outcome::Report(single(command, &report)))
}

fn dehomify(cmd: DehomifyCmd, command: &[String]) -> Result<Outcome, CliError> {
    let mut rep = ReportFile::new(command.to_vec());
    match cmd {
        DehomifyCmd::Pentagon { files, bialgebra } => {
            let (base, items) = load_yds(&files, bialgebra.as_deref())?;
            let fam = ConstraintFamily::from_yd(&base, items.into_iter().map(|i| i.value).collect())?;
            let o: Vec<Obj> = (0..4).map(Obj::atom).collect();
            rep.absorb(None, &check_pentagon(&fam, &o[0], &o[1], &o[2], &o[3])?);
        }
        DehomifyCmd::Hexagons { files, bialgebra } => {
            let (base, items) = load_yds(&files, bialgebra.as_deref())?;
            let fam = ConstraintFamily::from_yd(&base, items.into_iter().map(|i| i.value).collect())?;
            let o: Vec<Obj> = (0..3).map(Obj::atom).collect();
            rep.absorb(None, &check_hexagons(&fam, &o[0], &o[1], &o[2])?);
        }
        DehomifyCmd::CrossCheck { files, bialgebra } => {
            let (base, items) = load_yds(&files, bialgebra.as_deref())?;
            let m: Vec<&YdModule> = items.iter().map(|i| &i.value).collect();
            for (a, b) in [(0, 1), (1, 0)] {
                let label = format!("{},{}", name(&files[a]), name(&files[b]));
                rep.absorb(Some(label), &cross_check_yd(&base, m[a], m[b])?);
            }
            if m.len() == 3 {
                rep.absorb(None, &cross_check_yd_associator(m[0], m[1], m[2])?);
            }
        }
    }
    Ok(Outcome::Report(rep))
}

fn generate(cmd: GenCmd, command: &[String]) -> Result<Outcome, CliError> {
    match cmd {
        GenCmd::GroupBialgebra { n, k, field, out } => {
            let (h, report) = gen_group_bialgebra(field, n, k)?;
            write_artifact(out.as_ref(), &StructureFile::new(field, Structure::Bialgebra(h)))?;
            Ok(Outcome::Report(single(command, &report)))
        }
        GenCmd::Kz2Qt { field, out, r_out } => {
            let (h, r) = gen_kz2_qt(field)?;
            let mut report = check_hom_bialgebra(&h)?;
            report.merge(check_r_conditions(&h, &r)?);
            write_artifact(out.as_ref(), &StructureFile::new(field, Structure::Bialgebra(h)))?;
            write_artifact(r_out.as_ref(), &StructureFile::new(field, Structure::RMatrix(r)))?;
            Ok(Outcome::Report(single(command, &report)))
        }
    }
}

fn fmt(args: FmtArgs) -> Result<Outcome, CliError> {
    let f = load(&args.file)?;
    match args.out {
        Some(path) => {
            save(&path, &f)?;
            Ok(Outcome::Text(String::new()))
        }
        None => Ok(Outcome::Text(serialize_structure(&f))),
    }
}

fn dispatch(cli: Cli, command: &[String]) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Check(c) => check(c, command),
        Command::Twist(a) => twist(a, command),
        Command::Tensor(a) => tensor(a, command),
        Command::Braiding(a) => braiding(a, command),
        Command::Bmap(a) => bmap(a, command),
        Command::Ybe(a) => ybe(a, command),
        Command::MixedYbe(a) => mixed_ybe(a, command),
        Command::Hexagons(a) => hexagons(a, command),
        Command::Dehomify(c) => dehomify(c, command),
        Command::Gen(c) => generate(c, command),
        Command::Fmt(a) => fmt(a),
    }
}

/// Runs one invocation and returns its exit status: 0 when every axiom
/// holds, 1 when one fails, 2 on invalid input or a failed precondition.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let start = Instant::now();
    match dispatch(cli, &command) {
        Ok(Outcome::Report(rep)) => {
            let _ = out.write_all(render(&rep.to_json(start.elapsed())).as_bytes());
            let _ = err.write_all(rep.summary().as_bytes());
            if rep.pass() {
                0
            } else {
                1
            }
        }
        Ok(Outcome::Text(text)) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Core(Error::Precondition { report: Some(r), .. }) = &e {
                for axiom in r.failed_axioms() {
                    let _ = writeln!(err, "  failed: {axiom}");
                }
            }
            2
        }
    }
}
