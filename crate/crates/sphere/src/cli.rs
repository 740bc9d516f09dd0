//! The `sphere` command line: `table`, `verify`, `build`, `loop`, `double`,
//! `sphere-enum` and `roots`.
//!
//! Reports are plain text and end with `RESULT <id> <holds|fails> <strategy>`
//! lines where a verdict applies. Exit status: 0 on success, 1 when
//! `--expect` is contradicted, 2 on usage or parse errors, 3 on other errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::binary2d::BinaryForm;
use crate::constructions::{
    abcd_double, binarion, clifford_quaternion, kd_double, minkowski_extension, polarized_space,
    split_null_extension, unarion, DoublingParams, RightModuleAction,
};
use crate::error::{Error, Result};
use crate::io::{parse_cayley, write_cayley, AlgebraFile, FormFile};
use crate::linalg::{self, Vector};
use crate::loops::{self, check_property, LoopPropertyId};
use crate::moufang_double::{doubling_chain, Convention, FiniteGroup, Param, StageChoice};
use crate::quadratic::root_vectors;
use crate::ring::{ring_eval, Ring, RingSpec};
use crate::spherical::verify::{DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::spherical::{Domain, IdentityId, Side, Strategy, TernaryAlgebra, VerificationReport};
use crate::with_ring;

#[derive(Debug, Parser)]
#[command(name = "sphere", version, about = "Exact spherical spaces, composition algebras and sphere loops")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    Holds,
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Recipe {
    Minkowski,
    Splitnull,
    Polarized,
    Cliffordq,
    Kd,
    Abcd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    Adjoint,
    Character,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Basis products of the canonical product of `αx² + βxy + γy²`.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long, default_value = "int")]
        ring: String,
        /// Five-fold products with all three bracketings.
        #[arg(long)]
        five: bool,
    },
    /// Checks an identity on an algebra file.
    Verify {
        #[arg(long)]
        alg: PathBuf,
        #[arg(long)]
        id: String,
        /// exhaustive, exhaustive-basis, exhaustive-module, box[:N] or sampled.
        #[arg(long, default_value = "exhaustive")]
        strategy: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        count: usize,
        /// Coordinate bound for the box strategy.
        #[arg(long = "box", default_value_t = 1)]
        bound: i64,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Builds an algebra file from a recipe.
    Build {
        #[arg(long, value_enum)]
        recipe: Recipe,
        #[arg(long, default_value = "int")]
        ring: String,
        /// Binary form `α,β,γ`.
        #[arg(long, allow_hyphen_values = true)]
        form: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        psi: Option<String>,
        /// Bilinear pairing rows separated by `;`, e.g. `0,1;-1,0`.
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Base algebra file.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "adjoint")]
        module: ModuleKind,
        /// Base point for the character module.
        #[arg(long, allow_hyphen_values = true)]
        e: Option<String>,
        /// Character of the homotope at `e`.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "right")]
        side: Side,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Checks loop properties of a Cayley table file.
    Loop {
        #[arg(long)]
        table: PathBuf,
        /// Comma separated property names.
        #[arg(long, default_value = "quasigroup,loop,inverse-loop,associative,moufang")]
        check: String,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Moufang doubling chains.
    Double {
        /// c2, c3, c4, c6, c2xc2, q8, another catalog name, or a Cayley table file.
        #[arg(long)]
        seed: String,
        /// `1`, `-1` or an element label; comma separated for one value per stage.
        #[arg(long, allow_hyphen_values = true)]
        eps: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, default_value = "bullet")]
        convention: Convention,
        /// Writes the last stage's Cayley table.
        #[arg(long)]
        emit_cayley: Option<PathBuf>,
    },
    /// Enumerates a sphere of an algebra file and its torsor table.
    SphereEnum {
        #[arg(long)]
        alg: PathBuf,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        level: String,
        /// Coordinate bound over infinite rings.
        #[arg(long = "box", default_value_t = 1)]
        bound: i64,
        /// Comma separated ternary loop properties to check.
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        emit_cayley: Option<PathBuf>,
    },
    /// Root vectors of an integral binary form or form file.
    Roots {
        /// `α,β,γ` or an inline form file.
        #[arg(long, allow_hyphen_values = true)]
        form: Option<String>,
        #[arg(long)]
        form_file: Option<PathBuf>,
        #[arg(long = "box", default_value_t = 2)]
        bound: i64,
    },
}

/// Exit status of a completed run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Unexpected,
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let mut report = String::new();
    let result = run(&cli.command, &mut report);
    let _ = out.write_all(report.as_bytes());
    match result {
        Ok(Status::Ok) => 0,
        Ok(Status::Unexpected) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse(_) | Error::UnsupportedRing(_) | Error::Io(_) => 2,
                _ => 3,
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn parse_vec<R: Ring>(r: &R, s: &str) -> Result<Vector<R::Elem>> {
    s.split(',').map(|t| ring_eval(r, t)).collect()
}

fn parse_matrix<R: Ring>(r: &R, s: &str) -> Result<Vec<Vec<R::Elem>>> {
    s.split(';').map(|row| parse_vec(r, row)).collect()
}

fn need<'a>(flag: &str, v: &'a Option<String>) -> Result<&'a str> {
    v.as_deref()
        .ok_or_else(|| Error::Parse(format!("--{flag} is required for this recipe")))
}

fn parse_strategy(name: &str, seed: u64, count: usize, bound: i64) -> Result<Option<Strategy>> {
    Ok(Some(match name {
        "exhaustive" => return Ok(None),
        "exhaustive-basis" => Strategy::ExhaustiveBasis,
        "exhaustive-module" => Strategy::ExhaustiveModule,
        "sampled" => Strategy::Sampled { count, seed },
        "box" => Strategy::Box { bound },
        other => match other.strip_prefix("box:") {
            Some(b) => Strategy::Box {
                bound: b.parse().map_err(|_| Error::Parse(format!("bad box bound `{b}`")))?,
            },
            None => return Err(Error::Parse(format!("unknown strategy `{other}`"))),
        },
    }))
}

fn expectation(expect: Option<Expect>, all_hold: bool) -> Status {
    match expect {
        Some(Expect::Holds) if !all_hold => Status::Unexpected,
        Some(Expect::Fails) if all_hold => Status::Unexpected,
        _ => Status::Ok,
    }
}

pub fn run(cmd: &Command, out: &mut String) -> Result<Status> {
    match cmd {
        Command::Table { form, ring, five } => {
            let spec: RingSpec = ring.parse()?;
            with_ring!(spec, |r| table(BinaryForm::parse(r, form)?, *five, out))
        }
        Command::Verify {
            alg,
            id,
            strategy,
            seed,
            count,
            bound,
            expect,
        } => {
            let file = AlgebraFile::parse(&read(alg)?)?;
            let id: IdentityId = id.parse()?;
            let strategy = parse_strategy(strategy, *seed, *count, *bound)?;
            let holds = with_ring!(file.ring_spec()?, |r| verify(&file.to_algebra(r)?, id, strategy, out)?);
            Ok(expectation(*expect, holds))
        }
        Command::Build { ring, out: path, .. } => {
            let spec: RingSpec = ring.parse()?;
            let json = with_ring!(spec, |r| build(r, cmd)?);
            match path {
                Some(p) => {
                    write_file(p, &json)?;
                    writeln!(out, "wrote {}", p.display()).ok();
                }
                None => out.push_str(&json),
            }
            Ok(Status::Ok)
        }
        Command::Loop { table, check, expect } => {
            let m = parse_cayley(&read(table)?)?;
            let cap = loops::max_table();
            if m.size() > cap {
                return Err(Error::TableTooLarge { size: m.size(), cap });
            }
            writeln!(out, "table: {} elements, arity {}", m.size(), m.arity()).ok();
            let holds = check_all(&m, check, out)?;
            if m.arity() == 2 && m.unit().is_some() {
                describe_loop(&m, out);
            }
            Ok(expectation(*expect, holds))
        }
        Command::Double {
            seed,
            eps,
            mu,
            steps,
            convention,
            emit_cayley,
        } => double(seed, eps.as_deref(), mu.as_deref(), *steps, *convention, emit_cayley.as_deref(), out),
        Command::SphereEnum {
            alg,
            level,
            bound,
            check,
            emit_cayley,
        } => {
            let file = AlgebraFile::parse(&read(alg)?)?;
            with_ring!(file.ring_spec()?, |r| sphere_enum(
                &file.to_algebra(r)?,
                level,
                *bound,
                check.as_deref(),
                emit_cayley.as_deref(),
                out
            ))
        }
        Command::Roots { form, form_file, bound } => roots(form.as_deref(), form_file.as_deref(), *bound, out),
    }
}

fn table<R: Ring>(form: BinaryForm<R>, five: bool, out: &mut String) -> Result<Status> {
    let r = form.ring.clone();
    let name = |idx: &[usize]| idx.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join(" ");
    if five {
        let rows = form.fivefold_table();
        let mut agree = true;
        for row in &rows {
            match row.agreed() {
                Some(v) => writeln!(out, "<{}> = {}", name(&row.indices), linalg::format_vec(&r, v)).ok(),
                None => {
                    agree = false;
                    let all: Vec<String> = row.bracketings.iter().map(|v| linalg::format_vec(&r, v)).collect();
                    writeln!(out, "<{}> disagree: {}", name(&row.indices), all.join(" ")).ok()
                }
            };
        }
        let verdict = if agree { "holds" } else { "fails" };
        writeln!(out, "RESULT PA {verdict} exhaustive-basis").ok();
    } else {
        for (idx, v) in form.triple_table() {
            writeln!(out, "<{}> = {}", name(&idx), linalg::format_vec(&r, &v)).ok();
        }
    }
    Ok(Status::Ok)
}

fn print_report<E, F: Fn(&[E]) -> String>(rep: &VerificationReport<E>, fmt: F, out: &mut String) {
    writeln!(out, "checked: {} tuples", rep.checked).ok();
    if let Some(w) = &rep.witness {
        let parts: Vec<String> = w.iter().map(|v| fmt(v)).collect();
        writeln!(out, "witness: {}", parts.join(" ")).ok();
    }
    writeln!(out, "{}", rep.result_line()).ok();
}

fn verify<R: Ring>(alg: &TernaryAlgebra<R>, id: IdentityId, strategy: Option<Strategy>, out: &mut String) -> Result<bool> {
    let r = alg.ring();
    writeln!(out, "algebra: {} over {}, rank {}", alg.label(), r.spec(), alg.rank()).ok();
    let rep = match strategy {
        Some(s) => alg.verify(id, &s)?,
        None => match alg.verify(id, &Strategy::ExhaustiveBasis) {
            Err(Error::InfeasibleStrategy(_)) => alg.verify(id, &Strategy::ExhaustiveModule)?,
            other => other?,
        },
    };
    print_report(&rep, |v| linalg::format_vec(r, v), out);
    Ok(rep.holds())
}

fn base_algebra<R: Ring>(r: &R, form: &Option<String>, base: &Option<PathBuf>) -> Result<TernaryAlgebra<R>> {
    match (base, form) {
        (Some(p), _) => AlgebraFile::parse(&read(p)?)?.to_algebra(r.clone()),
        (None, Some(f)) => Ok(BinaryForm::parse(r.clone(), f)?.to_algebra()),
        (None, None) => Err(Error::Parse("--base or --form is required for this recipe".into())),
    }
}

fn build<R: Ring>(r: R, cmd: &Command) -> Result<String> {
    let Command::Build {
        recipe,
        form,
        phi,
        psi,
        b,
        base,
        module,
        e,
        chi,
        mu,
        side,
        steps,
        ..
    } = cmd
    else {
        unreachable!("build arguments")
    };
    let params = DoublingParams {
        mu: ring_eval(&r, mu)?,
        side: *side,
    };
    let alg = match recipe {
        Recipe::Minkowski => minkowski_extension(r.clone(), &parse_vec(&r, need("phi", phi)?)?, &parse_vec(&r, need("psi", psi)?)?)?,
        Recipe::Polarized => polarized_space(r.clone(), &parse_matrix(&r, need("b", b)?)?)?,
        Recipe::Cliffordq => clifford_quaternion(&BinaryForm::parse(r.clone(), need("form", form)?)?)?,
        Recipe::Splitnull => {
            let base = base_algebra(&r, form, base)?;
            let action = match module {
                ModuleKind::Adjoint => RightModuleAction::adjoint(&base),
                ModuleKind::Character => RightModuleAction::character(
                    &base,
                    &parse_vec(&r, need("e", e)?)?,
                    &parse_vec(&r, need("chi", chi)?)?,
                )?,
            };
            split_null_extension(&action)
        }
        Recipe::Kd => {
            let mut alg = match form {
                Some(f) => binarion(&BinaryForm::parse(r.clone(), f)?)?,
                None => unarion(r.clone()),
            };
            for _ in 0..*steps {
                alg = kd_double(&alg, &params);
            }
            alg.ternary(*side, &r.one())
        }
        Recipe::Abcd => {
            let mut alg = base_algebra(&r, form, base)?;
            for _ in 0..*steps {
                alg = abcd_double(&alg, &params)?;
            }
            alg
        }
    };
    Ok(AlgebraFile::from_algebra(&alg).to_json())
}

fn check_all(m: &loops::FiniteMagma, check: &str, out: &mut String) -> Result<bool> {
    let mut all = true;
    for name in check.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let id: LoopPropertyId = name.parse()?;
        let rep = check_property(m, id)?;
        all &= rep.holds();
        print_report(&rep, |v| v.join(""), out);
    }
    Ok(all)
}

fn describe_loop(m: &loops::FiniteMagma, out: &mut String) {
    let profile: Vec<String> = loops::order_profile(m).iter().map(|(o, n)| format!("{o}^{n}")).collect();
    writeln!(out, "orders: {}", profile.join(" ")).ok();
    let name = loops::identify(m).unwrap_or_else(|| "unidentified".into());
    writeln!(out, "identification: {name}").ok();
}

fn per_stage(value: Option<&str>, steps: usize) -> Result<Vec<Option<Param>>> {
    let Some(v) = value else {
        return Ok(vec![None; steps]);
    };
    let parts: Vec<&str> = v.split(',').collect();
    match parts.len() {
        1 => Ok(vec![Some(parts[0].parse()?); steps]),
        n if n == steps => parts.iter().map(|p| p.parse().map(Some)).collect(),
        n => Err(Error::Parse(format!("{n} stage values for {steps} steps"))),
    }
}

fn double(
    seed: &str,
    eps: Option<&str>,
    mu: Option<&str>,
    steps: usize,
    convention: Convention,
    emit: Option<&Path>,
    out: &mut String,
) -> Result<Status> {
    let group = if Path::new(seed).is_file() {
        FiniteGroup::with_inverse(parse_cayley(&read(Path::new(seed))?)?)?
    } else {
        FiniteGroup::seed(seed)?
    };
    let choices: Vec<StageChoice> = per_stage(eps, steps)?
        .into_iter()
        .zip(per_stage(mu, steps)?)
        .map(|(eps, mu)| StageChoice { eps, mu })
        .collect();
    let (groups, reports) = doubling_chain(&group, &choices, convention)?;
    for rep in &reports {
        writeln!(out, "{rep}").ok();
    }
    if let Some(path) = emit {
        let last = groups.last().expect("seed stage");
        write_file(path, &write_cayley(last.magma()))?;
        writeln!(out, "wrote {}", path.display()).ok();
    }
    Ok(Status::Ok)
}

fn sphere_enum<R: Ring>(
    alg: &TernaryAlgebra<R>,
    level: &str,
    bound: i64,
    check: Option<&str>,
    emit: Option<&Path>,
    out: &mut String,
) -> Result<Status> {
    let r = alg.ring();
    let c = ring_eval(r, level)?;
    let domain = if r.is_finite() { Domain::Finite } else { Domain::Box(bound) };
    let points = alg.sphere_enumerate(&c, domain)?;
    writeln!(out, "sphere q = {}: {} points", r.format_elem(&c), points.len()).ok();
    for p in &points {
        writeln!(out, "{}", linalg::format_vec(r, p)).ok();
    }
    if check.is_none() && emit.is_none() {
        return Ok(Status::Ok);
    }
    let m = loops::sphere_loop(alg, &c, domain)?;
    let mut all = true;
    if let Some(check) = check {
        all = check_all(&m, check, out)?;
    }
    if let Some(path) = emit {
        write_file(path, &write_cayley(&m))?;
        writeln!(out, "wrote {}", path.display()).ok();
    }
    Ok(if all { Status::Ok } else { Status::Unexpected })
}

fn roots(form: Option<&str>, form_file: Option<&Path>, bound: i64, out: &mut String) -> Result<Status> {
    let space = match (form, form_file) {
        (Some(f), _) if f.trim_start().starts_with('{') => FormFile::parse(f)?.to_space(crate::ring::Integers)?,
        (Some(f), _) => BinaryForm::parse(crate::ring::Integers, f)?.space(),
        (None, Some(p)) => FormFile::parse(&read(p)?)?.to_space(crate::ring::Integers)?,
        (None, None) => return Err(Error::Parse("--form or --form-file is required".into())),
    };
    let roots = root_vectors(&space, bound)?;
    let unit = roots.iter().filter(|v| space.q(&v.vector) == 1.into()).count();
    for v in &roots {
        let n: Vec<String> = v.coefficients.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "{} q={} n=({})",
            linalg::format_vec(&crate::ring::Integers, &v.vector),
            space.q(&v.vector),
            n.join(",")
        )
        .ok();
    }
    writeln!(out, "roots: {} (unit sphere: {unit})", roots.len()).ok();
    Ok(Status::Ok)
}
