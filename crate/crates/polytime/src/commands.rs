//! The subcommands. Each reports through the writers it is given so the
//! whole front end can be driven in-process.
//!
//! Exit codes: 0 success, 1 user or input error, 2 a bounded recursion
//! exceeded its bound during `run --checked`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use polytime_core::stdlib;
use polytime_core::translate::{b_to_c, c_to_b_closed, pol_c_to_b};
use polytime_core::{BArity, BError, BExpr, Bitstring, CError, InferError, TermPath};

use crate::syntax::{self, print_b, print_c, Class, Expr, Locations, Program};

#[derive(Parser, Debug)]
#[command(name = "polytime", version, about = "Check, run, bound and translate Cobham and Bellantoni-Cook expressions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that the main expression is well formed and print its arity.
    Check(SourceArgs),
    /// Print the arity of the main expression.
    Arity(SourceArgs),
    /// Evaluate the main expression.
    Run(RunArgs),
    /// Print a length or time bounding polynomial.
    Bound(BoundArgs),
    /// Compile between the two classes.
    Translate(TranslateArgs),
    /// Annotate an arity-free B_inf expression with minimal arities.
    Infer(InferArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    C,
    B,
    #[value(name = "b_inf")]
    BInf,
}

impl From<ClassArg> for Class {
    fn from(c: ClassArg) -> Class {
        match c {
            ClassArg::C => Class::C,
            ClassArg::B => Class::B,
            ClassArg::BInf => Class::BInf,
        }
    }
}

#[derive(Args, Debug)]
pub struct SourceArgs {
    /// A source file, or the name of a library definition.
    #[arg(required_unless_present = "expr", conflicts_with = "expr")]
    pub source: Option<String>,
    /// Program text given inline instead of a file.
    #[arg(long)]
    pub expr: Option<String>,
    /// Expression class; defaults to the class of a library definition.
    #[arg(long, value_enum)]
    pub class: Option<ClassArg>,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Comma-separated arguments of a C expression, e.g. "11,eps".
    #[arg(long)]
    pub args: Option<String>,
    /// Comma-separated normal arguments of a B expression.
    #[arg(long)]
    pub normal: Option<String>,
    /// Comma-separated safe arguments of a B expression.
    #[arg(long)]
    pub safe: Option<String>,
    /// Also print the evaluation cost (B only).
    #[arg(long)]
    pub time: bool,
    /// Check every recursion against its bound (C only).
    #[arg(long)]
    pub checked: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Length,
    Time,
    Envelope,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum, default_value = "length")]
    pub kind: BoundKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    C,
    B,
}

#[derive(Args, Debug)]
pub struct TranslateArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_enum)]
    pub from: Side,
    #[arg(long, value_enum)]
    pub to: Side,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct InferArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Lower bound on the root arity, as "n,s".
    #[arg(long)]
    pub floor: Option<String>,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

/// A failed command: the exit code and what to print on standard error.
#[derive(Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn user_error<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure {
        code: 1,
        message: message.into(),
    })
}

type Outcome = Result<(), Failure>;

/// Parses `argv` and runs the command. Returns the exit code.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Check(a) => check(a, out, "arity: "),
        Command::Arity(a) => check(a, out, ""),
        Command::Run(a) => run(a, out),
        Command::Bound(a) => bound(a, out),
        Command::Translate(a) => translate(a, out, err),
        Command::Infer(a) => infer(a, out),
    }
}

struct Loaded {
    origin: String,
    expr: Expr,
    locs: Locations,
}

impl Loaded {
    fn at(&self, path: &TermPath) -> String {
        match self.locs.locate(path.steps()) {
            Some(loc) => format!("{}:{loc}", self.origin),
            None => self.origin.clone(),
        }
    }

    fn c_error(&self, e: CError) -> Failure {
        match &e {
            CError::IllFormed { path, .. } => Failure {
                code: 1,
                message: format!("{}: {e}", self.at(path)),
            },
            CError::BoundViolation(v) => Failure {
                code: 2,
                message: format!("{}: {e}", self.at(&v.path)),
            },
            CError::ArgumentCount { .. } => Failure {
                code: 1,
                message: e.to_string(),
            },
        }
    }

    fn b_error(&self, e: BError) -> Failure {
        let message = match &e {
            BError::IllFormed { path, .. } => format!("{}: {e}", self.at(path)),
            BError::ArgumentCount { .. } => e.to_string(),
        };
        Failure { code: 1, message }
    }

    fn infer_error(&self, e: InferError) -> Failure {
        let InferError::Conflict { path, .. } = &e;
        Failure {
            code: 1,
            message: format!("{}: {e}", self.at(path)),
        }
    }

    /// The expression as annotated B, inferring arities for B_inf.
    fn as_b(&self, floor: Option<BArity>) -> Result<BExpr, Failure> {
        match &self.expr {
            Expr::B(e) => Ok(e.clone()),
            Expr::BInf(e) => e.infer(floor).map_err(|e| self.infer_error(e)),
            Expr::C(_) => unreachable!("callers dispatch on class"),
        }
    }
}

fn load(a: &SourceArgs, default_class: Option<Class>) -> Result<Loaded, Failure> {
    let (origin, text, library_class) = match (&a.source, &a.expr) {
        (_, Some(text)) => ("<expr>".to_string(), text.clone(), None),
        (Some(source), None) => {
            let path = Path::new(source);
            if path.exists() {
                match fs::read_to_string(path) {
                    Ok(text) => (source.clone(), text, None),
                    Err(e) => return user_error(format!("cannot read {source}: {e}")),
                }
            } else if let Ok(def) = stdlib::lookup(source) {
                let class = match def.class() {
                    stdlib::Class::C => Class::C,
                    stdlib::Class::B => Class::B,
                };
                (source.clone(), source.clone(), Some(class))
            } else {
                return user_error(format!("{source}: no such file or library definition (use --expr for inline text)"));
            }
        }
        (None, None) => return user_error("no source given"),
    };
    let class = match (a.class.map(Class::from), default_class, library_class) {
        (Some(c), _, _) | (None, Some(c), _) | (None, None, Some(c)) => c,
        (None, None, None) => return user_error("--class is required for a source file"),
    };
    let Program { main, .. } = syntax::parse_source(&text, class).or_else(|e| user_error(format!("{origin}:{e}")))?;
    let Some((expr, locs)) = main else {
        return user_error(format!("{origin}: no expression"));
    };
    Ok(Loaded { origin, expr, locs })
}

fn emit(out: &mut dyn Write, text: impl std::fmt::Display) -> Outcome {
    writeln!(out, "{text}").or_else(|e| user_error(format!("cannot write output: {e}")))
}

fn check(a: &SourceArgs, out: &mut dyn Write, prefix: &str) -> Outcome {
    let l = load(a, None)?;
    let arity = match &l.expr {
        Expr::C(e) => e.arity().map_err(|e| l.c_error(e))?.to_string(),
        _ => l.as_b(None)?.arity().map_err(|e| l.b_error(e))?.to_string(),
    };
    emit(out, format!("{prefix}{arity}"))
}

fn literals(flag: &str, text: Option<&str>) -> Result<Vec<Bitstring>, Failure> {
    let Some(text) = text else { return Ok(Vec::new()) };
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| Bitstring::parse_literal(s.trim()).or_else(|e| user_error(format!("--{flag}: {e}"))))
        .collect()
}

fn run(a: &RunArgs, out: &mut dyn Write) -> Outcome {
    let l = load(&a.source, None)?;
    match &l.expr {
        Expr::C(e) => {
            if a.normal.is_some() || a.safe.is_some() {
                return user_error("C expressions take --args, not --normal/--safe");
            }
            if a.time {
                return user_error("--time is only available for B expressions");
            }
            let args = literals("args", a.args.as_deref())?;
            let value = if a.checked { e.eval_checked(&args) } else { e.eval(&args) };
            emit(out, value.map_err(|e| l.c_error(e))?)
        }
        _ => {
            if a.args.is_some() {
                return user_error("B expressions take --normal and --safe, not --args");
            }
            if a.checked {
                return user_error("--checked is only available for C expressions");
            }
            let e = l.as_b(None)?;
            let normals = literals("normal", a.normal.as_deref())?;
            let safes = literals("safe", a.safe.as_deref())?;
            if a.time {
                let r = e.eval_timed(&normals, &safes).map_err(|e| l.b_error(e))?;
                emit(out, r.value)?;
                emit(out, format!("cost: {}", r.cost))
            } else {
                emit(out, e.eval(&normals, &safes).map_err(|e| l.b_error(e))?)
            }
        }
    }
}

fn bound(a: &BoundArgs, out: &mut dyn Write) -> Outcome {
    let l = load(&a.source, None)?;
    match (&l.expr, a.kind) {
        (Expr::C(e), BoundKind::Length) => emit(out, e.pol_c().map_err(|e| l.c_error(e))?),
        (Expr::C(_), kind) => user_error(format!(
            "--kind {} is only available for B expressions",
            kind.to_possible_value().expect("no skipped values").get_name()
        )),
        (_, kind) => {
            let e = l.as_b(None)?;
            match kind {
                BoundKind::Length => emit(out, e.pol_b().map_err(|e| l.b_error(e))?),
                BoundKind::Time => emit(out, e.pol_time().map_err(|e| l.b_error(e))?),
                BoundKind::Envelope => {
                    let (size, time) = e.ppt_envelope().map_err(|e| l.b_error(e))?;
                    emit(out, format!("F: {size}"))?;
                    emit(out, format!("G: {time}"))
                }
            }
        }
    }
}

// Reports go to standard output when the expression goes to a file, and to
// standard error when the expression itself is on standard output.
fn write_result(
    output: Option<&Path>,
    text: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
    report: &[String],
) -> Outcome {
    match output {
        Some(path) => {
            fs::write(path, format!("{text}\n"))
                .or_else(|e| user_error(format!("cannot write {}: {e}", path.display())))?;
            for line in report {
                emit(out, line)?;
            }
            Ok(())
        }
        None => {
            for line in report {
                emit(err, line)?;
            }
            emit(out, text)
        }
    }
}

fn translate(a: &TranslateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let from_class = match a.from {
        Side::C => Class::C,
        Side::B => Class::B,
    };
    if let Some(given) = a.source.class.map(Class::from) {
        let compatible = given == from_class || (given == Class::BInf && from_class == Class::B);
        if !compatible {
            return user_error(format!("--class {given} does not match --from {}", a.from.name()));
        }
    }
    let l = load(&a.source, Some(from_class))?;
    if l.expr.class() == Class::C && from_class != Class::C || l.expr.class() != Class::C && from_class == Class::C
    {
        return user_error(format!(
            "{} is a {} expression but --from is {}",
            l.origin,
            l.expr.class(),
            a.from.name()
        ));
    }
    match (a.from, a.to) {
        (Side::B, Side::C) => {
            let e = l.as_b(None)?;
            let c = b_to_c(&e).map_err(|e| l.b_error(e))?;
            let report = vec![format!("nodes: {}", c.node_count())];
            write_result(a.output.as_deref(), &print_c(&c), out, err, &report)
        }
        (Side::C, Side::B) => {
            let Expr::C(e) = &l.expr else { unreachable!("checked above") };
            let b = c_to_b_closed(e).map_err(|e| l.c_error(e))?;
            let w = pol_c_to_b(e).map_err(|e| l.c_error(e))?;
            emit(
                err,
                "warning: the translation assumes every recursion respects its bound; this is only checked by run --checked",
            )?;
            let report = vec![format!("nodes: {}", b.node_count()), format!("w: {w}")];
            write_result(a.output.as_deref(), &print_b(&b), out, err, &report)
        }
        (Side::C, Side::C) => {
            let Expr::C(e) = &l.expr else { unreachable!("checked above") };
            e.arity().map_err(|e| l.c_error(e))?;
            write_result(a.output.as_deref(), &print_c(e), out, err, &[])
        }
        (Side::B, Side::B) => {
            let e = l.as_b(None)?;
            e.arity().map_err(|e| l.b_error(e))?;
            write_result(a.output.as_deref(), &print_b(&e), out, err, &[])
        }
    }
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::C => "c",
            Side::B => "b",
        }
    }
}

fn parse_floor(text: &str) -> Result<BArity, Failure> {
    let parts: Vec<_> = text.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [n, s] => match (n.parse(), s.parse()) {
            (Ok(n), Ok(s)) => Ok(BArity::new(n, s)),
            _ => user_error(format!("--floor expects \"n,s\" with naturals, found {text:?}")),
        },
        _ => user_error(format!("--floor expects \"n,s\", found {text:?}")),
    }
}

fn infer(a: &InferArgs, out: &mut dyn Write) -> Outcome {
    let floor = a.floor.as_deref().map(parse_floor).transpose()?;
    let l = load(&a.source, Some(Class::BInf))?;
    if l.expr.class() != Class::BInf {
        return user_error(format!("infer reads B_inf expressions, not {}", l.expr.class()));
    }
    let e = l.as_b(floor)?;
    let arity = e.arity().map_err(|e| l.b_error(e))?;
    match &a.output {
        Some(path) => {
            fs::write(path, format!("{}\n", print_b(&e)))
                .or_else(|e| user_error(format!("cannot write {}: {e}", path.display())))?;
            emit(out, format!("arity: {arity}"))
        }
        None => {
            emit(out, print_b(&e))?;
            emit(out, format!("arity: {arity}"))
        }
    }
}
