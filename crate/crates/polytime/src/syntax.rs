//! Concrete syntax of the three expression languages.
//!
//! ```text
//! program := def* expr?
//! def     := (def NAME expr)
//! C       := O | smash | (proj i n) | (succ 0|1) | (comp n h (g ...)) | (rec g h0 h1 j)
//! B       := zero | pred | cond | (pi i n s) | (succ 0|1)
//!          | (comp n s h (gN ...) (gS ...)) | (rec g h0 h1)
//! B_inf   := B with (pn i) / (ps i) for projections and (comp h (gN ...) (gS ...))
//! ```
//!
//! Identifiers are replaced by the expression they name: an earlier `def`
//! of the same file, or a library definition of the same class.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fmt::Write as _;

use polytime_core::stdlib::{self, DefExpr};
use polytime_core::{BExpr, BInfExpr, Bit, CExpr, Step};

use crate::sexpr::{read_all, ReadError, Sexpr, SourceLocation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Class {
    C,
    B,
    BInf,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::C => "C",
            Class::B => "B",
            Class::BInf => "B_inf",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    C(CExpr),
    B(BExpr),
    BInf(BInfExpr),
}

impl Expr {
    pub fn class(&self) -> Class {
        match self {
            Expr::C(_) => Class::C,
            Expr::B(_) => Class::B,
            Expr::BInf(_) => Class::BInf,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::C(e) => f.write_str(&print_c(e)),
            Expr::B(e) => f.write_str(&print_b(e)),
            Expr::BInf(e) => f.write_str(&print_binf(e)),
        }
    }
}

/// Source positions of the subterms of a parsed expression. Subterms that
/// came from an inlined identifier map to the identifier.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Locations(BTreeMap<Vec<Step>, SourceLocation>);

impl Locations {
    /// Position of the deepest recorded subterm on `path`.
    pub fn locate(&self, path: &[Step]) -> Option<SourceLocation> {
        (0..=path.len()).rev().find_map(|k| self.0.get(&path[..k]).copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub expr: Expr,
    pub loc: SourceLocation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub class: Class,
    pub defs: Vec<Definition>,
    pub main: Option<(Expr, Locations)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub loc: SourceLocation,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.loc, self.message)
    }
}

impl std::error::Error for SyntaxError {}

impl From<ReadError> for SyntaxError {
    fn from(e: ReadError) -> Self {
        SyntaxError {
            loc: e.loc,
            message: e.message,
        }
    }
}

fn err<T>(loc: SourceLocation, message: impl Into<String>) -> Result<T, SyntaxError> {
    Err(SyntaxError {
        loc,
        message: message.into(),
    })
}

const C_KEYWORDS: &[&str] = &["O", "smash", "proj", "succ", "comp", "rec", "def"];
const B_KEYWORDS: &[&str] = &["zero", "pred", "cond", "pi", "pn", "ps", "succ", "comp", "rec", "def"];

struct Parser {
    class: Class,
    defs: HashMap<String, Expr>,
}

pub fn parse_source(text: &str, class: Class) -> Result<Program, SyntaxError> {
    let forms = read_all(text)?;
    let mut parser = Parser {
        class,
        defs: HashMap::new(),
    };
    let mut defs = Vec::new();
    let mut main = None;
    for form in &forms {
        if main.is_some() {
            return err(form.loc(), "nothing may follow the main expression");
        }
        if let Some((name, body)) = as_def(form)? {
            let keywords = if class == Class::C { C_KEYWORDS } else { B_KEYWORDS };
            if keywords.contains(&name.as_str()) {
                return err(form.loc(), format!("{name:?} is a keyword"));
            }
            if parser.defs.contains_key(&name) {
                return err(form.loc(), format!("{name:?} is already defined"));
            }
            let expr = parser.expr(body, &mut Vec::new(), &mut Locations::default())?;
            parser.defs.insert(name.clone(), expr.clone());
            defs.push(Definition {
                name,
                expr,
                loc: form.loc(),
            });
        } else {
            let mut locs = Locations::default();
            let expr = parser.expr(form, &mut Vec::new(), &mut locs)?;
            main = Some((expr, locs));
        }
    }
    Ok(Program { class, defs, main })
}

/// Parses a single expression with no surrounding definitions.
pub fn parse_expr(text: &str, class: Class) -> Result<Expr, SyntaxError> {
    let program = parse_source(text, class)?;
    match program.main {
        Some((e, _)) if program.defs.is_empty() => Ok(e),
        _ => err(SourceLocation { line: 1, column: 1 }, "expected exactly one expression"),
    }
}

fn as_def(form: &Sexpr) -> Result<Option<(String, &Sexpr)>, SyntaxError> {
    let Sexpr::List(items, loc) = form else { return Ok(None) };
    match items.first() {
        Some(Sexpr::Atom(head, _)) if head == "def" => match items.as_slice() {
            [_, Sexpr::Atom(name, _), body] => Ok(Some((name.clone(), body))),
            _ => err(*loc, "a definition has the form (def NAME expr)"),
        },
        _ => Ok(None),
    }
}

fn number(s: &Sexpr, what: &str) -> Result<usize, SyntaxError> {
    match s {
        Sexpr::Atom(text, loc) => text
            .parse()
            .or_else(|_| err(*loc, format!("{what} must be a natural number, found {text:?}"))),
        Sexpr::List(_, loc) => err(*loc, format!("{what} must be a natural number, found a list")),
    }
}

fn bit(s: &Sexpr) -> Result<Bit, SyntaxError> {
    match s {
        Sexpr::Atom(t, _) if t == "0" => Ok(Bit::Zero),
        Sexpr::Atom(t, _) if t == "1" => Ok(Bit::One),
        other => err(other.loc(), "succ takes the bit 0 or 1"),
    }
}

fn list<'a>(s: &'a Sexpr, what: &str) -> Result<&'a [Sexpr], SyntaxError> {
    match s {
        Sexpr::List(items, _) => Ok(items),
        Sexpr::Atom(_, loc) => err(*loc, format!("{what} must be a parenthesized list")),
    }
}

fn arms(items: &[Sexpr], loc: SourceLocation, form: &str, shape: &str) -> Result<(), SyntaxError> {
    let want = shape.split_whitespace().filter(|w| !w.starts_with("...")).count();
    if items.len() - 1 != want {
        return err(
            loc,
            format!("{form} expects {want} argument(s) ({shape}), found {}", items.len() - 1),
        );
    }
    Ok(())
}

impl Parser {
    fn expr(&self, s: &Sexpr, path: &mut Vec<Step>, locs: &mut Locations) -> Result<Expr, SyntaxError> {
        locs.0.insert(path.clone(), s.loc());
        match self.class {
            Class::C => self.c(s, path, locs).map(Expr::C),
            Class::B => self.b(s, path, locs).map(Expr::B),
            Class::BInf => self.binf(s, path, locs).map(Expr::BInf),
        }
    }

    fn child<T>(
        &self,
        s: &Sexpr,
        step: Step,
        path: &mut Vec<Step>,
        locs: &mut Locations,
        project: fn(Expr) -> T,
    ) -> Result<T, SyntaxError> {
        path.push(step);
        let e = self.expr(s, path, locs);
        path.pop();
        e.map(project)
    }

    fn identifier(&self, name: &str, loc: SourceLocation) -> Result<Expr, SyntaxError> {
        if let Some(e) = self.defs.get(name) {
            return Ok(e.clone());
        }
        let Ok(def) = stdlib::lookup(name) else {
            return err(loc, format!("unknown identifier {name:?}"));
        };
        match (&def.expr, self.class) {
            (DefExpr::C(e), Class::C) => Ok(Expr::C(e.clone())),
            (DefExpr::B(e), Class::B) => Ok(Expr::B(e.clone())),
            (DefExpr::B(e), Class::BInf) => Ok(Expr::BInf(e.erase().expect("library is well formed"))),
            (_, class) => err(
                loc,
                format!("class mismatch: {name} is a {:?} definition, this is a {class} program", def.class()),
            ),
        }
    }

    fn c(&self, s: &Sexpr, path: &mut Vec<Step>, locs: &mut Locations) -> Result<CExpr, SyntaxError> {
        let get = |e: Expr| match e {
            Expr::C(e) => e,
            _ => unreachable!("class is fixed per parser"),
        };
        let items = match s {
            Sexpr::Atom(a, loc) => {
                return match a.as_str() {
                    "O" => Ok(CExpr::Zero),
                    "smash" => Ok(CExpr::Smash),
                    name => self.identifier(name, *loc).map(get),
                }
            }
            Sexpr::List(items, _) => items,
        };
        let loc = s.loc();
        let Some(Sexpr::Atom(head, _)) = items.first() else {
            return err(loc, "expected a form such as (comp ...) or (rec ...)");
        };
        match head.as_str() {
            "proj" => {
                arms(items, loc, "proj", "i n")?;
                Ok(CExpr::proj(number(&items[1], "index")?, number(&items[2], "arity")?))
            }
            "succ" => {
                arms(items, loc, "succ", "bit")?;
                Ok(CExpr::Succ(bit(&items[1])?))
            }
            "comp" => {
                arms(items, loc, "comp", "n h (g ...)")?;
                let n = number(&items[1], "arity")?;
                let head = self.child(&items[2], Step::Head, path, locs, get)?;
                let args = list(&items[3], "the argument functions")?
                    .iter()
                    .enumerate()
                    .map(|(k, g)| self.child(g, Step::Arg(k), path, locs, get))
                    .collect::<Result<_, _>>()?;
                Ok(CExpr::comp(n, head, args))
            }
            "rec" => {
                arms(items, loc, "rec", "g h0 h1 j")?;
                Ok(CExpr::rec(
                    self.child(&items[1], Step::Base, path, locs, get)?,
                    self.child(&items[2], Step::Step0, path, locs, get)?,
                    self.child(&items[3], Step::Step1, path, locs, get)?,
                    self.child(&items[4], Step::Bound, path, locs, get)?,
                ))
            }
            other => err(loc, format!("unknown form {other:?} in a C program")),
        }
    }

    fn b(&self, s: &Sexpr, path: &mut Vec<Step>, locs: &mut Locations) -> Result<BExpr, SyntaxError> {
        let get = |e: Expr| match e {
            Expr::B(e) => e,
            _ => unreachable!("class is fixed per parser"),
        };
        let items = match s {
            Sexpr::Atom(a, loc) => {
                return match a.as_str() {
                    "zero" => Ok(BExpr::Zero),
                    "pred" => Ok(BExpr::Pred),
                    "cond" => Ok(BExpr::Cond),
                    name => self.identifier(name, *loc).map(get),
                }
            }
            Sexpr::List(items, _) => items,
        };
        let loc = s.loc();
        let Some(Sexpr::Atom(head, _)) = items.first() else {
            return err(loc, "expected a form such as (comp ...) or (rec ...)");
        };
        match head.as_str() {
            "pi" => {
                arms(items, loc, "pi", "i n s")?;
                Ok(BExpr::proj(
                    number(&items[1], "index")?,
                    number(&items[2], "normal arity")?,
                    number(&items[3], "safe arity")?,
                ))
            }
            "succ" => {
                arms(items, loc, "succ", "bit")?;
                Ok(BExpr::Succ(bit(&items[1])?))
            }
            "comp" => {
                arms(items, loc, "comp", "n s h (gN ...) (gS ...)")?;
                let n = number(&items[1], "normal arity")?;
                let sa = number(&items[2], "safe arity")?;
                let head = self.child(&items[3], Step::Head, path, locs, get)?;
                let normals = list(&items[4], "the normal argument functions")?
                    .iter()
                    .enumerate()
                    .map(|(k, g)| self.child(g, Step::Normal(k), path, locs, get))
                    .collect::<Result<_, _>>()?;
                let safes = list(&items[5], "the safe argument functions")?
                    .iter()
                    .enumerate()
                    .map(|(k, g)| self.child(g, Step::Safe(k), path, locs, get))
                    .collect::<Result<_, _>>()?;
                Ok(BExpr::comp(n, sa, head, normals, safes))
            }
            "rec" => {
                arms(items, loc, "rec", "g h0 h1")?;
                Ok(BExpr::rec(
                    self.child(&items[1], Step::Base, path, locs, get)?,
                    self.child(&items[2], Step::Step0, path, locs, get)?,
                    self.child(&items[3], Step::Step1, path, locs, get)?,
                ))
            }
            "pn" | "ps" => err(loc, format!("({head} i) is B_inf syntax; annotated B uses (pi i n s)")),
            other => err(loc, format!("unknown form {other:?} in a B program")),
        }
    }

    fn binf(&self, s: &Sexpr, path: &mut Vec<Step>, locs: &mut Locations) -> Result<BInfExpr, SyntaxError> {
        let get = |e: Expr| match e {
            Expr::BInf(e) => e,
            _ => unreachable!("class is fixed per parser"),
        };
        let items = match s {
            Sexpr::Atom(a, loc) => {
                return match a.as_str() {
                    "zero" => Ok(BInfExpr::Zero),
                    "pred" => Ok(BInfExpr::Pred),
                    "cond" => Ok(BInfExpr::Cond),
                    name => self.identifier(name, *loc).map(get),
                }
            }
            Sexpr::List(items, _) => items,
        };
        let loc = s.loc();
        let Some(Sexpr::Atom(head, _)) = items.first() else {
            return err(loc, "expected a form such as (comp ...) or (rec ...)");
        };
        match head.as_str() {
            "pn" => {
                arms(items, loc, "pn", "i")?;
                Ok(BInfExpr::ProjN(number(&items[1], "index")?))
            }
            "ps" => {
                arms(items, loc, "ps", "i")?;
                Ok(BInfExpr::ProjS(number(&items[1], "index")?))
            }
            "succ" => {
                arms(items, loc, "succ", "bit")?;
                Ok(BInfExpr::Succ(bit(&items[1])?))
            }
            "comp" => {
                arms(items, loc, "comp", "h (gN ...) (gS ...)")?;
                let head = self.child(&items[1], Step::Head, path, locs, get)?;
                let normals = list(&items[2], "the normal argument functions")?
                    .iter()
                    .enumerate()
                    .map(|(k, g)| self.child(g, Step::Normal(k), path, locs, get))
                    .collect::<Result<_, _>>()?;
                let safes = list(&items[3], "the safe argument functions")?
                    .iter()
                    .enumerate()
                    .map(|(k, g)| self.child(g, Step::Safe(k), path, locs, get))
                    .collect::<Result<_, _>>()?;
                Ok(BInfExpr::comp(head, normals, safes))
            }
            "rec" => {
                arms(items, loc, "rec", "g h0 h1")?;
                Ok(BInfExpr::rec(
                    self.child(&items[1], Step::Base, path, locs, get)?,
                    self.child(&items[2], Step::Step0, path, locs, get)?,
                    self.child(&items[3], Step::Step1, path, locs, get)?,
                ))
            }
            "pi" => err(loc, "(pi i n s) is annotated B syntax; B_inf uses (pn i) and (ps i)"),
            other => err(loc, format!("unknown form {other:?} in a B_inf program")),
        }
    }
}

fn bit_char(b: Bit) -> char {
    b.as_char()
}

pub fn print_c(e: &CExpr) -> String {
    let mut out = String::new();
    write_c(&mut out, e);
    out
}

fn write_c(out: &mut String, e: &CExpr) {
    match e {
        CExpr::Zero => out.push('O'),
        CExpr::Smash => out.push_str("smash"),
        CExpr::Proj { index, arity } => write!(out, "(proj {index} {arity})").unwrap(),
        CExpr::Succ(b) => write!(out, "(succ {})", bit_char(*b)).unwrap(),
        CExpr::Comp { arity, head, args } => {
            write!(out, "(comp {arity} ").unwrap();
            write_c(out, head);
            out.push_str(" (");
            for (k, g) in args.iter().enumerate() {
                if k > 0 {
                    out.push(' ');
                }
                write_c(out, g);
            }
            out.push_str("))");
        }
        CExpr::Rec {
            base,
            step0,
            step1,
            bound,
        } => {
            out.push_str("(rec");
            for part in [base, step0, step1, bound] {
                out.push(' ');
                write_c(out, part);
            }
            out.push(')');
        }
    }
}

pub fn print_b(e: &BExpr) -> String {
    let mut out = String::new();
    write_b(&mut out, e);
    out
}

fn write_b_list(out: &mut String, items: &[BExpr]) {
    out.push('(');
    for (k, g) in items.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        write_b(out, g);
    }
    out.push(')');
}

fn write_b(out: &mut String, e: &BExpr) {
    match e {
        BExpr::Zero => out.push_str("zero"),
        BExpr::Pred => out.push_str("pred"),
        BExpr::Cond => out.push_str("cond"),
        BExpr::Proj { index, normal, safe } => write!(out, "(pi {index} {normal} {safe})").unwrap(),
        BExpr::Succ(b) => write!(out, "(succ {})", bit_char(*b)).unwrap(),
        BExpr::Comp {
            normal,
            safe,
            head,
            normals,
            safes,
        } => {
            write!(out, "(comp {normal} {safe} ").unwrap();
            write_b(out, head);
            out.push(' ');
            write_b_list(out, normals);
            out.push(' ');
            write_b_list(out, safes);
            out.push(')');
        }
        BExpr::Rec { base, step0, step1 } => {
            out.push_str("(rec");
            for part in [base, step0, step1] {
                out.push(' ');
                write_b(out, part);
            }
            out.push(')');
        }
    }
}

pub fn print_binf(e: &BInfExpr) -> String {
    let mut out = String::new();
    write_binf(&mut out, e);
    out
}

fn write_binf_list(out: &mut String, items: &[BInfExpr]) {
    out.push('(');
    for (k, g) in items.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        write_binf(out, g);
    }
    out.push(')');
}

fn write_binf(out: &mut String, e: &BInfExpr) {
    match e {
        BInfExpr::Zero => out.push_str("zero"),
        BInfExpr::Pred => out.push_str("pred"),
        BInfExpr::Cond => out.push_str("cond"),
        BInfExpr::ProjN(i) => write!(out, "(pn {i})").unwrap(),
        BInfExpr::ProjS(i) => write!(out, "(ps {i})").unwrap(),
        BInfExpr::Succ(b) => write!(out, "(succ {})", bit_char(*b)).unwrap(),
        BInfExpr::Comp { head, normals, safes } => {
            out.push_str("(comp ");
            write_binf(out, head);
            out.push(' ');
            write_binf_list(out, normals);
            out.push(' ');
            write_binf_list(out, safes);
            out.push(')');
        }
        BInfExpr::Rec { base, step0, step1 } => {
            out.push_str("(rec");
            for part in [base, step0, step1] {
                out.push(' ');
                write_binf(out, part);
            }
            out.push(')');
        }
    }
}
