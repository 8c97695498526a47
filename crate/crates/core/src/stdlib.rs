//! Named definitions, each paired with a direct Rust implementation used as
//! a reference when testing evaluators and translations.
//!
//! `plus` and `mult` are arithmetic on lengths, not binary addition and
//! multiplication: `|plus(x; y)| = |x| + |y|`, `|mult(x, y;)| = |x|·|y|`.
//!
//! The bitwise operations recurse on their first (normal) argument and read
//! the second through a safe position, aligned at the least significant
//! bit. The result has the length of the first argument; missing bits of
//! the second count as 0. Booleans are encoded as `1` (true) and ε (false).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bellantoni::{mult, plus, BArity, BExpr};
use crate::bitstring::{Bit, Bitstring};
use crate::cobham::{succ_c, CExpr};
use crate::translate::{b_to_c, build_p, build_y, one_b};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Class {
    C,
    B,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DefExpr {
    C(CExpr),
    B(BExpr),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DefArity {
    C(usize),
    B(BArity),
}

impl fmt::Display for DefArity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefArity::C(n) => write!(f, "{n}"),
            DefArity::B(a) => write!(f, "{a}"),
        }
    }
}

/// Reference implementation: `(normals, safes)`; Cobham definitions get all
/// their arguments as normals.
pub type Oracle = fn(&[Bitstring], &[Bitstring]) -> Bitstring;

#[derive(Clone, Debug)]
pub struct Def {
    pub name: &'static str,
    pub expr: DefExpr,
    pub expected_arity: DefArity,
    pub oracle: Oracle,
    pub doc: &'static str,
}

impl Def {
    pub fn class(&self) -> Class {
        match self.expr {
            DefExpr::C(_) => Class::C,
            DefExpr::B(_) => Class::B,
        }
    }

    pub fn c_expr(&self) -> Option<&CExpr> {
        match &self.expr {
            DefExpr::C(e) => Some(e),
            DefExpr::B(_) => None,
        }
    }

    pub fn b_expr(&self) -> Option<&BExpr> {
        match &self.expr {
            DefExpr::B(e) => Some(e),
            DefExpr::C(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownName(pub String);

impl fmt::Display for UnknownName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown definition {:?}", self.0)
    }
}

impl core::error::Error for UnknownName {}

pub fn lookup(name: &str) -> Result<Def, UnknownName> {
    all_defs()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or_else(|| UnknownName(name.into()))
}

pub fn all_defs() -> Vec<Def> {
    let c = |name, expr: CExpr, arity, oracle, doc| Def {
        name,
        expr: DefExpr::C(expr),
        expected_arity: DefArity::C(arity),
        oracle,
        doc,
    };
    let b = |name, expr: BExpr, (n, s), oracle, doc| Def {
        name,
        expr: DefExpr::B(expr),
        expected_arity: DefArity::B(BArity::new(n, s)),
        oracle,
        doc,
    };
    vec![
        c("succ_c", succ_c(), 1, oracle_succ, "binary successor by bounded recursion"),
        c("pred_c", b_to_c(&BExpr::Pred).expect("well formed"), 1, oracle_pred, "drops the least significant bit"),
        c("smash", CExpr::Smash, 2, oracle_smash, "1 followed by |x|*|y| zeros"),
        b("plus", plus(), (1, 1), oracle_plus, "y followed by |x| ones: length addition"),
        b("mult", mult(), (2, 0), oracle_mult, "|x|*|y| ones: length multiplication"),
        b("one", one_b(1, 1), (1, 1), oracle_one, "the constant 1"),
        b("xor", bitwise(BitOp::Xor), (1, 1), oracle_xor, "bitwise exclusive or, length of x"),
        b("bit_and", bitwise(BitOp::And), (1, 1), oracle_and, "bitwise and, length of x"),
        b("bit_or", bitwise(BitOp::Or), (1, 1), oracle_or, "bitwise or, length of x"),
        b("bit_not", bit_not(), (1, 0), oracle_not, "bitwise negation"),
        b("eq_test", eq_test(), (1, 1), oracle_eq, "1 if x = y, eps otherwise"),
    ]
}

#[derive(Clone, Copy)]
enum BitOp {
    Xor,
    And,
    Or,
}

impl BitOp {
    fn apply(self, a: Bit, b: Option<Bit>) -> Bit {
        let b = b.unwrap_or(Bit::Zero).is_one();
        let a = a.is_one();
        Bit::from_bool(match self {
            BitOp::Xor => a ^ b,
            BitOp::And => a & b,
            BitOp::Or => a | b,
        })
    }
}

// Shared step shape for the two-argument bit operations: normals (z, x),
// safes (r, y). The probe Y(z1, x; y) exposes the bit of y aligned with the
// current bit of x.
fn probe() -> BExpr {
    let next = BExpr::comp(2, 0, BExpr::Succ(Bit::One), vec![], vec![BExpr::proj(0, 2, 0)]);
    BExpr::comp(2, 2, build_y(), vec![next, BExpr::proj(1, 2, 0)], vec![BExpr::proj(3, 2, 2)])
}

fn emit(b: Bit) -> BExpr {
    BExpr::comp(2, 2, BExpr::Succ(b), vec![], vec![BExpr::proj(2, 2, 2)])
}

// X(u, x; y) walks u = x from the most significant bit.
fn bitwise(op: BitOp) -> BExpr {
    let step = |xb: Bit| {
        BExpr::comp(
            2,
            2,
            BExpr::Cond,
            vec![],
            vec![
                probe(),
                emit(op.apply(xb, None)),
                emit(op.apply(xb, Some(Bit::Zero))),
                emit(op.apply(xb, Some(Bit::One))),
            ],
        )
    };
    let walk = BExpr::rec(BExpr::comp(1, 1, BExpr::Zero, vec![], vec![]), step(Bit::Zero), step(Bit::One));
    BExpr::comp(
        1,
        1,
        walk,
        vec![BExpr::proj(0, 1, 0), BExpr::proj(0, 1, 0)],
        vec![BExpr::proj(1, 1, 1)],
    )
}

fn bit_not() -> BExpr {
    let emit = |b| BExpr::comp(1, 1, BExpr::Succ(b), vec![], vec![BExpr::proj(1, 1, 1)]);
    BExpr::rec(BExpr::Zero, emit(Bit::One), emit(Bit::Zero))
}

fn eq_test() -> BExpr {
    let eps = |n, s| BExpr::comp(n, s, BExpr::Zero, vec![], vec![]);
    // all of y consumed once |x| bits are dropped: |y| <= |x|
    let short_enough = BExpr::comp(1, 1, build_p(), vec![BExpr::proj(0, 1, 0)], vec![BExpr::proj(1, 1, 1)]);
    let base = BExpr::comp(1, 1, BExpr::Cond, vec![], vec![short_enough, one_b(1, 1), eps(1, 1), eps(1, 1)]);
    let keep = BExpr::proj(2, 2, 2);
    let step0 = BExpr::comp(2, 2, BExpr::Cond, vec![], vec![probe(), eps(2, 2), keep.clone(), eps(2, 2)]);
    let step1 = BExpr::comp(2, 2, BExpr::Cond, vec![], vec![probe(), eps(2, 2), eps(2, 2), keep]);
    let walk = BExpr::rec(base, step0, step1);
    BExpr::comp(
        1,
        1,
        walk,
        vec![BExpr::proj(0, 1, 0), BExpr::proj(0, 1, 0)],
        vec![BExpr::proj(1, 1, 1)],
    )
}

fn oracle_succ(x: &[Bitstring], _: &[Bitstring]) -> Bitstring {
    // carry propagation on the lsb-first digits
    let mut bits: Vec<Bit> = x[0].iter_lsb().collect();
    let mut i = 0;
    while i < bits.len() && bits[i] == Bit::One {
        bits[i] = Bit::Zero;
        i += 1;
    }
    if i == bits.len() {
        bits.push(Bit::One);
    } else {
        bits[i] = Bit::One;
    }
    Bitstring::from_lsb_first(bits)
}

fn oracle_pred(x: &[Bitstring], _: &[Bitstring]) -> Bitstring {
    x[0].drop_lsb()
}

fn oracle_smash(x: &[Bitstring], _: &[Bitstring]) -> Bitstring {
    Bitstring::one_then_zeros(x[0].len() * x[1].len())
}

fn oracle_plus(x: &[Bitstring], y: &[Bitstring]) -> Bitstring {
    let mut out = y[0].clone();
    for _ in 0..x[0].len() {
        out = out.push_lsb(Bit::One);
    }
    out
}

fn oracle_mult(x: &[Bitstring], _: &[Bitstring]) -> Bitstring {
    Bitstring::repeat(Bit::One, x[0].len() * x[1].len())
}

fn oracle_one(_: &[Bitstring], _: &[Bitstring]) -> Bitstring {
    Bitstring::repeat(Bit::One, 1)
}

fn zip_bits(op: BitOp, x: &Bitstring, y: &Bitstring) -> Bitstring {
    Bitstring::from_lsb_first((0..x.len()).map(|i| op.apply(x.bit(i).expect("in range"), y.bit(i))))
}

fn oracle_xor(x: &[Bitstring], y: &[Bitstring]) -> Bitstring {
    zip_bits(BitOp::Xor, &x[0], &y[0])
}

fn oracle_and(x: &[Bitstring], y: &[Bitstring]) -> Bitstring {
    zip_bits(BitOp::And, &x[0], &y[0])
}

fn oracle_or(x: &[Bitstring], y: &[Bitstring]) -> Bitstring {
    zip_bits(BitOp::Or, &x[0], &y[0])
}

fn oracle_not(x: &[Bitstring], _: &[Bitstring]) -> Bitstring {
    Bitstring::from_lsb_first(x[0].iter_lsb().map(Bit::flip))
}

fn oracle_eq(x: &[Bitstring], y: &[Bitstring]) -> Bitstring {
    if x[0] == y[0] {
        Bitstring::repeat(Bit::One, 1)
    } else {
        Bitstring::empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(s: &str) -> Bitstring {
        Bitstring::parse_literal(s).unwrap()
    }

    fn all_strings(max_len: usize) -> Vec<Bitstring> {
        let mut out = Vec::new();
        for len in 0..=max_len {
            for bits in 0u32..(1 << len) {
                out.push(Bitstring::from_lsb_first((0..len).map(|i| Bit::from_bool(bits >> i & 1 == 1))));
            }
        }
        out
    }

    fn run(d: &Def, normals: &[Bitstring], safes: &[Bitstring]) -> Bitstring {
        match &d.expr {
            DefExpr::C(e) => {
                let mut args = normals.to_vec();
                args.extend_from_slice(safes);
                e.eval(&args).unwrap()
            }
            DefExpr::B(e) => e.eval(normals, safes).unwrap(),
        }
    }

    #[test]
    fn registry_shape() {
        let defs = all_defs();
        let mut names: Vec<_> = defs.iter().map(|d| d.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), defs.len());
        for d in &defs {
            let actual = match &d.expr {
                DefExpr::C(e) => DefArity::C(e.arity().unwrap()),
                DefExpr::B(e) => DefArity::B(e.arity().unwrap()),
            };
            assert_eq!(actual, d.expected_arity, "{}", d.name);
        }
        assert_eq!(lookup("plus").unwrap().expected_arity, DefArity::B(BArity::new(1, 1)));
        assert_eq!(lookup("succ_c").unwrap().expected_arity, DefArity::C(1));
        assert_eq!(lookup("mult").unwrap().expected_arity, DefArity::B(BArity::new(2, 0)));
        assert!(lookup("xor").is_ok());
        assert_eq!(lookup("nosuch").unwrap_err(), UnknownName("nosuch".into()));
    }

    #[test]
    fn bitwise_examples() {
        let xor = lookup("xor").unwrap();
        assert_eq!(run(&xor, &[lit("1100")], &[lit("1010")]), lit("0110"));
        assert_eq!(run(&xor, &[lit("1100")], &[lit("11")]), lit("1111"));
        assert_eq!(run(&xor, &[lit("11")], &[lit("0110")]), lit("01"));
        let eq = lookup("eq_test").unwrap();
        assert_eq!(run(&eq, &[lit("101")], &[lit("101")]), lit("1"));
        assert_eq!(run(&eq, &[lit("101")], &[lit("0101")]), Bitstring::empty());
        assert_eq!(run(&eq, &[lit("eps")], &[lit("eps")]), lit("1"));
        assert_eq!(run(&eq, &[lit("eps")], &[lit("0")]), Bitstring::empty());
    }

    #[test]
    fn oracle_agreement_exhaustive() {
        let strings = all_strings(4);
        for d in all_defs() {
            let (n, s) = match d.expected_arity {
                DefArity::C(n) => (n, 0),
                DefArity::B(a) => (a.normal, a.safe),
            };
            let mut inputs = vec![Vec::new()];
            for _ in 0..n + s {
                inputs = inputs
                    .into_iter()
                    .flat_map(|v: Vec<Bitstring>| {
                        strings.iter().map(move |x| {
                            let mut v = v.clone();
                            v.push(x.clone());
                            v
                        })
                    })
                    .collect();
            }
            for args in inputs {
                let (normals, safes) = args.split_at(n);
                assert_eq!(run(&d, normals, safes), (d.oracle)(normals, safes), "{} on {args:?}", d.name);
            }
        }
    }

    #[test]
    fn successor_decodes() {
        let succ = lookup("succ_c").unwrap();
        for k in 0u32..256 {
            let x = Bitstring::from_lsb_first((0..32 - k.leading_zeros()).map(|i| Bit::from_bool(k >> i & 1 == 1)));
            let out = run(&succ, &[x], &[]);
            let decoded = out.iter_lsb().enumerate().fold(0u32, |acc, (i, b)| acc | (b.is_one() as u32) << i);
            assert_eq!(decoded, k + 1);
        }
    }
}
