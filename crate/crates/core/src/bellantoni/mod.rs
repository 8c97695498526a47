//! Bellantoni-Cook's class over bitstrings.
//!
//! Arguments are split into normal ones (which may drive a recursion) and
//! safe ones (which may only be inspected bit by bit). Growth is controlled
//! by syntax alone, so every well-formed expression is polytime and comes
//! with two explicit polynomials: [`BExpr::pol_b`] for output length and
//! [`BExpr::pol_time`] for running time under the cost model of
//! [`BExpr::eval_timed`].

mod infer;

pub use infer::{BInfExpr, InferError};

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitstring::{Bit, Bitstring};
use crate::mpoly::{MPoly, UPoly};
use crate::path::{Step, TermPath};

/// Number of normal and safe arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BArity {
    pub normal: usize,
    pub safe: usize,
}

impl BArity {
    pub const fn new(normal: usize, safe: usize) -> BArity {
        BArity { normal, safe }
    }

    /// Pointwise `<=`.
    pub fn le(self, other: BArity) -> bool {
        self.normal <= other.normal && self.safe <= other.safe
    }
}

impl fmt::Display for BArity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.normal, self.safe)
    }
}

/// A Bellantoni-Cook expression with explicit arity annotations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BExpr {
    Zero,
    /// `π_index^{normal,safe}`; indices `>= normal` select safe arguments.
    Proj {
        index: usize,
        normal: usize,
        safe: usize,
    },
    /// `s_b(; x) = xb`.
    Succ(Bit),
    /// `pred(; ε) = ε`, `pred(; xi) = x`.
    Pred,
    /// `cond(; w, x, y, z)`: `x` if `w` is ε, `y` if its lsb is 0, `z` otherwise.
    Cond,
    /// `comp^{normal,safe} head normals safes`.
    Comp {
        normal: usize,
        safe: usize,
        head: Arc<BExpr>,
        normals: Arc<[BExpr]>,
        safes: Arc<[BExpr]>,
    },
    /// `rec base step0 step1`, recursing on the first normal argument.
    Rec {
        base: Arc<BExpr>,
        step0: Arc<BExpr>,
        step1: Arc<BExpr>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BArityViolation {
    ProjectionIndex { index: usize, normal: usize, safe: usize },
    CompHeadArity { head: BArity, normals: usize, safes: usize },
    CompNormalArity { position: usize, expected: BArity, found: BArity },
    CompSafeArity { position: usize, expected: BArity, found: BArity },
    RecStepArity { base: BArity, step0: BArity, step1: BArity },
}

impl fmt::Display for BArityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BArityViolation::ProjectionIndex { index, normal, safe } => write!(
                f,
                "projection rule: index {index} must be below normal + safe = {}",
                normal + safe
            ),
            BArityViolation::CompHeadArity { head, normals, safes } => write!(
                f,
                "composition rule: head has arity {head} but is given ({normals}, {safes}) argument functions"
            ),
            BArityViolation::CompNormalArity { position, expected, found } => write!(
                f,
                "composition rule: normal argument function {position} has arity {found}, expected {expected}"
            ),
            BArityViolation::CompSafeArity { position, expected, found } => write!(
                f,
                "composition rule: safe argument function {position} has arity {found}, expected {expected}"
            ),
            BArityViolation::RecStepArity { base, step0, step1 } => write!(
                f,
                "recursion rule: step functions have arities {step0} and {step1}, both must be ({}, {})",
                base.normal + 1,
                base.safe + 1
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BError {
    IllFormed {
        path: TermPath,
        violation: BArityViolation,
    },
    ArgumentCount {
        expected: BArity,
        found: BArity,
    },
}

impl fmt::Display for BError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BError::IllFormed { path, violation } => {
                write!(f, "ill-formed expression at {path}: {violation}")
            }
            BError::ArgumentCount { expected, found } => write!(
                f,
                "expected {expected} normal/safe arguments, found {found}"
            ),
        }
    }
}

impl core::error::Error for BError {}

/// A value together with the number of abstract steps spent computing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TimedResult {
    pub value: Bitstring,
    pub cost: u64,
}

fn select_branch(scrutinee: &Bitstring) -> usize {
    match scrutinee.lsb() {
        None => 1,
        Some(Bit::Zero) => 2,
        Some(Bit::One) => 3,
    }
}

impl BExpr {
    pub fn proj(index: usize, normal: usize, safe: usize) -> BExpr {
        BExpr::Proj { index, normal, safe }
    }

    pub fn comp(normal: usize, safe: usize, head: BExpr, normals: Vec<BExpr>, safes: Vec<BExpr>) -> BExpr {
        BExpr::Comp {
            normal,
            safe,
            head: Arc::new(head),
            normals: normals.into(),
            safes: safes.into(),
        }
    }

    pub fn rec(base: BExpr, step0: BExpr, step1: BExpr) -> BExpr {
        BExpr::Rec {
            base: Arc::new(base),
            step0: Arc::new(step0),
            step1: Arc::new(step1),
        }
    }

    pub fn node_count(&self) -> u64 {
        match self {
            BExpr::Comp {
                head, normals, safes, ..
            } => normals
                .iter()
                .chain(safes.iter())
                .fold(1 + head.node_count(), |acc, g| acc.saturating_add(g.node_count())),
            BExpr::Rec { base, step0, step1 } => {
                1 + base.node_count() + step0.node_count() + step1.node_count()
            }
            _ => 1,
        }
    }

    pub fn subterm(&self, path: &[Step]) -> Option<&BExpr> {
        let Some((first, rest)) = path.split_first() else {
            return Some(self);
        };
        let child = match (self, first) {
            (BExpr::Comp { head, .. }, Step::Head) => &**head,
            (BExpr::Comp { normals, .. }, Step::Normal(k)) => normals.get(*k)?,
            (BExpr::Comp { safes, .. }, Step::Safe(k)) => safes.get(*k)?,
            (BExpr::Rec { base, .. }, Step::Base) => &**base,
            (BExpr::Rec { step0, .. }, Step::Step0) => &**step0,
            (BExpr::Rec { step1, .. }, Step::Step1) => &**step1,
            _ => return None,
        };
        child.subterm(rest)
    }

    /// The arity `(normal, safe)`, or the first rule the expression breaks.
    pub fn arity(&self) -> Result<BArity, BError> {
        let mut path = Vec::new();
        self.arity_at(&mut path)
    }

    fn arity_at(&self, path: &mut Vec<Step>) -> Result<BArity, BError> {
        let ill = |path: &Vec<Step>, violation| BError::IllFormed {
            path: TermPath(path.clone()),
            violation,
        };
        match self {
            BExpr::Zero => Ok(BArity::new(0, 0)),
            BExpr::Proj { index, normal, safe } => {
                if *index < normal + safe {
                    Ok(BArity::new(*normal, *safe))
                } else {
                    Err(ill(
                        path,
                        BArityViolation::ProjectionIndex {
                            index: *index,
                            normal: *normal,
                            safe: *safe,
                        },
                    ))
                }
            }
            BExpr::Succ(_) | BExpr::Pred => Ok(BArity::new(0, 1)),
            BExpr::Cond => Ok(BArity::new(0, 4)),
            BExpr::Comp {
                normal,
                safe,
                head,
                normals,
                safes,
            } => {
                path.push(Step::Head);
                let h = head.arity_at(path)?;
                path.pop();
                let normal_expected = BArity::new(*normal, 0);
                for (k, g) in normals.iter().enumerate() {
                    path.push(Step::Normal(k));
                    let a = g.arity_at(path)?;
                    if a != normal_expected {
                        return Err(ill(
                            path,
                            BArityViolation::CompNormalArity {
                                position: k,
                                expected: normal_expected,
                                found: a,
                            },
                        ));
                    }
                    path.pop();
                }
                let safe_expected = BArity::new(*normal, *safe);
                for (k, g) in safes.iter().enumerate() {
                    path.push(Step::Safe(k));
                    let a = g.arity_at(path)?;
                    if a != safe_expected {
                        return Err(ill(
                            path,
                            BArityViolation::CompSafeArity {
                                position: k,
                                expected: safe_expected,
                                found: a,
                            },
                        ));
                    }
                    path.pop();
                }
                if h != BArity::new(normals.len(), safes.len()) {
                    return Err(ill(
                        path,
                        BArityViolation::CompHeadArity {
                            head: h,
                            normals: normals.len(),
                            safes: safes.len(),
                        },
                    ));
                }
                Ok(safe_expected)
            }
            BExpr::Rec { base, step0, step1 } => {
                let mut child = |step, e: &BExpr| {
                    path.push(step);
                    let a = e.arity_at(path);
                    path.pop();
                    a
                };
                let g = child(Step::Base, base)?;
                let h0 = child(Step::Step0, step0)?;
                let h1 = child(Step::Step1, step1)?;
                let expected = BArity::new(g.normal + 1, g.safe + 1);
                if h0 != expected || h1 != expected {
                    return Err(ill(
                        path,
                        BArityViolation::RecStepArity {
                            base: g,
                            step0: h0,
                            step1: h1,
                        },
                    ));
                }
                Ok(BArity::new(g.normal + 1, g.safe))
            }
        }
    }

    fn check_call(&self, normals: &[Bitstring], safes: &[Bitstring]) -> Result<BArity, BError> {
        let expected = self.arity()?;
        let found = BArity::new(normals.len(), safes.len());
        if expected != found {
            return Err(BError::ArgumentCount { expected, found });
        }
        Ok(expected)
    }

    /// Evaluates `e(normals; safes)`.
    pub fn eval(&self, normals: &[Bitstring], safes: &[Bitstring]) -> Result<Bitstring, BError> {
        let arity = self.check_call(normals, safes)?;
        let mut args = Vec::with_capacity(normals.len() + safes.len());
        args.extend_from_slice(normals);
        args.extend_from_slice(safes);
        Ok(self.eval_unchecked(&args, arity.normal))
    }

    /// Evaluation of a well-formed expression on `normals ++ safes`, where
    /// the first `normal` entries are the normal arguments.
    ///
    /// All functions of the class are total, so arguments whose value cannot
    /// influence the result (the unselected branches of a conditional, the
    /// unprojected arguments of a projection) are not computed.
    pub fn eval_unchecked(&self, args: &[Bitstring], normal: usize) -> Bitstring {
        match self {
            BExpr::Zero => Bitstring::empty(),
            BExpr::Proj { index, .. } => args[*index].clone(),
            BExpr::Succ(b) => args[0].append_lsb(*b),
            BExpr::Pred => args[0].drop_lsb(),
            BExpr::Cond => args[select_branch(&args[0])].clone(),
            BExpr::Comp {
                normal: n,
                head,
                normals,
                safes,
                ..
            } => {
                let outer_normals = &args[..*n];
                match &**head {
                    BExpr::Cond => {
                        let w = safes[0].eval_unchecked(args, *n);
                        safes[select_branch(&w)].eval_unchecked(args, *n)
                    }
                    BExpr::Proj { index, .. } => {
                        if *index < normals.len() {
                            normals[*index].eval_unchecked(outer_normals, *n)
                        } else {
                            safes[*index - normals.len()].eval_unchecked(args, *n)
                        }
                    }
                    _ => {
                        let mut inner = Vec::with_capacity(normals.len() + safes.len());
                        inner.extend(normals.iter().map(|g| g.eval_unchecked(outer_normals, *n)));
                        inner.extend(safes.iter().map(|g| g.eval_unchecked(args, *n)));
                        head.eval_unchecked(&inner, normals.len())
                    }
                }
            }
            BExpr::Rec { base, step0, step1 } => {
                // args = (z, x̄; ȳ); base sees (x̄; ȳ), steps see (z', x̄; r, ȳ).
                let z = &args[0];
                let mut acc = base.eval_unchecked(&args[1..], normal - 1);
                let mut frame = Vec::with_capacity(args.len() + 1);
                for k in 0..z.len() {
                    let bit = z.msb_first()[k];
                    frame.clear();
                    frame.push(z.prefix(k));
                    frame.extend_from_slice(&args[1..normal]);
                    frame.push(acc);
                    frame.extend_from_slice(&args[normal..]);
                    let step = if bit.is_one() { step1 } else { step0 };
                    acc = step.eval_unchecked(&frame, normal);
                }
                acc
            }
        }
    }

    /// Evaluation with a step counter: every primitive application costs 1,
    /// a composition costs its argument evaluations plus its head, and a
    /// recursion costs its base case plus every step taken. All arguments
    /// are evaluated.
    pub fn eval_timed(&self, normals: &[Bitstring], safes: &[Bitstring]) -> Result<TimedResult, BError> {
        let arity = self.check_call(normals, safes)?;
        let mut args = Vec::with_capacity(normals.len() + safes.len());
        args.extend_from_slice(normals);
        args.extend_from_slice(safes);
        let (value, cost) = self.eval_timed_unchecked(&args, arity.normal);
        Ok(TimedResult { value, cost })
    }

    fn eval_timed_unchecked(&self, args: &[Bitstring], normal: usize) -> (Bitstring, u64) {
        match self {
            BExpr::Comp {
                normal: n,
                head,
                normals,
                safes,
                ..
            } => {
                let mut cost = 0u64;
                let mut inner = Vec::with_capacity(normals.len() + safes.len());
                for g in normals.iter() {
                    let (v, c) = g.eval_timed_unchecked(&args[..*n], *n);
                    inner.push(v);
                    cost += c;
                }
                for g in safes.iter() {
                    let (v, c) = g.eval_timed_unchecked(args, *n);
                    inner.push(v);
                    cost += c;
                }
                let (v, c) = head.eval_timed_unchecked(&inner, normals.len());
                (v, cost + c)
            }
            BExpr::Rec { base, step0, step1 } => {
                let z = &args[0];
                let (mut acc, mut cost) = base.eval_timed_unchecked(&args[1..], normal - 1);
                let mut frame = Vec::with_capacity(args.len() + 1);
                for k in 0..z.len() {
                    let bit = z.msb_first()[k];
                    frame.clear();
                    frame.push(z.prefix(k));
                    frame.extend_from_slice(&args[1..normal]);
                    frame.push(acc);
                    frame.extend_from_slice(&args[normal..]);
                    let step = if bit.is_one() { step1 } else { step0 };
                    let (v, c) = step.eval_timed_unchecked(&frame, normal);
                    acc = v;
                    cost += c;
                }
                (acc, cost)
            }
            primitive => (primitive.eval_unchecked(args, normal), 1),
        }
    }

    /// Length bound: `|e(x̄; ȳ)| <= pol_b(e)(|x̄|) + max |y_i|`.
    pub fn pol_b(&self) -> Result<MPoly, BError> {
        self.arity()?;
        Ok(self.pol_b_unchecked())
    }

    pub(crate) fn pol_b_unchecked(&self) -> MPoly {
        match self {
            BExpr::Zero | BExpr::Pred | BExpr::Cond => MPoly::zero(0),
            BExpr::Succ(_) => MPoly::constant(0, 1),
            BExpr::Proj { index, normal, .. } => {
                if index < normal {
                    MPoly::variable(*normal, *index).expect("index below normal count")
                } else {
                    MPoly::zero(*normal)
                }
            }
            BExpr::Comp {
                normal,
                head,
                normals,
                safes,
                ..
            } => {
                let inner: Vec<MPoly> = normals.iter().map(BExpr::pol_b_unchecked).collect();
                let composed = head
                    .pol_b_unchecked()
                    .compose_with(&inner, *normal)
                    .expect("arity-checked");
                let safe_polys: Vec<MPoly> = safes.iter().map(BExpr::pol_b_unchecked).collect();
                MPoly::sum(*normal, core::iter::once(&composed).chain(safe_polys.iter()))
                    .expect("arity-checked")
            }
            BExpr::Rec { base, step0, step1 } => {
                rec_poly(base.pol_b_unchecked(), step0.pol_b_unchecked(), step1.pol_b_unchecked())
            }
        }
    }

    /// Running-time bound for [`eval_timed`](Self::eval_timed), a polynomial
    /// in the sizes of the normal arguments only.
    pub fn pol_time(&self) -> Result<MPoly, BError> {
        self.arity()?;
        Ok(self.pol_time_unchecked())
    }

    fn pol_time_unchecked(&self) -> MPoly {
        match self {
            BExpr::Zero | BExpr::Pred | BExpr::Cond | BExpr::Succ(_) => MPoly::constant(0, 1),
            BExpr::Proj { normal, .. } => MPoly::constant(*normal, 1),
            BExpr::Comp {
                normal,
                head,
                normals,
                safes,
                ..
            } => {
                let sizes: Vec<MPoly> = normals.iter().map(BExpr::pol_b_unchecked).collect();
                let head_time = head
                    .pol_time_unchecked()
                    .compose_with(&sizes, *normal)
                    .expect("arity-checked");
                let arg_times: Vec<MPoly> = normals
                    .iter()
                    .chain(safes.iter())
                    .map(BExpr::pol_time_unchecked)
                    .collect();
                MPoly::sum(*normal, core::iter::once(&head_time).chain(arg_times.iter()))
                    .expect("arity-checked")
            }
            BExpr::Rec { base, step0, step1 } => rec_poly(
                base.pol_time_unchecked(),
                step0.pol_time_unchecked(),
                step1.pol_time_unchecked(),
            ),
        }
    }

    /// The size and time envelopes `(F, G)` as univariate polynomials:
    /// `F = 1 + 2·[pol_b]`, `G = [pol_time]`. A caller with an input-size
    /// polynomial `p` uses `F.compose(p)` and `G.compose(p)`.
    pub fn ppt_envelope(&self) -> Result<(UPoly, UPoly), BError> {
        let size = self.pol_b()?.univariate_collapse();
        let time = self.pol_time()?.univariate_collapse();
        Ok((UPoly::constant(1).add(&size.scale(2)), time))
    }
}

// shift(G) + x0·(H0 + H1)
fn rec_poly(base: MPoly, step0: MPoly, step1: MPoly) -> MPoly {
    let n = step0.num_vars();
    let x0 = MPoly::variable(n, 0).expect("recursion has a normal argument");
    let steps = step0.add(&step1).expect("arity-checked");
    base.shift().add(&x0.mul(&steps).expect("same count")).expect("same count")
}

/// `plus(x; y)`: `y` with `|x|` ones appended, so `|plus(x; y)| = |x| + |y|`.
pub fn plus() -> BExpr {
    let step = BExpr::comp(1, 2, BExpr::Succ(Bit::One), vec![], vec![BExpr::proj(1, 1, 2)]);
    BExpr::rec(BExpr::proj(0, 0, 1), step.clone(), step)
}

/// `mult(x, y;)` with `|mult(x, y;)| = |x| · |y|`.
pub fn mult() -> BExpr {
    let step = BExpr::comp(2, 1, plus(), vec![BExpr::proj(1, 2, 0)], vec![BExpr::proj(2, 2, 1)]);
    BExpr::rec(BExpr::comp(1, 0, BExpr::Zero, vec![], vec![]), step.clone(), step)
}

/// Constant of arity `(n, s)` whose value is `c` ones.
pub fn const_b(n: usize, s: usize, c: u64) -> BExpr {
    let mut e = BExpr::comp(n, s, BExpr::Zero, vec![], vec![]);
    for _ in 0..c {
        e = BExpr::comp(n, s, BExpr::Succ(Bit::One), vec![], vec![e]);
    }
    e
}

/// Unary encoding of a polynomial: an expression of arity
/// `(p.num_vars(), 0)` whose output length is exactly `p(|x̄|)`.
pub fn poly_to_b(p: &MPoly) -> BExpr {
    let n = p.num_vars();
    let add = |a: BExpr, b: BExpr| BExpr::comp(n, 0, plus(), vec![a], vec![b]);
    let mul = |a: BExpr, b: BExpr| BExpr::comp(n, 0, mult(), vec![a, b], vec![]);
    let mut sum: Option<BExpr> = None;
    for m in p.monomials() {
        let mut product: Option<BExpr> = None;
        for &(v, power) in m.factors() {
            for _ in 0..power {
                let x = BExpr::proj(v, n, 0);
                product = Some(match product {
                    None => x,
                    Some(acc) => mul(acc, x),
                });
            }
        }
        let term = match (product, m.coefficient()) {
            (None, c) => const_b(n, 0, c),
            (Some(prod), 1) => prod,
            (Some(prod), c) => mul(const_b(n, 0, c), prod),
        };
        sum = Some(match sum {
            None => term,
            Some(acc) => add(acc, term),
        });
    }
    sum.unwrap_or_else(|| const_b(n, 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::size_vector;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn lit(s: &str) -> Bitstring {
        Bitstring::parse_literal(s).unwrap()
    }

    #[test]
    fn arities() {
        assert_eq!(plus().arity(), Ok(BArity::new(1, 1)));
        assert_eq!(mult().arity(), Ok(BArity::new(2, 0)));
        assert_eq!(BExpr::Cond.arity(), Ok(BArity::new(0, 4)));
        let bad = BExpr::proj(3, 1, 2);
        assert!(matches!(
            bad.arity(),
            Err(BError::IllFormed {
                violation: BArityViolation::ProjectionIndex { .. },
                ..
            })
        ));
        // a normal argument function may not read safe arguments
        let bad = BExpr::comp(1, 1, BExpr::Pred, vec![], vec![]);
        assert!(bad.arity().unwrap_err().to_string().contains("composition rule"));
        let bad = BExpr::comp(1, 1, BExpr::Succ(Bit::One), vec![BExpr::proj(0, 1, 1)], vec![]);
        match bad.arity().unwrap_err() {
            BError::IllFormed { path, violation } => {
                assert_eq!(path.to_string(), "gN[0]");
                assert!(matches!(violation, BArityViolation::CompNormalArity { .. }));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn conditional() {
        let safes = [lit("eps"), lit("1"), lit("0"), lit("11")];
        assert_eq!(BExpr::Cond.eval(&[], &safes).unwrap(), lit("1"));
        let safes = [lit("110"), lit("1"), lit("0"), lit("11")];
        assert_eq!(BExpr::Cond.eval(&[], &safes).unwrap(), lit("0"));
        let safes = [lit("01"), lit("1"), lit("0"), lit("11")];
        assert_eq!(BExpr::Cond.eval(&[], &safes).unwrap(), lit("11"));
    }

    #[test]
    fn predecessor() {
        assert_eq!(BExpr::Pred.eval(&[], &[lit("eps")]).unwrap(), lit("eps"));
        assert_eq!(BExpr::Pred.eval(&[], &[lit("101")]).unwrap(), lit("10"));
    }

    #[test]
    fn plus_and_mult() {
        assert_eq!(plus().eval(&[lit("11")], &[lit("0")]).unwrap(), lit("011"));
        assert_eq!(mult().eval(&[lit("10"), lit("111")], &[]).unwrap().len(), 6);
        assert_eq!(
            plus().eval(&[lit("1")], &[]),
            Err(BError::ArgumentCount {
                expected: BArity::new(1, 1),
                found: BArity::new(1, 0)
            })
        );
    }

    #[test]
    fn timed_examples() {
        let r = BExpr::Zero.eval_timed(&[], &[]).unwrap();
        assert_eq!((r.value, r.cost), (Bitstring::empty(), 1));
        let e = BExpr::comp(0, 1, BExpr::Succ(Bit::One), vec![], vec![BExpr::proj(0, 0, 1)]);
        let r = e.eval_timed(&[], &[lit("1")]).unwrap();
        assert_eq!((r.value, r.cost), (lit("11"), 2));
        let r = plus().eval_timed(&[lit("11")], &[lit("0")]).unwrap();
        assert_eq!((r.value, r.cost), (lit("011"), 5));
    }

    #[test]
    fn length_polynomials() {
        assert_eq!(BExpr::Succ(Bit::One).pol_b().unwrap(), MPoly::constant(0, 1));
        assert_eq!(plus().pol_b().unwrap().print_canonical(), "2*x0");
        assert!(BExpr::proj(1, 1, 2).pol_b().unwrap().is_zero());
        assert_eq!(BExpr::proj(0, 2, 1).pol_b().unwrap().print_canonical(), "x0");
    }

    #[test]
    fn time_polynomials() {
        assert_eq!(BExpr::Pred.pol_time().unwrap(), MPoly::constant(0, 1));
        let t = plus().pol_time().unwrap();
        assert_eq!(t.print_canonical(), "4*x0 + 1");
        assert!(plus().eval_timed(&[lit("11")], &[lit("0")]).unwrap().cost <= t.eval(&[2]).unwrap());
        assert_eq!(t.eval(&[2]).unwrap(), 9);
    }

    #[test]
    fn envelopes() {
        let (f, g) = BExpr::Zero.ppt_envelope().unwrap();
        assert_eq!((f, g), (UPoly::constant(1), UPoly::constant(1)));
        let (f, g) = BExpr::Succ(Bit::One).ppt_envelope().unwrap();
        assert_eq!((f, g), (UPoly::constant(3), UPoly::constant(1)));
        let (f, g) = plus().ppt_envelope().unwrap();
        assert_eq!(f.to_string(), "4*x + 1");
        assert_eq!(g, plus().pol_time().unwrap().univariate_collapse());
    }

    #[test]
    fn unary_encoding_examples() {
        let x0 = MPoly::variable(1, 0).unwrap();
        assert_eq!(poly_to_b(&x0).eval(&[lit("10")], &[]).unwrap().len(), 2);
        let two = MPoly::constant(0, 2);
        assert_eq!(poly_to_b(&two).eval(&[], &[]).unwrap().len(), 2);
        let xy1 = MPoly::from_terms(2, vec![(1, vec![(0, 1), (1, 1)]), (1, vec![])]).unwrap();
        let e = poly_to_b(&xy1);
        assert_eq!(e.arity(), Ok(BArity::new(2, 0)));
        assert_eq!(e.eval(&[lit("10"), lit("11")], &[]).unwrap().len(), 5);
    }

    #[test]
    fn lazy_and_strict_evaluation_agree() {
        let e = BExpr::comp(
            1,
            1,
            BExpr::Cond,
            vec![],
            vec![
                BExpr::proj(1, 1, 1),
                BExpr::comp(1, 1, plus(), vec![BExpr::proj(0, 1, 0)], vec![BExpr::proj(1, 1, 1)]),
                BExpr::proj(0, 1, 1),
                BExpr::comp(1, 1, BExpr::Pred, vec![], vec![BExpr::proj(0, 1, 1)]),
            ],
        );
        for (x, y) in [("101", "eps"), ("11", "10"), ("0", "1")] {
            let lazy = e.eval(&[lit(x)], &[lit(y)]).unwrap();
            let strict = e.eval_timed(&[lit(x)], &[lit(y)]).unwrap().value;
            assert_eq!(lazy, strict);
        }
    }

    fn arb_bits(max: usize) -> impl Strategy<Value = Bitstring> {
        proptest::collection::vec(any::<bool>(), 0..=max)
            .prop_map(|v| Bitstring::from_lsb_first(v.into_iter().map(Bit::from_bool)))
    }

    proptest! {
        #[test]
        fn plus_length_law(x in arb_bits(12), y in arb_bits(12)) {
            prop_assert_eq!(plus().eval(&[x.clone()], &[y.clone()]).unwrap().len(), x.len() + y.len());
        }

        #[test]
        fn mult_length_law(x in arb_bits(12), y in arb_bits(12)) {
            prop_assert_eq!(mult().eval(&[x.clone(), y.clone()], &[]).unwrap().len(), x.len() * y.len());
        }

        #[test]
        fn poly_to_b_exact_length(p in crate::mpoly::tests::arb_poly(3),
                                  xs in proptest::collection::vec(arb_bits(8), 3)) {
            let e = poly_to_b(&p);
            prop_assert_eq!(e.arity().unwrap(), BArity::new(3, 0));
            let out = e.eval(&xs, &[]).unwrap();
            prop_assert_eq!(out.len() as u64, p.eval(&size_vector(&xs)).unwrap());
        }
    }
}
