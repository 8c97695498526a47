//! Cobham's class over bitstrings.
//!
//! Expressions are built from the empty-string constant, projections, the
//! two bit successors, smash, composition and bounded recursion on notation.
//! Membership in the class also requires every recursion to stay below its
//! bounding function; that condition is semantic and is checked at run time
//! by [`CExpr::eval_checked`].

use alloc::boxed::Box;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitstring::{Bit, Bitstring};
use crate::mpoly::MPoly;
use crate::path::{Step, TermPath};

/// A Cobham expression. Children are shared, so cloning is cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CExpr {
    /// The constant ε.
    Zero,
    /// `Π_index^arity`.
    Proj { index: usize, arity: usize },
    /// `S_b`, appending `b` in the least significant position.
    Succ(Bit),
    /// `#(x, y) = 1 0^{|x|·|y|}`.
    Smash,
    /// `Comp^arity head args`.
    Comp {
        arity: usize,
        head: Arc<CExpr>,
        args: Arc<[CExpr]>,
    },
    /// `Rec base step0 step1 bound`; recursion on the first argument.
    Rec {
        base: Arc<CExpr>,
        step0: Arc<CExpr>,
        step1: Arc<CExpr>,
        bound: Arc<CExpr>,
    },
}

/// The rule an ill-formed expression breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CArityViolation {
    ProjectionIndex { index: usize, arity: usize },
    CompHeadArity { head: usize, args: usize },
    CompArgArity { position: usize, expected: usize, found: usize },
    RecStepArity { base: usize, step0: usize, step1: usize },
    RecBoundArity { base: usize, bound: usize },
}

impl fmt::Display for CArityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CArityViolation::ProjectionIndex { index, arity } => write!(
                f,
                "projection rule: index {index} must be below the arity {arity}"
            ),
            CArityViolation::CompHeadArity { head, args } => write!(
                f,
                "composition rule: head has arity {head} but is given {args} argument functions"
            ),
            CArityViolation::CompArgArity { position, expected, found } => write!(
                f,
                "composition rule: argument function {position} has arity {found}, expected {expected}"
            ),
            CArityViolation::RecStepArity { base, step0, step1 } => write!(
                f,
                "recursion rule: step functions have arities {step0} and {step1}, both must be base arity + 2 = {}",
                base + 2
            ),
            CArityViolation::RecBoundArity { base, bound } => write!(
                f,
                "recursion rule: bounding function has arity {bound}, must be base arity + 1 = {}",
                base + 1
            ),
        }
    }
}

/// Everything that can go wrong with a Cobham expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CError {
    IllFormed {
        path: TermPath,
        violation: CArityViolation,
    },
    ArgumentCount {
        expected: usize,
        found: usize,
    },
    /// A recursion produced a value longer than its bounding function.
    BoundViolation(Box<BoundViolation>),
}

/// Details of a failed `|f(y, x̄)| <= |j(y, x̄)|` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundViolation {
    pub path: TermPath,
    pub rec: CExpr,
    /// The arguments `(y, x̄)` at the failing step.
    pub inputs: Vec<Bitstring>,
    pub value_len: usize,
    pub bound_len: usize,
}

impl fmt::Display for CError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CError::IllFormed { path, violation } => {
                write!(f, "ill-formed expression at {path}: {violation}")
            }
            CError::ArgumentCount { expected, found } => {
                write!(f, "expected {expected} arguments, found {found}")
            }
            CError::BoundViolation(v) => {
                write!(
                    f,
                    "bounded recursion violated at {}: |f| = {} exceeds |j| = {} on inputs (",
                    v.path, v.value_len, v.bound_len
                )?;
                for (k, x) in v.inputs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl core::error::Error for CError {}

impl CExpr {
    pub fn proj(index: usize, arity: usize) -> CExpr {
        CExpr::Proj { index, arity }
    }

    pub fn succ(b: Bit) -> CExpr {
        CExpr::Succ(b)
    }

    pub fn comp(arity: usize, head: CExpr, args: Vec<CExpr>) -> CExpr {
        CExpr::Comp {
            arity,
            head: Arc::new(head),
            args: args.into(),
        }
    }

    pub fn rec(base: CExpr, step0: CExpr, step1: CExpr, bound: CExpr) -> CExpr {
        CExpr::Rec {
            base: Arc::new(base),
            step0: Arc::new(step0),
            step1: Arc::new(step1),
            bound: Arc::new(bound),
        }
    }

    /// Number of nodes of the expression tree.
    pub fn node_count(&self) -> u64 {
        match self {
            CExpr::Zero | CExpr::Proj { .. } | CExpr::Succ(_) | CExpr::Smash => 1,
            CExpr::Comp { head, args, .. } => args
                .iter()
                .fold(1 + head.node_count(), |acc, g| acc.saturating_add(g.node_count())),
            CExpr::Rec {
                base,
                step0,
                step1,
                bound,
            } => 1 + base.node_count() + step0.node_count() + step1.node_count() + bound.node_count(),
        }
    }

    /// Whether the expression contains a recursion node.
    pub fn has_rec(&self) -> bool {
        match self {
            CExpr::Rec { .. } => true,
            CExpr::Comp { head, args, .. } => head.has_rec() || args.iter().any(CExpr::has_rec),
            _ => false,
        }
    }

    /// The subterm at `path`, if it exists.
    pub fn subterm(&self, path: &[Step]) -> Option<&CExpr> {
        let Some((first, rest)) = path.split_first() else {
            return Some(self);
        };
        let child = match (self, first) {
            (CExpr::Comp { head, .. }, Step::Head) => &**head,
            (CExpr::Comp { args, .. }, Step::Arg(k)) => args.get(*k)?,
            (CExpr::Rec { base, .. }, Step::Base) => &**base,
            (CExpr::Rec { step0, .. }, Step::Step0) => &**step0,
            (CExpr::Rec { step1, .. }, Step::Step1) => &**step1,
            (CExpr::Rec { bound, .. }, Step::Bound) => &**bound,
            _ => return None,
        };
        child.subterm(rest)
    }

    /// The arity `A(e)`, or the first rule the expression breaks.
    pub fn arity(&self) -> Result<usize, CError> {
        let mut path = Vec::new();
        self.arity_at(&mut path)
    }

    fn arity_at(&self, path: &mut Vec<Step>) -> Result<usize, CError> {
        let ill = |path: &Vec<Step>, violation| CError::IllFormed {
            path: TermPath(path.clone()),
            violation,
        };
        match self {
            CExpr::Zero => Ok(0),
            CExpr::Proj { index, arity } => {
                if index < arity {
                    Ok(*arity)
                } else {
                    Err(ill(
                        path,
                        CArityViolation::ProjectionIndex {
                            index: *index,
                            arity: *arity,
                        },
                    ))
                }
            }
            CExpr::Succ(_) => Ok(1),
            CExpr::Smash => Ok(2),
            CExpr::Comp { arity, head, args } => {
                path.push(Step::Head);
                let head_arity = head.arity_at(path)?;
                path.pop();
                for (k, g) in args.iter().enumerate() {
                    path.push(Step::Arg(k));
                    let a = g.arity_at(path)?;
                    if a != *arity {
                        return Err(ill(
                            path,
                            CArityViolation::CompArgArity {
                                position: k,
                                expected: *arity,
                                found: a,
                            },
                        ));
                    }
                    path.pop();
                }
                if head_arity != args.len() {
                    return Err(ill(
                        path,
                        CArityViolation::CompHeadArity {
                            head: head_arity,
                            args: args.len(),
                        },
                    ));
                }
                Ok(*arity)
            }
            CExpr::Rec {
                base,
                step0,
                step1,
                bound,
            } => {
                let mut child = |step, e: &CExpr| {
                    path.push(step);
                    let a = e.arity_at(path);
                    path.pop();
                    a
                };
                let g = child(Step::Base, base)?;
                let h0 = child(Step::Step0, step0)?;
                let h1 = child(Step::Step1, step1)?;
                let j = child(Step::Bound, bound)?;
                if h0 != g + 2 || h1 != g + 2 {
                    return Err(ill(
                        path,
                        CArityViolation::RecStepArity {
                            base: g,
                            step0: h0,
                            step1: h1,
                        },
                    ));
                }
                if j != g + 1 {
                    return Err(ill(path, CArityViolation::RecBoundArity { base: g, bound: j }));
                }
                Ok(j)
            }
        }
    }

    fn check_call(&self, args: &[Bitstring]) -> Result<(), CError> {
        let expected = self.arity()?;
        if expected != args.len() {
            return Err(CError::ArgumentCount {
                expected,
                found: args.len(),
            });
        }
        Ok(())
    }

    /// Evaluates the expression; the recursion bounds are not consulted.
    pub fn eval(&self, args: &[Bitstring]) -> Result<Bitstring, CError> {
        self.check_call(args)?;
        Ok(self.eval_unchecked(args))
    }

    /// Evaluation of an expression already known to be well formed and
    /// called with the right number of arguments.
    pub fn eval_unchecked(&self, args: &[Bitstring]) -> Bitstring {
        match self {
            CExpr::Zero => Bitstring::empty(),
            CExpr::Proj { index, .. } => args[*index].clone(),
            CExpr::Succ(b) => args[0].append_lsb(*b),
            CExpr::Smash => Bitstring::one_then_zeros(args[0].len() * args[1].len()),
            // a projection head only needs the argument it selects
            CExpr::Comp { head, args: gs, .. } => match &**head {
                CExpr::Proj { index, .. } => gs[*index].eval_unchecked(args),
                _ => {
                    let inner: Vec<Bitstring> = gs.iter().map(|g| g.eval_unchecked(args)).collect();
                    head.eval_unchecked(&inner)
                }
            },
            CExpr::Rec {
                base, step0, step1, ..
            } => {
                let (y, rest) = args.split_first().expect("recursion has a first argument");
                let mut acc = base.eval_unchecked(rest);
                let mut frame = Vec::with_capacity(args.len() + 1);
                for k in 0..y.len() {
                    // the prefix of length k followed by bit k (msb-first) is the prefix of length k+1
                    let bit = y.msb_first()[k];
                    frame.clear();
                    frame.push(y.prefix(k));
                    frame.push(acc);
                    frame.extend_from_slice(rest);
                    let step = if bit.is_one() { step1 } else { step0 };
                    acc = step.eval_unchecked(&frame);
                }
                acc
            }
        }
    }

    /// Evaluates the expression and checks, at every recursion node and on
    /// every prefix of the recursion argument actually visited, that the
    /// value is no longer than the bounding function.
    pub fn eval_checked(&self, args: &[Bitstring]) -> Result<Bitstring, CError> {
        self.check_call(args)?;
        let mut path = Vec::new();
        self.eval_checked_at(args, &mut path)
    }

    fn eval_checked_at(&self, args: &[Bitstring], path: &mut Vec<Step>) -> Result<Bitstring, CError> {
        match self {
            CExpr::Comp { head, args: gs, .. } => {
                let mut inner = Vec::with_capacity(gs.len());
                for (k, g) in gs.iter().enumerate() {
                    path.push(Step::Arg(k));
                    inner.push(g.eval_checked_at(args, path)?);
                    path.pop();
                }
                path.push(Step::Head);
                let out = head.eval_checked_at(&inner, path)?;
                path.pop();
                Ok(out)
            }
            CExpr::Rec {
                base,
                step0,
                step1,
                bound,
            } => {
                let (y, rest) = args.split_first().expect("recursion has a first argument");
                let mut frame: Vec<Bitstring> = Vec::with_capacity(args.len() + 1);
                let check = |value: &Bitstring, frame: &mut Vec<Bitstring>, k: usize, path: &mut Vec<Step>| {
                    frame.clear();
                    frame.push(y.prefix(k));
                    frame.extend_from_slice(rest);
                    path.push(Step::Bound);
                    let limit = bound.eval_checked_at(frame, path)?;
                    path.pop();
                    if value.len() > limit.len() {
                        return Err(CError::BoundViolation(Box::new(BoundViolation {
                            path: TermPath(path.clone()),
                            rec: self.clone(),
                            inputs: frame.clone(),
                            value_len: value.len(),
                            bound_len: limit.len(),
                        })));
                    }
                    Ok(())
                };
                path.push(Step::Base);
                let mut acc = base.eval_checked_at(rest, path)?;
                path.pop();
                check(&acc, &mut frame, 0, path)?;
                for k in 0..y.len() {
                    let bit = y.msb_first()[k];
                    frame.clear();
                    frame.push(y.prefix(k));
                    frame.push(acc);
                    frame.extend_from_slice(rest);
                    let (step, label) = if bit.is_one() {
                        (step1, Step::Step1)
                    } else {
                        (step0, Step::Step0)
                    };
                    path.push(label);
                    acc = step.eval_checked_at(&frame, path)?;
                    path.pop();
                    check(&acc, &mut frame, k + 1, path)?;
                }
                Ok(acc)
            }
            _ => Ok(self.eval_unchecked(args)),
        }
    }

    /// The length-bounding polynomial: `|e(x̄)| <= pol_c(e)(|x̄|)` whenever
    /// every recursion respects its bound.
    pub fn pol_c(&self) -> Result<MPoly, CError> {
        self.arity()?;
        Ok(self.pol_c_unchecked())
    }

    pub(crate) fn pol_c_unchecked(&self) -> MPoly {
        match self {
            CExpr::Zero => MPoly::zero(0),
            CExpr::Proj { index, arity } => MPoly::variable(*arity, *index).expect("arity-checked"),
            CExpr::Succ(_) => MPoly::from_terms(1, vec![(1, vec![(0, 1)]), (1, vec![])]).expect("in range"),
            CExpr::Smash => {
                MPoly::from_terms(2, vec![(1, vec![(0, 1), (1, 1)]), (1, vec![])]).expect("in range")
            }
            CExpr::Comp { arity, head, args } => {
                let inner: Vec<MPoly> = args.iter().map(CExpr::pol_c_unchecked).collect();
                head.pol_c_unchecked()
                    .compose_with(&inner, *arity)
                    .expect("arity-checked")
            }
            CExpr::Rec { bound, .. } => bound.pol_c_unchecked(),
        }
    }
}

/// `Rec O Π_0^2 Π_0^2 Π_0^1`: drops the least significant bit.
pub fn pred_c() -> CExpr {
    CExpr::rec(CExpr::Zero, CExpr::proj(0, 2), CExpr::proj(0, 2), CExpr::proj(0, 1))
}

/// Arity-`n` constant whose value has length `c` (a run of ones).
pub fn const_c(n: usize, c: u64) -> CExpr {
    let mut e = CExpr::comp(n, CExpr::Zero, Vec::new());
    for _ in 0..c {
        e = CExpr::comp(n, CExpr::Succ(Bit::One), vec![e]);
    }
    e
}

/// Binary function whose output length is `|x| + |y|`: appends one `1` to
/// `y` per bit of `x`.
pub fn length_add_c() -> CExpr {
    let step = CExpr::comp(3, CExpr::Succ(Bit::One), vec![CExpr::proj(1, 3)]);
    let grow = |i| CExpr::comp(2, CExpr::Succ(Bit::One), vec![CExpr::proj(i, 2)]);
    let bound = CExpr::comp(2, CExpr::Smash, vec![grow(0), grow(1)]);
    CExpr::rec(CExpr::proj(0, 1), step.clone(), step, bound)
}

/// Binary function whose output length is `|x| · |y|`: smash with its
/// leading bit removed.
pub fn length_mul_c() -> CExpr {
    CExpr::comp(
        2,
        pred_c(),
        vec![CExpr::comp(2, CExpr::Smash, vec![CExpr::proj(0, 2), CExpr::proj(1, 2)])],
    )
}

/// Unary encoding of a polynomial: an expression of arity
/// `p.num_vars()` whose output length is exactly `p(|x̄|)`.
pub fn poly_to_c(p: &MPoly) -> CExpr {
    let n = p.num_vars();
    let add = |a: CExpr, b: CExpr| CExpr::comp(n, length_add_c(), vec![a, b]);
    let mul = |a: CExpr, b: CExpr| CExpr::comp(n, length_mul_c(), vec![a, b]);
    let mut sum: Option<CExpr> = None;
    for m in p.monomials() {
        let mut product: Option<CExpr> = None;
        for &(v, power) in m.factors() {
            for _ in 0..power {
                let x = CExpr::proj(v, n);
                product = Some(match product {
                    None => x,
                    Some(acc) => mul(acc, x),
                });
            }
        }
        let term = match (product, m.coefficient()) {
            (None, c) => const_c(n, c),
            (Some(prod), 1) => prod,
            (Some(prod), c) => mul(const_c(n, c), prod),
        };
        sum = Some(match sum {
            None => term,
            Some(acc) => add(acc, term),
        });
    }
    sum.unwrap_or_else(|| CExpr::comp(n, CExpr::Zero, Vec::new()))
}

/// The binary successor written with bounded recursion:
/// `Succ(ε) = 1`, `Succ(x0) = x1`, `Succ(x1) = Succ(x)0`, bounded by `x1`.
pub fn succ_c() -> CExpr {
    CExpr::rec(
        CExpr::comp(0, CExpr::Succ(Bit::One), vec![CExpr::Zero]),
        CExpr::comp(2, CExpr::Succ(Bit::One), vec![CExpr::proj(0, 2)]),
        CExpr::comp(2, CExpr::Succ(Bit::Zero), vec![CExpr::proj(1, 2)]),
        CExpr::comp(1, CExpr::Succ(Bit::One), vec![CExpr::proj(0, 1)]),
    )
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
        assert_eq!(succ_c().arity(), Ok(1));
        assert_eq!(CExpr::Smash.arity(), Ok(2));
        assert_eq!(CExpr::Zero.arity(), Ok(0));
        let err = CExpr::proj(3, 2).arity().unwrap_err();
        assert!(matches!(
            err,
            CError::IllFormed {
                violation: CArityViolation::ProjectionIndex { index: 3, arity: 2 },
                ..
            }
        ));
        assert!(err.to_string().contains("projection rule"));
    }

    #[test]
    fn ill_formed_paths_point_at_the_subterm() {
        let e = CExpr::comp(1, CExpr::Smash, vec![CExpr::proj(0, 1), CExpr::proj(1, 1)]);
        match e.arity().unwrap_err() {
            CError::IllFormed { path, .. } => assert_eq!(path.to_string(), "g[1]"),
            other => panic!("unexpected {other:?}"),
        }
        let e = CExpr::rec(CExpr::Zero, CExpr::proj(0, 2), CExpr::proj(0, 3), CExpr::proj(0, 1));
        assert!(matches!(
            e.arity(),
            Err(CError::IllFormed {
                violation: CArityViolation::RecStepArity { .. },
                ..
            })
        ));
        let e = CExpr::comp(1, CExpr::Smash, vec![CExpr::proj(0, 1)]);
        assert!(matches!(
            e.arity(),
            Err(CError::IllFormed {
                violation: CArityViolation::CompHeadArity { head: 2, args: 1 },
                ..
            })
        ));
    }

    #[test]
    fn smash_examples() {
        assert_eq!(CExpr::Smash.eval(&[lit("10"), lit("11")]).unwrap(), lit("10000"));
        assert_eq!(CExpr::Smash.eval(&[lit(""), lit("111")]).unwrap(), lit("1"));
        assert_eq!(
            CExpr::Smash.eval(&[lit("10")]),
            Err(CError::ArgumentCount { expected: 2, found: 1 })
        );
    }

    #[test]
    fn successor() {
        assert_eq!(succ_c().eval(&[lit("11")]).unwrap(), lit("100"));
        assert_eq!(succ_c().eval_checked(&[lit("11")]).unwrap(), lit("100"));
        assert_eq!(succ_c().eval(&[lit("eps")]).unwrap(), lit("1"));
        assert_eq!(succ_c().eval(&[lit("1010")]).unwrap(), lit("1011"));
    }

    #[test]
    fn checked_evaluation_catches_a_too_small_bound() {
        // The recursion keeps returning its prefix, which soon outgrows the empty bound.
        let e = CExpr::rec(
            CExpr::Zero,
            CExpr::proj(0, 2),
            CExpr::comp(2, CExpr::Succ(Bit::One), vec![CExpr::proj(0, 2)]),
            CExpr::comp(1, CExpr::Zero, vec![]),
        );
        assert_eq!(e.arity(), Ok(1));
        assert_eq!(e.eval(&[lit("1")]).unwrap(), lit("1"));
        match e.eval_checked(&[lit("1")]).unwrap_err() {
            CError::BoundViolation(v) => {
                assert_eq!(v.value_len, 1);
                assert_eq!(v.bound_len, 0);
                assert_eq!(v.inputs, vec![lit("1")]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rec_free_checked_matches_plain() {
        let e = CExpr::comp(2, CExpr::Smash, vec![CExpr::proj(1, 2), CExpr::proj(0, 2)]);
        let args = [lit("101"), lit("11")];
        assert_eq!(e.eval_checked(&args), e.eval(&args));
    }

    #[test]
    fn length_polynomials() {
        assert_eq!(CExpr::Smash.pol_c().unwrap().print_canonical(), "x0*x1 + 1");
        assert!(CExpr::Zero.pol_c().unwrap().is_zero());
        assert_eq!(succ_c().pol_c().unwrap().print_canonical(), "x0 + 1");
    }

    #[test]
    fn unary_encoding_examples() {
        let zero = MPoly::zero(1);
        assert_eq!(poly_to_c(&zero).eval(&[lit("101")]).unwrap(), Bitstring::empty());
        let x0 = MPoly::variable(1, 0).unwrap();
        assert_eq!(poly_to_c(&x0).eval(&[lit("101")]).unwrap().len(), 3);
        let xy1 = MPoly::from_terms(2, vec![(1, vec![(0, 1), (1, 1)]), (1, vec![])]).unwrap();
        let e = poly_to_c(&xy1);
        assert_eq!(e.arity(), Ok(2));
        assert_eq!(e.eval_checked(&[lit("10"), lit("11")]).unwrap().len(), 5);
    }

    #[test]
    fn node_count_counts_tree_nodes() {
        assert_eq!(pred_c().node_count(), 5);
        assert_eq!(succ_c().node_count(), 1 + 3 + 3 + 3 + 3);
    }

    fn arb_bits(max: usize) -> impl Strategy<Value = Bitstring> {
        proptest::collection::vec(any::<bool>(), 0..=max)
            .prop_map(|v| Bitstring::from_lsb_first(v.into_iter().map(Bit::from_bool)))
    }

    proptest! {
        #[test]
        fn smash_law(x in arb_bits(10), y in arb_bits(10)) {
            let out = CExpr::Smash.eval(&[x.clone(), y.clone()]).unwrap();
            prop_assert_eq!(out.len(), x.len() * y.len() + 1);
            prop_assert_eq!(out, Bitstring::one_then_zeros(x.len() * y.len()));
        }

        #[test]
        fn poly_to_c_exact_length(p in crate::mpoly::tests::arb_poly(3),
                                  xs in proptest::collection::vec(arb_bits(8), 3)) {
            let e = poly_to_c(&p);
            prop_assert_eq!(e.arity().unwrap(), 3);
            let out = e.eval(&xs).unwrap();
            prop_assert_eq!(out.len() as u64, p.eval(&size_vector(&xs)).unwrap());
        }

        #[test]
        fn poly_to_c_recursions_are_bounded(p in crate::mpoly::tests::arb_poly(2),
                                            xs in proptest::collection::vec(arb_bits(3), 2)) {
            let out = poly_to_c(&p).eval_checked(&xs).unwrap();
            prop_assert_eq!(out.len() as u64, p.eval(&size_vector(&xs)).unwrap());
        }

        #[test]
        fn successor_respects_its_bound(x in arb_bits(12)) {
            let out = succ_c().eval_checked(&[x.clone()]).unwrap();
            prop_assert!(out.len() as u64 <= succ_c().pol_c().unwrap().eval(&[x.len() as u64]).unwrap());
        }
    }
}
