//! Arity inference for Bellantoni-Cook expressions written without arity
//! annotations.
//!
//! Every node gets two unknowns (its normal and safe arity). The typing
//! rules only ever relate two unknowns by a constant offset, so the
//! constraints are solved with a weighted union-find; projections and the
//! optional floor contribute lower bounds, and each class takes the least
//! value meeting all of them.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::{BArity, BError, BExpr};
use crate::bitstring::Bit;
use crate::path::{Step, TermPath};

/// An expression whose projections and compositions carry no arities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BInfExpr {
    Zero,
    /// The `i`-th normal argument.
    ProjN(usize),
    /// The `i`-th safe argument.
    ProjS(usize),
    Succ(Bit),
    Pred,
    Cond,
    Comp {
        head: Arc<BInfExpr>,
        normals: Arc<[BInfExpr]>,
        safes: Arc<[BInfExpr]>,
    },
    Rec {
        base: Arc<BInfExpr>,
        step0: Arc<BInfExpr>,
        step1: Arc<BInfExpr>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InferError {
    /// Two rules force different arities on the subterm at `path`.
    Conflict { path: TermPath, detail: &'static str },
}

impl fmt::Display for InferError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InferError::Conflict { path, detail } => {
                write!(f, "no consistent arity at {path}: {detail}")
            }
        }
    }
}

impl core::error::Error for InferError {}

const ANCHOR: usize = 0;

struct Solver {
    parent: Vec<usize>,
    // value(v) = value(parent[v]) + offset[v]
    offset: Vec<i64>,
    lower: Vec<i64>,
    origin: Vec<TermPath>,
}

impl Solver {
    fn new() -> Solver {
        Solver {
            parent: alloc::vec![ANCHOR],
            offset: alloc::vec![0],
            lower: alloc::vec![0],
            origin: alloc::vec![TermPath::root()],
        }
    }

    fn fresh(&mut self, path: &[Step]) -> usize {
        let v = self.parent.len();
        self.parent.push(v);
        self.offset.push(0);
        self.lower.push(0);
        self.origin.push(TermPath::from(path));
        v
    }

    fn find(&mut self, v: usize) -> (usize, i64) {
        let mut chain = Vec::new();
        let mut cur = v;
        while self.parent[cur] != cur {
            chain.push(cur);
            cur = self.parent[cur];
        }
        let root = cur;
        // compress: walk back from nearest-to-root
        let mut acc = 0i64;
        for &node in chain.iter().rev() {
            acc += self.offset[node];
            self.offset[node] = acc;
            self.parent[node] = root;
        }
        (root, if v == root { 0 } else { self.offset[v] })
    }

    /// Imposes `value(a) = value(b) + k`.
    fn relate(&mut self, a: usize, b: usize, k: i64, path: &[Step], detail: &'static str) -> Result<(), InferError> {
        let (ra, oa) = self.find(a);
        let (rb, ob) = self.find(b);
        if ra == rb {
            if oa != ob + k {
                return Err(InferError::Conflict {
                    path: TermPath::from(path),
                    detail,
                });
            }
            return Ok(());
        }
        // value(ra) = value(rb) + (ob + k - oa)
        let d = ob + k - oa;
        if ra == ANCHOR {
            self.parent[rb] = ra;
            self.offset[rb] = -d;
        } else {
            self.parent[ra] = rb;
            self.offset[ra] = d;
        }
        Ok(())
    }

    fn fix(&mut self, v: usize, value: usize, path: &[Step], detail: &'static str) -> Result<(), InferError> {
        self.relate(v, ANCHOR, value as i64, path, detail)
    }

    fn at_least(&mut self, v: usize, bound: usize) {
        self.lower[v] = self.lower[v].max(bound as i64);
    }

    fn solve(&mut self) -> Result<Vec<usize>, InferError> {
        let n = self.parent.len();
        let mut root_value = alloc::vec![0i64; n];
        let mut roots = Vec::with_capacity(n);
        for v in 0..n {
            roots.push(self.find(v));
        }
        for (v, &(r, o)) in roots.iter().enumerate() {
            if r != ANCHOR {
                root_value[r] = root_value[r].max(self.lower[v] - o);
            }
        }
        let mut values = Vec::with_capacity(n);
        for (v, &(r, o)) in roots.iter().enumerate() {
            let value = root_value[r] + o;
            if value < 0 {
                return Err(InferError::Conflict {
                    path: self.origin[v].clone(),
                    detail: "the rules force a negative number of arguments",
                });
            }
            if value < self.lower[v] {
                return Err(InferError::Conflict {
                    path: self.origin[v].clone(),
                    detail: "a projection or the requested floor needs more arguments than the rules allow",
                });
            }
            values.push(value as usize);
        }
        Ok(values)
    }
}

// Per-node unknowns, in preorder.
struct Vars {
    normal: usize,
    safe: usize,
}

impl BInfExpr {
    pub fn comp(head: BInfExpr, normals: Vec<BInfExpr>, safes: Vec<BInfExpr>) -> BInfExpr {
        BInfExpr::Comp {
            head: Arc::new(head),
            normals: normals.into(),
            safes: safes.into(),
        }
    }

    pub fn rec(base: BInfExpr, step0: BInfExpr, step1: BInfExpr) -> BInfExpr {
        BInfExpr::Rec {
            base: Arc::new(base),
            step0: Arc::new(step0),
            step1: Arc::new(step1),
        }
    }

    /// Annotates the expression with the least arities it admits. With a
    /// `floor`, the root gets at least that many normal and safe arguments.
    pub fn infer(&self, floor: Option<BArity>) -> Result<BExpr, InferError> {
        let mut solver = Solver::new();
        let mut vars = Vec::new();
        let mut path = Vec::new();
        self.constrain(&mut solver, &mut vars, &mut path)?;
        if let Some(floor) = floor {
            solver.at_least(vars[0].normal, floor.normal);
            solver.at_least(vars[0].safe, floor.safe);
        }
        let values = solver.solve()?;
        let mut next = 0;
        let out = self.annotate(&vars, &values, &mut next);
        debug_assert!(out.arity().is_ok());
        Ok(out)
    }

    fn constrain(&self, s: &mut Solver, vars: &mut Vec<Vars>, path: &mut Vec<Step>) -> Result<usize, InferError> {
        let me = vars.len();
        let normal = s.fresh(path);
        let safe = s.fresh(path);
        vars.push(Vars { normal, safe });
        let fixed = |s: &mut Solver, path: &[Step], n, k| -> Result<(), InferError> {
            s.fix(normal, n, path, "primitive has a fixed arity")?;
            s.fix(safe, k, path, "primitive has a fixed arity")
        };
        match self {
            BInfExpr::Zero => fixed(s, path, 0, 0)?,
            BInfExpr::Succ(_) | BInfExpr::Pred => fixed(s, path, 0, 1)?,
            BInfExpr::Cond => fixed(s, path, 0, 4)?,
            BInfExpr::ProjN(i) => s.at_least(normal, i + 1),
            BInfExpr::ProjS(i) => s.at_least(safe, i + 1),
            BInfExpr::Comp { head, normals, safes } => {
                path.push(Step::Head);
                let h = head.constrain(s, vars, path)?;
                let (hn, hs) = (vars[h].normal, vars[h].safe);
                s.fix(hn, normals.len(), path, "head must take one normal argument per normal argument function")?;
                s.fix(hs, safes.len(), path, "head must take one safe argument per safe argument function")?;
                path.pop();
                for (k, g) in normals.iter().enumerate() {
                    path.push(Step::Normal(k));
                    let c = g.constrain(s, vars, path)?;
                    let (cn, cs) = (vars[c].normal, vars[c].safe);
                    s.relate(cn, normal, 0, path, "normal argument functions see exactly the normal arguments")?;
                    s.fix(cs, 0, path, "normal argument functions take no safe arguments")?;
                    path.pop();
                }
                for (k, g) in safes.iter().enumerate() {
                    path.push(Step::Safe(k));
                    let c = g.constrain(s, vars, path)?;
                    let (cn, cs) = (vars[c].normal, vars[c].safe);
                    s.relate(cn, normal, 0, path, "safe argument functions see all normal arguments")?;
                    s.relate(cs, safe, 0, path, "safe argument functions see all safe arguments")?;
                    path.pop();
                }
            }
            BInfExpr::Rec { base, step0, step1 } => {
                path.push(Step::Base);
                let g = base.constrain(s, vars, path)?;
                path.pop();
                let (gn, gs) = (vars[g].normal, vars[g].safe);
                s.relate(normal, gn, 1, path, "recursion adds one normal argument to its base case")?;
                s.relate(safe, gs, 0, path, "recursion keeps the safe arguments of its base case")?;
                for (step, h) in [(Step::Step0, step0), (Step::Step1, step1)] {
                    path.push(step);
                    let c = h.constrain(s, vars, path)?;
                    let (cn, cs) = (vars[c].normal, vars[c].safe);
                    s.relate(cn, gn, 1, path, "step functions take the recursion argument as an extra normal argument")?;
                    s.relate(cs, gs, 1, path, "step functions take the recursive value as an extra safe argument")?;
                    path.pop();
                }
            }
        }
        Ok(me)
    }

    // Must visit nodes in the same preorder as `constrain`.
    fn annotate(&self, vars: &[Vars], values: &[usize], next: &mut usize) -> BExpr {
        let me = &vars[*next];
        *next += 1;
        let (n, s) = (values[me.normal], values[me.safe]);
        match self {
            BInfExpr::Zero => BExpr::Zero,
            BInfExpr::Succ(b) => BExpr::Succ(*b),
            BInfExpr::Pred => BExpr::Pred,
            BInfExpr::Cond => BExpr::Cond,
            BInfExpr::ProjN(i) => BExpr::proj(*i, n, s),
            BInfExpr::ProjS(i) => BExpr::proj(n + i, n, s),
            BInfExpr::Comp { head, normals, safes } => {
                let h = head.annotate(vars, values, next);
                let gn = normals.iter().map(|g| g.annotate(vars, values, next)).collect();
                let gs = safes.iter().map(|g| g.annotate(vars, values, next)).collect();
                BExpr::comp(n, s, h, gn, gs)
            }
            BInfExpr::Rec { base, step0, step1 } => {
                let g = base.annotate(vars, values, next);
                let h0 = step0.annotate(vars, values, next);
                let h1 = step1.annotate(vars, values, next);
                BExpr::rec(g, h0, h1)
            }
        }
    }
}

impl BExpr {
    /// Forgets the arity annotations of a well-formed expression.
    pub fn erase(&self) -> Result<BInfExpr, BError> {
        self.arity()?;
        Ok(self.erase_unchecked())
    }

    fn erase_unchecked(&self) -> BInfExpr {
        match self {
            BExpr::Zero => BInfExpr::Zero,
            BExpr::Succ(b) => BInfExpr::Succ(*b),
            BExpr::Pred => BInfExpr::Pred,
            BExpr::Cond => BInfExpr::Cond,
            BExpr::Proj { index, normal, .. } => {
                if index < normal {
                    BInfExpr::ProjN(*index)
                } else {
                    BInfExpr::ProjS(index - normal)
                }
            }
            BExpr::Comp { head, normals, safes, .. } => BInfExpr::comp(
                head.erase_unchecked(),
                normals.iter().map(BExpr::erase_unchecked).collect(),
                safes.iter().map(BExpr::erase_unchecked).collect(),
            ),
            BExpr::Rec { base, step0, step1 } => BInfExpr::rec(
                base.erase_unchecked(),
                step0.erase_unchecked(),
                step1.erase_unchecked(),
            ),
        }
    }
}
