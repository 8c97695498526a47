//! Compilers between the two algebras.
//!
//! [`b_to_c`] is direct: safe arguments become ordinary arguments and every
//! safe recursion becomes a bounded one whose bound is synthesized from the
//! length polynomial. The other direction needs an extra normal argument
//! `w` whose length pays for the simulation of each bounded recursion
//! ([`c_to_b_padded`]); [`c_to_b_closed`] then computes a long enough `w`
//! from the inputs themselves.

use alloc::vec;
use alloc::vec::Vec;

use crate::bellantoni::{poly_to_b, BExpr};
use crate::bitstring::Bit;
use crate::cobham::{poly_to_c, CError, CExpr};
use crate::mpoly::MPoly;

/// A translated Cobham expression of arity `n`: `expr(w; x̄)` equals the
/// source on `x̄` whenever `|w| >= bound(|x̄|)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationResult {
    /// Arity `(1, n)`.
    pub expr: BExpr,
    /// Polynomial over `n` variables.
    pub bound: MPoly,
}

/// Appends `s` ignored arguments to an arity-`n` expression.
pub fn c_dummies(s: usize, e: &CExpr) -> Result<CExpr, CError> {
    let n = e.arity()?;
    Ok(c_dummies_unchecked(n, s, e.clone()))
}

fn c_dummies_unchecked(n: usize, s: usize, e: CExpr) -> CExpr {
    if s == 0 {
        return e;
    }
    CExpr::comp(n + s, e, (0..n).map(|i| CExpr::proj(i, n + s)).collect())
}

/// Adapts an expression expecting `(z, x_1..x_k, r, rest..)` to be called
/// as `(z, r, x_1..x_k, rest..)`: the layout a Cobham recursion hands its
/// step functions, versus the one a safe recursion uses.
pub fn move_arg(e: &CExpr, k: usize) -> Result<CExpr, CError> {
    let arity = e.arity()?;
    assert!(arity >= k + 2, "move_arg needs room for z, {k} arguments and r");
    Ok(move_arg_unchecked(arity, k, e.clone()))
}

fn move_arg_unchecked(arity: usize, k: usize, e: CExpr) -> CExpr {
    let mut args = Vec::with_capacity(arity);
    args.push(CExpr::proj(0, arity));
    args.extend((2..k + 2).map(|i| CExpr::proj(i, arity)));
    args.push(CExpr::proj(1, arity));
    args.extend((k + 2..arity).map(|i| CExpr::proj(i, arity)));
    CExpr::comp(arity, e, args)
}

/// The Cobham term computing `cond`: a recursion on the scrutinee that
/// only ever looks at the last step.
fn cond_c() -> CExpr {
    let s1 = |i| CExpr::comp(4, CExpr::Succ(Bit::One), vec![CExpr::proj(i, 4)]);
    let bound = CExpr::comp(
        4,
        CExpr::Smash,
        vec![s1(1), CExpr::comp(4, CExpr::Smash, vec![s1(2), s1(3)])],
    );
    // step arguments are (w', r, x, y, z): bit 0 selects y, bit 1 selects z
    CExpr::rec(CExpr::proj(0, 3), CExpr::proj(3, 5), CExpr::proj(4, 5), bound)
}

/// Compiles `e` of arity `(n, s)` into a Cobham expression of arity `n + s`
/// taking the normal arguments first.
pub fn b_to_c(e: &BExpr) -> Result<CExpr, crate::bellantoni::BError> {
    e.arity()?;
    Ok(b_to_c_unchecked(e))
}

fn b_to_c_unchecked(e: &BExpr) -> CExpr {
    match e {
        BExpr::Zero => CExpr::Zero,
        BExpr::Proj { index, normal, safe } => CExpr::proj(*index, normal + safe),
        BExpr::Succ(b) => CExpr::Succ(*b),
        BExpr::Pred => crate::cobham::pred_c(),
        BExpr::Cond => cond_c(),
        BExpr::Comp {
            normal,
            safe,
            head,
            normals,
            safes,
        } => {
            let mut args: Vec<CExpr> = normals
                .iter()
                .map(|g| c_dummies_unchecked(*normal, *safe, b_to_c_unchecked(g)))
                .collect();
            args.extend(safes.iter().map(b_to_c_unchecked));
            CExpr::comp(normal + safe, b_to_c_unchecked(head), args)
        }
        BExpr::Rec { base, step0, step1 } => {
            let arity = e.arity().expect("checked by caller");
            let (n, s) = (arity.normal, arity.safe);
            let step = |h: &BExpr| move_arg_unchecked(n + s + 1, n - 1, b_to_c_unchecked(h));
            let safe_sum = (n..n + s).map(|i| MPoly::variable(n + s, i).expect("in range"));
            let length = e.pol_b_unchecked().inject(n + s).expect("grows");
            let bound = safe_sum.fold(length, |acc, y| acc.add(&y).expect("same count"));
            CExpr::rec(
                b_to_c_unchecked(base),
                step(step0),
                step(step1),
                poly_to_c(&bound),
            )
        }
    }
}

/// The length of `w` that makes [`c_to_b_padded`] exact, as a polynomial in
/// the argument sizes.
pub fn pol_c_to_b(e: &CExpr) -> Result<MPoly, CError> {
    e.arity()?;
    Ok(pol_c_to_b_unchecked(e))
}

fn pol_c_to_b_unchecked(e: &CExpr) -> MPoly {
    match e {
        CExpr::Zero => MPoly::zero(0),
        CExpr::Proj { arity, .. } => MPoly::zero(*arity),
        CExpr::Succ(_) => MPoly::zero(1),
        CExpr::Smash => MPoly::from_terms(2, vec![(1, vec![(0, 1)]), (2, vec![(1, 1)]), (18, vec![])])
            .expect("in range"),
        CExpr::Comp { arity, head, args } => {
            let sizes: Vec<MPoly> = args.iter().map(CExpr::pol_c_unchecked).collect();
            let head_part = pol_c_to_b_unchecked(head)
                .compose_with(&sizes, *arity)
                .expect("arity-checked");
            let arg_parts: Vec<MPoly> = args.iter().map(pol_c_to_b_unchecked).collect();
            MPoly::sum(*arity, core::iter::once(&head_part).chain(arg_parts.iter())).expect("arity-checked")
        }
        CExpr::Rec {
            base,
            step0,
            step1,
            bound,
        } => {
            let arity = bound.arity().expect("arity-checked");
            // step polynomials range over (prefix, value, x̄); the prefix is
            // bounded by y and the value by the bounding function
            let mut subst = Vec::with_capacity(arity + 1);
            subst.push(MPoly::variable(arity, 0).expect("recursion has an argument"));
            subst.push(bound.pol_c_unchecked());
            subst.extend((1..arity).map(|i| MPoly::variable(arity, i).expect("in range")));
            let steps = pol_c_to_b_unchecked(step0)
                .add(&pol_c_to_b_unchecked(step1))
                .expect("same arity")
                .compose_with(&subst, arity)
                .expect("arity-checked");
            let tail = MPoly::from_terms(arity, vec![(1, vec![(0, 1)]), (2, vec![])]).expect("in range");
            MPoly::sum(arity, [&steps, &pol_c_to_b_unchecked(base).shift(), &tail]).expect("same count")
        }
    }
}

/// `P(a; b)`: `b` with its `|a|` least significant bits removed.
pub fn build_p() -> BExpr {
    let step = BExpr::comp(1, 2, BExpr::Pred, vec![], vec![BExpr::proj(1, 1, 2)]);
    BExpr::rec(BExpr::proj(0, 0, 1), step.clone(), step)
}

/// `P′(a, b;) = P(a; b)`: `b` with `|a|` bits removed, with `b` normal.
pub fn build_pprime() -> BExpr {
    BExpr::comp(2, 0, build_p(), vec![BExpr::proj(0, 2, 0)], vec![BExpr::proj(1, 2, 0)])
}

/// `Y(z, w; y) = P(P′(z, w); y)`: `y` with `|w| - |z|` bits removed
/// (none when `|z| >= |w|`).
pub fn build_y() -> BExpr {
    BExpr::comp(2, 1, build_p(), vec![build_pprime()], vec![BExpr::proj(2, 2, 1)])
}

/// Raises the arity of `e` by `dn` normal and `ds` safe arguments, placed
/// before the existing ones of each kind and ignored.
pub fn b_dummies(dn: usize, ds: usize, e: &BExpr) -> Result<BExpr, crate::bellantoni::BError> {
    let a = e.arity()?;
    let (n, s) = (a.normal + dn, a.safe + ds);
    let normals = (dn..n).map(|i| BExpr::proj(i, n, 0)).collect();
    let safes = (0..a.safe).map(|k| BExpr::proj(n + ds + k, n, s)).collect();
    Ok(BExpr::comp(n, s, e.clone(), normals, safes))
}

/// The constant `1` at arity `(n, s)`.
pub fn one_b(n: usize, s: usize) -> BExpr {
    BExpr::comp(n, s, BExpr::Succ(Bit::One), vec![], vec![BExpr::comp(n, s, BExpr::Zero, vec![], vec![])])
}

/// `f̂(u, w; y, x̄)` for a recursion whose translated pieces are `gp`
/// (arity `(1, m)`) and `h0p`, `h1p` (arity `(1, m + 2)`, reading
/// `(w; prefix, value, x̄)`).
///
/// The recursion runs on `u`; the step at prefix `z` simulates one step of
/// the source recursion on `y` once `|w| - |z| <= |y|`, reading the source
/// bit from `Y(z1, w; y)` and passing `Y(z, w; y)` as the source prefix.
pub fn build_fhat(gp: &BExpr, h0p: &BExpr, h1p: &BExpr) -> Result<BExpr, crate::bellantoni::BError> {
    let m = gp.arity()?.safe;
    for h in [h0p, h1p] {
        h.arity()?;
    }
    Ok(build_fhat_unchecked(m, gp, h0p, h1p))
}

fn build_fhat_unchecked(m: usize, gp: &BExpr, h0p: &BExpr, h1p: &BExpr) -> BExpr {
    let base = BExpr::comp(
        1,
        1 + m,
        gp.clone(),
        vec![BExpr::proj(0, 1, 0)],
        (2..2 + m).map(|i| BExpr::proj(i, 1, 1 + m)).collect(),
    );
    // step arity (2, 2 + m): (z, w; r, y, x̄)
    let (n, s) = (2, 2 + m);
    let xs = || (4..4 + m).map(|i| BExpr::proj(i, n, s));
    let next = BExpr::comp(2, 0, BExpr::Succ(Bit::One), vec![], vec![BExpr::proj(0, 2, 0)]);
    let probe = BExpr::comp(n, s, build_y(), vec![next, BExpr::proj(1, 2, 0)], vec![BExpr::proj(3, n, s)]);
    let prefix = BExpr::comp(
        n,
        s,
        build_y(),
        vec![BExpr::proj(0, 2, 0), BExpr::proj(1, 2, 0)],
        vec![BExpr::proj(3, n, s)],
    );
    let not_started = BExpr::comp(n, s, gp.clone(), vec![BExpr::proj(1, 2, 0)], xs().collect());
    let simulate = |h: &BExpr| {
        let mut safes = vec![prefix.clone(), BExpr::proj(2, n, s)];
        safes.extend(xs());
        BExpr::comp(n, s, h.clone(), vec![BExpr::proj(1, 2, 0)], safes)
    };
    let step = BExpr::comp(
        n,
        s,
        BExpr::Cond,
        vec![],
        vec![probe, not_started, simulate(h0p), simulate(h1p)],
    );
    BExpr::rec(base, step.clone(), step)
}

/// `f′(w; y, x̄) = f̂(w, w; y, x̄)`, of arity `(1, 1 + m)`.
fn build_f_prime(m: usize, gp: &BExpr, h0p: &BExpr, h1p: &BExpr) -> BExpr {
    let fhat = build_fhat_unchecked(m, gp, h0p, h1p);
    BExpr::comp(
        1,
        1 + m,
        fhat,
        vec![BExpr::proj(0, 1, 0), BExpr::proj(0, 1, 0)],
        (1..2 + m).map(|i| BExpr::proj(i, 1, 1 + m)).collect(),
    )
}

/// Smash as a padded Bellantoni-Cook expression of arity `(1, 2)`: exact
/// whenever `|w| >= max(|x|, |y|)`.
///
/// Built from `#′(x, y) = y0^{|x|}` (itself `#′(ε, y) = y`,
/// `#′(xi, y) = #′(x, y)0`) by `#(ε, y) = 1`, `#(xi, y) = #′(y, #(x, y))`,
/// both simulated with [`build_fhat`].
pub fn build_smash_b() -> BExpr {
    let shift_in = BExpr::comp(1, 3, BExpr::Succ(Bit::Zero), vec![], vec![BExpr::proj(2, 1, 3)]);
    let pad = build_f_prime(1, &BExpr::proj(1, 1, 1), &shift_in, &shift_in);
    let swapped = BExpr::comp(
        1,
        2,
        pad,
        vec![BExpr::proj(0, 1, 0)],
        vec![BExpr::proj(2, 1, 2), BExpr::proj(1, 1, 2)],
    );
    let step = b_dummies(0, 1, &swapped).expect("well formed");
    build_f_prime(1, &one_b(1, 1), &step, &step)
}

/// Padded simulation: `expr(w; x̄) = e(x̄)` once `|w| >= bound(|x̄|)`,
/// provided every recursion in `e` respects its bound.
pub fn c_to_b_padded(e: &CExpr) -> Result<SimulationResult, CError> {
    let n = e.arity()?;
    let expr = padded(e, n);
    debug_assert_eq!(expr.arity(), Ok(crate::bellantoni::BArity::new(1, n)));
    Ok(SimulationResult {
        expr,
        bound: pol_c_to_b_unchecked(e),
    })
}

fn padded(e: &CExpr, n: usize) -> BExpr {
    match e {
        CExpr::Zero => BExpr::comp(1, n, BExpr::Zero, vec![], vec![]),
        CExpr::Proj { index, arity } => BExpr::proj(index + 1, 1, *arity),
        CExpr::Succ(b) => BExpr::comp(1, 1, BExpr::Succ(*b), vec![], vec![BExpr::proj(1, 1, 1)]),
        CExpr::Smash => build_smash_b(),
        CExpr::Comp { arity, head, args } => {
            let k = args.len();
            BExpr::comp(
                1,
                *arity,
                padded(head, k),
                vec![BExpr::proj(0, 1, 0)],
                args.iter().map(|g| padded(g, *arity)).collect(),
            )
        }
        CExpr::Rec {
            base, step0, step1, ..
        } => {
            let m = n - 1;
            build_f_prime(m, &padded(base, m), &padded(step0, m + 2), &padded(step1, m + 2))
        }
    }
}

/// An expression of arity `(n, 0)` equal to `e` everywhere (given bounded
/// recursions): computes a `w` of exactly the threshold length and runs the
/// padded simulation on it.
pub fn c_to_b_closed(e: &CExpr) -> Result<BExpr, CError> {
    let sim = c_to_b_padded(e)?;
    let n = sim.bound.num_vars();
    Ok(BExpr::comp(
        n,
        0,
        sim.expr,
        vec![poly_to_b(&sim.bound)],
        (0..n).map(|i| BExpr::proj(i, n, 0)).collect(),
    ))
}

/// The `w` generator used by [`c_to_b_closed`], exposed for checking that
/// its output length is exactly the threshold.
pub fn threshold_b(e: &CExpr) -> Result<BExpr, CError> {
    Ok(poly_to_b(&pol_c_to_b(e)?))
}
