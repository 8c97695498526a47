#![allow(dead_code)]

use polytime_core::bellantoni::{mult, plus};
use polytime_core::cobham::{length_add_c, length_mul_c, pred_c, succ_c};
use polytime_core::stdlib::{all_defs, DefExpr};
use polytime_core::translate::b_to_c;
use polytime_core::{BArity, BExpr, BInfExpr, Bit, Bitstring, CExpr};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn lit(s: &str) -> Bitstring {
    Bitstring::parse_literal(s).unwrap()
}

pub fn random_bits<R: Rng>(rng: &mut R, max_len: usize) -> Bitstring {
    let len = rng.gen_range(0..=max_len);
    Bitstring::from_lsb_first((0..len).map(|_| Bit::from_bool(rng.gen())))
}

pub fn random_args<R: Rng>(rng: &mut R, k: usize, max_len: usize) -> Vec<Bitstring> {
    (0..k).map(|_| random_bits(rng, max_len)).collect()
}

pub fn all_strings(max_len: usize) -> Vec<Bitstring> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        for bits in 0u32..(1 << len) {
            out.push(Bitstring::from_lsb_first((0..len).map(|i| Bit::from_bool(bits >> i & 1 == 1))));
        }
    }
    out
}

/// Every `k`-tuple over `strings`.
pub fn tuples(strings: &[Bitstring], k: usize) -> Vec<Vec<Bitstring>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                strings.iter().map(move |x| {
                    let mut v = v.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Standard binary numeral: least significant bit last, no leading zeros,
/// ε for 0.
pub fn encode(k: u64) -> Bitstring {
    let width = 64 - k.leading_zeros() as usize;
    Bitstring::from_lsb_first((0..width).map(|i| Bit::from_bool(k >> i & 1 == 1)))
}

pub fn decode(x: &Bitstring) -> u64 {
    x.iter_lsb()
        .enumerate()
        .fold(0, |acc, (i, b)| acc | (b.is_one() as u64) << i)
}

pub fn sizes(args: &[Bitstring]) -> Vec<u64> {
    args.iter().map(|x| x.len() as u64).collect()
}

/// Closed Cobham functions whose recursions are bounded by construction.
pub fn c_library() -> Vec<(CExpr, usize)> {
    let mut lib = vec![
        (CExpr::Succ(Bit::Zero), 1),
        (CExpr::Succ(Bit::One), 1),
        (CExpr::Smash, 2),
        (succ_c(), 1),
        (pred_c(), 1),
        (length_add_c(), 2),
        (length_mul_c(), 2),
    ];
    for d in all_defs() {
        if let DefExpr::B(e) = &d.expr {
            let c = b_to_c(e).unwrap();
            let n = c.arity().unwrap();
            lib.push((c, n));
        }
    }
    lib
}

/// Random well-formed Cobham expression of arity `n` and depth at most `depth`.
pub fn gen_c<R: Rng>(rng: &mut R, lib: &[(CExpr, usize)], n: usize, depth: usize) -> CExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        return c_leaf(rng, lib, n);
    }
    let (head, k) = if rng.gen_bool(0.6) {
        lib.choose(rng).unwrap().clone()
    } else {
        let k = rng.gen_range(0..=2);
        (gen_c(rng, lib, k, depth - 1), k)
    };
    let args = (0..k).map(|_| gen_c(rng, lib, n, depth - 1)).collect();
    CExpr::comp(n, head, args)
}

fn c_leaf<R: Rng>(rng: &mut R, lib: &[(CExpr, usize)], n: usize) -> CExpr {
    match rng.gen_range(0..3) {
        0 if n > 0 => CExpr::proj(rng.gen_range(0..n), n),
        1 if n > 0 => {
            let (f, k) = lib.choose(rng).unwrap().clone();
            CExpr::comp(n, f, (0..k).map(|_| CExpr::proj(rng.gen_range(0..n), n)).collect())
        }
        _ => CExpr::comp(n, CExpr::Zero, vec![]),
    }
}

/// Primitive and library functions of the safe-recursion class.
pub fn b_library() -> Vec<BExpr> {
    let mut lib = vec![BExpr::Zero, BExpr::Succ(Bit::Zero), BExpr::Succ(Bit::One), BExpr::Pred, BExpr::Cond];
    lib.extend(all_defs().into_iter().filter_map(|d| d.b_expr().cloned()));
    lib.push(plus());
    lib.push(mult());
    lib
}

/// Random well-formed expression of arity `(n, s)`.
pub fn gen_b<R: Rng>(rng: &mut R, lib: &[BExpr], n: usize, s: usize, depth: usize) -> BExpr {
    if depth == 0 || rng.gen_bool(0.25) {
        return b_leaf(rng, lib, n, s);
    }
    if n > 0 && rng.gen_bool(0.3) {
        let g = gen_b(rng, lib, n - 1, s, depth - 1);
        let h0 = gen_b(rng, lib, n, s + 1, depth - 1);
        let h1 = gen_b(rng, lib, n, s + 1, depth - 1);
        return BExpr::rec(g, h0, h1);
    }
    let head = if rng.gen_bool(0.6) {
        lib.choose(rng).unwrap().clone()
    } else {
        let (k, l) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        gen_b(rng, lib, k, l, depth - 1)
    };
    let a = head.arity().unwrap();
    let normals = (0..a.normal).map(|_| gen_b(rng, lib, n, 0, depth - 1)).collect();
    let safes = (0..a.safe).map(|_| gen_b(rng, lib, n, s, depth - 1)).collect();
    BExpr::comp(n, s, head, normals, safes)
}

fn b_leaf<R: Rng>(rng: &mut R, lib: &[BExpr], n: usize, s: usize) -> BExpr {
    match rng.gen_range(0..3) {
        0 if n + s > 0 => BExpr::proj(rng.gen_range(0..n + s), n, s),
        1 if n > 0 => {
            let f = lib.choose(rng).unwrap().clone();
            let a = f.arity().unwrap();
            let normals = (0..a.normal).map(|_| BExpr::proj(rng.gen_range(0..n), n, 0)).collect();
            let safes = (0..a.safe)
                .map(|_| BExpr::proj(rng.gen_range(0..n + s), n, s))
                .collect();
            BExpr::comp(n, s, f, normals, safes)
        }
        _ => BExpr::comp(n, s, BExpr::Zero, vec![], vec![]),
    }
}

/// Annotates an arity-free expression top-down from a chosen root arity;
/// every annotation below the root follows from the typing rules.
/// Returns `None` when a rule cannot be met.
pub fn annotate_top_down(e: &BInfExpr, a: BArity) -> Option<BExpr> {
    let fixed = |want: BArity, got: BExpr| (a == want).then_some(got);
    match e {
        BInfExpr::Zero => fixed(BArity::new(0, 0), BExpr::Zero),
        BInfExpr::Succ(b) => fixed(BArity::new(0, 1), BExpr::Succ(*b)),
        BInfExpr::Pred => fixed(BArity::new(0, 1), BExpr::Pred),
        BInfExpr::Cond => fixed(BArity::new(0, 4), BExpr::Cond),
        BInfExpr::ProjN(i) => (*i < a.normal).then(|| BExpr::proj(*i, a.normal, a.safe)),
        BInfExpr::ProjS(i) => (*i < a.safe).then(|| BExpr::proj(a.normal + i, a.normal, a.safe)),
        BInfExpr::Comp { head, normals, safes } => {
            let h = annotate_top_down(head, BArity::new(normals.len(), safes.len()))?;
            let gn = normals
                .iter()
                .map(|g| annotate_top_down(g, BArity::new(a.normal, 0)))
                .collect::<Option<Vec<_>>>()?;
            let gs = safes
                .iter()
                .map(|g| annotate_top_down(g, a))
                .collect::<Option<Vec<_>>>()?;
            Some(BExpr::comp(a.normal, a.safe, h, gn, gs))
        }
        BInfExpr::Rec { base, step0, step1 } => {
            if a.normal == 0 {
                return None;
            }
            let g = annotate_top_down(base, BArity::new(a.normal - 1, a.safe))?;
            let step = BArity::new(a.normal, a.safe + 1);
            let h0 = annotate_top_down(step0, step)?;
            let h1 = annotate_top_down(step1, step)?;
            Some(BExpr::rec(g, h0, h1))
        }
    }
}

/// Upper estimates `(longest intermediate value, work)` for checked
/// evaluation of `e` on arguments of the given sizes. Used to keep random
/// campaigns within a time budget; relies on length polynomials being
/// monotone.
pub fn c_cost(e: &CExpr, sizes: &[u64]) -> (u64, u64) {
    let poly_at = |f: &CExpr, s: &[u64]| f.pol_c().unwrap().eval(s).unwrap();
    match e {
        CExpr::Zero | CExpr::Proj { .. } => (sizes.iter().copied().max().unwrap_or(0), 1),
        CExpr::Succ(_) => (sizes[0].saturating_add(1), sizes[0].saturating_add(1)),
        CExpr::Smash => {
            let out = sizes[0].saturating_mul(sizes[1]).saturating_add(1);
            (out, out)
        }
        CExpr::Comp { head, args, .. } => {
            let mut longest = 0;
            let mut work = 0u64;
            let mut inner = Vec::with_capacity(args.len());
            for g in args.iter() {
                let (l, w) = c_cost(g, sizes);
                longest = longest.max(l);
                work = work.saturating_add(w);
                inner.push(poly_at(g, sizes));
            }
            let (l, w) = c_cost(head, &inner);
            (longest.max(l), work.saturating_add(w))
        }
        CExpr::Rec { base, step0, step1, bound } => {
            let value = poly_at(bound, sizes);
            let (lb, wb) = c_cost(base, &sizes[1..]);
            let (lj, wj) = c_cost(bound, sizes);
            let mut step_sizes = vec![sizes[0], value];
            step_sizes.extend_from_slice(&sizes[1..]);
            let (l0, w0) = c_cost(step0, &step_sizes);
            let (l1, w1) = c_cost(step1, &step_sizes);
            let per_step = w0.max(w1).saturating_add(wj).saturating_add(value);
            let work = wb.saturating_add(wj).saturating_add(sizes[0].saturating_mul(per_step));
            (lb.max(lj).max(l0).max(l1).max(value), work)
        }
    }
}

/// The length and time polynomials of `e` evaluated at the normal sizes
/// `at`, computed numerically (saturating) without expanding polynomials.
pub fn b_bounds_at(e: &BExpr, at: &[u64]) -> (u64, u64) {
    match e {
        BExpr::Zero | BExpr::Pred | BExpr::Cond => (0, 1),
        BExpr::Succ(_) => (1, 1),
        BExpr::Proj { index, normal, .. } => (if index < normal { at[*index] } else { 0 }, 1),
        BExpr::Comp { head, normals, safes, .. } => {
            let mut inner = Vec::with_capacity(normals.len());
            let mut time = 0u64;
            for g in normals.iter() {
                let (l, t) = b_bounds_at(g, at);
                inner.push(l);
                time = time.saturating_add(t);
            }
            let (hl, ht) = b_bounds_at(head, &inner);
            let mut len = hl;
            for g in safes.iter() {
                let (l, t) = b_bounds_at(g, at);
                len = len.saturating_add(l);
                time = time.saturating_add(t);
            }
            (len, time.saturating_add(ht))
        }
        BExpr::Rec { base, step0, step1 } => {
            let (gl, gt) = b_bounds_at(base, &at[1..]);
            let (l0, t0) = b_bounds_at(step0, at);
            let (l1, t1) = b_bounds_at(step1, at);
            let len = gl.saturating_add(at[0].saturating_mul(l0.saturating_add(l1)));
            let time = gt.saturating_add(at[0].saturating_mul(t0.saturating_add(t1)));
            (len, time)
        }
    }
}
