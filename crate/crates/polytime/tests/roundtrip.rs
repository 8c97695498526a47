use polytime::syntax::{parse_expr, print_b, print_binf, print_c, Class, Expr};
use polytime_core::{BExpr, BInfExpr, Bit, CExpr};
use proptest::prelude::*;

// Terms need not be well formed: printing and parsing are purely structural.

fn bit() -> impl Strategy<Value = Bit> {
    prop_oneof![Just(Bit::Zero), Just(Bit::One)]
}

fn c_expr() -> impl Strategy<Value = CExpr> {
    let leaf = prop_oneof![
        Just(CExpr::Zero),
        Just(CExpr::Smash),
        (0..4usize, 0..4usize).prop_map(|(i, n)| CExpr::proj(i, n)),
        bit().prop_map(CExpr::Succ),
    ];
    leaf.prop_recursive(4, 40, 4, |inner| {
        prop_oneof![
            (0..4usize, inner.clone(), prop::collection::vec(inner.clone(), 0..4))
                .prop_map(|(n, h, gs)| CExpr::comp(n, h, gs)),
            (inner.clone(), inner.clone(), inner.clone(), inner).prop_map(|(g, a, b, j)| CExpr::rec(g, a, b, j)),
        ]
    })
}

fn b_expr() -> impl Strategy<Value = BExpr> {
    let leaf = prop_oneof![
        Just(BExpr::Zero),
        Just(BExpr::Pred),
        Just(BExpr::Cond),
        (0..4usize, 0..3usize, 0..3usize).prop_map(|(i, n, s)| BExpr::proj(i, n, s)),
        bit().prop_map(BExpr::Succ),
    ];
    leaf.prop_recursive(4, 40, 4, |inner| {
        let args = prop::collection::vec(inner.clone(), 0..3);
        prop_oneof![
            (0..3usize, 0..3usize, inner.clone(), args.clone(), args)
                .prop_map(|(n, s, h, gn, gs)| BExpr::comp(n, s, h, gn, gs)),
            (inner.clone(), inner.clone(), inner).prop_map(|(g, a, b)| BExpr::rec(g, a, b)),
        ]
    })
}

fn binf_expr() -> impl Strategy<Value = BInfExpr> {
    let leaf = prop_oneof![
        Just(BInfExpr::Zero),
        Just(BInfExpr::Pred),
        Just(BInfExpr::Cond),
        (0..4usize).prop_map(BInfExpr::ProjN),
        (0..4usize).prop_map(BInfExpr::ProjS),
        bit().prop_map(BInfExpr::Succ),
    ];
    leaf.prop_recursive(4, 40, 4, |inner| {
        let args = prop::collection::vec(inner.clone(), 0..3);
        prop_oneof![
            (inner.clone(), args.clone(), args).prop_map(|(h, gn, gs)| BInfExpr::comp(h, gn, gs)),
            (inner.clone(), inner.clone(), inner).prop_map(|(g, a, b)| BInfExpr::rec(g, a, b)),
        ]
    })
}

proptest! {
    #[test]
    fn c_round_trip(e in c_expr()) {
        prop_assert_eq!(parse_expr(&print_c(&e), Class::C).unwrap(), Expr::C(e));
    }

    #[test]
    fn b_round_trip(e in b_expr()) {
        prop_assert_eq!(parse_expr(&print_b(&e), Class::B).unwrap(), Expr::B(e));
    }

    #[test]
    fn binf_round_trip(e in binf_expr()) {
        prop_assert_eq!(parse_expr(&print_binf(&e), Class::BInf).unwrap(), Expr::BInf(e));
    }

    // layout does not matter
    #[test]
    fn whitespace_insensitive(e in b_expr(), pad in "[ \n\t]{1,3}") {
        let text = print_b(&e).replace(' ', &pad).replace('(', &format!("({pad}"));
        prop_assert_eq!(parse_expr(&text, Class::B).unwrap(), Expr::B(e));
    }
}
