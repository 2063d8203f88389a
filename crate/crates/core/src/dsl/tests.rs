use proptest::prelude::*;

use super::*;
use crate::arith::rat;

fn term(negative: bool, multiplier: Option<u64>, atom: Atom) -> Term {
    Term {
        negative,
        multiplier,
        atom,
        offset: 0,
    }
}

#[test]
fn parse_examples() {
    assert_eq!(
        parse("h3[4]").unwrap(),
        Expr::BasisApp {
            basis: Basis::H,
            index: Index::Degree(3),
            alpha: AlphaExpr { terms: vec![term(false, None, Atom::Int(4))] },
        }
    );
    let Expr::BasisApp { alpha, .. } = parse("h2[3 - 3*q]").unwrap() else {
        panic!("expected a basis application");
    };
    let point = alpha.alphabet();
    assert_eq!(point.constant_part(), &rat(3));
    assert_eq!(point.atoms(), &[(rat(-3), PolyQQ::q())]);
    assert_eq!(parse("P{3,4}").unwrap(), Expr::PrincipalHL { r: 3, n: 4 });
    assert_eq!(parse("  s { 3 , 1 } [ q2 ]").unwrap().to_string(), "s{3,1}[q2]");
}

#[test]
fn eval_examples() {
    assert_eq!(eval_str("h3[4]").unwrap(), PolyQQ::int(20));
    assert_eq!(eval_str("p2[q]").unwrap(), PolyQQ::from_q_coeffs(&[0, 0, 1]));
    assert_eq!(eval_str("P{3,4}").unwrap().to_string(), "4*q^2 - 20*q + 20");
    assert_eq!(eval_str("h2[3]").unwrap(), PolyQQ::int(6));
    assert_eq!(eval_str("e3[5]").unwrap(), PolyQQ::int(10));
    assert_eq!(eval_str("m{2,1}[4]").unwrap(), PolyQQ::int(12));
    assert_eq!(eval_str("s{1,1}[-q]").unwrap(), PolyQQ::from_q_coeffs(&[0, 0, 1]));
    assert!(eval_str("s{2,1}[-q]").unwrap().is_zero());
    assert_eq!(eval_str("h4[1 - Q]").unwrap(), PolyQQ::q());
    assert_eq!(eval_str("h1[2*3]").unwrap(), PolyQQ::int(6));
    assert!(eval_str("p0[q]").is_err());
    assert!(eval_str("h201[1]").is_err());
}

fn offset_of(input: &str) -> Option<usize> {
    match parse(input) {
        Err(Error::Parse { offset, .. }) => Some(offset),
        _ => None,
    }
}

#[test]
fn negative_corpus() {
    let corpus = [
        ("", 0),
        ("h", 1),
        ("h3", 2),
        ("h3[", 3),
        ("h2[Q", 4),
        ("h3[4", 4),
        ("h3[]", 3),
        ("h3[4]]", 5),
        ("x3[4]", 0),
        ("h3[4 +]", 6),
        ("h3[4 * ]", 7),
        ("h3[0*q]", 3),
        ("h3[q 2]", 5),
        ("h3[q23]", 5),
        ("h3[--q]", 4),
        ("s{1,2}[3]", 4),
        ("s{}[3]", 2),
        ("s{0}[3]", 2),
        ("s3[3]", 1),
        ("h{3}[3]", 1),
        ("m{2,1}[q]", 7),
        ("m{2}[1 + Q]", 9),
        ("P{3}", 3),
        ("P{3,4,5}", 5),
        ("P3,4", 1),
        ("h3[4] h3[4]", 6),
        ("h99999999999999999999[1]", 1),
        ("h3[q@]", 4),
        ("h3[1/2]", 4),
        ("h3[1.5]", 4),
    ];
    let wrong: Vec<_> = corpus
        .iter()
        .filter(|(input, expected)| offset_of(input) != Some(*expected))
        .map(|(input, _)| (*input, offset_of(input)))
        .collect();
    assert!(wrong.is_empty(), "{wrong:?}");
}

#[test]
fn errors_list_expected_tokens() {
    match parse("h2[Q") {
        Err(Error::Parse { expected, .. }) => {
            assert!(expected.contains(&"']'".to_string()));
            assert!(expected.contains(&"'+'".to_string()) || expected.contains(&"']'".to_string()));
        }
        other => panic!("{other:?}"),
    }
}

fn atom_strategy() -> impl Strategy<Value = Atom> {
    prop_oneof![
        (0u64..20).prop_map(Atom::Int),
        Just(Atom::Q),
        Just(Atom::BigQ),
        Just(Atom::Q2),
        Just(Atom::BigQ2),
    ]
}

fn alpha_strategy() -> impl Strategy<Value = AlphaExpr> {
    prop::collection::vec((any::<bool>(), prop::option::of(1u64..6), atom_strategy()), 1..5).prop_map(
        |terms| AlphaExpr {
            terms: terms.into_iter().map(|(n, m, a)| term(n, m, a)).collect(),
        },
    )
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..5, 1..4).prop_map(Partition::from_unsorted)
}

fn expr_strategy() -> impl Strategy<Value = Expr> {
    let degree = (prop_oneof![Just(Basis::H), Just(Basis::E), Just(Basis::P)], 0usize..8, alpha_strategy())
        .prop_map(|(basis, k, alpha)| Expr::BasisApp { basis, index: Index::Degree(k), alpha });
    let schur = (partition_strategy(), alpha_strategy()).prop_map(|(mu, alpha)| Expr::BasisApp {
        basis: Basis::S,
        index: Index::Shape(mu),
        alpha,
    });
    let monomial = (partition_strategy(), prop::collection::vec((any::<bool>(), 0u64..9), 1..3)).prop_map(
        |(mu, consts)| Expr::BasisApp {
            basis: Basis::M,
            index: Index::Shape(mu),
            alpha: AlphaExpr {
                terms: consts.into_iter().map(|(n, c)| term(n, None, Atom::Int(c))).collect(),
            },
        },
    );
    let principal = (1usize..10, 1usize..10).prop_map(|(r, n)| Expr::PrincipalHL { r, n });
    prop_oneof![degree, schur, monomial, principal]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_parse_round_trip(e in expr_strategy()) {
        let text = e.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn parser_adds_no_semantics(k in 0usize..7, alpha in alpha_strategy()) {
        let text = format!("h{k}[{alpha}]");
        prop_assert_eq!(eval_str(&text).unwrap(), h_of(k, &alpha.alphabet()));
    }

    #[test]
    fn whitespace_is_ignored(e in expr_strategy()) {
        let text = e.to_string();
        let spaced: String = text
            .split_inclusive(|c: char| "[]{},+-*".contains(c))
            .collect::<Vec<_>>()
            .join(" ");
        prop_assert_eq!(parse(&spaced).unwrap(), e);
    }
}
