use essgroup::{evaluate, parse, render, GroupSpec, NamedGroup, SpecError};

#[rustfmt::skip]
const ROUND_TRIP: &[&str] = &[
    "C1", "C2", "C30", "D6", "D20", "S1", "S4", "A3", "A5", "Q8", "E2^2", "E3^2", "E7^1",
    "sdp(3,2,2)", "sdp(5,4,3)", "sdp(13,3,3)", "Hol(C6)", "Hol(S3)", "Aut(C8)", "Aut(Aut(C5))",
    "C2 x C2", "C2 x C2 x C2", "C2 x (C2 x C2)", "(C2 x Q8) x (S3 x C5)", "Hol(C3) x Aut(C5)",
    "perm[2]{(0 1)}", "perm[4]{(0 1 2 3),(0 2)}", "perm[1]{()}", "perm[5]{(0 1)(2 3 4)}",
    "  S3   x   C2  ", "((((C2))))", "sdp(7,6,3) x perm[3]{(0 1)}",
];

#[test]
fn corpus_round_trips() {
    assert!(ROUND_TRIP.len() >= 30);
    for text in ROUND_TRIP {
        let ast = parse(text).unwrap_or_else(|e| panic!("{text}: {e}"));
        let shown = render(&ast);
        assert_eq!(parse(&shown).unwrap(), ast, "{text} -> {shown}");
        assert_eq!(render(&parse(&shown).unwrap()), shown);
    }
}

#[test]
fn malformed_inputs_report_positions() {
    for (text, offset) in [
        ("", 0),
        ("x", 0),
        ("C2 x x", 5),
        ("Hol C3", 4),
        ("sdp(5,,2)", 6),
        ("perm[3]{0 1}", 8),
        ("E2", 2),
        ("C3)", 2),
    ] {
        match parse(text) {
            Err(SpecError::Syntax {
                offset: at,
                expected,
            }) => {
                assert_eq!(at, offset, "{text:?}");
                assert!(!expected.is_empty());
            }
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn semantic_errors_are_not_syntax_errors() {
    for text in [
        "D5",
        "sdp(6,2,2)",
        "perm[2]{(0 2)}",
        "perm[3]{(0 1 0)}",
        "E6^2",
    ] {
        assert!(
            matches!(parse(text), Err(SpecError::Semantic { .. })),
            "{text}"
        );
    }
}

#[test]
fn products_nest_to_the_left() {
    let ast = parse("C2 x C3 x C5").unwrap();
    let GroupSpec::Product(left, right) = ast else {
        panic!()
    };
    assert_eq!(*right, GroupSpec::Named(NamedGroup::Cyclic(5)));
    assert!(matches!(*left, GroupSpec::Product(..)));
}

#[test]
fn orders_of_evaluated_specs() {
    for (text, order) in [
        ("C2 x C2 x C2", 8),
        ("Hol(C6)", 12),
        ("Aut(S3)", 6),
        ("Aut(Q8)", 24),
        ("sdp(7,6,3)", 42),
        ("perm[4]{(0 1 2 3),(0 2)}", 8),
        ("E3^2 x S3", 54),
    ] {
        assert_eq!(
            evaluate(&parse(text).unwrap()).unwrap().order(),
            order,
            "{text}"
        );
    }
}
