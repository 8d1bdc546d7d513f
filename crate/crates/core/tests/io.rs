use dialgebra::{format_poly, parse_poly, parse_presentation, Alphabet, DiPolynomial, Diword, Letter, OrderingKind};
use proptest::prelude::*;

fn alphabet() -> Alphabet {
    Alphabet::new(["t", "z", "y", "x", "e12"]).unwrap()
}

fn poly() -> impl Strategy<Value = DiPolynomial> {
    let diword = prop::collection::vec(0u8..5, 1..=5)
        .prop_flat_map(|w| {
            let n = w.len();
            (Just(w), 1..=n)
        })
        .prop_map(|(w, c)| Diword::new(w.into_iter().map(Letter).collect::<Vec<_>>(), c).unwrap());
    prop::collection::vec((-1000i64..=1000, 1i64..=50, diword), 0..=6).prop_map(|terms| {
        DiPolynomial::from_terms(terms.into_iter().map(|(n, d, w)| (dialgebra::poly::ratio(n, d), w)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn round_trip(f in poly()) {
        let a = alphabet();
        let text = format_poly(&f, &a);
        prop_assert_eq!(parse_poly(&text, &a).unwrap(), f.clone());
        prop_assert_eq!(format_poly(&parse_poly(&text, &a).unwrap(), &a), text);
    }
}

#[test]
fn goldens() {
    let a = alphabet();
    let f = parse_poly("[x t ; 1] - 2*[t x ; 2] + 3/2*[e12 ; 1] - [x x y ; 3]", &a).unwrap();
    assert_eq!(
        format_poly(&f, &a),
        "-[x x y ; 3] + [x t ; 1] - 2*[t x ; 2] + 3/2*[e12 ; 1]"
    );
    let g = parse_poly("  [x;1]+[x ; 1] -  [ y  z ;2 ]  ", &a).unwrap();
    assert_eq!(format_poly(&g, &a), "-[y z ; 2] + 2*[x ; 1]");
    assert_eq!(format_poly(&parse_poly("0", &a).unwrap(), &a), "0");
    assert_eq!(format_poly(&parse_poly("[x ; 1] - [x ; 1]", &a).unwrap(), &a), "0");
}

#[test]
fn rejects_malformed() {
    let a = alphabet();
    for bad in [
        "[x ; 0]",
        "[x y ; 3]",
        "[w ; 1]",
        "[x 1]",
        "[x ; 1] +",
        "2 [x ; 1]",
        "[ ; 1]",
        "1/0*[x ; 1]",
    ] {
        assert!(parse_poly(bad, &a).is_err(), "{bad}");
    }
}

#[test]
fn fixture_file() {
    let text = include_str!("../../cli/fixtures/paper.di");
    let p = parse_presentation(text).unwrap();
    let set = p.relation_set(OrderingKind::DegLexCenter).unwrap();
    assert_eq!(set.len(), 21);
    assert_eq!(set.relations(), dialgebra::paper_instance().relations.relations());
}
