mod common;

use std::collections::BTreeSet;

use common::{dw, oracle_irr};
use dialgebra::hnn::{shape, TableRow};
use dialgebra::{
    build_hnn_relations, derivation_check, embedding_check, irr_enumerate, normal_form_report, paper_instance,
    parse_poly, verify_paper_table, Alphabet, DiPolynomial, DialgebraData, Error, Execution,
};

const NONZERO: [(&str, usize, &str); 8] = [
    ("f∧m", 1, "[x t x ; 1]"),
    ("f∧m", 3, "[x x t ; 3] - [x x t ; 2] + [x t x ; 3]"),
    ("g∧m", 2, "[x t x ; 3]"),
    ("g∧m", 3, "[x x t ; 3] - [x x t ; 2] + [x t x ; 3]"),
    ("h∧m", 1, "[x t y ; 1]"),
    ("h∧m", 3, "[x y t ; 3] - [x y t ; 2] + [x t y ; 3]"),
    ("p∧m", 2, "[x t y ; 3]"),
    ("p∧m", 3, "[x y t ; 3] - [x y t ; 2] + [x t y ; 3]"),
];

fn row<'a>(rows: &'a [TableRow], label: &str) -> &'a TableRow {
    rows.iter().find(|r| r.label == label).unwrap()
}

#[test]
fn table_values() {
    let table = verify_paper_table(Execution::Parallel);
    let a = &table.presentation.alphabet;
    assert_eq!(table.rows.len(), 20);
    for (label, center, text) in NONZERO {
        let r = row(&table.rows, label);
        let (_, v, rem) = r.values.iter().find(|(c, ..)| *c == center).unwrap();
        assert_eq!(v, &parse_poly(text, a).unwrap(), "{label} at {center}");
        assert!(rem.is_zero());
    }
    for r in table.rows.iter().filter(|r| r.printed_zero()) {
        for (c, v, rem) in &r.values {
            if r.strict_centers.contains(c) {
                assert!(v.is_zero(), "{} at {c}", r.label);
            }
            assert!(rem.is_zero());
        }
    }
    let hh = row(&table.rows, "h∧h");
    assert!(hh.values.iter().find(|(c, ..)| *c == 1).unwrap().1.is_zero());
    let fm = row(&table.rows, "f∧m");
    assert_eq!(a.render_word(&fm.ambient), "x x t");
    assert_eq!(fm.extended_centers, BTreeSet::from([1, 2, 3]));
    assert!(fm.printed_within_extended());
    assert!(table.rows.iter().all(TableRow::printed_within_extended));
    assert!(table.rows.iter().all(TableRow::reproduced));
    assert!(table.report.pass && table.report.extended_all_trivial());
}

#[test]
fn irr_to_degree_five() {
    let p = paper_instance();
    let got: BTreeSet<_> = irr_enumerate(&p.relations, 5, Execution::Parallel)
        .into_iter()
        .collect();
    assert_eq!(got, oracle_irr(&p.relations, 5));
    for g in ["x", "y", "z"] {
        assert!(got.contains(&dialgebra::Diword::new(p.alphabet.word(g).unwrap(), 1).unwrap()));
    }
}

#[test]
fn normal_form_facts() {
    let p = paper_instance();
    let r = normal_form_report(&p, 4, Execution::Parallel).unwrap();
    assert!(r.no_adjacent_base && r.xt_center_on_t && r.generators_present && r.matches_computed_pattern);
    assert_eq!(
        r.irr.iter().cloned().collect::<BTreeSet<_>>(),
        oracle_irr(&p.relations, 4)
    );
    let xtx = dialgebra::Diword::new(p.alphabet.word("x t x").unwrap(), 2).unwrap();
    assert_eq!(shape(&xtx, p.stable_letter), "XtX;2");
    assert!(r.groups["XtX;2"].contains(&xtx));
    assert!(!r.groups.contains_key("XtX;1"));
}

#[test]
fn uncertified_presentations_are_rejected() {
    let base = Alphabet::new(["b", "a"]).unwrap();
    let mut d = DialgebraData::new(base.clone());
    let (la, lb) = (base.letter("a").unwrap(), base.letter("b").unwrap());
    let (pa, pb) = (DiPolynomial::letter(la), DiPolynomial::letter(lb));
    d.set_left(la, la, pa.clone()).unwrap();
    d.set_left(lb, la, pb.clone()).unwrap();
    d.set_right(la, la, pa.clone()).unwrap();
    d.set_right(la, lb, pb.clone()).unwrap();
    d.set_derivation(lb, pb).unwrap();
    assert_eq!(derivation_check(&d), Ok(true));
    let p = build_hnn_relations(&d).unwrap();
    assert!(p.weak_relations().is_empty());
    assert_eq!(
        normal_form_report(&p, 2, Execution::Sequential).unwrap_err(),
        Error::NotCertified
    );
    assert_eq!(embedding_check(&p, Execution::Sequential), Err(Error::NotCertified));
}

#[test]
fn zero_dialgebra_matches_instance() {
    let p = build_hnn_relations(&DialgebraData::new(Alphabet::new(["z", "y", "x"]).unwrap())).unwrap();
    let q = paper_instance();
    assert_eq!(p.relations.relations(), q.relations.relations());
    let a = &q.alphabet;
    let ids: Vec<&str> = q.relations.relations().iter().map(|r| r.id()).collect();
    assert_eq!(ids.len(), 21);
    assert!(q
        .relations
        .relations()
        .iter()
        .any(|r| r.poly() == &(&dw(a, "x t", 1) - &dw(a, "t x", 2))));
    assert!(q.relations.relations().iter().any(|r| r.poly() == &dw(a, "x x", 1)));
}
