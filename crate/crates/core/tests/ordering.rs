mod common;

use std::cmp::Ordering;

use common::key;
use dialgebra::ordering::leading_term;
use dialgebra::{compare_diwords, leading, make_monic, DiPolynomial, Diword, Letter, OrderingKind};
use proptest::prelude::*;

fn diword(max_len: usize) -> impl Strategy<Value = Diword> {
    prop::collection::vec(0u8..3, 1..=max_len)
        .prop_flat_map(|w| {
            let n = w.len();
            (Just(w), 1..=n)
        })
        .prop_map(|(w, c)| Diword::new(w.into_iter().map(Letter).collect::<Vec<_>>(), c).unwrap())
}

fn diword_of(n: usize) -> impl Strategy<Value = Diword> {
    (prop::collection::vec(0u8..3, n), 1..=n)
        .prop_map(|(w, c)| Diword::new(w.into_iter().map(Letter).collect::<Vec<_>>(), c).unwrap())
}

fn poly() -> impl Strategy<Value = DiPolynomial> {
    prop::collection::vec((-6i64..=6, diword(4)), 1..=5)
        .prop_map(|t| DiPolynomial::from_terms(t.into_iter().map(|(n, d)| (dialgebra::poly::int(n), d))))
}

const KINDS: [OrderingKind; 2] = [OrderingKind::DegLexCenter, OrderingKind::LexicographicWeight];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn total_orders(p in diword(5), q in diword(5), r in diword(5)) {
        for kind in KINDS {
            let pq = compare_diwords(&p, &q, kind);
            prop_assert_eq!(pq == Ordering::Equal, p == q);
            prop_assert_eq!(pq, compare_diwords(&q, &p, kind).reverse());
            if pq != Ordering::Greater && compare_diwords(&q, &r, kind) != Ordering::Greater {
                prop_assert_ne!(compare_diwords(&p, &r, kind), Ordering::Greater);
            }
        }
        prop_assert_eq!(p.cmp(&q), key(&p).cmp(&key(&q)));
    }

    #[test]
    fn degree_compatible(p in diword(5), q in diword(5)) {
        if p.len() < q.len() {
            prop_assert!(p < q);
        }
    }

    #[test]
    fn monotone_products(w in diword(3), (p, q) in (1usize..=4).prop_flat_map(|n| (diword_of(n), diword_of(n)))) {
        let (p, q) = if p >= q { (p, q) } else { (q, p) };
        prop_assert!(w.left(&p) >= w.left(&q));
        prop_assert!(w.right(&p) >= w.right(&q));
    }

    #[test]
    fn monic(f in poly()) {
        prop_assume!(!f.is_zero());
        for kind in KINDS {
            let m = make_monic(&f, kind).unwrap();
            let lead = leading(&m, kind).unwrap();
            prop_assert_eq!(lead.coeff, dialgebra::poly::int(1));
            prop_assert_eq!(make_monic(&m, kind).unwrap(), m.clone());
            prop_assert_eq!(leading_term(&m, kind).unwrap().0, &lead.monomial);
        }
    }
}
