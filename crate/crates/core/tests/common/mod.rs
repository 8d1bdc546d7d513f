//! Independent oracles and random generators shared by the test targets.
//!
//! The oracles use only the two monomial product rules and a hand-written
//! comparison key. They never call pattern expansion, P-sets or reduction.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dialgebra::poly::{int, ratio};
use dialgebra::word::words_of_length;
use dialgebra::{Alphabet, Coeff, DiPolynomial, Diword, Letter, RelationSet};
use rand::Rng;

/// Sort key of the deg-lex-center ordering: length, letters, center.
pub fn key(d: &Diword) -> (usize, Vec<u8>, usize) {
    (d.len(), d.word().iter().map(|l| l.0).collect(), d.center())
}

pub fn oracle_leading(f: &DiPolynomial) -> Option<Diword> {
    f.monomials().max_by_key(|d| key(d)).cloned()
}

/// Strong: the tail is zero or its greatest word is below the leading word.
pub fn oracle_strong(f: &DiPolynomial) -> bool {
    let lead = oracle_leading(f).expect("nonzero");
    let lw = (lead.len(), lead.word().to_vec());
    f.monomials()
        .filter(|d| **d != lead)
        .all(|d| (d.len(), d.word().to_vec()) < lw)
}

/// `s_1 ⊢ … ⊢ s_{j−1} ⊢ s_j ⊣ … ⊣ s_n`, bracketed from the center outwards.
pub fn slot_product(slots: &[DiPolynomial], j: usize) -> DiPolynomial {
    let mut acc = slots[j - 1].clone();
    for s in &slots[j..] {
        acc = acc.left_product(s);
    }
    for s in slots[..j - 1].iter().rev() {
        acc = s.right_product(&acc);
    }
    acc
}

/// Every normal S-diword `a s b` with `|a s̃ b| ≤ max_len`, expanded by slot
/// products. The center is put on a context letter only when `s` is strong.
pub fn normal_s_diwords(set: &RelationSet, max_len: usize) -> Vec<DiPolynomial> {
    let alphabet = set.alphabet();
    let mut out = Vec::new();
    for rel in set.relations() {
        let s = rel.poly();
        let ns = oracle_leading(s).unwrap().len();
        if ns > max_len {
            continue;
        }
        let strong = oracle_strong(s);
        for na in 0..=max_len - ns {
            for nb in 0..=max_len - ns - na {
                for a in words_or_empty(alphabet, na) {
                    for b in words_or_empty(alphabet, nb) {
                        let mut slots: Vec<DiPolynomial> = a.iter().map(|&l| DiPolynomial::letter(l)).collect();
                        slots.push(s.clone());
                        slots.extend(b.iter().map(|&l| DiPolynomial::letter(l)));
                        for j in 1..=slots.len() {
                            if j == na + 1 || strong {
                                out.push(slot_product(&slots, j));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn words_or_empty(alphabet: &Alphabet, len: usize) -> Vec<Vec<Letter>> {
    if len == 0 {
        vec![Vec::new()]
    } else {
        words_of_length(alphabet, len).into_iter().map(|w| w.to_vec()).collect()
    }
}

pub fn all_diwords(alphabet: &Alphabet, max_len: usize) -> Vec<Diword> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        for w in words_of_length(alphabet, n) {
            for c in 1..=n {
                out.push(Diword::new(w.clone(), c).unwrap());
            }
        }
    }
    out
}

/// Diwords up to `max_len` that are not the leading monomial of a normal
/// S-diword.
pub fn oracle_irr(set: &RelationSet, max_len: usize) -> BTreeSet<Diword> {
    let leads: BTreeSet<Diword> = normal_s_diwords(set, max_len)
        .iter()
        .filter_map(oracle_leading)
        .collect();
    all_diwords(set.alphabet(), max_len)
        .into_iter()
        .filter(|d| !leads.contains(d))
        .collect()
}

pub fn random_diword(rng: &mut impl Rng, letters: usize, max_len: usize) -> Diword {
    let n = rng.gen_range(1..=max_len);
    let w: Vec<Letter> = (0..n).map(|_| Letter(rng.gen_range(0..letters) as u8)).collect();
    Diword::new(w, rng.gen_range(1..=n)).unwrap()
}

pub fn random_coeff(rng: &mut impl Rng) -> Coeff {
    if rng.gen_bool(0.7) {
        int(rng.gen_range(-5..=5))
    } else {
        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=7))
    }
}

pub fn random_poly(rng: &mut impl Rng, letters: usize, max_len: usize, max_terms: usize) -> DiPolynomial {
    let n = rng.gen_range(1..=max_terms);
    DiPolynomial::from_terms((0..n).map(|_| (random_coeff(rng), random_diword(rng, letters, max_len))))
}

/// A random element of the ideal: a combination of normal S-diwords.
pub fn random_ideal_element(rng: &mut impl Rng, patterns: &[DiPolynomial], max_terms: usize) -> DiPolynomial {
    let mut out = DiPolynomial::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let p = &patterns[rng.gen_range(0..patterns.len())];
        out.add_scaled(&random_coeff(rng), p);
    }
    out
}

/// The five laws as `(name, lhs, rhs)` for one triple.
pub fn axioms(x: &DiPolynomial, y: &DiPolynomial, z: &DiPolynomial) -> [(&'static str, DiPolynomial, DiPolynomial); 5] {
    [
        (
            "(x⊣y)⊣z = x⊣(y⊣z)",
            x.left_product(y).left_product(z),
            x.left_product(&y.left_product(z)),
        ),
        (
            "(x⊢y)⊢z = x⊢(y⊢z)",
            x.right_product(y).right_product(z),
            x.right_product(&y.right_product(z)),
        ),
        (
            "x⊣(y⊢z) = x⊣(y⊣z)",
            x.left_product(&y.right_product(z)),
            x.left_product(&y.left_product(z)),
        ),
        (
            "(x⊣y)⊢z = x⊢(y⊢z)",
            x.left_product(y).right_product(z),
            x.right_product(&y.right_product(z)),
        ),
        (
            "(x⊢y)⊣z = x⊢(y⊣z)",
            x.right_product(y).left_product(z),
            x.right_product(&y.left_product(z)),
        ),
    ]
}

pub fn dw(a: &Alphabet, w: &str, c: usize) -> DiPolynomial {
    DiPolynomial::monomial(Diword::new(a.word(w).unwrap(), c).unwrap())
}

pub fn relation_set(a: &Alphabet, rels: &[(&str, DiPolynomial)]) -> RelationSet {
    let mut s = RelationSet::new(a.clone());
    for (id, p) in rels {
        s.push(*id, p).unwrap();
    }
    s
}

/// `{[xx]_1 − [x]_1, [xx]_2 − [x]_1}` over `{x}`.
pub fn idempotent_pair() -> RelationSet {
    let a = Alphabet::new(["x"]).unwrap();
    relation_set(
        &a,
        &[
            ("s1", &dw(&a, "x x", 1) - &dw(&a, "x", 1)),
            ("s2", &dw(&a, "x x", 2) - &dw(&a, "x", 1)),
        ],
    )
}

/// `{[xx]_1 − [y]_1, [xx]_2 − [x]_1}` over `y < x`, which is not closed.
pub fn open_pair() -> RelationSet {
    let a = Alphabet::new(["y", "x"]).unwrap();
    relation_set(
        &a,
        &[
            ("s1", &dw(&a, "x x", 1) - &dw(&a, "y", 1)),
            ("s2", &dw(&a, "x x", 2) - &dw(&a, "x", 1)),
        ],
    )
}
