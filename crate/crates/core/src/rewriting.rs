//! Relations, normal S-diwords and reduction to normal form.
//!
//! An S-diword `(a s b)` with ambient center `c` places the relation `s` into
//! the letter slot after the context `a`. Its expansion is
//!
//! * `[a]_c ⊣ s ⊣ b` when `c ≤ |a|`,
//! * `a ⊢ s ⊣ b` when `c` lies on the `s` block,
//! * `a ⊢ s ⊢ [b]_{c−|a s̃|}` when `c > |a s̃|`.
//!
//! It is *normal* when the center sits on the `s` block at `s`'s own leading
//! center, or when `s` is strong. Normal patterns are the rewrite rules used by
//! [`reduce`].

use std::collections::BTreeSet;
use std::sync::Arc;

use num::One;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ordering::{compare_diwords, leading, make_monic, LeadingData, OrderingKind};
use crate::poly::{Coeff, DiPolynomial};
use crate::word::{words_of_length, Alphabet, Diword, Letter, Word};

/// A monic relation with its cached leading data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    id: String,
    poly: DiPolynomial,
    leading: LeadingData,
    ordering: OrderingKind,
}

impl Relation {
    /// Monicizes `poly` under `ordering` and caches its leading data.
    pub fn new(id: impl Into<String>, poly: &DiPolynomial, ordering: OrderingKind) -> Result<Self> {
        let poly = make_monic(poly, ordering)?;
        let leading = leading(&poly, ordering)?;
        Ok(Relation {
            id: id.into(),
            poly,
            leading,
            ordering,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn poly(&self) -> &DiPolynomial {
        &self.poly
    }

    pub fn leading(&self) -> &LeadingData {
        &self.leading
    }

    pub fn ordering(&self) -> OrderingKind {
        self.ordering
    }

    /// The associative word `s̃` of the leading monomial.
    pub fn word(&self) -> &[Letter] {
        &self.leading.word
    }

    /// `p(s̄)`, the center of the leading monomial.
    pub fn lead_center(&self) -> usize {
        self.leading.monomial.center()
    }

    pub fn is_strong(&self) -> bool {
        self.leading.strong
    }
}

/// A monic relation set `S` over one alphabet.
#[derive(Debug, Clone)]
pub struct RelationSet {
    alphabet: Alphabet,
    ordering: OrderingKind,
    relations: Vec<Arc<Relation>>,
    certified: bool,
}

impl RelationSet {
    pub fn new(alphabet: Alphabet) -> Self {
        Self::with_ordering(alphabet, OrderingKind::DegLexCenter)
    }

    pub fn with_ordering(alphabet: Alphabet, ordering: OrderingKind) -> Self {
        RelationSet {
            alphabet,
            ordering,
            relations: Vec::new(),
            certified: false,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn ordering(&self) -> OrderingKind {
        self.ordering
    }

    pub fn relations(&self) -> &[Arc<Relation>] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Arc<Relation>> {
        self.relations.iter().find(|r| r.id() == id)
    }

    /// Whether a Gröbner–Shirshov check has passed for exactly this set.
    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub(crate) fn set_certified(&mut self, certified: bool) {
        self.certified = certified;
    }

    /// Adds `poly` (monicized) under `id`. Returns `false` without changing
    /// the set when the monic polynomial is already present.
    pub fn push(&mut self, id: impl Into<String>, poly: &DiPolynomial) -> Result<bool> {
        if let Some(bad) = poly.letters().find(|&l| !self.alphabet.contains(l)) {
            return Err(Error::Alphabet(format!("letter rank {} is not in the alphabet", bad.0)));
        }
        let rel = Relation::new(id, poly, self.ordering)?;
        if self.relations.iter().any(|r| r.poly == rel.poly) {
            return Ok(false);
        }
        self.relations.push(Arc::new(rel));
        self.certified = false;
        Ok(true)
    }

    pub(crate) fn push_arc(&mut self, rel: Arc<Relation>) {
        self.relations.push(rel);
        self.certified = false;
    }

    pub(crate) fn insert_arc(&mut self, index: usize, rel: Arc<Relation>) {
        self.relations.insert(index, rel);
        self.certified = false;
    }

    /// The same set with the relation at `index` removed.
    pub fn without(&self, index: usize) -> RelationSet {
        let mut out = self.clone();
        out.relations.remove(index);
        out.certified = false;
        out
    }
}

/// `P([asb])`: the admissible ambient centers of a normal S-diword.
pub fn p_set(a: &[Letter], s: &Relation, b: &[Letter]) -> BTreeSet<usize> {
    let (na, ns, nb) = (a.len(), s.word().len(), b.len());
    let slot = na + s.lead_center();
    if s.is_strong() {
        (1..=na)
            .chain(std::iter::once(slot))
            .chain(na + ns + 1..=na + ns + nb)
            .collect()
    } else {
        BTreeSet::from([slot])
    }
}

fn in_p_set(na: usize, s: &Relation, nb: usize, c: usize) -> bool {
    let ns = s.word().len();
    c == na + s.lead_center() || (s.is_strong() && (c <= na || (c > na + ns && c <= na + ns + nb)))
}

/// A relation placed between two (possibly empty) contexts, with an ambient
/// center on the word `a s̃ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SDiwordPattern {
    left: Word,
    relation: Arc<Relation>,
    right: Word,
    center: usize,
}

impl SDiwordPattern {
    pub fn new(left: &[Letter], relation: Arc<Relation>, right: &[Letter], center: usize) -> Result<Self> {
        let len = left.len() + relation.word().len() + right.len();
        if center < 1 || center > len {
            return Err(Error::CenterOutOfRange { center, len });
        }
        Ok(SDiwordPattern {
            left: Word::from_slice(left),
            relation,
            right: Word::from_slice(right),
            center,
        })
    }

    pub fn left(&self) -> &[Letter] {
        &self.left
    }

    pub fn right(&self) -> &[Letter] {
        &self.right
    }

    pub fn relation(&self) -> &Arc<Relation> {
        &self.relation
    }

    pub fn center(&self) -> usize {
        self.center
    }

    /// The ambient word `a s̃ b`.
    pub fn word(&self) -> Word {
        let mut w = self.left.clone();
        w.extend_from_slice(self.relation.word());
        w.extend_from_slice(&self.right);
        w
    }

    fn on_block(&self) -> bool {
        let na = self.left.len();
        self.center > na && self.center <= na + self.relation.word().len()
    }

    pub fn is_normal(&self) -> bool {
        self.relation.is_strong() || self.center == self.left.len() + self.relation.lead_center()
    }

    pub fn expand(&self) -> Result<DiPolynomial> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let na = self.left.len();
        let ns = self.relation.word().len();
        let mut out = DiPolynomial::zero();
        for (d, c) in self.relation.poly().iter() {
            let mut w = self.left.clone();
            w.extend_from_slice(d.word());
            w.extend_from_slice(&self.right);
            let center = if self.center <= na {
                self.center
            } else if self.on_block() {
                na + d.center()
            } else {
                na + d.len() + (self.center - na - ns)
            };
            out.add_term(Diword::new(w, center)?, c.clone());
        }
        Ok(out)
    }

    /// Leading monomial of the expansion.
    pub fn leading(&self) -> Result<Diword> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        match self.relation.ordering() {
            OrderingKind::DegLexCenter => {
                let center = if self.on_block() {
                    self.left.len() + self.relation.lead_center()
                } else {
                    self.center
                };
                Diword::new(self.word(), center)
            }
            kind => Ok(leading(&self.expand()?, kind)?.monomial),
        }
    }
}

/// All normal patterns whose leading monomial is `target`, in the
/// deterministic search order: relations in declaration order, then left
/// contexts by increasing length, then ambient centers increasing.
pub fn find_reductions(target: &Diword, set: &RelationSet) -> Vec<SDiwordPattern> {
    match set.ordering() {
        OrderingKind::DegLexCenter => deglex_matches(target, set, false),
        _ => generic_matches(target, set, false),
    }
}

/// The first match of [`find_reductions`].
pub fn find_reduction(target: &Diword, set: &RelationSet) -> Option<SDiwordPattern> {
    let found = match set.ordering() {
        OrderingKind::DegLexCenter => deglex_matches(target, set, true),
        _ => generic_matches(target, set, true),
    };
    found.into_iter().next()
}

fn deglex_matches(target: &Diword, set: &RelationSet, first_only: bool) -> Vec<SDiwordPattern> {
    let u = target.word();
    let c = target.center();
    let mut out = Vec::new();
    for rel in set.relations() {
        let s = rel.word();
        if s.len() > u.len() {
            continue;
        }
        for i in 0..=u.len() - s.len() {
            if &u[i..i + s.len()] != s {
                continue;
            }
            let nb = u.len() - i - s.len();
            if in_p_set(i, rel, nb, c) {
                out.push(SDiwordPattern {
                    left: Word::from_slice(&u[..i]),
                    relation: rel.clone(),
                    right: Word::from_slice(&u[i + s.len()..]),
                    center: c,
                });
                if first_only {
                    return out;
                }
            }
        }
    }
    out
}

// Orderings other than deg-lex-center do not guarantee that a pattern's
// leading word is `a s̃ b`, so every term word of every relation is tried as
// the anchor and the expansion's leading monomial is compared directly.
fn generic_matches(target: &Diword, set: &RelationSet, first_only: bool) -> Vec<SDiwordPattern> {
    let u = target.word();
    let mut out: Vec<SDiwordPattern> = Vec::new();
    for rel in set.relations() {
        let anchors: BTreeSet<&[Letter]> = rel.poly().monomials().map(|d| d.word()).collect();
        let mut seen = BTreeSet::new();
        for anchor in anchors {
            if anchor.len() > u.len() {
                continue;
            }
            for i in 0..=u.len() - anchor.len() {
                if &u[i..i + anchor.len()] != anchor {
                    continue;
                }
                let (a, b) = (&u[..i], &u[i + anchor.len()..]);
                let total = a.len() + rel.word().len() + b.len();
                for c in 1..=total {
                    if !seen.insert((i, c)) {
                        continue;
                    }
                    let Ok(pat) = SDiwordPattern::new(a, rel.clone(), b, c) else {
                        continue;
                    };
                    if pat.is_normal() && pat.leading().ok().as_ref() == Some(target) {
                        out.push(pat);
                        if first_only {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    pub pattern: SDiwordPattern,
    pub eliminated: Diword,
    /// The step subtracted `coefficient · expand(pattern)`.
    pub coefficient: Coeff,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    /// `Σ coefficient · expand(pattern)`, which equals `f − normal_form`.
    pub fn replay(&self) -> DiPolynomial {
        let mut acc = DiPolynomial::zero();
        for step in &self.steps {
            let e = step.pattern.expand().expect("trace patterns are normal");
            acc.add_scaled(&step.coefficient, &e);
        }
        acc
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub normal_form: DiPolynomial,
    pub trace: ReductionTrace,
}

fn eliminate(r: &mut DiPolynomial, d: &Diword, c: &Coeff, pat: SDiwordPattern, trace: &mut ReductionTrace) {
    let e = pat.expand().expect("matched patterns are normal");
    let lc = e.coeff(d).cloned().unwrap_or_else(Coeff::one);
    let k = c / lc;
    r.add_scaled(&-k.clone(), &e);
    trace.steps.push(ReductionStep {
        pattern: pat,
        eliminated: d.clone(),
        coefficient: k,
    });
}

/// Reduces `f` modulo `set`, always eliminating the greatest reducible
/// monomial first.
pub fn reduce(f: &DiPolynomial, set: &RelationSet) -> Reduction {
    let mut r = f.clone();
    let mut trace = ReductionTrace::default();
    match set.ordering() {
        OrderingKind::DegLexCenter => {
            // Terms above the last eliminated monomial never change, so the
            // scan resumes below it.
            let mut bound: Option<Diword> = None;
            loop {
                let hit = r
                    .terms_below(bound.as_ref())
                    .find_map(|(d, c)| find_reduction(d, set).map(|p| (d.clone(), c.clone(), p)));
                let Some((d, c, pat)) = hit else { break };
                eliminate(&mut r, &d, &c, pat, &mut trace);
                bound = Some(d);
            }
        }
        kind => loop {
            let mut terms: Vec<(&Diword, &Coeff)> = r.iter().collect();
            terms.sort_by(|a, b| compare_diwords(b.0, a.0, kind));
            let hit = terms
                .into_iter()
                .find_map(|(d, c)| find_reduction(d, set).map(|p| (d.clone(), c.clone(), p)));
            let Some((d, c, pat)) = hit else { break };
            eliminate(&mut r, &d, &c, pat, &mut trace);
        },
    }
    Reduction { normal_form: r, trace }
}

/// Reduction under a caller-chosen strategy. At every step `pick(n)` selects
/// one of the `n` reducible monomials (listed greatest first), then one of
/// the `n` matching patterns. The result is fully reduced whatever the
/// choices, and on a Gröbner–Shirshov basis it equals [`reduce`]'s.
pub fn reduce_by(f: &DiPolynomial, set: &RelationSet, mut pick: impl FnMut(usize) -> usize) -> Reduction {
    let mut r = f.clone();
    let mut trace = ReductionTrace::default();
    loop {
        let mut reducible: Vec<(Diword, Coeff, Vec<SDiwordPattern>)> = r
            .iter()
            .rev()
            .filter_map(|(d, c)| {
                let pats = find_reductions(d, set);
                (!pats.is_empty()).then(|| (d.clone(), c.clone(), pats))
            })
            .collect();
        if reducible.is_empty() {
            break;
        }
        let i = pick(reducible.len()) % reducible.len();
        let (d, c, mut pats) = reducible.swap_remove(i);
        let j = pick(pats.len()) % pats.len();
        eliminate(&mut r, &d, &c, pats.swap_remove(j), &mut trace);
    }
    Reduction { normal_form: r, trace }
}

pub fn is_irreducible(d: &Diword, set: &RelationSet) -> bool {
    find_reduction(d, set).is_none()
}

/// All `S`-irreducible diwords of word length at most `max_degree`, in
/// increasing deg-lex-center order.
pub fn irr_enumerate(set: &RelationSet, max_degree: usize, exec: Execution) -> Vec<Diword> {
    let mut out = Vec::new();
    for len in 1..=max_degree {
        let words = words_of_length(set.alphabet(), len);
        out.extend(exec.flat_map(&words, |w| {
            (1..=len)
                .map(|c| Diword::new(w.clone(), c).expect("center in range"))
                .filter(|d| is_irreducible(d, set))
                .collect()
        }));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotMember,
    /// Nonzero remainder against a set that is not a certified basis: no
    /// conclusion is possible.
    Unknown,
}

/// Ideal membership by reduction. Positive answers are always sound; a
/// negative answer needs `set` to be a certified Gröbner–Shirshov basis.
pub fn ideal_member(f: &DiPolynomial, set: &RelationSet) -> Membership {
    if reduce(f, set).normal_form.is_zero() {
        Membership::Member
    } else if set.is_certified() {
        Membership::NotMember
    } else {
        Membership::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn alpha() -> Alphabet {
        Alphabet::new(["t", "x"]).unwrap()
    }

    fn d(a: &Alphabet, w: &str, c: usize) -> Diword {
        Diword::new(a.word(w).unwrap(), c).unwrap()
    }

    fn p(a: &Alphabet, w: &str, c: usize) -> DiPolynomial {
        DiPolynomial::monomial(d(a, w, c))
    }

    /// The HNN relations over {t < x}: [xx]_1, [xx]_2, [xt]_1 − [tx]_2.
    fn small_set() -> RelationSet {
        let a = alpha();
        let mut s = RelationSet::new(a.clone());
        s.push("f", &p(&a, "x x", 1)).unwrap();
        s.push("g", &p(&a, "x x", 2)).unwrap();
        s.push("m", &(&p(&a, "x t", 1) - &p(&a, "t x", 2))).unwrap();
        s
    }

    fn rel(s: &RelationSet, id: &str) -> Arc<Relation> {
        s.get(id).unwrap().clone()
    }

    #[test]
    fn p_set_formula() {
        let s = small_set();
        let a = s.alphabet().clone();
        let m = rel(&s, "m");
        let x = a.word("x").unwrap();
        assert_eq!(p_set(&[], &m, &x), BTreeSet::from([1, 3]));
        assert_eq!(p_set(&x, &m, &[]), BTreeSet::from([1, 2]));
        let weak = Relation::new("w", &(&p(&a, "x t", 2) + &p(&a, "x t", 1)), OrderingKind::DegLexCenter).unwrap();
        assert!(!weak.is_strong());
        assert_eq!(p_set(&x, &weak, &[]), BTreeSet::from([3]));
    }

    #[test]
    fn expansion_matches_products() {
        let s = small_set();
        let a = s.alphabet().clone();
        let x = a.word("x").unwrap();
        let t = a.word("t").unwrap();
        let m = rel(&s, "m");
        let pat = SDiwordPattern::new(&[], m.clone(), &x, 1).unwrap();
        let want = &p(&a, "x t x", 1) - &p(&a, "t x x", 2);
        assert_eq!(pat.expand().unwrap(), want);
        assert_eq!(pat.expand().unwrap(), m.poly().left_product(&p(&a, "x", 1)));
        assert_eq!(pat.leading().unwrap(), d(&a, "x t x", 1));

        let f = rel(&s, "f");
        let tf = SDiwordPattern::new(&t, f.clone(), &[], 2).unwrap();
        assert_eq!(tf.expand().unwrap(), p(&a, "t x x", 2));
        let ft = SDiwordPattern::new(&[], f.clone(), &t, 3).unwrap();
        assert_eq!(ft.leading().unwrap(), d(&a, "x x t", 3));
        let bare = SDiwordPattern::new(&[], m.clone(), &[], 1).unwrap();
        assert_eq!(bare.expand().unwrap(), *m.poly());
        assert_eq!(bare.leading().unwrap(), m.leading().monomial);
    }

    #[test]
    fn non_normal_patterns_rejected() {
        let a = alpha();
        let weak =
            Arc::new(Relation::new("w", &(&p(&a, "x t", 2) + &p(&a, "x t", 1)), OrderingKind::DegLexCenter).unwrap());
        let x = a.word("x").unwrap();
        let pat = SDiwordPattern::new(&x, weak.clone(), &[], 1).unwrap();
        assert_eq!(pat.expand(), Err(Error::NotNormal));
        assert_eq!(pat.leading(), Err(Error::NotNormal));
        assert!(SDiwordPattern::new(&x, weak.clone(), &[], 3).unwrap().is_normal());
        assert!(SDiwordPattern::new(&x, weak, &[], 4).is_err());
    }

    #[test]
    fn find_reduction_examples() {
        let s = small_set();
        let a = s.alphabet().clone();
        let hit = find_reduction(&d(&a, "x t x", 1), &s).unwrap();
        assert_eq!(hit.relation().id(), "m");
        assert!(hit.left().is_empty());
        assert_eq!(hit.right(), a.word("x").unwrap().as_slice());
        assert_eq!(hit.center(), 1);
        assert!(find_reduction(&d(&a, "x", 1), &s).is_none());
        let hit = find_reduction(&d(&a, "x x", 1), &s).unwrap();
        assert_eq!(hit.relation().id(), "f");
        assert!(hit.left().is_empty() && hit.right().is_empty());
    }

    #[test]
    fn reduce_examples() {
        let s = small_set();
        let a = s.alphabet().clone();
        let r = reduce(&p(&a, "x t x", 1), &s);
        assert!(r.normal_form.is_zero());
        assert_eq!(r.trace.replay(), p(&a, "x t x", 1));
        let h = &(&p(&a, "x x t", 3) - &p(&a, "x x t", 2)) + &p(&a, "x t x", 3);
        assert!(reduce(&h, &s).normal_form.is_zero());
        let r = reduce(&p(&a, "x", 1), &s);
        assert_eq!(r.normal_form, p(&a, "x", 1));
        assert!(r.trace.is_empty());
    }

    #[test]
    fn trace_eliminations_decrease() {
        let s = small_set();
        let a = s.alphabet().clone();
        let f = &(&p(&a, "x x t x", 2) + &p(&a, "x t x t", 1).scale(&int(3))) - &p(&a, "t x t", 2);
        let r = reduce(&f, &s);
        assert!(r.trace.steps.windows(2).all(|w| w[0].eliminated > w[1].eliminated));
        assert_eq!(&f - &r.normal_form, r.trace.replay());
    }

    #[test]
    fn irreducibles_to_degree_two() {
        let s = small_set();
        let a = s.alphabet().clone();
        assert!(is_irreducible(&d(&a, "x t", 2), &s));
        let irr = irr_enumerate(&s, 2, Execution::Sequential);
        let want = vec![
            d(&a, "t", 1),
            d(&a, "x", 1),
            d(&a, "t t", 1),
            d(&a, "t t", 2),
            d(&a, "t x", 1),
            d(&a, "t x", 2),
            d(&a, "x t", 2),
        ];
        assert_eq!(irr, want);
        assert_eq!(
            irr_enumerate(&s, 4, Execution::Parallel),
            irr_enumerate(&s, 4, Execution::Sequential)
        );
    }

    #[test]
    fn membership() {
        let mut s = small_set();
        let a = s.alphabet().clone();
        let mx = rel(&s, "m").poly().left_product(&p(&a, "x", 1));
        assert_eq!(ideal_member(&mx, &s), Membership::Member);
        assert_eq!(ideal_member(&DiPolynomial::zero(), &s), Membership::Member);
        assert_eq!(ideal_member(&p(&a, "x", 1), &s), Membership::Unknown);
        s.set_certified(true);
        assert_eq!(ideal_member(&p(&a, "x", 1), &s), Membership::NotMember);
    }

    #[test]
    fn relation_set_rules() {
        let a = alpha();
        let mut s = RelationSet::new(a.clone());
        assert!(s.push("a", &p(&a, "x", 1).scale(&int(2))).unwrap());
        assert!(!s.push("b", &p(&a, "x", 1)).unwrap());
        assert_eq!(s.push("z", &DiPolynomial::zero()), Err(Error::ZeroPolynomial));
        let foreign = DiPolynomial::letter(Letter(7));
        assert!(matches!(s.push("c", &foreign), Err(Error::Alphabet(_))));
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn weight_ordering_reduction() {
        let a = alpha();
        let mut s = RelationSet::with_ordering(a.clone(), OrderingKind::LexicographicWeight);
        s.push("m", &(&p(&a, "x t", 1) - &p(&a, "t x", 2))).unwrap();
        // under the weight ordering [t x]_2 leads
        assert_eq!(s.relations()[0].leading().monomial, d(&a, "t x", 2));
        let r = reduce(&p(&a, "t x", 2), &s);
        assert_eq!(r.normal_form, p(&a, "x t", 1));
        assert_eq!(&p(&a, "t x", 2) - &r.normal_form, r.trace.replay());
    }
}
