//! Monomial orderings on normal diwords and the leading data they induce.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, DiPolynomial};
use crate::word::{deglex_compare, Diword, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderingKind {
    /// Deg-lex on words, ties broken by the larger center.
    #[default]
    DegLexCenter,
    /// Lexicographic on `(length, letters left of center, letters…)`.
    LexicographicWeight,
}

impl fmt::Display for OrderingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderingKind::DegLexCenter => "deglex-center",
            OrderingKind::LexicographicWeight => "weight",
        })
    }
}

impl FromStr for OrderingKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "deglex-center" => Ok(OrderingKind::DegLexCenter),
            "weight" => Ok(OrderingKind::LexicographicWeight),
            other => Err(format!("unknown ordering {other:?}")),
        }
    }
}

pub fn compare_diwords(p: &Diword, q: &Diword, kind: OrderingKind) -> Ordering {
    match kind {
        OrderingKind::DegLexCenter => p.cmp(q),
        OrderingKind::LexicographicWeight => p
            .len()
            .cmp(&q.len())
            .then_with(|| p.center().cmp(&q.center()))
            .then_with(|| p.word().cmp(q.word())),
    }
}

/// What reduction needs to know about a polynomial's leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingData {
    pub monomial: Diword,
    pub coeff: Coeff,
    pub word: Word,
    pub strong: bool,
}

/// Greatest term of `f` under `kind`.
pub fn leading_term(f: &DiPolynomial, kind: OrderingKind) -> Option<(&Diword, &Coeff)> {
    match kind {
        OrderingKind::DegLexCenter => f.max_term(),
        _ => f.iter().max_by(|a, b| compare_diwords(a.0, b.0, kind)),
    }
}

pub fn leading(f: &DiPolynomial, kind: OrderingKind) -> Result<LeadingData> {
    let (d, c) = leading_term(f, kind).ok_or(Error::ZeroPolynomial)?;
    Ok(LeadingData {
        monomial: d.clone(),
        coeff: c.clone(),
        word: Word::from_slice(d.word()),
        strong: strong_given_leading(f, d, kind),
    })
}

/// Strong iff the tail `r_f = f − lt(f)` is zero or its leading associative
/// word is strictly deg-lex smaller than that of `f`.
pub fn is_strong(f: &DiPolynomial) -> Result<bool> {
    is_strong_under(f, OrderingKind::DegLexCenter)
}

pub fn is_strong_under(f: &DiPolynomial, kind: OrderingKind) -> Result<bool> {
    let (d, _) = leading_term(f, kind).ok_or(Error::ZeroPolynomial)?;
    Ok(strong_given_leading(f, d, kind))
}

fn strong_given_leading(f: &DiPolynomial, lead: &Diword, kind: OrderingKind) -> bool {
    let tail_lead = f
        .monomials()
        .filter(|d| *d != lead)
        .max_by(|a, b| compare_diwords(a, b, kind));
    match tail_lead {
        None => true,
        Some(r) => deglex_compare(lead.word(), r.word()) == Ordering::Greater,
    }
}

/// Scales `f` so that its leading coefficient is 1.
pub fn make_monic(f: &DiPolynomial, kind: OrderingKind) -> Result<DiPolynomial> {
    let (_, c) = leading_term(f, kind).ok_or(Error::ZeroPolynomial)?;
    if c.is_one() {
        return Ok(f.clone());
    }
    debug_assert!(!c.is_zero());
    Ok(f.scale(&c.recip()))
}
