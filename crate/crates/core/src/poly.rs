//! Exact-rational polynomials in the free dialgebra.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num::{BigRational, One, Signed, Zero};

use crate::word::{Alphabet, Diword, Letter};

pub type Coeff = BigRational;

/// A finite linear combination of normal diwords. Terms are kept sorted by
/// the deg-lex-center ordering and no stored coefficient is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DiPolynomial {
    terms: BTreeMap<Diword, Coeff>,
}

impl DiPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(d: Diword) -> Self {
        Self::term(Coeff::one(), d)
    }

    pub fn term(c: Coeff, d: Diword) -> Self {
        let mut p = Self::zero();
        p.add_term(d, c);
        p
    }

    /// `[x]_1` for a single generator.
    pub fn letter(x: Letter) -> Self {
        Self::monomial(Diword::letter(x))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Coeff, Diword)>) -> Self {
        let mut p = Self::zero();
        for (c, d) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diword) -> Option<&Coeff> {
        self.terms.get(d)
    }

    /// Terms in increasing deg-lex-center order.
    pub fn iter(&self) -> btree_map::Iter<'_, Diword, Coeff> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Diword> {
        self.terms.keys()
    }

    /// Greatest term under the deg-lex-center ordering.
    pub fn max_term(&self) -> Option<(&Diword, &Coeff)> {
        self.terms.iter().next_back()
    }

    /// Terms strictly below `bound`, greatest first.
    pub(crate) fn terms_below<'a>(
        &'a self,
        bound: Option<&'a Diword>,
    ) -> Box<dyn Iterator<Item = (&'a Diword, &'a Coeff)> + 'a> {
        match bound {
            Some(b) => Box::new(self.terms.range(..b).rev()),
            None => Box::new(self.terms.iter().rev()),
        }
    }

    pub fn add_term(&mut self, d: Diword, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Coeff, other: &DiPolynomial) {
        if c.is_zero() {
            return;
        }
        for (d, k) in &other.terms {
            self.add_term(d.clone(), c * k);
        }
    }

    pub fn scale(&self, c: &Coeff) -> DiPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        DiPolynomial {
            terms: self.terms.iter().map(|(d, k)| (d.clone(), c * k)).collect(),
        }
    }

    /// Bilinear extension of `[u]_m ⊣ [v]_n = [uv]_m`.
    pub fn left_product(&self, other: &DiPolynomial) -> DiPolynomial {
        self.product(other, Diword::left)
    }

    /// Bilinear extension of `[u]_m ⊢ [v]_n = [uv]_{|u|+n}`.
    pub fn right_product(&self, other: &DiPolynomial) -> DiPolynomial {
        self.product(other, Diword::right)
    }

    fn product(&self, other: &DiPolynomial, rule: fn(&Diword, &Diword) -> Diword) -> DiPolynomial {
        let mut out = DiPolynomial::zero();
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(rule(p, q), a * b);
            }
        }
        out
    }

    /// Largest word length among the terms (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Diword::len).max().unwrap_or(0)
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.terms.keys().flat_map(|d| d.word().iter().copied())
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, alphabet }
    }
}

struct PolyDisplay<'a> {
    poly: &'a DiPolynomial,
    alphabet: &'a Alphabet,
}

/// Canonical text: terms in decreasing order, unit coefficients omitted,
/// `" - "` between terms with negative coefficients.
impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}", d.display(self.alphabet))?;
        }
        Ok(())
    }
}

impl Add for &DiPolynomial {
    type Output = DiPolynomial;
    fn add(self, rhs: &DiPolynomial) -> DiPolynomial {
        let mut out = self.clone();
        out.add_scaled(&Coeff::one(), rhs);
        out
    }
}

impl Sub for &DiPolynomial {
    type Output = DiPolynomial;
    fn sub(self, rhs: &DiPolynomial) -> DiPolynomial {
        let mut out = self.clone();
        out.add_scaled(&-Coeff::one(), rhs);
        out
    }
}

impl Add for DiPolynomial {
    type Output = DiPolynomial;
    fn add(self, rhs: DiPolynomial) -> DiPolynomial {
        &self + &rhs
    }
}

impl Sub for DiPolynomial {
    type Output = DiPolynomial;
    fn sub(self, rhs: DiPolynomial) -> DiPolynomial {
        &self - &rhs
    }
}

impl Neg for &DiPolynomial {
    type Output = DiPolynomial;
    fn neg(self) -> DiPolynomial {
        self.scale(&-Coeff::one())
    }
}

impl Neg for DiPolynomial {
    type Output = DiPolynomial;
    fn neg(self) -> DiPolynomial {
        -&self
    }
}

impl From<Diword> for DiPolynomial {
    fn from(d: Diword) -> Self {
        DiPolynomial::monomial(d)
    }
}

pub fn int(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    Coeff::new(n.into(), d.into())
}
