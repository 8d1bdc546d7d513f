//! Alphabets, words and normal diwords.
//!
//! A normal diword `[u]_m` is a nonempty word `u = x_1 … x_n` together with a
//! center `1 ≤ m ≤ n`. It stands for the product
//! `x_1 ⊢ … ⊢ x_{m-1} ⊢ x_m ⊣ x_{m+1} ⊣ … ⊣ x_n` in the free dialgebra, and
//! the set of all normal diwords is a linear basis of it.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A generator, identified by its rank in the alphabet's total order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

pub type Word = SmallVec<[Letter; 8]>;

/// A finite, totally ordered set of named generators. Index = rank, so the
/// first name is the smallest generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from names listed in ascending order.
    pub fn new<I, S>(ascending: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = ascending.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::Alphabet("alphabet must be nonempty".into()));
        }
        if names.len() > u8::MAX as usize + 1 {
            return Err(Error::Alphabet("at most 256 generators are supported".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_symbol(name) {
                return Err(Error::Alphabet(format!("invalid generator name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::Alphabet(format!("duplicate generator {name:?}")));
            }
        }
        Ok(Alphabet { names })
    }

    /// Returns a copy with `name` adjoined as the new minimal generator. Every
    /// existing letter's rank shifts up by one.
    pub fn with_minimal(&self, name: &str) -> Result<Self> {
        Alphabet::new(std::iter::once(name.to_string()).chain(self.names.iter().cloned()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator {
        (0..self.names.len()).map(|i| Letter(i as u8))
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.rank()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| Letter(i as u8))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.rank() < self.names.len()
    }

    /// Parses a whitespace-separated word such as `"x y t"`.
    pub fn word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| {
                self.letter(tok)
                    .ok_or_else(|| Error::Alphabet(format!("undeclared symbol {tok:?}")))
            })
            .collect()
    }

    pub fn render_word(&self, word: &[Letter]) -> String {
        let names: Vec<&str> = word.iter().map(|&l| self.name(l)).collect();
        names.join(" ")
    }
}

pub(crate) fn is_symbol(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Deg-lex comparison of words: longer is greater, equal lengths compare
/// letterwise by rank.
pub fn deglex_compare(u: &[Letter], v: &[Letter]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

/// A normal diword `[u]_m`.
///
/// `Ord` is the deg-lex-center ordering: words by deg-lex, ties broken by the
/// larger center being greater.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diword {
    word: Word,
    center: usize,
}

impl Diword {
    pub fn new(word: impl Into<Word>, center: usize) -> Result<Self> {
        let word = word.into();
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        if center < 1 || center > word.len() {
            return Err(Error::CenterOutOfRange {
                center,
                len: word.len(),
            });
        }
        Ok(Diword { word, center })
    }

    /// The single-letter diword `[x]_1`.
    pub fn letter(x: Letter) -> Self {
        Diword {
            word: smallvec::smallvec![x],
            center: 1,
        }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn center(&self) -> usize {
        self.center
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `[u]_m ⊣ [v]_n = [uv]_m`
    pub fn left(&self, other: &Diword) -> Diword {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Diword {
            word,
            center: self.center,
        }
    }

    /// `[u]_m ⊢ [v]_n = [uv]_{|u|+n}`
    pub fn right(&self, other: &Diword) -> Diword {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Diword {
            word,
            center: self.len() + other.center,
        }
    }

    /// Renders the diword as its ⊢/⊣ product with the center letter dotted,
    /// e.g. `x ⊢ ẏ ⊣ t`.
    pub fn expand(&self, alphabet: &Alphabet) -> String {
        self.expand_with(alphabet, "⊢", "⊣", |name| format!("{name}\u{307}"))
    }

    /// ASCII rendering of [`Diword::expand`], e.g. `x |- y^ -| t`.
    pub fn expand_ascii(&self, alphabet: &Alphabet) -> String {
        self.expand_with(alphabet, "|-", "-|", |name| format!("{name}^"))
    }

    fn expand_with(&self, alphabet: &Alphabet, right_op: &str, left_op: &str, mark: impl Fn(&str) -> String) -> String {
        let mut out = String::new();
        for (i, &l) in self.word.iter().enumerate() {
            let pos = i + 1;
            if pos > 1 {
                let op = if pos <= self.center { right_op } else { left_op };
                out.push(' ');
                out.push_str(op);
                out.push(' ');
            }
            if pos == self.center {
                out.push_str(&mark(alphabet.name(l)));
            } else {
                out.push_str(alphabet.name(l));
            }
        }
        out
    }

    /// ASCII form used by files and reports, e.g. `[x t ; 1]`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DiwordDisplay { diword: self, alphabet }
    }
}

struct DiwordDisplay<'a> {
    diword: &'a Diword,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DiwordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{} ; {}]",
            self.alphabet.render_word(&self.diword.word),
            self.diword.center
        )
    }
}

impl Ord for Diword {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(&self.word, &other.word).then_with(|| self.center.cmp(&other.center))
    }
}

impl PartialOrd for Diword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All words of exactly `len` letters over the alphabet, in lexicographic order.
pub fn words_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Word::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.letters().map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyt() -> Alphabet {
        Alphabet::new(["t", "y", "x"]).unwrap()
    }

    #[test]
    fn make_diword_bounds() {
        let a = xyt();
        let d = Diword::new(a.word("x y t").unwrap(), 2).unwrap();
        assert_eq!(d.center(), 2);
        assert_eq!(d.len(), 3);
        assert!(Diword::new(a.word("x").unwrap(), 1).is_ok());
        assert_eq!(
            Diword::new(a.word("x y").unwrap(), 3),
            Err(Error::CenterOutOfRange { center: 3, len: 2 })
        );
        assert_eq!(
            Diword::new(a.word("x y").unwrap(), 0),
            Err(Error::CenterOutOfRange { center: 0, len: 2 })
        );
        assert_eq!(Diword::new(Word::new(), 1), Err(Error::EmptyWord));
    }

    #[test]
    fn expand_marks_center() {
        let a = xyt();
        let d = Diword::new(a.word("x y t").unwrap(), 2).unwrap();
        assert_eq!(d.expand(&a), "x ⊢ y\u{307} ⊣ t");
        assert_eq!(d.expand_ascii(&a), "x |- y^ -| t");
        let x = Diword::new(a.word("x").unwrap(), 1).unwrap();
        assert_eq!(x.expand(&a), "x\u{307}");
        let xy = Diword::new(a.word("x y").unwrap(), 1).unwrap();
        assert_eq!(xy.expand(&a), "x\u{307} ⊣ y");
        assert_eq!(xy.display(&a).to_string(), "[x y ; 1]");
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["x", "x"]).is_err());
        assert!(Alphabet::new(["x y"]).is_err());
        let a = Alphabet::new(["z", "y", "x"]).unwrap().with_minimal("t").unwrap();
        assert_eq!(a.names(), ["t", "z", "y", "x"]);
        assert!(a.letter("t").unwrap() < a.letter("z").unwrap());
        assert!(a.word("x q").is_err());
    }

    #[test]
    fn monomial_products() {
        let a = xyt();
        let x = Diword::new(a.word("x").unwrap(), 1).unwrap();
        let tx2 = Diword::new(a.word("t x").unwrap(), 2).unwrap();
        assert_eq!(x.left(&tx2), Diword::new(a.word("x t x").unwrap(), 1).unwrap());
        let xx1 = Diword::new(a.word("x x").unwrap(), 1).unwrap();
        let t = Diword::new(a.word("t").unwrap(), 1).unwrap();
        assert_eq!(xx1.left(&t), Diword::new(a.word("x x t").unwrap(), 1).unwrap());
        assert_eq!(xx1.right(&t), Diword::new(a.word("x x t").unwrap(), 3).unwrap());
        let xt1 = Diword::new(a.word("x t").unwrap(), 1).unwrap();
        assert_eq!(x.right(&xt1), Diword::new(a.word("x x t").unwrap(), 2).unwrap());
    }

    #[test]
    fn words_enumeration() {
        let a = xyt();
        assert_eq!(words_of_length(&a, 0).len(), 1);
        assert_eq!(words_of_length(&a, 3).len(), 27);
        let w2 = words_of_length(&a, 2);
        assert!(w2.windows(2).all(|p| p[0] < p[1]));
    }
}
