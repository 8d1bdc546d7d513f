//! Text formats: polynomials and presentation files.
//!
//! ```text
//! poly    := '0' | ['-'] term (('+' | '-') term)*
//! term    := [coeff '*'] diword
//! coeff   := integer | integer '/' integer
//! diword  := '[' symbol+ ';' integer ']'
//! ```
//!
//! A presentation file is a list of lines. `#` starts a comment.
//!
//! ```text
//! generators: t < z < y < x
//! relation: [x t ; 1] - [t x ; 2]
//! relation m2: [x x ; 1]
//! left: u v = <poly>
//! right: u v = <poly>
//! subalgebra: u v
//! derivation: u = <poly>
//! ```
//!
//! `relation` lines describe a relation set. The other four describe a
//! finite-dimensional dialgebra on the declared generators and cannot be
//! mixed with `relation` lines.

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::hnn::DialgebraData;
use crate::ordering::OrderingKind;
use crate::poly::{Coeff, DiPolynomial};
use crate::rewriting::RelationSet;
use crate::word::{is_symbol, Alphabet, Diword, Letter};

/// Canonical text of `f`. [`parse_poly`] inverts it.
pub fn format_poly(f: &DiPolynomial, alphabet: &Alphabet) -> String {
    f.display(alphabet).to_string()
}

/// A parse failure inside one string, before line numbers are known.
struct Fail {
    column: usize,
    error: Error,
}

fn fail(column: usize, message: impl Into<String>) -> Fail {
    Fail {
        column,
        error: Error::Parse {
            line: 1,
            column,
            message: message.into(),
        },
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn column(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), Fail> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(fail(self.column(), format!("expected '{c}'")))
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn integer(&mut self) -> Result<BigInt, Fail> {
        self.skip_ws();
        let col = self.column();
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(fail(col, "expected an integer"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn symbol(&mut self) -> &'a str {
        self.skip_ws();
        self.take_while(|c| c.is_alphanumeric() || c == '_' || c == '\'')
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }
}

fn coefficient(cur: &mut Cursor) -> Result<Option<Coeff>, Fail> {
    cur.skip_ws();
    if !cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        return Ok(None);
    }
    let num = cur.integer()?;
    let mut den = BigInt::from(1);
    if cur.eat('/') {
        let col = cur.column();
        den = cur.integer()?;
        if den.is_zero() {
            return Err(fail(col, "zero denominator"));
        }
    }
    cur.expect('*')?;
    Ok(Some(Coeff::new(num, den)))
}

fn diword(cur: &mut Cursor, alphabet: &Alphabet) -> Result<Diword, Fail> {
    cur.expect('[')?;
    let mut word: Vec<Letter> = Vec::new();
    loop {
        cur.skip_ws();
        let col = cur.column();
        let sym = cur.symbol();
        if sym.is_empty() {
            break;
        }
        match alphabet.letter(sym) {
            Some(l) => word.push(l),
            None => return Err(fail(col, format!("undeclared symbol {sym:?}"))),
        }
    }
    if word.is_empty() {
        return Err(fail(cur.column(), "expected a symbol"));
    }
    cur.expect(';')?;
    let col = cur.column();
    let center = cur.integer()?;
    cur.expect(']')?;
    let center: usize = center.try_into().unwrap_or(usize::MAX);
    Diword::new(word, center).map_err(|error| Fail { column: col, error })
}

fn poly(cur: &mut Cursor, alphabet: &Alphabet) -> Result<DiPolynomial, Fail> {
    let mut out = DiPolynomial::zero();
    cur.skip_ws();
    if cur.peek() == Some('0') {
        let save = cur.pos;
        cur.pos += 1;
        if cur.at_end() {
            return Ok(out);
        }
        cur.pos = save;
    }
    let mut negative = cur.eat('-');
    loop {
        let c = coefficient(cur)?.unwrap_or_else(|| Coeff::from_integer(1.into()));
        let d = diword(cur, alphabet)?;
        out.add_term(d, if negative { -c } else { c });
        if cur.at_end() {
            return Ok(out);
        }
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else {
            return Err(fail(cur.column(), "expected '+', '-' or end of input"));
        }
    }
}

/// Parses a polynomial over `alphabet`.
///
/// A center outside its word gives [`Error::CenterOutOfRange`]. Every other
/// problem gives [`Error::Parse`] on line 1.
pub fn parse_poly(text: &str, alphabet: &Alphabet) -> Result<DiPolynomial> {
    let mut cur = Cursor { text, pos: 0 };
    poly(&mut cur, alphabet).map_err(|f| f.error)
}

/// A parsed presentation file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    /// `(id, polynomial, line)` per `relation` line.
    pub relations: Vec<(String, DiPolynomial, usize)>,
    dialgebra: Option<DialgebraData>,
}

impl Presentation {
    /// Builds the relation set, monicizing under `ordering`. Duplicate
    /// relations are kept once.
    pub fn relation_set(&self, ordering: OrderingKind) -> Result<RelationSet> {
        let mut set = RelationSet::with_ordering(self.alphabet.clone(), ordering);
        for (id, p, line) in &self.relations {
            set.push(id.clone(), p).map_err(|e| Error::Parse {
                line: *line,
                column: 1,
                message: e.to_string(),
            })?;
        }
        Ok(set)
    }

    /// Whether the file used any dialgebra lines.
    pub fn describes_dialgebra(&self) -> bool {
        self.dialgebra.is_some()
    }

    /// The dialgebra described by the file. A file with no dialgebra lines
    /// describes the zero-multiplication dialgebra on its generators, with
    /// `A` everything and `d = 0`.
    pub fn dialgebra(&self) -> DialgebraData {
        self.dialgebra
            .clone()
            .unwrap_or_else(|| DialgebraData::new(self.alphabet.clone()))
    }
}

fn at_line(line: usize, offset: usize) -> impl Fn(Fail) -> Error {
    move |f| {
        let message = match f.error {
            Error::Parse { message, .. } => message,
            other => other.to_string(),
        };
        Error::Parse {
            line,
            column: offset + f.column,
            message,
        }
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn letters(text: &str, alphabet: &Alphabet, line: usize, offset: usize) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    let mut col = offset;
    for tok in text.split(' ') {
        col += 1;
        if !tok.is_empty() {
            let l = alphabet
                .letter(tok)
                .ok_or_else(|| parse_error(line, col, format!("undeclared symbol {tok:?}")))?;
            out.push(l);
        }
        col += tok.chars().count();
    }
    Ok(out)
}

/// Parses a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relations = Vec::new();
    let mut dialgebra: Option<DialgebraData> = None;
    let mut sub_basis: Option<Vec<Letter>> = None;
    let mut derivations: Vec<(Letter, DiPolynomial, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            return Err(parse_error(line, 1, "expected 'keyword: ...'"));
        };
        let head = content[..colon].trim();
        let body = &content[colon + 1..];
        let offset = content[..colon + 1].chars().count();
        let mut words = head.split_whitespace();
        let keyword = words.next().unwrap_or("");

        if keyword == "generators" {
            if alphabet.is_some() {
                return Err(parse_error(line, 1, "generators declared twice"));
            }
            let names: Vec<&str> = body.split('<').map(str::trim).collect();
            if let Some(bad) = names.iter().find(|n| !is_symbol(n)) {
                return Err(parse_error(line, offset + 1, format!("invalid generator name {bad:?}")));
            }
            alphabet = Some(Alphabet::new(names).map_err(|e| parse_error(line, offset + 1, e.to_string()))?);
            continue;
        }
        let Some(a) = alphabet.as_ref() else {
            return Err(parse_error(line, 1, "generators must be declared first"));
        };
        let table_line = matches!(keyword, "left" | "right" | "subalgebra" | "derivation");
        if table_line && !relations.is_empty() || keyword == "relation" && dialgebra.is_some() {
            return Err(parse_error(
                line,
                1,
                "relation lines cannot be mixed with dialgebra lines",
            ));
        }
        match keyword {
            "relation" => {
                let id = match words.next() {
                    Some(id) => id.to_string(),
                    None => format!("r{}", relations.len() + 1),
                };
                let p = poly(&mut Cursor { text: body, pos: 0 }, a).map_err(at_line(line, offset))?;
                if p.is_zero() {
                    return Err(parse_error(line, offset + 1, "relation is zero"));
                }
                relations.push((id, p, line));
            }
            "left" | "right" => {
                let Some(eq) = body.find('=') else {
                    return Err(parse_error(line, offset + 1, "expected 'u v = <poly>'"));
                };
                let pair = letters(&body[..eq], a, line, offset)?;
                if pair.len() != 2 {
                    return Err(parse_error(line, offset + 1, "expected two generators"));
                }
                let rhs_offset = offset + body[..eq + 1].chars().count();
                let value = poly(
                    &mut Cursor {
                        text: &body[eq + 1..],
                        pos: 0,
                    },
                    a,
                )
                .map_err(at_line(line, rhs_offset))?;
                let data = dialgebra.get_or_insert_with(|| DialgebraData::new(a.clone()));
                let set = if keyword == "left" {
                    data.set_left(pair[0], pair[1], value)
                } else {
                    data.set_right(pair[0], pair[1], value)
                };
                set.map_err(|e| parse_error(line, rhs_offset + 1, e.to_string()))?;
            }
            "subalgebra" => {
                if sub_basis.is_some() {
                    return Err(parse_error(line, 1, "subalgebra declared twice"));
                }
                sub_basis = Some(letters(body, a, line, offset)?);
                dialgebra.get_or_insert_with(|| DialgebraData::new(a.clone()));
            }
            "derivation" => {
                let Some(eq) = body.find('=') else {
                    return Err(parse_error(line, offset + 1, "expected 'u = <poly>'"));
                };
                let u = letters(&body[..eq], a, line, offset)?;
                if u.len() != 1 {
                    return Err(parse_error(line, offset + 1, "expected one generator"));
                }
                let rhs_offset = offset + body[..eq + 1].chars().count();
                let value = poly(
                    &mut Cursor {
                        text: &body[eq + 1..],
                        pos: 0,
                    },
                    a,
                )
                .map_err(at_line(line, rhs_offset))?;
                derivations.push((u[0], value, line));
                dialgebra.get_or_insert_with(|| DialgebraData::new(a.clone()));
            }
            other => return Err(parse_error(line, 1, format!("unknown keyword {other:?}"))),
        }
    }

    let Some(alphabet) = alphabet else {
        return Err(parse_error(1, 1, "missing generators line"));
    };
    if let Some(data) = dialgebra.as_mut() {
        if let Some(sub) = sub_basis {
            data.set_sub_basis(sub).expect("letters checked");
        }
        for (u, value, line) in derivations {
            data.set_derivation(u, value)
                .map_err(|e| parse_error(line, 1, e.to_string()))?;
        }
    }
    Ok(Presentation {
        alphabet,
        relations,
        dialgebra,
    })
}
