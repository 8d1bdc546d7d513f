//! HNN-extensions of finite-dimensional dialgebras.
//!
//! A base dialgebra is given by structure constants on a basis `X`. Its
//! HNN-extension adjoins a stable letter `t < X` with relations
//! `a ⊣ t − t ⊢ a = d(a)` for a derivation `d` of a subalgebra `A`. As
//! relations on diwords:
//!
//! ```text
//! [uv]_1 − (u ⊣ v)      [uv]_2 − (u ⊢ v)      [at]_1 − [ta]_2 − d(a)
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::composition::{gsb_check, intersection_value, overlaps, strict_centers, GsbOptions, GsbReport, Overlap};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::poly::DiPolynomial;
use crate::rewriting::{irr_enumerate, is_irreducible, reduce, Relation, RelationSet};
use crate::word::{Alphabet, Diword, Letter};

/// A dialgebra with basis `X` given by its multiplication tables, a
/// subalgebra spanned by `sub_basis`, and a derivation on that subalgebra.
///
/// Elements are polynomials whose terms are the length-one diwords `[u]_1`.
/// Missing table entries and derivation values are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DialgebraData {
    basis: Alphabet,
    left: BTreeMap<(Letter, Letter), DiPolynomial>,
    right: BTreeMap<(Letter, Letter), DiPolynomial>,
    sub_basis: BTreeSet<Letter>,
    derivation: BTreeMap<Letter, DiPolynomial>,
}

impl DialgebraData {
    /// Zero multiplication, `A` = everything, `d = 0`.
    pub fn new(basis: Alphabet) -> Self {
        let sub_basis = basis.letters().collect();
        DialgebraData {
            basis,
            left: BTreeMap::new(),
            right: BTreeMap::new(),
            sub_basis,
            derivation: BTreeMap::new(),
        }
    }

    pub fn basis(&self) -> &Alphabet {
        &self.basis
    }

    pub fn sub_basis(&self) -> &BTreeSet<Letter> {
        &self.sub_basis
    }

    pub fn set_left(&mut self, u: Letter, v: Letter, value: DiPolynomial) -> Result<()> {
        self.check_element(&value)?;
        self.check_letter(u)?;
        self.check_letter(v)?;
        self.left.insert((u, v), value);
        Ok(())
    }

    pub fn set_right(&mut self, u: Letter, v: Letter, value: DiPolynomial) -> Result<()> {
        self.check_element(&value)?;
        self.check_letter(u)?;
        self.check_letter(v)?;
        self.right.insert((u, v), value);
        Ok(())
    }

    pub fn set_sub_basis(&mut self, letters: impl IntoIterator<Item = Letter>) -> Result<()> {
        let set: BTreeSet<Letter> = letters.into_iter().collect();
        for &l in &set {
            self.check_letter(l)?;
        }
        self.derivation.retain(|a, _| set.contains(a));
        self.sub_basis = set;
        Ok(())
    }

    /// Sets `d(a)`. `a` must be a subalgebra generator.
    pub fn set_derivation(&mut self, a: Letter, value: DiPolynomial) -> Result<()> {
        self.check_element(&value)?;
        if !self.sub_basis.contains(&a) {
            return Err(Error::DerivationInvalid(format!(
                "{} is not a subalgebra generator",
                self.basis.name(a)
            )));
        }
        self.derivation.insert(a, value);
        Ok(())
    }

    pub fn left_table(&self, u: Letter, v: Letter) -> DiPolynomial {
        self.left.get(&(u, v)).cloned().unwrap_or_default()
    }

    pub fn right_table(&self, u: Letter, v: Letter) -> DiPolynomial {
        self.right.get(&(u, v)).cloned().unwrap_or_default()
    }

    pub fn derivation(&self, a: Letter) -> DiPolynomial {
        self.derivation.get(&a).cloned().unwrap_or_default()
    }

    fn check_letter(&self, l: Letter) -> Result<()> {
        if self.basis.contains(l) {
            Ok(())
        } else {
            Err(Error::Alphabet(format!("letter rank {} outside the basis", l.rank())))
        }
    }

    fn check_element(&self, p: &DiPolynomial) -> Result<()> {
        for d in p.monomials() {
            if d.len() != 1 {
                return Err(Error::Alphabet(format!(
                    "{} is not a basis element",
                    d.display(&self.basis)
                )));
            }
            self.check_letter(d.word()[0])?;
        }
        Ok(())
    }

    /// `p ⊣ q` in the base dialgebra.
    pub fn mul_left(&self, p: &DiPolynomial, q: &DiPolynomial) -> DiPolynomial {
        bilinear(&self.left, p, q)
    }

    /// `p ⊢ q` in the base dialgebra.
    pub fn mul_right(&self, p: &DiPolynomial, q: &DiPolynomial) -> DiPolynomial {
        bilinear(&self.right, p, q)
    }

    /// `d` extended linearly; terms outside `A` are an error.
    pub fn apply_derivation(&self, p: &DiPolynomial) -> Result<DiPolynomial> {
        let mut out = DiPolynomial::zero();
        for (d, c) in p.iter() {
            let a = d.word()[0];
            if !self.sub_basis.contains(&a) {
                return Err(Error::DerivationInvalid(format!(
                    "d is undefined on {}",
                    self.basis.name(a)
                )));
            }
            out.add_scaled(c, &self.derivation(a));
        }
        Ok(out)
    }

    /// Triples of basis elements violating one of the five dialgebra laws.
    pub fn axiom_violations(&self) -> Vec<String> {
        let gens: Vec<DiPolynomial> = self.basis.letters().map(DiPolynomial::letter).collect();
        let mut out = Vec::new();
        for x in &gens {
            for y in &gens {
                for z in &gens {
                    let (l, r) = (|p, q| self.mul_left(p, q), |p, q| self.mul_right(p, q));
                    let laws = [
                        ("(x⊣y)⊣z = x⊣(y⊣z)", l(&l(x, y), z), l(x, &l(y, z))),
                        ("(x⊢y)⊢z = x⊢(y⊢z)", r(&r(x, y), z), r(x, &r(y, z))),
                        ("x⊣(y⊢z) = x⊣(y⊣z)", l(x, &r(y, z)), l(x, &l(y, z))),
                        ("(x⊣y)⊢z = x⊢(y⊢z)", r(&l(x, y), z), r(x, &r(y, z))),
                        ("(x⊢y)⊣z = x⊢(y⊣z)", l(&r(x, y), z), r(x, &l(y, z))),
                    ];
                    for (name, lhs, rhs) in laws {
                        if lhs != rhs {
                            out.push(format!(
                                "{name} fails at x={}, y={}, z={}",
                                x.display(&self.basis),
                                y.display(&self.basis),
                                z.display(&self.basis)
                            ));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_dialgebra(&self) -> bool {
        self.axiom_violations().is_empty()
    }
}

fn bilinear(table: &BTreeMap<(Letter, Letter), DiPolynomial>, p: &DiPolynomial, q: &DiPolynomial) -> DiPolynomial {
    let mut out = DiPolynomial::zero();
    for (u, a) in p.iter() {
        for (v, b) in q.iter() {
            if let Some(val) = table.get(&(u.word()[0], v.word()[0])) {
                out.add_scaled(&(a * b), val);
            }
        }
    }
    out
}

/// Checks both Leibniz laws on every pair of subalgebra generators:
///
/// ```text
/// d(x ⊣ y) = d(x) ⊣ y + x ⊣ d(y)      d(x ⊢ y) = d(x) ⊢ y + x ⊢ d(y)
/// ```
pub fn derivation_check(data: &DialgebraData) -> Result<bool> {
    let gens: Vec<Letter> = data.sub_basis.iter().copied().collect();
    for &u in &gens {
        for &v in &gens {
            for (name, val) in [("⊣", data.left_table(u, v)), ("⊢", data.right_table(u, v))] {
                if let Some(d) = val.monomials().find(|d| !data.sub_basis.contains(&d.word()[0])) {
                    return Err(Error::SubalgebraNotClosed(format!(
                        "{} {name} {} involves {}",
                        data.basis.name(u),
                        data.basis.name(v),
                        data.basis.name(d.word()[0])
                    )));
                }
            }
        }
    }
    for &u in &gens {
        for &v in &gens {
            let (x, y) = (DiPolynomial::letter(u), DiPolynomial::letter(v));
            let (dx, dy) = (data.derivation(u), data.derivation(v));
            let left = data.apply_derivation(&data.mul_left(&x, &y))?;
            if left != &data.mul_left(&dx, &y) + &data.mul_left(&x, &dy) {
                return Ok(false);
            }
            let right = data.apply_derivation(&data.mul_right(&x, &y))?;
            if right != &data.mul_right(&dx, &y) + &data.mul_right(&x, &dy) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
pub struct HnnPresentation {
    pub alphabet: Alphabet,
    pub relations: RelationSet,
    pub stable_letter: Letter,
}

impl HnnPresentation {
    /// The generators of the base dialgebra, as letters of the extended
    /// alphabet.
    pub fn base_letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let t = self.stable_letter;
        self.alphabet.letters().filter(move |&l| l != t)
    }

    /// Ids of relations that are not strong.
    pub fn weak_relations(&self) -> Vec<String> {
        self.relations
            .relations()
            .iter()
            .filter(|r| !r.is_strong())
            .map(|r| r.id().to_string())
            .collect()
    }
}

/// Picks `t`, or `t'`, `t''`, … if the basis already uses the name.
fn stable_name(basis: &Alphabet) -> String {
    let mut name = "t".to_string();
    while basis.letter(&name).is_some() {
        name.push('\'');
    }
    name
}

fn lift(l: Letter) -> Letter {
    Letter(l.0 + 1)
}

fn lift_poly(p: &DiPolynomial) -> DiPolynomial {
    DiPolynomial::from_terms(p.iter().map(|(d, c)| {
        let w: Vec<Letter> = d.word().iter().map(|&l| lift(l)).collect();
        (c.clone(), Diword::new(w, d.center()).expect("same shape"))
    }))
}

/// Builds the HNN-extension presentation of `data`.
///
/// Relation ids are `L.uv` and `R.uv` for the table relations and `T.a` for
/// the stable-letter relations.
pub fn build_hnn_relations(data: &DialgebraData) -> Result<HnnPresentation> {
    if !derivation_check(data)? {
        return Err(Error::DerivationInvalid("a Leibniz law fails".into()));
    }
    if data.basis.len() > u8::MAX as usize {
        return Err(Error::Alphabet("no room for the stable letter".into()));
    }
    let alphabet = data.basis.with_minimal(&stable_name(&data.basis))?;
    let t = Letter(0);
    let mut relations = RelationSet::new(alphabet.clone());
    let gens: Vec<Letter> = data.basis.letters().collect();
    let pair = |u: Letter, v: Letter, c: usize| {
        DiPolynomial::monomial(Diword::new(vec![lift(u), lift(v)], c).expect("length two"))
    };
    let name = |u: Letter, v: Letter| format!("{}{}", data.basis.name(u), data.basis.name(v));
    for (tag, center) in [("L", 1), ("R", 2)] {
        for &u in gens.iter().rev() {
            for &v in gens.iter().rev() {
                let value = if center == 1 {
                    data.left_table(u, v)
                } else {
                    data.right_table(u, v)
                };
                let poly = &pair(u, v, center) - &lift_poly(&value);
                relations.push(format!("{tag}.{}", name(u, v)), &poly)?;
            }
        }
    }
    for &a in data.sub_basis.iter().rev() {
        let at = DiPolynomial::monomial(Diword::new(vec![lift(a), t], 1).expect("length two"));
        let ta = DiPolynomial::monomial(Diword::new(vec![t, lift(a)], 2).expect("length two"));
        let poly = &(&at - &ta) - &lift_poly(&data.derivation(a));
        relations.push(format!("T.{}", data.basis.name(a)), &poly)?;
    }
    Ok(HnnPresentation {
        alphabet,
        relations,
        stable_letter: t,
    })
}

/// `t < z < y < x`, zero multiplication, `A` spanned by `x, y, z`, `d = 0`.
pub fn paper_instance() -> HnnPresentation {
    let basis = Alphabet::new(["z", "y", "x"]).expect("valid names");
    build_hnn_relations(&DialgebraData::new(basis)).expect("zero derivation")
}

/// Printed data for one critical pair of the explicit instance.
struct PrintedRow {
    label: &'static str,
    ambient: &'static str,
    centers: &'static [usize],
    /// Printed values; `None` means the row is printed as `= 0`.
    values: &'static [(usize, Option<&'static str>)],
}

const PRINTED: &[PrintedRow] = &[
    PrintedRow {
        label: "f∧f",
        ambient: "x x x",
        centers: &[1, 3],
        values: &[(1, None), (1, None)],
    },
    PrintedRow {
        label: "f∧g",
        ambient: "x x x",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "f∧h",
        ambient: "x x y",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "f∧p",
        ambient: "x x y",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "f∧m",
        ambient: "x x t",
        centers: &[1, 3],
        values: &[
            (1, Some("[x t x ; 1]")),
            (3, Some("[x x t ; 3] - [x x t ; 2] + [x t x ; 3]")),
        ],
    },
    PrintedRow {
        label: "g∧f",
        ambient: "x x x",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "g∧g",
        ambient: "x x x",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "g∧h",
        ambient: "x x y",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "g∧p",
        ambient: "x x y",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "g∧m",
        ambient: "x x t",
        centers: &[2, 3],
        values: &[
            (2, Some("[x t x ; 3]")),
            (3, Some("[x x t ; 3] - [x x t ; 2] + [x t x ; 3]")),
        ],
    },
    PrintedRow {
        label: "h∧f",
        ambient: "x y y",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "h∧g",
        ambient: "x y y",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "h∧h",
        ambient: "x y z",
        centers: &[3],
        values: &[(3, None)],
    },
    PrintedRow {
        label: "h∧p",
        ambient: "x y z",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "h∧m",
        ambient: "x y t",
        centers: &[1, 3],
        values: &[
            (1, Some("[x t y ; 1]")),
            (3, Some("[x y t ; 3] - [x y t ; 2] + [x t y ; 3]")),
        ],
    },
    PrintedRow {
        label: "p∧p",
        ambient: "x y z",
        centers: &[3],
        values: &[(3, None)],
    },
    PrintedRow {
        label: "p∧f",
        ambient: "x y y",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "p∧g",
        ambient: "x y y",
        centers: &[3],
        values: &[(3, None)],
    },
    PrintedRow {
        label: "p∧h",
        ambient: "x y z",
        centers: &[1, 3],
        values: &[(1, None), (3, None)],
    },
    PrintedRow {
        label: "p∧m",
        ambient: "x y t",
        centers: &[3],
        values: &[
            (2, Some("[x t y ; 3]")),
            (3, Some("[x y t ; 3] - [x y t ; 2] + [x t y ; 3]")),
        ],
    },
];

/// One printed value recomputed at its printed center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub center: usize,
    /// `None` when the row is printed as `= 0`.
    pub printed: Option<DiPolynomial>,
    /// `None` when one side is not a normal S-diword at this center.
    pub computed: Option<DiPolynomial>,
    pub remainder: Option<DiPolynomial>,
}

impl TableEntry {
    /// Nonzero printed values must match exactly. Rows printed `= 0` must be
    /// trivial at the printed center.
    pub fn agrees(&self) -> bool {
        match (&self.printed, &self.computed, &self.remainder) {
            (Some(p), Some(c), _) => p == c,
            (None, Some(_), Some(r)) => r.is_zero(),
            _ => false,
        }
    }

    /// A `= 0` row whose value at the printed center is a nonzero (but
    /// possibly trivial) polynomial.
    pub fn flagged(&self) -> bool {
        self.printed.is_none() && self.computed.as_ref().is_some_and(|c| !c.is_zero())
    }
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub label: String,
    pub first: Arc<Relation>,
    pub second: Arc<Relation>,
    pub ambient: Vec<Letter>,
    pub printed_centers: BTreeSet<usize>,
    pub strict_centers: BTreeSet<usize>,
    pub extended_centers: BTreeSet<usize>,
    /// `(center, value, remainder)` at every extended center.
    pub values: Vec<(usize, DiPolynomial, DiPolynomial)>,
    pub entries: Vec<TableEntry>,
}

impl TableRow {
    pub fn printed_within_extended(&self) -> bool {
        self.printed_centers.is_subset(&self.extended_centers)
    }

    pub fn printed_equals_strict(&self) -> bool {
        self.printed_centers == self.strict_centers
    }

    pub fn printed_zero(&self) -> bool {
        self.entries.iter().all(|e| e.printed.is_none())
    }

    /// Printed values must agree and every value must be trivial. A row
    /// printed `= 0` must also have zero strict compositions.
    pub fn reproduced(&self) -> bool {
        let strict_zero = !self.printed_zero()
            || self
                .values
                .iter()
                .filter(|(c, ..)| self.strict_centers.contains(c))
                .all(|(_, v, _)| v.is_zero());
        strict_zero && self.entries.iter().all(TableEntry::agrees) && self.values.iter().all(|(_, _, r)| r.is_zero())
    }

    pub fn render(&self, alphabet: &Alphabet) -> Vec<String> {
        let set = |s: &BTreeSet<usize>| {
            let v: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("{{{}}}", v.join(","))
        };
        let mut out = vec![format!(
            "{} {} vs {} w={} printed={} strict={} extended={} printed⊆extended={} printed=strict={} reproduced={}",
            self.label,
            self.first.poly().display(alphabet),
            self.second.poly().display(alphabet),
            alphabet.render_word(&self.ambient),
            set(&self.printed_centers),
            set(&self.strict_centers),
            set(&self.extended_centers),
            self.printed_within_extended(),
            self.printed_equals_strict(),
            self.reproduced(),
        )];
        for e in &self.entries {
            let show = |p: &Option<DiPolynomial>| match p {
                Some(p) => p.display(alphabet).to_string(),
                None => "-".to_string(),
            };
            out.push(format!(
                "  center {}: printed={} computed={} remainder={}{}",
                e.center,
                e.printed
                    .as_ref()
                    .map_or("0".to_string(), |p| p.display(alphabet).to_string()),
                show(&e.computed),
                show(&e.remainder),
                if e.flagged() {
                    " [nonzero value at a printed =0 center]"
                } else {
                    ""
                }
            ));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct PaperTable {
    pub presentation: HnnPresentation,
    pub rows: Vec<TableRow>,
    /// Extended-mode certification of the whole instance.
    pub report: GsbReport,
}

impl PaperTable {
    pub fn all_reproduced(&self) -> bool {
        self.rows.iter().all(TableRow::reproduced)
    }
}

fn family(label: char, word: &[Letter], t: Letter) -> Option<(&'static str, usize)> {
    match label {
        'f' | 'h' => Some(("L", 1)),
        'g' | 'p' => Some(("R", 2)),
        'm' if word.get(1) == Some(&t) => Some(("T", 0)),
        _ => None,
    }
}

fn lookup(p: &HnnPresentation, label: char, word: &[Letter]) -> Arc<Relation> {
    let a = &p.alphabet;
    let (tag, _) = family(label, word, p.stable_letter).expect("known family");
    let id = if tag == "T" {
        format!("T.{}", a.name(word[0]))
    } else {
        format!("{tag}.{}{}", a.name(word[0]), a.name(word[1]))
    };
    p.relations.get(&id).cloned().expect("relation present in the instance")
}

/// Recomputes the twenty printed critical pairs of the explicit instance and
/// diffs them against the printed center sets and values.
///
/// Families are instantiated on the printed ambient word: the first relation
/// sits on its first two letters and the second on its last two.
pub fn verify_paper_table(exec: Execution) -> PaperTable {
    let presentation = paper_instance();
    let a = presentation.alphabet.clone();
    let set = &presentation.relations;
    let rows = PRINTED
        .iter()
        .map(|row| {
            let w = a.word(row.ambient).expect("printed words use the instance alphabet");
            let mut chars = row.label.chars();
            let (lf, lg) = (chars.next().unwrap(), chars.nth(1).unwrap());
            let first = lookup(&presentation, lf, &w[..2]);
            let second = lookup(&presentation, lg, &w[1..]);
            let ov = overlaps(first.word(), second.word())
                .into_iter()
                .find(|o| o.word[..] == w[..])
                .unwrap_or_else(|| Overlap {
                    word: w.clone(),
                    left: w[..1].into(),
                    right: w[2..].into(),
                });
            let strict: BTreeSet<usize> = strict_centers(&first, &second, &ov).into_iter().collect();
            let values: Vec<(usize, DiPolynomial, DiPolynomial)> = (1..=w.len())
                .filter_map(|c| intersection_value(&first, &second, &ov, c).map(|v| (c, v)))
                .map(|(c, v)| {
                    let r = reduce(&v, set).normal_form;
                    (c, v, r)
                })
                .collect();
            let entries = row
                .values
                .iter()
                .map(|&(c, printed)| {
                    let computed = intersection_value(&first, &second, &ov, c);
                    TableEntry {
                        center: c,
                        printed: printed.map(|s| crate::io::parse_poly(s, &a).expect("printed values parse")),
                        remainder: computed.as_ref().map(|v| reduce(v, set).normal_form),
                        computed,
                    }
                })
                .collect();
            TableRow {
                label: row.label.to_string(),
                first,
                second,
                ambient: w.to_vec(),
                printed_centers: row.centers.iter().copied().collect(),
                strict_centers: strict,
                extended_centers: values.iter().map(|(c, ..)| *c).collect(),
                values,
                entries,
            }
        })
        .collect();
    let report = gsb_check(
        set,
        &GsbOptions {
            extended: true,
            exec,
            ..Default::default()
        },
    );
    PaperTable {
        presentation,
        rows,
        report,
    }
}

/// The shape of a diword: `X` for base letters, `t` for the stable letter,
/// then the center.
pub fn shape(d: &Diword, stable: Letter) -> String {
    let letters: String = d.word().iter().map(|&l| if l == stable { 't' } else { 'X' }).collect();
    format!("{letters};{}", d.center())
}

pub const STATED_PATTERN: &str = "[z_m…z_1 x y_1…y_n]_{m+1}, z_j,x,y_i ∈ X, \
z_{j+1}z_j ≠ xx,xy,xt; y_i y_{i+1} ≠ xx,xy,xt; z_1 x ≠ xx,xy,xt; x y_1 ≠ xx,xy,xt, for x > y";

pub const COMPUTED_PATTERN: &str = "[u]_c: no two adjacent X letters; \
if u_i ∈ X and u_{i+1} = t then c = i+1 (so at most one Xt factor); otherwise c is free";

#[derive(Debug, Clone)]
pub struct NormalFormReport {
    pub max_degree: usize,
    pub irr: Vec<Diword>,
    /// Irreducible diwords grouped by [`shape`].
    pub groups: BTreeMap<String, Vec<Diword>>,
    /// No irreducible diword has two adjacent base letters.
    pub no_adjacent_base: bool,
    /// Every irreducible diword with an `Xt` factor has its center on that `t`.
    pub xt_center_on_t: bool,
    /// Every base generator `[g]_1` is irreducible.
    pub generators_present: bool,
    /// Irr equals the set described by [`COMPUTED_PATTERN`].
    pub matches_computed_pattern: bool,
}

impl NormalFormReport {
    pub fn render(&self, alphabet: &Alphabet) -> Vec<String> {
        let mut out = vec![
            format!("max degree: {}", self.max_degree),
            format!("irreducible diwords: {}", self.irr.len()),
            format!("stated pattern: {STATED_PATTERN}"),
            format!("computed pattern: {COMPUTED_PATTERN}"),
            format!("no adjacent X letters: {}", self.no_adjacent_base),
            format!("Xt factor only with center on t: {}", self.xt_center_on_t),
            format!("all generators irreducible: {}", self.generators_present),
            format!("Irr matches computed pattern: {}", self.matches_computed_pattern),
        ];
        for (shape, ds) in &self.groups {
            let first: Vec<String> = ds.iter().take(4).map(|d| d.display(alphabet).to_string()).collect();
            out.push(format!("shape {shape}: {} e.g. {}", ds.len(), first.join(", ")));
        }
        out
    }
}

fn require_certified(p: &HnnPresentation, exec: Execution) -> Result<()> {
    if p.relations.is_certified() {
        return Ok(());
    }
    let report = gsb_check(
        &p.relations,
        &GsbOptions {
            exec,
            ..Default::default()
        },
    );
    if report.pass {
        Ok(())
    } else {
        Err(Error::NotCertified)
    }
}

fn xt_positions(d: &Diword, stable: Letter) -> Vec<usize> {
    let w = d.word();
    (1..w.len())
        .filter(|&i| w[i - 1] != stable && w[i] == stable)
        .map(|i| i + 1)
        .collect()
}

fn fits_computed_pattern(d: &Diword, stable: Letter) -> bool {
    let w = d.word();
    let adjacent = w.windows(2).any(|p| p[0] != stable && p[1] != stable);
    let xt = xt_positions(d, stable);
    !adjacent && xt.iter().all(|&c| c == d.center())
}

/// Enumerates `Irr` up to `max_degree` grouped by shape and checks the
/// structural facts of the normal form against the stated pattern.
pub fn normal_form_report(p: &HnnPresentation, max_degree: usize, exec: Execution) -> Result<NormalFormReport> {
    require_certified(p, exec)?;
    let t = p.stable_letter;
    let irr = irr_enumerate(&p.relations, max_degree, exec);
    let mut groups: BTreeMap<String, Vec<Diword>> = BTreeMap::new();
    for d in &irr {
        groups.entry(shape(d, t)).or_default().push(d.clone());
    }
    let no_adjacent_base = irr.iter().all(|d| !d.word().windows(2).any(|w| w[0] != t && w[1] != t));
    let xt_center_on_t = irr.iter().all(|d| xt_positions(d, t).iter().all(|&c| c == d.center()));
    let generators_present = p
        .base_letters()
        .all(|g| is_irreducible(&Diword::letter(g), &p.relations));
    let predicted: BTreeSet<Diword> = (1..=max_degree)
        .flat_map(|n| crate::word::words_of_length(&p.alphabet, n))
        .flat_map(|w| {
            let n = w.len();
            (1..=n).map(move |c| Diword::new(w.clone(), c).expect("center in range"))
        })
        .filter(|d| fits_computed_pattern(d, t))
        .collect();
    let matches_computed_pattern = predicted == irr.iter().cloned().collect();
    Ok(NormalFormReport {
        max_degree,
        irr,
        groups,
        no_adjacent_base,
        xt_center_on_t,
        generators_present,
        matches_computed_pattern,
    })
}

/// Whether every base generator stays irreducible, so that the base
/// dialgebra embeds in the extension.
pub fn embedding_check(p: &HnnPresentation, exec: Execution) -> Result<bool> {
    require_certified(p, exec)?;
    Ok(p.base_letters()
        .all(|g| is_irreducible(&Diword::letter(g), &p.relations)))
}

impl fmt::Display for HnnPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.alphabet.names().iter().map(String::as_str).collect();
        writeln!(f, "generators: {}", names.join(" < "))?;
        for r in self.relations.relations() {
            writeln!(f, "relation {}: {}", r.id(), r.poly().display(&self.alphabet))?;
        }
        Ok(())
    }
}
