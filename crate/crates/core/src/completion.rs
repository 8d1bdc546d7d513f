//! Critical-pair completion of a relation set.
//!
//! Each round evaluates the strict compositions that involve at least one
//! relation added since the previous round. Candidates are processed by
//! increasing ambient diword. Every nonzero remainder is monicized and
//! appended at once. Saturation is followed by interreduction and a full
//! certification pass. A failing pass starts another round if the iteration
//! budget allows.

use std::collections::HashSet;
use std::sync::Arc;

use crate::composition::{
    gsb_check, multiplication_compositions, pair_compositions, Composition, GsbOptions, GsbReport,
};
use crate::exec::Execution;
use crate::poly::DiPolynomial;
use crate::rewriting::{reduce, ReductionTrace, Relation, RelationSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionConfig {
    /// Largest word length allowed for compositions and new relations.
    pub max_degree: usize,
    pub max_iterations: usize,
    pub max_right_len: usize,
    pub extended: bool,
    pub exec: Execution,
}

impl Default for CompletionConfig {
    fn default() -> Self {
        CompletionConfig {
            max_degree: 6,
            max_iterations: 16,
            max_right_len: 1,
            extended: false,
            exec: Execution::default(),
        }
    }
}

/// A relation produced by completion, with the composition it came from and
/// the reduction that turned the composition into it.
#[derive(Debug, Clone)]
pub struct AddedRelation {
    pub relation: Arc<Relation>,
    pub origin: Composition,
    pub trace: ReductionTrace,
    /// The remainder before monicization: `origin.value − trace.replay()`.
    pub remainder: DiPolynomial,
}

/// A rewrite applied to an existing relation during interreduction.
#[derive(Debug, Clone)]
pub struct Interreduction {
    pub id: String,
    pub before: DiPolynomial,
    /// Against the basis at that moment, minus the relation itself.
    pub trace: ReductionTrace,
    /// `None` when the relation reduced to zero and was dropped.
    pub after: Option<Arc<Relation>>,
}

#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub basis: RelationSet,
    pub certified: bool,
    pub added: Vec<AddedRelation>,
    pub interreductions: Vec<Interreduction>,
    pub exhausted: bool,
    pub iterations: usize,
    /// Compositions or remainders left out because they exceeded `max_degree`.
    pub skipped: usize,
    pub report: Option<GsbReport>,
}

pub fn shirshov_complete(input: &RelationSet, cfg: &CompletionConfig) -> CompletionResult {
    let mut basis = input.clone();
    let mut added = Vec::new();
    let mut interreductions = Vec::new();
    let mut skipped = 0usize;
    let mut iterations = 0usize;
    let mut report = None;
    let mut certified = false;
    // relations[..seen] have already been paired with each other
    let mut seen = 0usize;
    let mut counter = 0usize;
    let options = GsbOptions {
        extended: cfg.extended,
        max_right_len: cfg.max_right_len,
        exec: cfg.exec,
    };

    while iterations < cfg.max_iterations {
        iterations += 1;
        let mut candidates = fresh_compositions(&basis, seen, cfg);
        candidates.sort_by(|a, b| a.ambient.cmp(&b.ambient));
        seen = basis.len();

        let mut grew = false;
        for cand in candidates {
            if cand.ambient.len() > cfg.max_degree {
                skipped += 1;
                continue;
            }
            let red = reduce(&cand.value, &basis);
            if red.normal_form.is_zero() {
                continue;
            }
            if red.normal_form.degree() > cfg.max_degree {
                skipped += 1;
                continue;
            }
            counter += 1;
            let id = format!("c{counter}");
            let Ok(rel) = Relation::new(id, &red.normal_form, basis.ordering()) else {
                continue;
            };
            let rel = Arc::new(rel);
            basis.push_arc(rel.clone());
            added.push(AddedRelation {
                relation: rel,
                origin: cand,
                trace: red.trace,
                remainder: red.normal_form,
            });
            grew = true;
        }
        if grew {
            continue;
        }
        if skipped > 0 {
            break;
        }
        interreduce(&mut basis, &mut interreductions);
        let r = gsb_check(&basis, &options);
        certified = r.pass;
        report = Some(r);
        if certified {
            break;
        }
        // a failing pass after interreduction re-pairs everything
        seen = 0;
    }
    basis.set_certified(certified);
    CompletionResult {
        basis,
        certified,
        added,
        interreductions,
        exhausted: !certified,
        iterations,
        skipped,
        report,
    }
}

fn fresh_compositions(basis: &RelationSet, seen: usize, cfg: &CompletionConfig) -> Vec<Composition> {
    let rels = basis.relations();
    let alphabet = basis.alphabet();
    let mut out: Vec<Composition> = rels[seen..]
        .iter()
        .flat_map(|f| multiplication_compositions(f, alphabet, cfg.max_right_len))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..rels.len())
        .flat_map(|i| (0..rels.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| i >= seen || j >= seen)
        .collect();
    out.extend(
        cfg.exec
            .flat_map(&pairs, |&(i, j)| pair_compositions(&rels[i], &rels[j], alphabet, false)),
    );
    out
}

/// Reduces each relation against the others until nothing changes. Relations
/// reducing to zero are dropped. Returns whether anything changed.
pub fn interreduce(basis: &mut RelationSet, log: &mut Vec<Interreduction>) -> bool {
    let mut changed_any = false;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let rel = basis.relations()[i].clone();
            let others = basis.without(i);
            let red = reduce(rel.poly(), &others);
            if red.trace.is_empty() {
                i += 1;
                continue;
            }
            changed = true;
            if red.normal_form.is_zero() {
                log.push(Interreduction {
                    id: rel.id().to_string(),
                    before: rel.poly().clone(),
                    trace: red.trace,
                    after: None,
                });
                *basis = others;
                continue;
            }
            let new = Arc::new(Relation::new(rel.id(), &red.normal_form, basis.ordering()).expect("nonzero remainder"));
            log.push(Interreduction {
                id: rel.id().to_string(),
                before: rel.poly().clone(),
                trace: red.trace,
                after: Some(new.clone()),
            });
            let mut rebuilt = others;
            rebuilt.insert_arc(i, new);
            *basis = rebuilt;
            i += 1;
        }
        changed_any |= changed;
        if !changed {
            break;
        }
    }
    dedup(basis);
    changed_any
}

fn dedup(basis: &mut RelationSet) {
    let mut polys = HashSet::new();
    let mut i = 0;
    while i < basis.len() {
        if polys.insert(basis.relations()[i].poly().clone()) {
            i += 1;
        } else {
            *basis = basis.without(i);
        }
    }
}
