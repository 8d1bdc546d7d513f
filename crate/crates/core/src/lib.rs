//! Computer algebra for free dialgebras.
//!
//! Normal diwords and exact-rational polynomials, the deg-lex-center ordering,
//! reduction modulo normal S-diwords, compositions with Gröbner–Shirshov
//! basis certification and completion, and the HNN-extension construction
//! for finite-dimensional dialgebras.

pub mod completion;
pub mod composition;
pub mod error;
pub mod exec;
pub mod hnn;
pub mod io;
pub mod ordering;
pub mod poly;
pub mod rewriting;
pub mod word;

pub use completion::{shirshov_complete, AddedRelation, CompletionConfig, CompletionResult};
pub use composition::{certify, gsb_check, Composition, CompositionKind, GsbOptions, GsbReport};
pub use error::{Error, Result};
pub use exec::Execution;
pub use hnn::{
    build_hnn_relations, derivation_check, embedding_check, normal_form_report, paper_instance, verify_paper_table,
    DialgebraData, HnnPresentation,
};
pub use io::{format_poly, parse_poly, parse_presentation, Presentation};
pub use ordering::{compare_diwords, is_strong, leading, make_monic, LeadingData, OrderingKind};
pub use poly::{Coeff, DiPolynomial};
pub use rewriting::{
    find_reduction, ideal_member, irr_enumerate, is_irreducible, p_set, reduce, reduce_by, Membership, Reduction,
    ReductionTrace, Relation, RelationSet, SDiwordPattern,
};
pub use word::{deglex_compare, Alphabet, Diword, Letter, Word};
