//! Relations, the Catalan-pair axioms, the generic compose/decompose step,
//! canonical forms and exhaustive enumeration.

mod axioms;
mod canonical;
mod enumerate;
mod pair;
mod relation;
mod tree;

pub use axioms::{check_axioms, Axiom, AxiomReport, Violation, Witness};
pub use canonical::{canonicalize, derived_order, is_isomorphic, total_order, CanonicalPair};
pub use enumerate::{catalan, enumerate_pairs};
pub use pair::{compose_pair, decompose_pair, CatalanPair, Decomposition};
pub use relation::Relation;
pub use tree::{pair_to_tree, tree_to_pair, DecompTree};
