//! Catalan pairs: pairs of strict orders `(S, R)` on a finite set that
//! behave like a shared coordinate system for Catalan families.
//!
//! Each family in [`structures`] (plus the grammar-based ones in [`grammar`])
//! has an encoder into [`CatalanPair`]; [`engine`] decodes pairs back and
//! converts between families by way of the canonical pair.

pub mod cli;
pub mod encoders;
pub mod engine;
pub mod error;
pub mod grammar;
pub mod pairfile;
pub mod relations;
pub mod structures;

pub use engine::{convert, decode, reference_decode, Converter, FamilyTag, StructureValue};
pub use error::{Error, Result};
pub use relations::{
    canonicalize, catalan, check_axioms, compose_pair, decompose_pair, pair_to_tree, tree_to_pair,
    CanonicalPair, CatalanPair, DecompTree, Relation,
};
