//! Structure to Catalan-pair constructions. Each encoder labels the ground
//! set in a fixed structural order, documented per function.

mod arches;
mod perm;
mod plane_tree;
mod sequences;
mod staircase;

pub use arches::{encode_dyck, encode_matching, encode_matching_recursive};
pub use perm::{
    encode_perm_312, encode_perm_321, pair_for_avoidance_class, perm_321_relations, stack_order, Point,
    PointSet321,
};
pub use plane_tree::encode_plane_tree;
pub use sequences::{encode_seq1, encode_seq2};
pub use staircase::encode_staircase;

use crate::error::{Error, Result};
use crate::relations::{CatalanPair, Relation};

/// Wraps constructed relations, turning an axiom failure into an invariant error.
pub(crate) fn finish(what: &str, s: Relation, r: Relation) -> Result<CatalanPair> {
    CatalanPair::new(s, r).map_err(|e| match e {
        Error::InvalidPair(report) => {
            Error::Invariant(format!("{what} encoder produced an invalid pair: {report}"))
        }
        other => other,
    })
}
