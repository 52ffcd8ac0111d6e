//! Value types for the Catalan families, with validation, text forms and
//! exhaustive generators.
//!
//! Every `enumerate` returns all values of a size sorted by their text form.

mod dyck;
mod matching;
mod permutation;
mod plane_tree;
mod seq1;
mod seq2;
mod staircase;

pub use dyck::{DyckPath, Step};
pub use matching::NoncrossingMatching;
pub use permutation::{Pattern, Permutation};
pub use plane_tree::PlaneTree;
pub use seq1::Seq1;
pub use seq2::Seq2;
pub use staircase::StaircaseTiling;

use crate::error::{Error, Result};

/// Space-separated positive integers; error positions are byte offsets.
pub(crate) fn parse_int_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for chunk in text.split(' ') {
        if !chunk.is_empty() {
            let v = chunk
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::parse(offset, format!("expected an integer, found {chunk:?}")))?;
            out.push(v);
        }
        offset += chunk.len() + 1;
    }
    Ok(out)
}

pub(crate) fn join_ints(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn sort_by_text<T: ToString>(mut values: Vec<T>) -> Vec<T> {
    values.sort_by_cached_key(|v| v.to_string());
    values
}
