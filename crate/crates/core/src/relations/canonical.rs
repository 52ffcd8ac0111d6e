use std::ops::Deref;

use super::CatalanPair;
use crate::error::{Error, Result};

/// `i L j` iff `i R j` or `j S i`. On arch diagrams this orders arches by
/// their left endpoint.
pub fn derived_order(pair: &CatalanPair, i: usize, j: usize) -> bool {
    pair.r().contains(i, j) || pair.s().contains(j, i)
}

/// Labels sorted by the derived order `L`.
///
/// Fails if `L` is not a strict total order, which would indicate a pair
/// violating the axioms.
pub fn total_order(pair: &CatalanPair) -> Result<Vec<usize>> {
    let n = pair.size();
    let mut order: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let rank = (0..n).filter(|&j| derived_order(pair, j, i)).count();
        if order[rank].replace(i).is_some() {
            return Err(Error::Invariant(format!("derived order is not total at rank {rank}")));
        }
    }
    let order: Vec<usize> = order.into_iter().map(|l| l.expect("ranks form a permutation")).collect();
    for (a, &i) in order.iter().enumerate() {
        for &j in &order[a + 1..] {
            if !derived_order(pair, i, j) || derived_order(pair, j, i) {
                return Err(Error::Invariant(format!("derived order inconsistent on {{{i},{j}}}")));
            }
        }
    }
    Ok(order)
}

/// A pair relabeled so that the derived order is `0 < 1 < ... < n-1`.
///
/// Any isomorphism preserves `L`, so the relabeling is forced and equality
/// of canonical pairs decides isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPair(CatalanPair);

impl CanonicalPair {
    pub fn pair(&self) -> &CatalanPair {
        &self.0
    }

    pub fn into_pair(self) -> CatalanPair {
        self.0
    }

    pub fn is_canonical(pair: &CatalanPair) -> bool {
        let n = pair.size();
        (0..n).all(|i| (0..n).all(|j| i == j || derived_order(pair, i, j) == (i < j)))
    }
}

impl Deref for CanonicalPair {
    type Target = CatalanPair;

    fn deref(&self) -> &CatalanPair {
        &self.0
    }
}

pub fn canonicalize(pair: &CatalanPair) -> Result<CanonicalPair> {
    let order = total_order(pair)?;
    let mut rank = vec![0; order.len()];
    for (k, &label) in order.iter().enumerate() {
        rank[label] = k;
    }
    Ok(CanonicalPair(pair.relabel(&rank)))
}

pub fn is_isomorphic(p: &CatalanPair, q: &CatalanPair) -> Result<bool> {
    if p.size() != q.size() {
        return Ok(false);
    }
    Ok(canonicalize(p)? == canonicalize(q)?)
}
