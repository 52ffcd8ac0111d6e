use super::{check_axioms, Relation};
use crate::error::{Error, Result};

/// Two relations `(S, R)` on a shared ground set satisfying axioms (i)-(iv).
///
/// Values of this type are always valid: every public constructor runs
/// [`check_axioms`] and the internal ones preserve the axioms by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanPair {
    s: Relation,
    r: Relation,
}

/// Result of splitting a pair at its decomposition element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    /// The element with no `S`-successor and no `R`-predecessor.
    pub x: usize,
    /// Labels of `{a : a S x}` in increasing order, i.e. the ground set of `a`.
    pub a_labels: Vec<usize>,
    /// Labels of `{b : x R b}` in increasing order.
    pub b_labels: Vec<usize>,
    pub a: CatalanPair,
    pub b: CatalanPair,
}

impl CatalanPair {
    pub fn new(s: Relation, r: Relation) -> Result<Self> {
        let report = check_axioms(&s, &r)?;
        if !report.valid() {
            return Err(Error::InvalidPair(Box::new(report)));
        }
        Ok(CatalanPair { s, r })
    }

    pub(crate) fn new_unchecked(s: Relation, r: Relation) -> Self {
        debug_assert!(check_axioms(&s, &r).map(|rep| rep.valid()).unwrap_or(false));
        CatalanPair { s, r }
    }

    pub fn from_pairs(
        n: usize,
        s: impl IntoIterator<Item = (usize, usize)>,
        r: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        CatalanPair::new(Relation::from_pairs(n, s)?, Relation::from_pairs(n, r)?)
    }

    pub fn empty() -> Self {
        CatalanPair { s: Relation::empty(0), r: Relation::empty(0) }
    }

    pub fn singleton() -> Self {
        CatalanPair { s: Relation::empty(1), r: Relation::empty(1) }
    }

    pub fn size(&self) -> usize {
        self.s.n()
    }

    pub fn s(&self) -> &Relation {
        &self.s
    }

    pub fn r(&self) -> &Relation {
        &self.r
    }

    pub fn into_relations(self) -> (Relation, Relation) {
        (self.s, self.r)
    }

    /// Renames label `l` to `map[l]`.
    pub fn relabel(&self, map: &[usize]) -> CatalanPair {
        CatalanPair { s: self.s.relabel(map), r: self.r.relabel(map) }
    }

    /// Restriction to a subset of labels. Any restriction of a Catalan pair
    /// is again a Catalan pair, since all four axioms are universal.
    pub fn restrict(&self, labels: &[usize]) -> CatalanPair {
        CatalanPair { s: self.s.restrict(labels), r: self.r.restrict(labels) }
    }

    /// Labels with no `S`-successor and no `R`-predecessor.
    pub fn decomposition_candidates(&self) -> Vec<usize> {
        let n = self.size();
        (0..n).filter(|&x| (0..n).all(|y| !self.s.contains(x, y) && !self.r.contains(y, x))).collect()
    }

    pub fn decompose(&self) -> Result<Decomposition> {
        decompose_pair(self)
    }
}

/// Joins `a`, a new element `x` and `b` into one pair. The labels are laid
/// out as `[a-block | x | b-block]`; `S` gains `(a, x)` for every `a` and `R`
/// gains `(a, b)` and `(x, b)` for every `a`, `b`.
pub fn compose_pair(a: &CatalanPair, b: &CatalanPair) -> CatalanPair {
    let (na, nb) = (a.size(), b.size());
    let n = na + nb + 1;
    let x = na;
    let mut s = a.s.embed(n, 0).union(&b.s.embed(n, x + 1)).expect("same size");
    let mut r = a.r.embed(n, 0).union(&b.r.embed(n, x + 1)).expect("same size");
    s.insert_all((0..na).map(|i| (i, x)));
    r.insert_all((0..na).flat_map(|i| (x + 1..n).map(move |j| (i, j))));
    r.insert_all((x + 1..n).map(|j| (x, j)));
    CatalanPair::new_unchecked(s, r)
}

/// Inverse of [`compose_pair`] up to relabeling: finds `x`, and restricts the
/// pair to `{a : a S x}` and `{b : x R b}`.
pub fn decompose_pair(pair: &CatalanPair) -> Result<Decomposition> {
    let n = pair.size();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let candidates = pair.decomposition_candidates();
    let x = match candidates.as_slice() {
        [x] => *x,
        [] => return Err(Error::Invariant("no element without S-successor and R-predecessor".into())),
        many => {
            return Err(Error::Invariant(format!(
                "{} elements without S-successor and R-predecessor",
                many.len()
            )))
        }
    };
    let a_labels: Vec<usize> = (0..n).filter(|&a| pair.s.contains(a, x)).collect();
    let b_labels: Vec<usize> = (0..n).filter(|&b| pair.r.contains(x, b)).collect();
    if a_labels.len() + b_labels.len() + 1 != n {
        return Err(Error::Invariant(format!(
            "decomposition of size {n} does not partition: |A|={}, |B|={}",
            a_labels.len(),
            b_labels.len()
        )));
    }
    Ok(Decomposition { x, a: pair.restrict(&a_labels), b: pair.restrict(&b_labels), a_labels, b_labels })
}
