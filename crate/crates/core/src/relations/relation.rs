use std::fmt;

use crate::error::{Error, Result};

/// A finite irreflexive binary relation on the labels `0..n`.
///
/// Stored as a dense `n * n` incidence bitset, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: vec![0; (n * n).div_ceil(64)] }
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rel = Relation::empty(n);
        for (i, j) in pairs {
            for label in [i, j] {
                if label >= n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
            }
            if i == j {
                return Err(Error::Reflexive(i));
            }
            rel.set(i, j);
        }
        Ok(rel)
    }

    /// Builds a relation from a predicate; the diagonal is never queried.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut rel = Relation::empty(n);
        for i in 0..n {
            for j in 0..n {
                if i != j && f(i, j) {
                    rel.set(i, j);
                }
            }
        }
        rel
    }

    fn set(&mut self, i: usize, j: usize) {
        let k = i * self.n + j;
        self.bits[k / 64] |= 1 << (k % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        if i >= self.n || j >= self.n {
            return false;
        }
        let k = i * self.n + j;
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Number of ordered pairs in the relation.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (0..n).filter(move |&j| self.contains(i, j)).map(move |j| (i, j)))
    }

    pub fn inverse(&self) -> Relation {
        Relation::from_fn(self.n, |i, j| self.contains(j, i))
    }

    /// `θ ∪ θ⁻¹`
    pub fn symmetrization(&self) -> Relation {
        Relation::from_fn(self.n, |i, j| self.contains(i, j) || self.contains(j, i))
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        let bits = self.bits.iter().zip(&other.bits).map(|(a, b)| a | b).collect();
        Ok(Relation { n: self.n, bits })
    }

    /// Lexicographically first transitivity failure `(i, j, k)`: `i~j`, `j~k` but not `i~k`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                if !self.contains(i, j) {
                    continue;
                }
                for k in 0..n {
                    if self.contains(j, k) && !self.contains(i, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Irreflexive and transitive. Irreflexivity holds by construction.
    pub fn is_strict_order(&self) -> bool {
        (0..self.n).all(|i| !self.contains(i, i)) && self.transitivity_witness().is_none()
    }

    /// Renames every label `l` to `map[l]`; `map` must be a permutation of `0..n`.
    pub fn relabel(&self, map: &[usize]) -> Relation {
        assert_eq!(map.len(), self.n, "relabeling has wrong length");
        let mut out = Relation::empty(self.n);
        for (i, j) in self.pairs() {
            out.set(map[i], map[j]);
        }
        out
    }

    /// Restriction to `labels`, renumbered `0..labels.len()` in the given order.
    pub fn restrict(&self, labels: &[usize]) -> Relation {
        Relation::from_fn(labels.len(), |a, b| self.contains(labels[a], labels[b]))
    }

    /// Places `self` at offset `shift` inside a ground set of size `n`.
    pub(crate) fn embed(&self, n: usize, shift: usize) -> Relation {
        let mut out = Relation::empty(n);
        for (i, j) in self.pairs() {
            out.set(i + shift, j + shift);
        }
        out
    }

    pub(crate) fn insert_all(&mut self, pairs: impl IntoIterator<Item = (usize, usize)>) {
        for (i, j) in pairs {
            debug_assert!(i != j && i < self.n && j < self.n);
            self.set(i, j);
        }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, ", self.n)?;
        f.debug_set().entries(self.pairs()).finish()?;
        write!(f, ")")
    }
}
