//! A three-operation grammar for families without the `x·A·B`
//! decomposition: binary trees and parallelogram polyominoes.
//!
//! The three operations, in terms of the pair built on the new element `x`:
//!
//! * right-only `(x, A)`: `S = S_A`, `R = R_A ∪ {(x, a)}`
//! * left-only `(B, x)`: `S = S_B ∪ {(b, x)}`, `R = R_B`
//! * both `(C, x, D)`: `S = S_C ∪ S_D ∪ {(c, x)}`,
//!   `R = R_C ∪ R_D ∪ {(c, d)} ∪ {(x, d)}`
//!
//! Ground sets are laid out left to right in the order written above.

mod polyomino;

pub use polyomino::{LatticeStep, ParallelogramPolyomino};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relations::{decompose_pair, CatalanPair, DecompTree, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GrammarTree {
    /// Size zero; never a child.
    Empty,
    /// The single cell.
    Cell,
    /// Operation 1 applied to a nonempty `A`.
    RightOnly(Box<GrammarTree>),
    /// Operation 2 applied to a nonempty `B`.
    LeftOnly(Box<GrammarTree>),
    /// Operation 3 applied to nonempty `C` and `D`.
    Both(Box<GrammarTree>, Box<GrammarTree>),
}

impl GrammarTree {
    pub fn size(&self) -> usize {
        match self {
            GrammarTree::Empty => 0,
            GrammarTree::Cell => 1,
            GrammarTree::RightOnly(t) | GrammarTree::LeftOnly(t) => 1 + t.size(),
            GrammarTree::Both(c, d) => 1 + c.size() + d.size(),
        }
    }

    /// Children must be nonempty.
    pub fn check(&self) -> std::result::Result<(), String> {
        fn child(t: &GrammarTree) -> std::result::Result<(), String> {
            if *t == GrammarTree::Empty {
                return Err("operation applied to an empty structure".into());
            }
            t.check()
        }
        match self {
            GrammarTree::Empty | GrammarTree::Cell => Ok(()),
            GrammarTree::RightOnly(t) | GrammarTree::LeftOnly(t) => child(t),
            GrammarTree::Both(c, d) => child(c).and_then(|_| child(d)),
        }
    }

    /// The binary-tree reading: right-only is a node with only a right
    /// child, left-only one with only a left child.
    pub fn to_shape(&self) -> DecompTree {
        use DecompTree as T;
        match self {
            GrammarTree::Empty => T::Empty,
            GrammarTree::Cell => T::leaf(),
            GrammarTree::RightOnly(a) => T::node(T::Empty, a.to_shape()),
            GrammarTree::LeftOnly(b) => T::node(b.to_shape(), T::Empty),
            GrammarTree::Both(c, d) => T::node(c.to_shape(), d.to_shape()),
        }
    }

    pub fn from_shape(shape: &DecompTree) -> GrammarTree {
        let DecompTree::Node(l, r) = shape else {
            return GrammarTree::Empty;
        };
        match (l.is_empty(), r.is_empty()) {
            (true, true) => GrammarTree::Cell,
            (true, false) => GrammarTree::RightOnly(Box::new(Self::from_shape(r))),
            (false, true) => GrammarTree::LeftOnly(Box::new(Self::from_shape(l))),
            (false, false) => GrammarTree::Both(Box::new(Self::from_shape(l)), Box::new(Self::from_shape(r))),
        }
    }

    pub fn enumerate(n: usize) -> Vec<GrammarTree> {
        DecompTree::enumerate(n).iter().map(GrammarTree::from_shape).collect()
    }
}

impl fmt::Display for GrammarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_shape().fmt(f)
    }
}

impl FromStr for GrammarTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GrammarTree::from_shape(&s.parse()?))
    }
}

/// Builds the pair of a grammar tree straight from the three operation rules.
pub fn grammar_pair(t: &GrammarTree) -> Result<CatalanPair> {
    t.check().map_err(Error::Validation)?;
    let (s, r) = relations(t);
    CatalanPair::new(s, r).map_err(|e| Error::Invariant(format!("grammar pair: {e}")))
}

fn relations(t: &GrammarTree) -> (Relation, Relation) {
    match t {
        GrammarTree::Empty => (Relation::empty(0), Relation::empty(0)),
        GrammarTree::Cell => (Relation::empty(1), Relation::empty(1)),
        GrammarTree::RightOnly(a) => {
            let (sa, ra) = relations(a);
            let n = sa.n() + 1;
            let s = sa.embed(n, 1);
            let mut r = ra.embed(n, 1);
            r.insert_all((1..n).map(|a| (0, a)));
            (s, r)
        }
        GrammarTree::LeftOnly(b) => {
            let (sb, rb) = relations(b);
            let n = sb.n() + 1;
            let x = n - 1;
            let mut s = sb.embed(n, 0);
            s.insert_all((0..x).map(|b| (b, x)));
            (s, rb.embed(n, 0))
        }
        GrammarTree::Both(c, d) => {
            let (sc, rc) = relations(c);
            let (sd, rd) = relations(d);
            let x = sc.n();
            let n = x + 1 + sd.n();
            let mut s = sc.embed(n, 0).union(&sd.embed(n, x + 1)).expect("same size");
            let mut r = rc.embed(n, 0).union(&rd.embed(n, x + 1)).expect("same size");
            s.insert_all((0..x).map(|c| (c, x)));
            r.insert_all((0..x).flat_map(|c| (x + 1..n).map(move |d| (c, d))));
            r.insert_all((x + 1..n).map(|d| (x, d)));
            (s, r)
        }
    }
}

/// Recovers the last operation from the pair: with `x` the element having
/// no `S`-successor and no `R`-predecessor, `{c : c S x}` and `{d : x R d}`
/// decide which of the three operations (or the single cell) applies.
pub fn grammar_decompose(pair: &CatalanPair) -> Result<GrammarTree> {
    if pair.size() == 0 {
        return Ok(GrammarTree::Empty);
    }
    let d = decompose_pair(pair)?;
    let sub = |p: &CatalanPair| grammar_decompose(p).map(Box::new);
    Ok(match (d.a.size(), d.b.size()) {
        (0, 0) => GrammarTree::Cell,
        (0, _) => GrammarTree::RightOnly(sub(&d.b)?),
        (_, 0) => GrammarTree::LeftOnly(sub(&d.a)?),
        _ => GrammarTree::Both(sub(&d.a)?, sub(&d.b)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell() -> Box<GrammarTree> {
        Box::new(GrammarTree::Cell)
    }

    #[test]
    fn single_operations() {
        let cell_pair = grammar_pair(&GrammarTree::Cell).unwrap();
        assert_eq!(cell_pair, CatalanPair::singleton());

        let op1 = grammar_pair(&GrammarTree::RightOnly(cell())).unwrap();
        assert!(op1.s().is_empty());
        assert_eq!(op1.r().pairs().collect::<Vec<_>>(), vec![(0, 1)]);

        let op2 = grammar_pair(&GrammarTree::LeftOnly(cell())).unwrap();
        assert_eq!(op2.s().pairs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert!(op2.r().is_empty());
    }

    #[test]
    fn decompose_small() {
        assert_eq!(grammar_decompose(&CatalanPair::singleton()).unwrap(), GrammarTree::Cell);
        let p = CatalanPair::from_pairs(2, [(0, 1)], []).unwrap();
        assert_eq!(grammar_decompose(&p).unwrap(), GrammarTree::LeftOnly(cell()));
    }

    #[test]
    fn rejects_empty_children() {
        let bad = GrammarTree::Both(cell(), Box::new(GrammarTree::Empty));
        assert!(matches!(grammar_pair(&bad), Err(Error::Validation(_))));
    }

    #[test]
    fn text_form_infers_operation() {
        let t: GrammarTree = "(e,((e,e),e))".parse().unwrap();
        assert_eq!(t, GrammarTree::RightOnly(Box::new(GrammarTree::LeftOnly(cell()))));
        assert_eq!(t.to_string(), "(e,((e,e),e))");
        assert_eq!(t.size(), 3);
    }
}
