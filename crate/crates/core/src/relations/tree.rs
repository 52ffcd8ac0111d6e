use std::fmt;
use std::str::FromStr;

use super::{compose_pair, decompose_pair, CatalanPair};
use crate::error::{Error, Result};

/// The generic recursive decomposition `C = ε + x·C×C`: a node is the unit
/// element `x` with its two sub-objects `A` and `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecompTree {
    Empty,
    Node(Box<DecompTree>, Box<DecompTree>),
}

impl DecompTree {
    pub fn node(a: DecompTree, b: DecompTree) -> Self {
        DecompTree::Node(Box::new(a), Box::new(b))
    }

    pub fn leaf() -> Self {
        DecompTree::node(DecompTree::Empty, DecompTree::Empty)
    }

    pub fn size(&self) -> usize {
        match self {
            DecompTree::Empty => 0,
            DecompTree::Node(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, DecompTree::Empty)
    }

    /// All trees with `n` nodes, sorted by their text form.
    pub fn enumerate(n: usize) -> Vec<DecompTree> {
        let mut out = shapes(n);
        out.sort_by_cached_key(|t| t.to_string());
        out
    }
}

fn shapes(n: usize) -> Vec<DecompTree> {
    if n == 0 {
        return vec![DecompTree::Empty];
    }
    let mut out = Vec::new();
    for k in 0..n {
        let lefts = shapes(k);
        let rights = shapes(n - 1 - k);
        for a in &lefts {
            for b in &rights {
                out.push(DecompTree::node(a.clone(), b.clone()));
            }
        }
    }
    out
}

impl fmt::Display for DecompTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompTree::Empty => write!(f, "e"),
            DecompTree::Node(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl FromStr for DecompTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let tree = parse_shape(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::parse(pos, "trailing input after tree"));
        }
        Ok(tree)
    }
}

// shape := 'e' | '(' shape ',' shape ')'
fn parse_shape(bytes: &[u8], pos: &mut usize) -> Result<DecompTree> {
    match bytes.get(*pos) {
        Some(b'e') => {
            *pos += 1;
            Ok(DecompTree::Empty)
        }
        Some(b'(') => {
            *pos += 1;
            let a = parse_shape(bytes, pos)?;
            expect(bytes, pos, b',')?;
            let b = parse_shape(bytes, pos)?;
            expect(bytes, pos, b')')?;
            Ok(DecompTree::node(a, b))
        }
        Some(_) => Err(Error::parse(*pos, "expected 'e' or '('")),
        None => Err(Error::parse(*pos, "unexpected end of tree")),
    }
}

fn expect(bytes: &[u8], pos: &mut usize, want: u8) -> Result<()> {
    if bytes.get(*pos) == Some(&want) {
        *pos += 1;
        Ok(())
    } else {
        Err(Error::parse(*pos, format!("expected '{}'", want as char)))
    }
}

/// Folds [`compose_pair`] over the tree.
pub fn tree_to_pair(tree: &DecompTree) -> CatalanPair {
    match tree {
        DecompTree::Empty => CatalanPair::empty(),
        DecompTree::Node(a, b) => compose_pair(&tree_to_pair(a), &tree_to_pair(b)),
    }
}

/// Recursively applies [`decompose_pair`].
pub fn pair_to_tree(pair: &CatalanPair) -> Result<DecompTree> {
    if pair.size() == 0 {
        return Ok(DecompTree::Empty);
    }
    let d = decompose_pair(pair)?;
    Ok(DecompTree::node(pair_to_tree(&d.a)?, pair_to_tree(&d.b)?))
}
