use std::fmt;
use std::str::FromStr;

use super::sort_by_text;
use crate::error::{Error, Result};

/// An ordered rooted tree; its size is the number of edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn with_children(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn size(&self) -> usize {
        self.children.iter().map(|c| 1 + c.size()).sum()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::node_count).sum::<usize>()
    }

    /// Every plane tree is valid; kept for symmetry with the other families.
    pub fn check(&self) -> std::result::Result<(), String> {
        if self.size() + 1 != self.node_count() {
            return Err("edge count does not match node count".into());
        }
        Ok(())
    }

    pub fn enumerate(n: usize) -> Vec<PlaneTree> {
        sort_by_text(build(n))
    }
}

// First child carrying a subtree with k edges, then the remaining forest.
fn build(n: usize) -> Vec<PlaneTree> {
    if n == 0 {
        return vec![PlaneTree::leaf()];
    }
    let mut out = Vec::new();
    for k in 0..n {
        let firsts = build(k);
        let rests = build(n - 1 - k);
        for first in &firsts {
            for rest in &rests {
                let mut children = vec![first.clone()];
                children.extend(rest.children.iter().cloned());
                out.push(PlaneTree { children });
            }
        }
    }
    out
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for child in &self.children {
            write!(f, "({child})")?;
        }
        Ok(())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // Stack of partially built nodes; the bottom is the root.
        let mut stack = vec![PlaneTree::leaf()];
        for (i, c) in s.trim().chars().enumerate() {
            match c {
                '(' => stack.push(PlaneTree::leaf()),
                ')' => {
                    if stack.len() < 2 {
                        return Err(Error::parse(i, "unbalanced ')'"));
                    }
                    let done = stack.pop().expect("checked length");
                    stack.last_mut().expect("root").children.push(done);
                }
                other => return Err(Error::parse(i, format!("unexpected {other:?}"))),
            }
        }
        if stack.len() != 1 {
            return Err(Error::parse(s.trim().len(), "unclosed '('"));
        }
        Ok(stack.pop().expect("root"))
    }
}
