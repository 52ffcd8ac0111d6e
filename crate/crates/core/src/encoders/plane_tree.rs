use super::finish;
use crate::error::Result;
use crate::relations::{CatalanPair, Relation};
use crate::structures::PlaneTree;

/// Non-root nodes labeled in preorder. `x S y` when `x` is a proper
/// descendant of `y`; `x R y` when neither is an ancestor of the other and
/// `x` comes first.
pub fn encode_plane_tree(t: &PlaneTree) -> Result<CatalanPair> {
    // Preorder interval [start, end] of every non-root node.
    let mut spans = Vec::new();
    fn walk(node: &PlaneTree, spans: &mut Vec<(usize, usize)>) {
        for child in &node.children {
            let k = spans.len();
            spans.push((k, k));
            walk(child, spans);
            spans[k].1 = spans.len() - 1;
        }
    }
    walk(t, &mut spans);
    let n = spans.len();
    let descendant = |x: usize, y: usize| spans[y].0 < spans[x].0 && spans[x].0 <= spans[y].1;
    let s = Relation::from_fn(n, descendant);
    let r = Relation::from_fn(n, |x, y| x < y && !descendant(y, x) && !descendant(x, y));
    finish("plane-tree", s, r)
}
