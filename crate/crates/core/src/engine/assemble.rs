use crate::relations::DecompTree;
use crate::structures::{DyckPath, NoncrossingMatching, Permutation, PlaneTree, Seq1, StaircaseTiling, Step};

/// `U A D B`.
pub fn assemble_dyck(t: &DecompTree) -> DyckPath {
    fn go(t: &DecompTree, out: &mut Vec<Step>) {
        if let DecompTree::Node(a, b) = t {
            out.push(Step::U);
            go(a, out);
            out.push(Step::D);
            go(b, out);
        }
    }
    let mut steps = Vec::with_capacity(2 * t.size());
    go(t, &mut steps);
    DyckPath::new(steps).expect("assembled word is balanced")
}

/// First arch around `A`, then `B`.
pub fn assemble_matching(t: &DecompTree) -> NoncrossingMatching {
    fn go(t: &DecompTree, offset: usize, out: &mut Vec<(usize, usize)>) {
        if let DecompTree::Node(a, b) = t {
            let close = offset + 2 * a.size() + 2;
            out.push((offset + 1, close));
            go(a, offset + 1, out);
            go(b, close, out);
        }
    }
    let mut arches = Vec::with_capacity(t.size());
    go(t, 0, &mut arches);
    NoncrossingMatching::new(arches).expect("assembled arches are noncrossing")
}

/// The first child of the root carries `A`; `B`'s root children follow.
pub fn assemble_plane_tree(t: &DecompTree) -> PlaneTree {
    match t {
        DecompTree::Empty => PlaneTree::leaf(),
        DecompTree::Node(a, b) => {
            let mut children = vec![assemble_plane_tree(a)];
            children.extend(assemble_plane_tree(b).children);
            PlaneTree::with_children(children)
        }
    }
}

/// `[A + 1] 1 [B + |A| + 1]`. Positions line up with the labels of
/// `tree_to_pair`, so the inversion pair equals it exactly.
pub fn assemble_perm_312(t: &DecompTree) -> Permutation {
    fn go(t: &DecompTree, base: usize, out: &mut Vec<usize>) {
        if let DecompTree::Node(a, b) = t {
            let na = a.size();
            go(a, base + 1, out);
            out.push(base + 1);
            go(b, base + na + 1, out);
        }
    }
    let mut values = Vec::with_capacity(t.size());
    go(t, 0, &mut values);
    Permutation::new(values).expect("assembled values form a permutation")
}

/// `a_1 = |A| + 1`, then `A` shifted by 1, then `B` shifted by `|A| + 1`.
pub fn assemble_seq1(t: &DecompTree) -> Seq1 {
    fn go(t: &DecompTree, base: usize, out: &mut Vec<usize>) {
        if let DecompTree::Node(a, b) = t {
            let na = a.size();
            out.push(base + na + 1);
            go(a, base + 1, out);
            go(b, base + na + 1, out);
        }
    }
    let mut values = Vec::with_capacity(t.size());
    go(t, 0, &mut values);
    Seq1::from_values_unchecked(values)
}

/// The `A` part goes below the junction rectangle, `B` to its right.
pub fn assemble_staircase(t: &DecompTree) -> StaircaseTiling {
    match t {
        DecompTree::Empty => StaircaseTiling::Empty,
        DecompTree::Node(a, b) => StaircaseTiling::node(assemble_staircase(b), assemble_staircase(a)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_tree() -> DecompTree {
        "((e,e),(e,(((e,e),(e,e)),e)))".parse().unwrap()
    }

    #[test]
    fn example_tree_assemblies() {
        let t = example_tree();
        assert_eq!(assemble_plane_tree(&t).to_string(), "(())()((())())");
        assert_eq!(assemble_matching(&t).to_string(), "1-4 2-3 5-6 7-14 8-11 9-10 12-13");
        assert_eq!(assemble_dyck(&t).to_string(), "UUDDUDUUUDDUDD");
    }

    #[test]
    fn single_node() {
        let t = DecompTree::leaf();
        assert_eq!(assemble_dyck(&t).to_string(), "UD");
        assert_eq!(assemble_perm_312(&t).values(), &[1]);
        assert_eq!(assemble_seq1(&t).values(), &[1]);
    }

    #[test]
    fn size_two() {
        let left = DecompTree::node(DecompTree::leaf(), DecompTree::Empty);
        let right = DecompTree::node(DecompTree::Empty, DecompTree::leaf());
        assert_eq!(assemble_perm_312(&left).values(), &[2, 1]);
        assert_eq!(assemble_perm_312(&right).values(), &[1, 2]);
        assert_eq!(assemble_seq1(&left).values(), &[2, 2]);
        assert_eq!(assemble_seq1(&right).values(), &[1, 2]);
    }
}
