use super::finish;
use crate::error::Result;
use crate::relations::{compose_pair, CatalanPair, Relation};
use crate::structures::{DyckPath, NoncrossingMatching};

/// Arches labeled by left endpoint. `x S y` when `x` is nested inside `y`,
/// `x R y` when `x` ends before `y` starts.
pub fn encode_matching(m: &NoncrossingMatching) -> Result<CatalanPair> {
    let arches = m.arches();
    let n = arches.len();
    let s = Relation::from_fn(n, |x, y| arches[y].0 < arches[x].0 && arches[x].1 < arches[y].1);
    let r = Relation::from_fn(n, |x, y| arches[x].1 < arches[y].0);
    finish("matching", s, r)
}

/// Tunnels labeled by their up step. `x S y` when tunnel `x` lies above
/// tunnel `y`, `x R y` when `x` is completely to the left of `y`.
pub fn encode_dyck(d: &DyckPath) -> Result<CatalanPair> {
    // (start, end, height) of each tunnel
    let mut heights = Vec::new();
    let mut h = 0usize;
    for step in d.steps() {
        if *step == crate::structures::Step::U {
            heights.push(h);
            h += 1;
        } else {
            h -= 1;
        }
    }
    let tunnels: Vec<(usize, usize, usize)> =
        d.tunnels().into_iter().zip(heights).map(|((u, v), h)| (u, v, h)).collect();
    let n = tunnels.len();
    let above = |x: usize, y: usize| {
        let (xs, xe, xh) = tunnels[x];
        let (ys, ye, yh) = tunnels[y];
        xh > yh && ys < xs && xe < ye
    };
    let s = Relation::from_fn(n, above);
    let r = Relation::from_fn(n, |x, y| tunnels[x].1 < tunnels[y].0);
    finish("dyck", s, r)
}

/// The same pair built by folding the first-arch decomposition: the first
/// arch is `x`, the arches under it form `A`, the arches after it form `B`.
pub fn encode_matching_recursive(m: &NoncrossingMatching) -> CatalanPair {
    fn go(arches: &[(usize, usize)]) -> CatalanPair {
        let Some(&(_, r)) = arches.first() else {
            return CatalanPair::empty();
        };
        let split = arches.iter().position(|&(l, _)| l > r).unwrap_or(arches.len());
        compose_pair(&go(&arches[1..split]), &go(&arches[split..]))
    }
    go(m.arches())
}
