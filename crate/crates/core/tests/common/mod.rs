//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library code it is meant to check.

#![allow(dead_code)]

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use catalan_pairs::{tree_to_pair, CatalanPair, DecompTree, Relation};

/// `binom(2n, n) / (n + 1)`.
pub fn catalan_closed(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        // c = binom(n + k, k) built up step by step, exact at every step
        c = c * (n as u128 + k + 1) / (k + 1);
    }
    c / (n as u128 + 1)
}

pub fn matrix(r: &Relation) -> Vec<Vec<bool>> {
    let n = r.n();
    (0..n).map(|i| (0..n).map(|j| r.contains(i, j)).collect()).collect()
}

/// The four axioms, checked straight from their statements.
pub fn naive_is_catalan_pair(s: &[Vec<bool>], r: &[Vec<bool>]) -> bool {
    let n = s.len();
    let strict = |m: &[Vec<bool>]| {
        (0..n).all(|i| !m[i][i])
            && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(m[i][j] && m[j][k]) || m[i][k])))
    };
    if !strict(s) || !strict(r) {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let count = [s[i][j], r[i][j], s[j][i], r[j][i]].iter().filter(|b| **b).count();
            if count != 1 {
                return false;
            }
            if s[i][j] && (0..n).any(|k| r[j][k] && !r[i][k]) {
                return false;
            }
        }
    }
    true
}

/// Some bijection preserves both relations.
pub fn brute_isomorphic(p: &CatalanPair, q: &CatalanPair) -> bool {
    let n = p.size();
    if n != q.size() || p.s().len() != q.s().len() || p.r().len() != q.r().len() {
        return false;
    }
    (0..n).permutations(n).any(|xi| {
        p.s().pairs().all(|(i, j)| q.s().contains(xi[i], xi[j]))
            && p.r().pairs().all(|(i, j)| q.r().contains(xi[i], xi[j]))
    })
}

pub fn random_tree(rng: &mut impl Rng, n: usize) -> DecompTree {
    if n == 0 {
        return DecompTree::Empty;
    }
    let k = rng.gen_range(0..n);
    DecompTree::node(random_tree(rng, k), random_tree(rng, n - 1 - k))
}

pub fn shuffled(rng: &mut impl Rng, pair: &CatalanPair) -> CatalanPair {
    let mut map: Vec<usize> = (0..pair.size()).collect();
    map.shuffle(rng);
    pair.relabel(&map)
}

pub fn random_pair(rng: &mut impl Rng, n: usize) -> CatalanPair {
    let pair = tree_to_pair(&random_tree(rng, n));
    shuffled(rng, &pair)
}

pub fn contains_312_naive(v: &[usize]) -> bool {
    (0..v.len()).tuple_combinations().any(|(i, j, k)| v[j] < v[k] && v[k] < v[i])
}

/// Parallelogram polyominoes of semi-perimeter `n + 1`, counted by walking
/// every pair of `{E, N}` words of length `n + 1` and comparing the visited
/// lattice points.
pub fn polyomino_count(n: usize) -> usize {
    let len = n + 1;
    let walk = |w: usize| {
        let mut pts = vec![(0i32, 0i32)];
        let (mut x, mut y) = (0, 0);
        for t in 0..len {
            if w >> t & 1 == 1 {
                y += 1;
            } else {
                x += 1;
            }
            pts.push((x, y));
        }
        pts
    };
    let mut count = 0;
    for up in 0..1usize << len {
        let pu = walk(up);
        for low in 0..1usize << len {
            let pl = walk(low);
            let same_end = pu[len] == pl[len];
            // upper starts north, lower starts east, and they never share
            // an interior point
            let starts = up & 1 == 1 && low & 1 == 0;
            let apart = pu[1..len].iter().all(|p| !pl[1..len].contains(p));
            if same_end && starts && apart {
                count += 1;
            }
        }
    }
    count
}
