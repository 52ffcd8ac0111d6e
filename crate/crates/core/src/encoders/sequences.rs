use super::finish;
use crate::error::Result;
use crate::relations::{CatalanPair, Relation};
use crate::structures::{Seq1, Seq2};

/// Positions as labels. `a_i R a_j` when `i < j` and `a_i < a_j`;
/// `a_i S a_j` when `j < i` and `a_i <= a_j`.
pub fn encode_seq1(seq: &Seq1) -> Result<CatalanPair> {
    let a = seq.values();
    let n = a.len();
    let s = Relation::from_fn(n, |i, j| j < i && a[i] <= a[j]);
    let r = Relation::from_fn(n, |i, j| i < j && a[i] < a[j]);
    finish("seq1", s, r)
}

/// Positions as labels, split at the fixed point `f` and read off the
/// primed sequence `a'`.
///
/// For `i < j <= f`: `i S j` when `a'_i > a'_j` and `j` is the first index
/// after `i` carrying the value `a'_j`; `i R j` when `a'_i <= a'_j`, or when
/// `a'_i > a'_j` and some `i < w < j` has `a'_w = a'_j`.
/// For `i <= f < j`: `i R j`.
/// For `f < i < j`: `j S i` when `a'_i < a'_j` and `i` is the last index
/// before `j` carrying `a'_i`; `i R j` when `a'_i >= a'_j`, or when
/// `a'_i < a'_j` and some `i < w < j` has `a'_w = a'_i`.
pub fn encode_seq2(seq: &Seq2) -> Result<CatalanPair> {
    let p = seq.prime();
    let n = p.len();
    // 0-based fixed index; positions 0..=f form the left part.
    let f = seq.fixed_point().saturating_sub(1);
    let first_after = |i: usize, j: usize| (i + 1..j).all(|k| p[k] != p[j]);
    let last_before = |i: usize, j: usize| (i + 1..j).all(|k| p[k] != p[i]);

    // Left and right strict halves of a pair i < j.
    let s_forward = |i: usize, j: usize| j <= f && p[i] > p[j] && first_after(i, j);
    let s_backward = |i: usize, j: usize| i > f && p[i] < p[j] && last_before(i, j);

    let s = Relation::from_fn(n, |x, y| if x < y { s_forward(x, y) } else { s_backward(y, x) });
    let r = Relation::from_fn(n, |i, j| {
        if i >= j {
            return false;
        }
        if j <= f {
            // case (1): a'_j already occurs strictly between; case (2): a'_i <= a'_j
            (p[i] > p[j] && !first_after(i, j)) || p[i] <= p[j]
        } else if i <= f {
            true
        } else {
            (p[i] < p[j] && !last_before(i, j)) || p[i] >= p[j]
        }
    });
    finish("seq2", s, r)
}
