use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;

use super::{canonicalize, compose_pair, CanonicalPair};
use crate::pairfile;

/// The `n`th Catalan number by the convolution recurrence.
pub fn catalan(n: usize) -> BigUint {
    let mut c: Vec<BigUint> = vec![BigUint::from(1u32)];
    for m in 0..n {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c.swap_remove(n)
}

fn memo() -> &'static Mutex<HashMap<usize, Arc<Vec<CanonicalPair>>>> {
    static MEMO: OnceLock<Mutex<HashMap<usize, Arc<Vec<CanonicalPair>>>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Every canonical pair of size `n`, built by composing all smaller pairs
/// over every split, ordered by their pair-file text.
pub fn enumerate_pairs(n: usize) -> Arc<Vec<CanonicalPair>> {
    if let Some(hit) = memo().lock().expect("memo poisoned").get(&n) {
        return Arc::clone(hit);
    }
    let pairs = if n == 0 {
        vec![canonicalize(&super::CatalanPair::empty()).expect("empty pair")]
    } else {
        let mut out = Vec::new();
        for k in 0..n {
            let lefts = enumerate_pairs(k);
            let rights = enumerate_pairs(n - 1 - k);
            for a in lefts.iter() {
                for b in rights.iter() {
                    let composed = compose_pair(a.pair(), b.pair());
                    out.push(canonicalize(&composed).expect("composed pairs are valid"));
                }
            }
        }
        out.sort_by_cached_key(|p| pairfile::serialize(p.pair()));
        out
    };
    let pairs = Arc::new(pairs);
    memo().lock().expect("memo poisoned").entry(n).or_insert_with(|| Arc::clone(&pairs));
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let expect = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(catalan(n), BigUint::from(c));
        }
        assert_eq!(catalan(30).to_string(), "3814986502092304");
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_pairs(0).len(), 1);
        assert_eq!(enumerate_pairs(3).len(), 5);
        let four = enumerate_pairs(4);
        let mut dedup: Vec<_> = four.iter().cloned().collect();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 14);
    }
}
