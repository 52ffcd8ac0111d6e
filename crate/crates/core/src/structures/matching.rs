use std::fmt;
use std::str::FromStr;

use super::sort_by_text;
use crate::error::{Error, Result};

/// A perfect noncrossing matching of `{1..2n}`, arches sorted by left endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoncrossingMatching {
    arches: Vec<(usize, usize)>,
}

impl NoncrossingMatching {
    /// Accepts arches in any order.
    pub fn new(mut arches: Vec<(usize, usize)>) -> Result<Self> {
        arches.sort_unstable();
        Self::check(&arches).map_err(Error::Validation)?;
        Ok(NoncrossingMatching { arches })
    }

    /// Checks sorted arches.
    pub fn check(arches: &[(usize, usize)]) -> std::result::Result<(), String> {
        let points = 2 * arches.len();
        let mut used = vec![false; points + 1];
        for &(l, r) in arches {
            if l >= r {
                return Err(format!("arch {l}-{r} must have l < r"));
            }
            for p in [l, r] {
                if p == 0 || p > points {
                    return Err(format!("endpoint {p} outside 1..={points}"));
                }
                if std::mem::replace(&mut used[p], true) {
                    return Err(format!("endpoint {p} used twice"));
                }
            }
        }
        for (k, &(l1, r1)) in arches.iter().enumerate() {
            for &(l2, r2) in &arches[k + 1..] {
                if l1 < l2 && l2 < r1 && r1 < r2 {
                    return Err(format!("arches {l1}-{r1} and {l2}-{r2} cross"));
                }
            }
        }
        Ok(())
    }

    pub fn arches(&self) -> &[(usize, usize)] {
        &self.arches
    }

    /// Number of arches.
    pub fn size(&self) -> usize {
        self.arches.len()
    }

    pub fn enumerate(n: usize) -> Vec<NoncrossingMatching> {
        sort_by_text(build(n).into_iter().map(|arches| NoncrossingMatching { arches }).collect())
    }
}

// First arch enclosing a matching of size k, followed by one of size n-1-k.
fn build(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..n {
        let inner = build(k);
        let rest = build(n - 1 - k);
        for a in &inner {
            for b in &rest {
                let mut arches = vec![(1, 2 * k + 2)];
                arches.extend(a.iter().map(|&(l, r)| (l + 1, r + 1)));
                arches.extend(b.iter().map(|&(l, r)| (l + 2 * k + 2, r + 2 * k + 2)));
                out.push(arches);
            }
        }
    }
    out
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.arches.iter().map(|(l, r)| format!("{l}-{r}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for NoncrossingMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut arches = Vec::new();
        let mut offset = 0;
        for token in s.split(' ') {
            if !token.is_empty() {
                let bad = || Error::parse(offset, format!("expected \"l-r\", found {token:?}"));
                let (l, r) = token.trim().split_once('-').ok_or_else(bad)?;
                arches.push((l.parse().map_err(|_| bad())?, r.parse().map_err(|_| bad())?));
            }
            offset += token.len() + 1;
        }
        NoncrossingMatching::new(arches)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        let m: NoncrossingMatching = "5-6 1-4 2-3".parse().unwrap();
        assert_eq!(m.to_string(), "1-4 2-3 5-6");
        assert_eq!(m.size(), 3);
        assert!(matches!("1-3 2-4".parse::<NoncrossingMatching>(), Err(Error::Validation(_))));
        assert!(matches!("1-2 2-3".parse::<NoncrossingMatching>(), Err(Error::Validation(_))));
        assert!(matches!("2-1".parse::<NoncrossingMatching>(), Err(Error::Validation(_))));
        assert!(matches!("1-5 2-3".parse::<NoncrossingMatching>(), Err(Error::Validation(_))));
        assert_eq!(
            "1-2 3_4".parse::<NoncrossingMatching>(),
            Err(Error::parse(4, "expected \"l-r\", found \"3_4\""))
        );
    }

    #[test]
    fn enumerate_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| NoncrossingMatching::enumerate(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
        for m in NoncrossingMatching::enumerate(5) {
            NoncrossingMatching::check(m.arches()).unwrap();
        }
    }
}
