use std::fmt;
use std::str::FromStr;

use super::{join_ints, parse_int_list, sort_by_text};
use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

/// The six patterns of length three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
}

impl Pattern {
    pub const ALL: [Pattern; 6] =
        [Pattern::P123, Pattern::P132, Pattern::P213, Pattern::P231, Pattern::P312, Pattern::P321];

    pub fn values(self) -> [usize; 3] {
        match self {
            Pattern::P123 => [1, 2, 3],
            Pattern::P132 => [1, 3, 2],
            Pattern::P213 => [2, 1, 3],
            Pattern::P231 => [2, 3, 1],
            Pattern::P312 => [3, 1, 2],
            Pattern::P321 => [3, 2, 1],
        }
    }

    pub fn as_permutation(self) -> Permutation {
        Permutation { values: self.values().to_vec() }
    }

    pub fn name(self) -> &'static str {
        match self {
            Pattern::P123 => "123",
            Pattern::P132 => "132",
            Pattern::P213 => "213",
            Pattern::P231 => "231",
            Pattern::P312 => "312",
            Pattern::P321 => "321",
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Pattern::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown pattern {s:?}")))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        Self::check(&values).map_err(Error::Validation)?;
        Ok(Permutation { values })
    }

    pub fn check(values: &[usize]) -> std::result::Result<(), String> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v == 0 || v > n {
                return Err(format!("value {v} outside 1..={n}"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("value {v} repeated"));
            }
        }
        Ok(())
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation { values: self.values.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.size();
        Permutation { values: self.values.iter().map(|v| n + 1 - v).collect() }
    }

    /// Whether some index triple `i < j < k` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: Pattern) -> bool {
        let [p0, p1, p2] = pattern.values();
        let same = |a: usize, b: usize, pa: usize, pb: usize| (a < b) == (pa < pb);
        let v = &self.values;
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                if !same(v[i], v[j], p0, p1) {
                    continue;
                }
                for k in j + 1..n {
                    if same(v[i], v[k], p0, p2) && same(v[j], v[k], p1, p2) {
                        return true;
                    }
                }
            }
        }
        false
    }

    pub fn avoids(&self, pattern: Pattern) -> bool {
        !self.contains(pattern)
    }

    /// `S_n(pattern)`, sorted by text form.
    ///
    /// 312- and 321-avoiders are grown by inserting the maximum into every
    /// admissible gap; the other classes are images under reverse/inverse.
    pub fn enumerate_avoiding(n: usize, pattern: Pattern) -> Vec<Permutation> {
        let perms: Vec<Permutation> = match pattern {
            Pattern::P312 => grow(n, Pattern::P312),
            Pattern::P321 => grow(n, Pattern::P321),
            Pattern::P213 => grow(n, Pattern::P312).iter().map(Permutation::reverse).collect(),
            Pattern::P123 => grow(n, Pattern::P321).iter().map(Permutation::reverse).collect(),
            Pattern::P231 => grow(n, Pattern::P312).iter().map(Permutation::inverse).collect(),
            Pattern::P132 => grow(n, Pattern::P312).iter().map(|p| p.inverse().reverse()).collect(),
        };
        sort_by_text(perms)
    }
}

// Inserting n keeps the class iff the entries after it are monotone:
// decreasing for 312 (no "12" after the 3), increasing for 321.
fn grow(n: usize, pattern: Pattern) -> Vec<Permutation> {
    let mut level = vec![Vec::<usize>::new()];
    for m in 1..=n {
        let mut next = Vec::new();
        for p in &level {
            let len = p.len();
            let mut start = len;
            while start > 0 {
                let tail = &p[start - 1..];
                let monotone = tail.windows(2).all(|w| match pattern {
                    Pattern::P312 => w[0] > w[1],
                    _ => w[0] < w[1],
                });
                if !monotone {
                    break;
                }
                start -= 1;
            }
            for gap in start..=len {
                let mut q = p.clone();
                q.insert(gap, m);
                next.push(q);
            }
        }
        level = next;
    }
    level.into_iter().map(|values| Permutation { values }).collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.values))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(parse_int_list(s)?)
    }
}
