use std::fmt;
use std::str::FromStr;

use super::{join_ints, parse_int_list, sort_by_text};
use crate::error::{Error, Result};

/// `1 <= a_1 <= .. <= a_n <= n` with exactly one fixed point `a_f = f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq2 {
    values: Vec<usize>,
    fixed: usize,
}

impl Seq2 {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let fixed = Self::check(&values).map_err(Error::Validation)?;
        Ok(Seq2 { values, fixed })
    }

    /// Returns the fixed point on success.
    pub fn check(values: &[usize]) -> std::result::Result<usize, String> {
        let n = values.len();
        if n == 0 {
            // The empty sequence stands for size zero.
            return Ok(0);
        }
        for (idx, &a) in values.iter().enumerate() {
            if a == 0 || a > n {
                return Err(format!("a_{} = {a} outside 1..={n}", idx + 1));
            }
        }
        if let Some(w) = values.windows(2).position(|w| w[0] > w[1]) {
            return Err(format!("sequence decreases at position {}", w + 2));
        }
        let fixed: Vec<usize> = (1..=n).filter(|&i| values[i - 1] == i).collect();
        match fixed.as_slice() {
            [f] => Ok(*f),
            [] => Err("no fixed point".into()),
            many => Err(format!("{} fixed points", many.len())),
        }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// The fixed point `f`, 1-based (0 for the empty sequence).
    pub fn fixed_point(&self) -> usize {
        self.fixed
    }

    /// `a'_y = a_y - y` for `y <= f`, `a'_z = z - a_z` for `z > f`.
    pub fn prime(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .map(|(idx, &a)| {
                let i = idx + 1;
                if i <= self.fixed {
                    a - i
                } else {
                    i - a
                }
            })
            .collect()
    }

    /// Depth-first over nondecreasing sequences. `a_i - i` starts at or above
    /// zero and drops by at most one per step, so it is positive before `f`,
    /// zero at `f` and negative after; branches that break this are cut.
    pub fn enumerate(n: usize) -> Vec<Seq2> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        extend(n, &mut prefix, None, &mut out);
        sort_by_text(out)
    }
}

fn extend(n: usize, prefix: &mut Vec<usize>, fixed: Option<usize>, out: &mut Vec<Seq2>) {
    let i = prefix.len() + 1;
    if i > n {
        if let Some(fixed) = fixed {
            out.push(Seq2 { values: prefix.clone(), fixed });
        } else if n == 0 {
            out.push(Seq2 { values: Vec::new(), fixed: 0 });
        }
        return;
    }
    let low = prefix.last().copied().unwrap_or(1);
    for a in low..=n {
        let next_fixed = match (a.cmp(&i), fixed) {
            (std::cmp::Ordering::Equal, None) => Some(i),
            (std::cmp::Ordering::Equal, Some(_)) => continue,
            // After the fixed point every a_i must stay below i.
            (std::cmp::Ordering::Greater, Some(_)) => break,
            (_, f) => f,
        };
        // Before the fixed point a_i > i is required.
        if next_fixed.is_none() && a < i {
            continue;
        }
        prefix.push(a);
        extend(n, prefix, next_fixed, out);
        prefix.pop();
    }
}

impl fmt::Display for Seq2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.values))
    }
}

impl FromStr for Seq2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Seq2::new(parse_int_list(s)?)
    }
}
