use std::fmt;
use std::str::FromStr;

use super::{join_ints, parse_int_list, sort_by_text};
use crate::error::{Error, Result};

/// `a_1 .. a_n` with `i <= a_i <= n`, and `a_j <= a_i` whenever `i <= j <= a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seq1 {
    values: Vec<usize>,
}

impl Seq1 {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        Self::check(&values).map_err(Error::Validation)?;
        Ok(Seq1 { values })
    }

    pub fn check(values: &[usize]) -> std::result::Result<(), String> {
        let n = values.len();
        for (idx, &a) in values.iter().enumerate() {
            let i = idx + 1;
            if a < i || a > n {
                return Err(format!("a_{i} = {a} outside {i}..={n}"));
            }
            if let Some(j) = (i..=a).find(|&j| values[j - 1] > a) {
                return Err(format!("a_{j} = {} exceeds a_{i} = {a}", values[j - 1]));
            }
        }
        Ok(())
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Self::check(&values).is_ok());
        Seq1 { values }
    }

    pub fn enumerate(n: usize) -> Vec<Seq1> {
        sort_by_text(build(n).into_iter().map(|values| Seq1 { values }).collect())
    }
}

// a_1 = k + 1, then an inner sequence of size k shifted by 1, then the rest
// shifted by k + 1.
fn build(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..n {
        let inner = build(k);
        let rest = build(n - 1 - k);
        for a in &inner {
            for b in &rest {
                let mut v = vec![k + 1];
                v.extend(a.iter().map(|x| x + 1));
                v.extend(b.iter().map(|x| x + k + 1));
                out.push(v);
            }
        }
    }
    out
}

impl fmt::Display for Seq1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_ints(&self.values))
    }
}

impl FromStr for Seq1 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Seq1::new(parse_int_list(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_is_valid() {
        let s: Seq1 = "5 2 4 4 5 6".parse().unwrap();
        assert_eq!(s.size(), 6);
    }

    #[test]
    fn rejects() {
        assert!(Seq1::check(&[1, 1]).is_err());
        assert!(Seq1::check(&[3, 3, 2]).is_err());
        assert!(Seq1::check(&[2, 3, 3]).is_err());
        assert!(Seq1::check(&[1, 2, 4]).is_err());
    }

    #[test]
    fn enumerate_matches_filter() {
        // Brute force over all n^n candidates.
        for n in 0..=5usize {
            let mut brute = Vec::new();
            let total = n.pow(n as u32);
            for code in 0..total.max(1) {
                let mut c = code;
                let v: Vec<usize> = (0..n)
                    .map(|_| {
                        let d = c % n;
                        c /= n;
                        d + 1
                    })
                    .collect();
                if Seq1::check(&v).is_ok() {
                    brute.push(Seq1 { values: v });
                }
            }
            let brute = sort_by_text(brute);
            assert_eq!(Seq1::enumerate(n), brute, "n = {n}");
        }
        let three: Vec<String> = Seq1::enumerate(3).iter().map(ToString::to_string).collect();
        assert_eq!(three, ["1 2 3", "1 3 3", "2 2 3", "3 2 3", "3 3 3"]);
    }
}
