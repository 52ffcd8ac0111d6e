use std::fmt;
use std::str::FromStr;

use super::{sort_by_text, NoncrossingMatching};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    D,
}

/// A word over `{U, D}` with equal counts and no prefix going below zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        Self::check(&steps).map_err(Error::Validation)?;
        Ok(DyckPath { steps })
    }

    pub fn check(steps: &[Step]) -> std::result::Result<(), String> {
        let mut height: i64 = 0;
        for (i, step) in steps.iter().enumerate() {
            height += if *step == Step::U { 1 } else { -1 };
            if height < 0 {
                return Err(format!("prefix of length {} goes below the axis", i + 1));
            }
        }
        if height != 0 {
            return Err(format!("path ends at height {height}"));
        }
        Ok(())
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Semilength.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// Matched `(up, down)` step indices, 0-based, ordered by the up step.
    /// Each one spans a tunnel of the path.
    pub fn tunnels(&self) -> Vec<(usize, usize)> {
        let mut open = Vec::new();
        let mut out = Vec::new();
        for (i, step) in self.steps.iter().enumerate() {
            match step {
                Step::U => {
                    open.push(out.len());
                    out.push((i, usize::MAX));
                }
                Step::D => {
                    let k = open.pop().expect("validated path");
                    out[k].1 = i;
                }
            }
        }
        out
    }

    /// Reads up steps as left endpoints and down steps as right endpoints.
    pub fn to_matching(&self) -> NoncrossingMatching {
        let arches = self.tunnels().into_iter().map(|(u, d)| (u + 1, d + 1)).collect();
        NoncrossingMatching::new(arches).expect("tunnels of a Dyck path never cross")
    }

    pub fn from_matching(m: &NoncrossingMatching) -> DyckPath {
        let mut steps = vec![Step::D; 2 * m.size()];
        for &(l, _) in m.arches() {
            steps[l - 1] = Step::U;
        }
        DyckPath { steps }
    }

    pub fn enumerate(n: usize) -> Vec<DyckPath> {
        sort_by_text(words(n).into_iter().map(|steps| DyckPath { steps }).collect())
    }
}

// U A D B over every split.
fn words(n: usize) -> Vec<Vec<Step>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in 0..n {
        let inner = words(k);
        let rest = words(n - 1 - k);
        for a in &inner {
            for b in &rest {
                let mut w = Vec::with_capacity(2 * n);
                w.push(Step::U);
                w.extend_from_slice(a);
                w.push(Step::D);
                w.extend_from_slice(b);
                out.push(w);
            }
        }
    }
    out
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            f.write_str(if *step == Step::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                other => Err(Error::parse(i, format!("unexpected {other:?}, expected U or D"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}
