use std::fmt;
use std::str::FromStr;

use super::GrammarTree;
use crate::error::{Error, Result};
use crate::relations::DecompTree;
use crate::structures::{DyckPath, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeStep {
    E,
    N,
}

/// The region between an upper and a lower lattice path from the origin
/// that meet only at their endpoints. A polyomino of semi-perimeter `n + 1`
/// has size `n`; the empty polyomino (two empty paths) has size zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParallelogramPolyomino {
    upper: Vec<LatticeStep>,
    lower: Vec<LatticeStep>,
}

impl ParallelogramPolyomino {
    pub fn new(upper: Vec<LatticeStep>, lower: Vec<LatticeStep>) -> Result<Self> {
        Self::check(&upper, &lower).map_err(Error::Validation)?;
        Ok(ParallelogramPolyomino { upper, lower })
    }

    pub fn check(upper: &[LatticeStep], lower: &[LatticeStep]) -> std::result::Result<(), String> {
        if upper.len() != lower.len() {
            return Err(format!("path lengths differ ({} vs {})", upper.len(), lower.len()));
        }
        if upper.len() == 1 {
            return Err("paths of length 1 cannot enclose a cell".into());
        }
        // Both paths sit on the antidiagonal x + y = t after t steps; the
        // gap counts how far the upper one is above the lower one.
        let mut gap: i64 = 0;
        let len = upper.len();
        for t in 0..len {
            gap += (upper[t] == LatticeStep::N) as i64 - (lower[t] == LatticeStep::N) as i64;
            if t + 1 < len && gap < 1 {
                return Err(format!("paths touch or cross after {} steps", t + 1));
            }
        }
        if gap != 0 {
            return Err("paths end at different points".into());
        }
        Ok(())
    }

    pub fn empty() -> Self {
        ParallelogramPolyomino { upper: Vec::new(), lower: Vec::new() }
    }

    pub fn upper(&self) -> &[LatticeStep] {
        &self.upper
    }

    pub fn lower(&self) -> &[LatticeStep] {
        &self.lower
    }

    /// Semi-perimeter minus one.
    pub fn size(&self) -> usize {
        self.upper.len().saturating_sub(1)
    }

    /// Dyck path of semilength `size`: `U`, then for every interior step
    /// one letter from each path (upper `N` is `U`, lower `E` is `U`), then `D`.
    pub fn to_dyck(&self) -> DyckPath {
        let n = self.size();
        if n == 0 {
            return DyckPath::new(Vec::new()).expect("empty path");
        }
        let mut steps = vec![Step::U];
        for t in 1..n {
            steps.push(if self.upper[t] == LatticeStep::N { Step::U } else { Step::D });
            steps.push(if self.lower[t] == LatticeStep::E { Step::U } else { Step::D });
        }
        steps.push(Step::D);
        DyckPath::new(steps).expect("gap stays positive")
    }

    pub fn from_dyck(d: &DyckPath) -> Self {
        let n = d.size();
        if n == 0 {
            return Self::empty();
        }
        let w = d.steps();
        let mut upper = vec![LatticeStep::N];
        let mut lower = vec![LatticeStep::E];
        for t in 1..n {
            upper.push(if w[2 * t - 1] == Step::U { LatticeStep::N } else { LatticeStep::E });
            lower.push(if w[2 * t] == Step::U { LatticeStep::E } else { LatticeStep::N });
        }
        upper.push(LatticeStep::E);
        lower.push(LatticeStep::N);
        debug_assert!(Self::check(&upper, &lower).is_ok());
        ParallelogramPolyomino { upper, lower }
    }

    pub fn to_grammar(&self) -> GrammarTree {
        GrammarTree::from_shape(&dyck_shape(self.to_dyck().steps()))
    }

    pub fn from_grammar(t: &GrammarTree) -> Self {
        let mut steps = Vec::new();
        shape_dyck(&t.to_shape(), &mut steps);
        Self::from_dyck(&DyckPath::new(steps).expect("shape word is balanced"))
    }

    pub fn enumerate(n: usize) -> Vec<ParallelogramPolyomino> {
        let mut out: Vec<_> = DyckPath::enumerate(n).iter().map(Self::from_dyck).collect();
        out.sort_by_cached_key(|p| p.to_string());
        out
    }
}

// First-return decomposition U A D B.
fn dyck_shape(w: &[Step]) -> DecompTree {
    if w.is_empty() {
        return DecompTree::Empty;
    }
    let mut h = 0i64;
    let ret = w
        .iter()
        .position(|s| {
            h += if *s == Step::U { 1 } else { -1 };
            h == 0
        })
        .expect("balanced word");
    DecompTree::node(dyck_shape(&w[1..ret]), dyck_shape(&w[ret + 1..]))
}

fn shape_dyck(t: &DecompTree, out: &mut Vec<Step>) {
    if let DecompTree::Node(a, b) = t {
        out.push(Step::U);
        shape_dyck(a, out);
        out.push(Step::D);
        shape_dyck(b, out);
    }
}

fn word(steps: &[LatticeStep]) -> String {
    steps.iter().map(|s| if *s == LatticeStep::E { 'E' } else { 'N' }).collect()
}

impl fmt::Display for ParallelogramPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", word(&self.upper), word(&self.lower))
    }
}

impl FromStr for ParallelogramPolyomino {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (up, low) = s.split_once(';').ok_or_else(|| Error::parse(0, "expected \"upper;lower\""))?;
        let steps = |text: &str, base: usize| {
            text.chars()
                .enumerate()
                .map(|(i, c)| match c {
                    'E' => Ok(LatticeStep::E),
                    'N' => Ok(LatticeStep::N),
                    other => Err(Error::parse(base + i, format!("unexpected {other:?}, expected E or N"))),
                })
                .collect::<Result<Vec<_>>>()
        };
        ParallelogramPolyomino::new(steps(up, 0)?, steps(low, up.len() + 1)?)
    }
}
