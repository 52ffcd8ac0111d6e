use std::fmt;

use super::Relation;
use crate::error::{Error, Result};

/// The four Catalan-pair axioms. Axiom (i) is split by relation so both
/// failures can be reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// (i) for `S`: strict order.
    StrictOrderS,
    /// (i) for `R`: strict order.
    StrictOrderR,
    /// (ii): every distinct pair is related by `S` or `R` in some direction.
    Coverage,
    /// (iii): no distinct pair is related by both `S̄` and `R̄`.
    Disjointness,
    /// (iv): `xSy` and `yRz` imply `xRz`.
    Composition,
}

impl Axiom {
    pub fn numeral(self) -> &'static str {
        match self {
            Axiom::StrictOrderS | Axiom::StrictOrderR => "i",
            Axiom::Coverage => "ii",
            Axiom::Disjointness => "iii",
            Axiom::Composition => "iv",
        }
    }
}

/// Labels exhibiting a violation, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Witness {
    /// An unordered pair `{i, j}`, `i < j`.
    Pair(usize, usize),
    /// An ordered triple `(x, y, z)`.
    Triple(usize, usize, usize),
}

impl Witness {
    /// Renders with labels shifted by `offset` (1 for the file format).
    pub fn render(&self, offset: usize) -> String {
        match *self {
            Witness::Pair(i, j) => format!("{{{},{}}}", i + offset, j + offset),
            Witness::Triple(x, y, z) => format!("({},{},{})", x + offset, y + offset, z + offset),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&self, axiom: Axiom) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    /// Whether some violation is filed under the given numeral ("i".."iv").
    pub fn fails(&self, numeral: &str) -> bool {
        self.violations.iter().any(|v| v.axiom.numeral() == numeral)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid() {
            return write!(f, "all axioms hold");
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("({}) at {}", v.axiom.numeral(), v.witness.render(0)))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// Checks axioms (i)-(iv), reporting the lexicographically first witness
/// for each violated axiom.
pub fn check_axioms(s: &Relation, r: &Relation) -> Result<AxiomReport> {
    if s.n() != r.n() {
        return Err(Error::SizeMismatch { left: s.n(), right: r.n() });
    }
    let n = s.n();
    let mut violations = Vec::new();

    if let Some((x, y, z)) = s.transitivity_witness() {
        violations.push(Violation { axiom: Axiom::StrictOrderS, witness: Witness::Triple(x, y, z) });
    }
    if let Some((x, y, z)) = r.transitivity_witness() {
        violations.push(Violation { axiom: Axiom::StrictOrderR, witness: Witness::Triple(x, y, z) });
    }

    let relations_on = |i: usize, j: usize| {
        [s.contains(i, j), r.contains(i, j), s.contains(j, i), r.contains(j, i)]
            .iter()
            .filter(|&&b| b)
            .count()
    };
    let mut uncovered = None;
    let mut overlapping = None;
    for i in 0..n {
        for j in i + 1..n {
            match relations_on(i, j) {
                0 if uncovered.is_none() => uncovered = Some(Witness::Pair(i, j)),
                k if k > 1 && overlapping.is_none() => overlapping = Some(Witness::Pair(i, j)),
                _ => {}
            }
        }
    }
    if let Some(witness) = uncovered {
        violations.push(Violation { axiom: Axiom::Coverage, witness });
    }
    if let Some(witness) = overlapping {
        violations.push(Violation { axiom: Axiom::Disjointness, witness });
    }

    'outer: for x in 0..n {
        for y in 0..n {
            if !s.contains(x, y) {
                continue;
            }
            for z in 0..n {
                if r.contains(y, z) && !r.contains(x, z) {
                    violations
                        .push(Violation { axiom: Axiom::Composition, witness: Witness::Triple(x, y, z) });
                    break 'outer;
                }
            }
        }
    }

    Ok(AxiomReport { violations })
}
