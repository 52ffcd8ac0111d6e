//! Text format for pairs of relations.
//!
//! ```text
//! n 3
//! S 2 1
//! R 1 3
//! R 2 3
//! ```
//!
//! Labels are 1-based. The serializer writes `S` lines before `R` lines,
//! each sorted by `(i, j)`. Blank lines are ignored when parsing.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::relations::{CatalanPair, Relation};

/// Parsed but unvalidated contents of a pair file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairFile {
    pub s: Relation,
    pub r: Relation,
}

impl PairFile {
    pub fn into_pair(self) -> Result<CatalanPair> {
        CatalanPair::new(self.s, self.r)
    }
}

pub fn serialize(pair: &CatalanPair) -> String {
    serialize_relations(pair.s(), pair.r())
}

pub fn serialize_relations(s: &Relation, r: &Relation) -> String {
    let mut out = format!("n {}\n", s.n());
    for (tag, rel) in [("S", s), ("R", r)] {
        for (i, j) in rel.pairs() {
            writeln!(out, "{tag} {} {}", i + 1, j + 1).expect("write to string");
        }
    }
    out
}

/// Parses a pair file; `pos` in errors is the 1-based line number.
pub fn parse(text: &str) -> Result<PairFile> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());

    let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count.parse::<usize>().map_err(|_| Error::parse(1, format!("bad size {count:?}")))?,
        _ => return Err(Error::parse(1, "header must be \"n <int>\"")),
    };

    let mut s_pairs = Vec::new();
    let mut r_pairs = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [tag, i, j] = fields.as_slice() else {
            return Err(Error::parse(lineno, "expected \"S|R <i> <j>\""));
        };
        let label = |text: &str| -> Result<usize> {
            let v: usize = text.parse().map_err(|_| Error::parse(lineno, format!("bad label {text:?}")))?;
            if v == 0 || v > n {
                return Err(Error::parse(lineno, format!("label {v} outside 1..={n}")));
            }
            Ok(v - 1)
        };
        let (i, j) = (label(i)?, label(j)?);
        if i == j {
            return Err(Error::parse(lineno, format!("diagonal pair ({0},{0})", i + 1)));
        }
        if !seen.insert((*tag, i, j)) {
            return Err(Error::parse(lineno, "duplicate line"));
        }
        match *tag {
            "S" => s_pairs.push((i, j)),
            "R" => r_pairs.push((i, j)),
            other => return Err(Error::parse(lineno, format!("unknown relation {other:?}"))),
        }
    }

    Ok(PairFile { s: Relation::from_pairs(n, s_pairs)?, r: Relation::from_pairs(n, r_pairs)? })
}
