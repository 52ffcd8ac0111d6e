//! Decoding pairs back into structures and converting between families.
//!
//! Every conversion goes through the canonical pair: encode the source
//! value, canonicalize, then decode into the target family.

mod assemble;
mod decoder;

pub use assemble::{
    assemble_dyck, assemble_matching, assemble_perm_312, assemble_plane_tree, assemble_seq1,
    assemble_staircase,
};
pub use decoder::{Converter, DEFAULT_CAPACITY};

use std::fmt;
use std::str::FromStr;

use crate::encoders;
use crate::error::{Error, Result};
use crate::grammar::{grammar_pair, GrammarTree, ParallelogramPolyomino};
use crate::relations::CatalanPair;
use crate::structures::{
    DyckPath, NoncrossingMatching, Pattern, Permutation, PlaneTree, Seq1, Seq2, StaircaseTiling,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    Dyck,
    Matching,
    PlaneTree,
    Perm(Pattern),
    Seq1,
    Seq2,
    Staircase,
    BinaryTree,
    Polyomino,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 14] = [
        FamilyTag::Dyck,
        FamilyTag::Matching,
        FamilyTag::PlaneTree,
        FamilyTag::Perm(Pattern::P312),
        FamilyTag::Perm(Pattern::P321),
        FamilyTag::Perm(Pattern::P231),
        FamilyTag::Perm(Pattern::P213),
        FamilyTag::Perm(Pattern::P132),
        FamilyTag::Perm(Pattern::P123),
        FamilyTag::Seq1,
        FamilyTag::Seq2,
        FamilyTag::Staircase,
        FamilyTag::BinaryTree,
        FamilyTag::Polyomino,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Dyck => "dyck",
            FamilyTag::Matching => "matching",
            FamilyTag::PlaneTree => "plane-tree",
            FamilyTag::Perm(Pattern::P312) => "perm-312",
            FamilyTag::Perm(Pattern::P321) => "perm-321",
            FamilyTag::Perm(Pattern::P231) => "perm-231",
            FamilyTag::Perm(Pattern::P213) => "perm-213",
            FamilyTag::Perm(Pattern::P132) => "perm-132",
            FamilyTag::Perm(Pattern::P123) => "perm-123",
            FamilyTag::Seq1 => "seq1",
            FamilyTag::Seq2 => "seq2",
            FamilyTag::Staircase => "staircase",
            FamilyTag::BinaryTree => "binary-tree",
            FamilyTag::Polyomino => "polyomino",
        }
    }

    /// Families whose decoder is a direct assembly from the decomposition
    /// tree rather than a table lookup.
    pub fn has_assembly(self) -> bool {
        matches!(
            self,
            FamilyTag::Dyck
                | FamilyTag::Matching
                | FamilyTag::PlaneTree
                | FamilyTag::Perm(Pattern::P312)
                | FamilyTag::Seq1
                | FamilyTag::Staircase
        )
    }

    /// Parses a value in this family's text form.
    pub fn parse_value(self, text: &str) -> Result<StructureValue> {
        Ok(match self {
            FamilyTag::Dyck => StructureValue::Dyck(text.parse()?),
            FamilyTag::Matching => StructureValue::Matching(text.parse()?),
            FamilyTag::PlaneTree => StructureValue::PlaneTree(text.parse()?),
            FamilyTag::Perm(pattern) => {
                let p: Permutation = text.parse()?;
                if p.contains(pattern) {
                    return Err(Error::Validation(format!("{p} contains {pattern}")));
                }
                StructureValue::Perm(pattern, p)
            }
            FamilyTag::Seq1 => StructureValue::Seq1(text.parse()?),
            FamilyTag::Seq2 => StructureValue::Seq2(text.parse()?),
            FamilyTag::Staircase => StructureValue::Staircase(text.parse()?),
            FamilyTag::BinaryTree => StructureValue::BinaryTree(text.parse()?),
            FamilyTag::Polyomino => StructureValue::Polyomino(text.parse()?),
        })
    }

    /// All values of size `n`, sorted by text form.
    pub fn enumerate(self, n: usize) -> Vec<StructureValue> {
        match self {
            FamilyTag::Dyck => DyckPath::enumerate(n).into_iter().map(StructureValue::Dyck).collect(),
            FamilyTag::Matching => {
                NoncrossingMatching::enumerate(n).into_iter().map(StructureValue::Matching).collect()
            }
            FamilyTag::PlaneTree => {
                PlaneTree::enumerate(n).into_iter().map(StructureValue::PlaneTree).collect()
            }
            FamilyTag::Perm(pattern) => Permutation::enumerate_avoiding(n, pattern)
                .into_iter()
                .map(|p| StructureValue::Perm(pattern, p))
                .collect(),
            FamilyTag::Seq1 => Seq1::enumerate(n).into_iter().map(StructureValue::Seq1).collect(),
            FamilyTag::Seq2 => Seq2::enumerate(n).into_iter().map(StructureValue::Seq2).collect(),
            FamilyTag::Staircase => {
                StaircaseTiling::enumerate(n).into_iter().map(StructureValue::Staircase).collect()
            }
            FamilyTag::BinaryTree => {
                GrammarTree::enumerate(n).into_iter().map(StructureValue::BinaryTree).collect()
            }
            FamilyTag::Polyomino => {
                ParallelogramPolyomino::enumerate(n).into_iter().map(StructureValue::Polyomino).collect()
            }
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "grammar-tree" {
            return Ok(FamilyTag::BinaryTree);
        }
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown family {s:?}")))
    }
}

/// A value of one of the families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StructureValue {
    Dyck(DyckPath),
    Matching(NoncrossingMatching),
    PlaneTree(PlaneTree),
    /// A permutation avoiding the given pattern.
    Perm(Pattern, Permutation),
    Seq1(Seq1),
    Seq2(Seq2),
    Staircase(StaircaseTiling),
    BinaryTree(GrammarTree),
    Polyomino(ParallelogramPolyomino),
}

impl StructureValue {
    pub fn family(&self) -> FamilyTag {
        match self {
            StructureValue::Dyck(_) => FamilyTag::Dyck,
            StructureValue::Matching(_) => FamilyTag::Matching,
            StructureValue::PlaneTree(_) => FamilyTag::PlaneTree,
            StructureValue::Perm(p, _) => FamilyTag::Perm(*p),
            StructureValue::Seq1(_) => FamilyTag::Seq1,
            StructureValue::Seq2(_) => FamilyTag::Seq2,
            StructureValue::Staircase(_) => FamilyTag::Staircase,
            StructureValue::BinaryTree(_) => FamilyTag::BinaryTree,
            StructureValue::Polyomino(_) => FamilyTag::Polyomino,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            StructureValue::Dyck(v) => v.size(),
            StructureValue::Matching(v) => v.size(),
            StructureValue::PlaneTree(v) => v.size(),
            StructureValue::Perm(_, v) => v.size(),
            StructureValue::Seq1(v) => v.size(),
            StructureValue::Seq2(v) => v.size(),
            StructureValue::Staircase(v) => v.size(),
            StructureValue::BinaryTree(v) => v.size(),
            StructureValue::Polyomino(v) => v.size(),
        }
    }

    /// The family's pair, labeled in the encoder's own order.
    pub fn encode(&self) -> Result<CatalanPair> {
        match self {
            StructureValue::Dyck(v) => encoders::encode_dyck(v),
            StructureValue::Matching(v) => encoders::encode_matching(v),
            StructureValue::PlaneTree(v) => encoders::encode_plane_tree(v),
            StructureValue::Perm(pattern, v) => encoders::pair_for_avoidance_class(v, *pattern),
            StructureValue::Seq1(v) => encoders::encode_seq1(v),
            StructureValue::Seq2(v) => encoders::encode_seq2(v),
            StructureValue::Staircase(v) => Ok(encoders::encode_staircase(v)),
            StructureValue::BinaryTree(v) => grammar_pair(v),
            StructureValue::Polyomino(v) => grammar_pair(&v.to_grammar()),
        }
    }
}

impl fmt::Display for StructureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureValue::Dyck(v) => v.fmt(f),
            StructureValue::Matching(v) => v.fmt(f),
            StructureValue::PlaneTree(v) => v.fmt(f),
            StructureValue::Perm(_, v) => v.fmt(f),
            StructureValue::Seq1(v) => v.fmt(f),
            StructureValue::Seq2(v) => v.fmt(f),
            StructureValue::Staircase(v) => v.fmt(f),
            StructureValue::BinaryTree(v) => v.fmt(f),
            StructureValue::Polyomino(v) => v.fmt(f),
        }
    }
}

/// Decodes with the shared default converter.
pub fn decode(pair: &CatalanPair, family: FamilyTag) -> Result<StructureValue> {
    Converter::shared().decode(pair, family)
}

pub fn reference_decode(pair: &CatalanPair, family: FamilyTag) -> Result<StructureValue> {
    Converter::shared().reference_decode(pair, family)
}

pub fn convert(value: &StructureValue, from: FamilyTag, to: FamilyTag) -> Result<StructureValue> {
    Converter::shared().convert(value, from, to)
}
