use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::assemble::{
    assemble_dyck, assemble_matching, assemble_perm_312, assemble_plane_tree, assemble_seq1,
    assemble_staircase,
};
use super::{FamilyTag, StructureValue};
use crate::error::{Error, Result};
use crate::grammar::{grammar_decompose, ParallelogramPolyomino};
use crate::relations::{canonicalize, pair_to_tree, CanonicalPair, CatalanPair};
use crate::structures::Pattern;

/// Largest size the table-based decoder will build by default.
pub const DEFAULT_CAPACITY: usize = 12;

type Table = HashMap<CanonicalPair, StructureValue>;

/// Decoders for every family, plus lazily built lookup tables keyed by
/// `(family, n)`. Tables are immutable once built and shared between threads.
#[derive(Debug)]
pub struct Converter {
    capacity: usize,
    tables: RwLock<HashMap<(FamilyTag, usize), Arc<Table>>>,
}

impl Default for Converter {
    fn default() -> Self {
        Converter::with_capacity(DEFAULT_CAPACITY)
    }
}

impl Converter {
    pub fn with_capacity(capacity: usize) -> Self {
        Converter { capacity, tables: RwLock::new(HashMap::new()) }
    }

    pub fn shared() -> &'static Converter {
        static SHARED: OnceLock<Converter> = OnceLock::new();
        SHARED.get_or_init(Converter::default)
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// The value of `family` whose pair is isomorphic to `pair`.
    pub fn decode(&self, pair: &CatalanPair, family: FamilyTag) -> Result<StructureValue> {
        let canon = canonicalize(pair)?;
        let tree = || pair_to_tree(canon.pair());
        let via_312 = || Ok::<_, Error>(assemble_perm_312(&tree()?));
        Ok(match family {
            FamilyTag::Dyck => StructureValue::Dyck(assemble_dyck(&tree()?)),
            FamilyTag::Matching => StructureValue::Matching(assemble_matching(&tree()?)),
            FamilyTag::PlaneTree => StructureValue::PlaneTree(assemble_plane_tree(&tree()?)),
            FamilyTag::Seq1 => StructureValue::Seq1(assemble_seq1(&tree()?)),
            FamilyTag::Staircase => StructureValue::Staircase(assemble_staircase(&tree()?)),
            FamilyTag::Perm(Pattern::P312) => StructureValue::Perm(Pattern::P312, via_312()?),
            FamilyTag::Perm(Pattern::P231) => StructureValue::Perm(Pattern::P231, via_312()?.inverse()),
            FamilyTag::Perm(Pattern::P213) => StructureValue::Perm(Pattern::P213, via_312()?.reverse()),
            FamilyTag::Perm(Pattern::P132) => {
                StructureValue::Perm(Pattern::P132, via_312()?.inverse().reverse())
            }
            FamilyTag::Perm(Pattern::P123) => match self.lookup(&canon, FamilyTag::Perm(Pattern::P321))? {
                StructureValue::Perm(_, p) => StructureValue::Perm(Pattern::P123, p.reverse()),
                other => return Err(Error::Invariant(format!("table returned {other:?}"))),
            },
            FamilyTag::Perm(Pattern::P321) | FamilyTag::Seq2 => self.lookup(&canon, family)?,
            FamilyTag::BinaryTree => StructureValue::BinaryTree(grammar_decompose(canon.pair())?),
            FamilyTag::Polyomino => StructureValue::Polyomino(ParallelogramPolyomino::from_grammar(
                &grammar_decompose(canon.pair())?,
            )),
        })
    }

    /// Table lookup for any family, regardless of whether a direct assembly
    /// exists.
    pub fn reference_decode(&self, pair: &CatalanPair, family: FamilyTag) -> Result<StructureValue> {
        self.lookup(&canonicalize(pair)?, family)
    }

    /// Encodes, canonicalizes and decodes into `to`.
    pub fn convert(&self, value: &StructureValue, from: FamilyTag, to: FamilyTag) -> Result<StructureValue> {
        if value.family() != from {
            return Err(Error::Validation(format!("value is a {}, not a {from}", value.family())));
        }
        self.decode(&value.encode()?, to)
    }

    fn lookup(&self, canon: &CanonicalPair, family: FamilyTag) -> Result<StructureValue> {
        let n = canon.size();
        self.table(family, n)?
            .get(canon)
            .cloned()
            .ok_or_else(|| Error::Invariant(format!("no {family} value of size {n} encodes to this pair")))
    }

    /// The `(family, n)` table, built on first use.
    pub fn table(&self, family: FamilyTag, n: usize) -> Result<Arc<Table>> {
        if n > self.capacity {
            return Err(Error::Capacity { n, cap: self.capacity });
        }
        if let Some(t) = self.tables.read().expect("table lock").get(&(family, n)) {
            return Ok(Arc::clone(t));
        }
        let built = Arc::new(build_table(family, n)?);
        let mut tables = self.tables.write().expect("table lock");
        Ok(Arc::clone(tables.entry((family, n)).or_insert(built)))
    }
}

fn build_table(family: FamilyTag, n: usize) -> Result<Table> {
    let mut table = HashMap::new();
    for value in family.enumerate(n) {
        let canon = canonicalize(&value.encode()?)?;
        if let Some(prev) = table.insert(canon, value.clone()) {
            return Err(Error::Invariant(format!("{family} values {prev} and {value} share a pair")));
        }
    }
    Ok(table)
}
