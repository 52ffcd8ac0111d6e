use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::relations::DecompTree;

/// A rectangle tiling of a staircase shape, stored as its unique
/// decomposition: the junction rectangle with the tiling `L` to its right
/// and the tiling `U` below it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StaircaseTiling {
    Empty,
    Node { lower: Box<StaircaseTiling>, upper: Box<StaircaseTiling> },
}

impl StaircaseTiling {
    pub fn node(lower: StaircaseTiling, upper: StaircaseTiling) -> Self {
        StaircaseTiling::Node { lower: Box::new(lower), upper: Box::new(upper) }
    }

    /// Number of rectangles, which equals the number of steps.
    pub fn size(&self) -> usize {
        match self {
            StaircaseTiling::Empty => 0,
            StaircaseTiling::Node { lower, upper } => 1 + lower.size() + upper.size(),
        }
    }

    pub fn enumerate(n: usize) -> Vec<StaircaseTiling> {
        // Shapes are already sorted by the shared "(l,r)" text form.
        DecompTree::enumerate(n).iter().map(StaircaseTiling::from_shape).collect()
    }

    fn from_shape(t: &DecompTree) -> StaircaseTiling {
        match t {
            DecompTree::Empty => StaircaseTiling::Empty,
            DecompTree::Node(l, u) => StaircaseTiling::node(Self::from_shape(l), Self::from_shape(u)),
        }
    }
}

impl fmt::Display for StaircaseTiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StaircaseTiling::Empty => write!(f, "e"),
            StaircaseTiling::Node { lower, upper } => write!(f, "({lower},{upper})"),
        }
    }
}

impl FromStr for StaircaseTiling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(StaircaseTiling::from_shape(&s.parse::<DecompTree>()?))
    }
}
