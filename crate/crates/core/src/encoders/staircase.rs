use crate::relations::{compose_pair, CatalanPair};
use crate::structures::StaircaseTiling;

/// Rectangles below the junction rectangle relate to it by `S`, and it relates
/// to the ones on its right by `R`: the upper part takes the `A` role and the
/// lower part the `B` role of [`compose_pair`].
pub fn encode_staircase(t: &StaircaseTiling) -> CatalanPair {
    match t {
        StaircaseTiling::Empty => CatalanPair::empty(),
        StaircaseTiling::Node { lower, upper } => {
            compose_pair(&encode_staircase(upper), &encode_staircase(lower))
        }
    }
}
