use super::finish;
use crate::error::{Error, Result};
use crate::relations::{CatalanPair, Relation};
use crate::structures::{Pattern, Permutation};

/// Inversion/noninversion relations on positions: `i S j` when `i < j` and
/// `π(i) > π(j)`, `i R j` when `i < j` and `π(i) < π(j)`.
///
/// Defined for every permutation; the result is a Catalan pair exactly when
/// `π` avoids 312, so it is returned unvalidated.
pub fn encode_perm_312(p: &Permutation) -> (Relation, Relation) {
    let v = p.values();
    let n = v.len();
    let s = Relation::from_fn(n, |i, j| i < j && v[i] > v[j]);
    let r = Relation::from_fn(n, |i, j| i < j && v[i] < v[j]);
    (s, r)
}

/// A point `(i, π(i))` of the permutation diagram, both coordinates 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub pos: usize,
    pub val: usize,
}

impl Point {
    /// `self ≺ other`: strictly to the left.
    pub fn left_of(self, other: Point) -> bool {
        self.pos < other.pos
    }

    /// `self ◁ other`: strictly below.
    pub fn below(self, other: Point) -> bool {
        self.val < other.val
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet321 {
    points: Vec<Point>,
}

impl PointSet321 {
    pub fn new(p: &Permutation) -> Self {
        let points = p.values().iter().enumerate().map(|(i, &v)| Point { pos: i + 1, val: v }).collect();
        PointSet321 { points }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The point at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> Point {
        self.points[pos - 1]
    }

    /// First point lying above both `x` and `y` and to the left of both.
    pub fn find_cover(&self, x: Point, y: Point) -> Option<Point> {
        self.points.iter().copied().find(|&c| x.below(c) && y.below(c) && c.left_of(x) && c.left_of(y))
    }

    pub fn cover_exists(&self, x: Point, y: Point) -> bool {
        self.find_cover(x, y).is_some()
    }
}

/// Cover-based relations on positions, unvalidated and for any permutation:
/// `x R y` when `x ≺ y`, `x ◁ y` and `{x, y}` has no cover; `x S y` when
/// `x ≺ y` and `(x, y)` is not in `R̄`. Not always a Catalan pair, even on
/// 321-avoiders; see [`encode_perm_321`].
pub fn perm_321_relations(p: &Permutation) -> (Relation, Relation) {
    let pts = PointSet321::new(p);
    let n = p.size();
    let pt = |i: usize| pts.points[i];
    let r = Relation::from_fn(n, |i, j| {
        pt(i).left_of(pt(j)) && pt(i).below(pt(j)) && !pts.cover_exists(pt(i), pt(j))
    });
    let s = Relation::from_fn(n, |i, j| pt(i).left_of(pt(j)) && !r.contains(i, j) && !r.contains(j, i));
    (s, r)
}

/// Pops a stack fed with `1, 2, ...`: before reading position `i`, every
/// value up to `max(π(1..=i))` has been pushed, then one value is popped.
/// Sends `S_n(321)` bijectively onto the stack words, which avoid 312.
pub fn stack_order(p: &Permutation) -> Permutation {
    let mut stack = Vec::with_capacity(p.size());
    let mut pushed = 0;
    let mut out = Vec::with_capacity(p.size());
    for &v in p.values() {
        while pushed < v {
            pushed += 1;
            stack.push(pushed);
        }
        out.push(stack.pop().expect("a value was pushed for this position"));
    }
    Permutation::new(out).expect("each value is popped once")
}

/// Points labeled by position. Only defined on 321-avoiding permutations.
///
/// The pair is the inversion pair of [`stack_order`]. It equals the cover
/// relations of [`perm_321_relations`] whenever those form a Catalan pair;
/// on the other avoiders (the first is `2 4 1 3`) the cover relations are
/// not transitive, and no rule keeping every inversion in `S` can separate
/// `2 4 1 3` from `3 4 1 2`.
pub fn encode_perm_321(p: &Permutation) -> Result<CatalanPair> {
    if p.contains(Pattern::P321) {
        return Err(Error::Domain(format!("{p} contains 321")));
    }
    let (s, r) = encode_perm_312(&stack_order(p));
    finish("perm-321", s, r)
}

/// The pair for a member of `S_n(pattern)`. 312 and 321 are encoded
/// directly; the other classes are first mapped into one of those:
///
/// | class | transform          | into |
/// |-------|--------------------|------|
/// | 231   | inverse            | 312  |
/// | 213   | reverse            | 312  |
/// | 132   | reverse, inverse   | 312  |
/// | 123   | reverse            | 321  |
pub fn pair_for_avoidance_class(p: &Permutation, pattern: Pattern) -> Result<CatalanPair> {
    if p.contains(pattern) {
        return Err(Error::Domain(format!("{p} contains {pattern}")));
    }
    let via_312 = |q: Permutation| {
        let (s, r) = encode_perm_312(&q);
        finish("perm-312", s, r)
    };
    match pattern {
        Pattern::P312 => via_312(p.clone()),
        Pattern::P231 => via_312(p.inverse()),
        Pattern::P213 => via_312(p.reverse()),
        Pattern::P132 => via_312(p.reverse().inverse()),
        Pattern::P321 => encode_perm_321(p),
        Pattern::P123 => encode_perm_321(&p.reverse()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoders::fixtures::{indexed, lettered};
    use crate::relations::{check_axioms, Axiom, Witness};

    fn perm(text: &str) -> Permutation {
        text.parse().unwrap()
    }

    #[test]
    fn inversions_of_213564() {
        let (s, r) = encode_perm_312(&perm("2 1 3 5 6 4"));
        let expected = indexed(
            6,
            &[(1, 2), (4, 6), (5, 6)],
            &[(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 5)],
        );
        assert_eq!(CatalanPair::new(s, r).unwrap(), expected);
    }

    #[test]
    fn pattern_312_breaks_composition() {
        let (s, r) = encode_perm_312(&perm("3 1 2"));
        let report = check_axioms(&s, &r).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violation(Axiom::Composition).unwrap().witness, Witness::Triple(0, 1, 2));
    }

    #[test]
    fn covers_of_23145() {
        let p = perm("2 3 1 4 5");
        let expected = lettered(5, &["ac", "bc"], &["ab", "ad", "ae", "bd", "be", "cd", "ce", "de"]);
        assert_eq!(encode_perm_321(&p).unwrap(), expected);
    }

    #[test]
    fn cover_search() {
        let pts = PointSet321::new(&perm("3 1 4 2"));
        assert_eq!(pts.find_cover(pts.at(2), pts.at(4)), Some(Point { pos: 1, val: 3 }));
        assert!(!pts.cover_exists(pts.at(1), pts.at(3)));
        assert!(!pts.cover_exists(pts.at(2), pts.at(3)));
        let expected = lettered(4, &["ab", "ad", "bd", "cd"], &["ac", "bc"]);
        assert_eq!(encode_perm_321(&perm("3 1 4 2")).unwrap(), expected);
    }

    #[test]
    fn cover_relations_break_on_2413() {
        let (s, r) = perm_321_relations(&perm("2 4 1 3"));
        let report = check_axioms(&s, &r).unwrap();
        assert_eq!(report.violation(Axiom::StrictOrderS).unwrap().witness, Witness::Triple(0, 2, 3));
        let fixed = encode_perm_321(&perm("2 4 1 3")).unwrap();
        assert_eq!(fixed, lettered(4, &["ad", "bc", "bd", "cd"], &["ab", "ac"]));
    }

    #[test]
    fn inversions_in_s_force_a_collision() {
        // Both relations put every inversion in S; closing S under
        // transitivity leaves the same forest for the two permutations.
        let closed = |p: &str| {
            let (s, _) = perm_321_relations(&perm(p));
            let n = s.n();
            let mut m: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| s.contains(i, j)).collect()).collect();
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        m[i][j] |= m[i][k] && m[k][j];
                    }
                }
            }
            m
        };
        assert_eq!(closed("2 4 1 3"), closed("3 4 1 2"));
        assert_ne!(encode_perm_321(&perm("2 4 1 3")).unwrap(), encode_perm_321(&perm("3 4 1 2")).unwrap());
    }

    #[test]
    fn agrees_with_cover_relations_where_they_are_valid() {
        for n in 0..=8 {
            for p in Permutation::enumerate_avoiding(n, Pattern::P321) {
                let (s, r) = perm_321_relations(&p);
                if let Ok(literal) = CatalanPair::new(s, r) {
                    assert_eq!(encode_perm_321(&p).unwrap(), literal, "{p}");
                }
            }
        }
    }

    #[test]
    fn stack_order_examples() {
        assert_eq!(stack_order(&perm("2 3 1 4 5")).values(), &[2, 3, 1, 4, 5]);
        assert_eq!(stack_order(&perm("2 4 1 3")).values(), &[2, 4, 3, 1]);
        for n in 0..=7 {
            for p in Permutation::enumerate_avoiding(n, Pattern::P321) {
                assert!(stack_order(&p).avoids(Pattern::P312), "{p}");
            }
        }
    }

    #[test]
    fn cover_relations_do_not_separate_non_avoiders() {
        // 321 lies outside the class, and its relations coincide with those
        // of 312, so no encoder on all of S_3 could be injective this way.
        assert!(matches!(encode_perm_321(&perm("3 2 1")), Err(Error::Domain(_))));
        assert_eq!(perm_321_relations(&perm("3 2 1")), perm_321_relations(&perm("3 1 2")));
    }

    #[test]
    fn symmetry_classes() {
        for pattern in Pattern::ALL {
            for n in 0..=6 {
                for p in Permutation::enumerate_avoiding(n, pattern) {
                    assert!(pair_for_avoidance_class(&p, pattern).is_ok(), "{p} in {pattern}");
                }
            }
            let bad = pattern.as_permutation();
            assert!(matches!(pair_for_avoidance_class(&bad, pattern), Err(Error::Domain(_))));
        }
    }
}
