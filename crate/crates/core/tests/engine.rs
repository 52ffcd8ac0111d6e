mod common;

use std::collections::HashSet;

use proptest::prelude::*;

use catalan_pairs::engine::{
    assemble_dyck, assemble_matching, assemble_perm_312, assemble_plane_tree, assemble_seq1,
    assemble_staircase,
};
use catalan_pairs::relations::{enumerate_pairs, is_isomorphic};
use catalan_pairs::structures::Pattern;
use catalan_pairs::{
    canonicalize, convert, decode, pair_to_tree, pairfile, reference_decode, tree_to_pair, Converter,
    DecompTree, Error, FamilyTag, StructureValue,
};

fn seven_arches() -> catalan_pairs::CatalanPair {
    pairfile::parse(include_str!("golden/seven.pair")).unwrap().into_pair().unwrap()
}

#[test]
fn example_decomposition() {
    let tree = pair_to_tree(&seven_arches()).unwrap();
    assert_eq!(tree.to_string(), "((e,e),(e,(((e,e),(e,e)),e)))");
    let DecompTree::Node(a, b) = &tree else { panic!("empty tree") };
    assert_eq!((a.size(), b.size()), (1, 5));
    assert!(is_isomorphic(&tree_to_pair(&tree), &seven_arches()).unwrap());
    assert_eq!(assemble_plane_tree(&tree).to_string(), "(())()((())())");
}

#[test]
fn size_three_shapes() {
    let shapes: HashSet<String> =
        enumerate_pairs(3).iter().map(|p| pair_to_tree(p).unwrap().to_string()).collect();
    assert_eq!(shapes.len(), 5);
}

#[test]
fn assemblies_invert_the_encoders() {
    for n in 0..=7 {
        for t in DecompTree::enumerate(n) {
            let target = tree_to_pair(&t);
            let check = |v: StructureValue| {
                assert!(is_isomorphic(&v.encode().unwrap(), &target).unwrap(), "{v}");
            };
            check(StructureValue::Dyck(assemble_dyck(&t)));
            check(StructureValue::Matching(assemble_matching(&t)));
            check(StructureValue::PlaneTree(assemble_plane_tree(&t)));
            check(StructureValue::Perm(Pattern::P312, assemble_perm_312(&t)));
            check(StructureValue::Seq1(assemble_seq1(&t)));
            check(StructureValue::Staircase(assemble_staircase(&t)));
        }
    }
}

#[test]
fn reference_decoder_agrees_with_direct_decoders() {
    for tag in FamilyTag::ALL {
        for n in 0..=7 {
            for p in enumerate_pairs(n).iter() {
                assert_eq!(decode(p, tag).unwrap(), reference_decode(p, tag).unwrap(), "{tag}");
            }
        }
    }
}

#[test]
fn worked_pairs_decode_to_their_inputs() {
    let p321 = FamilyTag::Perm(Pattern::P321);
    let pair = p321.parse_value("2 3 1 4 5").unwrap().encode().unwrap();
    assert_eq!(reference_decode(&pair, p321).unwrap().to_string(), "2 3 1 4 5");

    let pair = FamilyTag::Seq2.parse_value("2 4 4 5 5 5 6 6").unwrap().encode().unwrap();
    assert_eq!(reference_decode(&pair, FamilyTag::Seq2).unwrap().to_string(), "2 4 4 5 5 5 6 6");

    let v = decode(&seven_arches(), FamilyTag::Perm(Pattern::P312)).unwrap();
    assert!(is_isomorphic(&v.encode().unwrap(), &seven_arches()).unwrap());
    assert_eq!(reference_decode(&seven_arches(), FamilyTag::Perm(Pattern::P312)).unwrap(), v);

    let seq1 = FamilyTag::Seq1.parse_value("5 2 4 4 5 6").unwrap();
    let tree = pair_to_tree(&seq1.encode().unwrap()).unwrap();
    assert_eq!(assemble_seq1(&tree).to_string(), "5 2 4 4 5 6");
}

#[test]
fn conversions_from_the_examples() {
    let m = FamilyTag::Matching.parse_value("1-4 2-3 5-6 7-14 8-11 9-10 12-13").unwrap();
    let t = convert(&m, FamilyTag::Matching, FamilyTag::PlaneTree).unwrap();
    assert_eq!(t.to_string(), "(())()((())())");

    let d = FamilyTag::Dyck.parse_value("UUDUDD").unwrap();
    let m = convert(&d, FamilyTag::Dyck, FamilyTag::Matching).unwrap();
    let StructureValue::Dyck(path) = &d else { unreachable!() };
    assert_eq!(
        canonicalize(&m.encode().unwrap()).unwrap(),
        canonicalize(&StructureValue::Matching(path.to_matching()).encode().unwrap()).unwrap()
    );
    assert_eq!(m.to_string(), "1-6 2-3 4-5");

    let d = FamilyTag::Dyck.parse_value("UUDDUD").unwrap();
    assert_eq!(convert(&d, FamilyTag::Dyck, FamilyTag::Perm(Pattern::P312)).unwrap().to_string(), "2 1 3");
}

#[test]
fn seq2_splits_at_its_fixed_point() {
    for n in 1..=9 {
        for v in FamilyTag::Seq2.enumerate(n) {
            let StructureValue::Seq2(seq) = &v else { unreachable!() };
            let d = catalan_pairs::decompose_pair(&v.encode().unwrap()).unwrap();
            let f = seq.fixed_point();
            assert_eq!(d.x + 1, f);
            assert_eq!(d.a_labels, (0..f - 1).collect::<Vec<_>>());
            assert_eq!(d.b_labels, (f..n).collect::<Vec<_>>());
        }
    }
}

#[test]
fn capacity_error_above_cap() {
    let small = Converter::with_capacity(5);
    let v = FamilyTag::Seq2.enumerate(6).remove(0);
    let err = small.convert(&v, FamilyTag::Seq2, FamilyTag::Perm(Pattern::P321)).unwrap_err();
    assert_eq!(err, Error::Capacity { n: 6, cap: 5 });
    // Encoding the source and assembling the target need no table.
    assert!(small.convert(&v, FamilyTag::Seq2, FamilyTag::Dyck).is_ok());
    assert!(Converter::with_capacity(6).convert(&v, FamilyTag::Seq2, FamilyTag::Perm(Pattern::P321)).is_ok());
}

#[test]
fn decoding_is_thread_safe() {
    let conv = std::sync::Arc::new(Converter::with_capacity(8));
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let conv = std::sync::Arc::clone(&conv);
            std::thread::spawn(move || {
                enumerate_pairs(6)
                    .iter()
                    .map(|p| conv.decode(p, FamilyTag::Seq2).unwrap().to_string())
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}

fn family() -> impl Strategy<Value = FamilyTag> {
    prop::sample::select(FamilyTag::ALL.to_vec())
}

proptest! {
    #[test]
    fn conversion_round_trips(from in family(), to in family(), n in 0usize..9, pick in any::<prop::sample::Index>()) {
        let values = from.enumerate(n);
        let v = &values[pick.index(values.len())];
        let there = convert(v, from, to).unwrap();
        prop_assert_eq!(there.size(), n);
        prop_assert_eq!(there.family(), to);
        prop_assert_eq!(&convert(&there, to, from).unwrap(), v);
        prop_assert_eq!(&convert(v, from, from).unwrap(), v);
    }
}
