mod common;

use std::collections::BTreeSet;

use hecke_core::blocks::{block_key, blocks_of_size, enumerate_block, weight_of};
use hecke_core::crystal::build_crystal;
use hecke_core::scopes::{
    consistency_report, morita_classes, phi_block_map, webster_condition, Direction,
};
use hecke_core::{Bound, Content, QuiverData};

const B: Bound = Bound { max_size: 16, max_level: 8 };

fn quivers() -> Vec<QuiverData> {
    [(2, vec![0]), (3, vec![0]), (4, vec![1]), (2, vec![0, 1]), (3, vec![0, 0]), (3, vec![2, 0, 1])]
        .into_iter()
        .map(|(e, k)| QuiverData::new(e, k).unwrap())
        .collect()
}

#[test]
fn certified_witnesses_are_symmetric_and_preserve_blocks() {
    let n_max = 6;
    for q in quivers() {
        let crystal = build_crystal(&q, n_max, &B).unwrap();
        for n in 0..=n_max {
            for block in blocks_of_size(&q, n, &B).unwrap() {
                for i in 0..q.ei() {
                    let v = webster_condition(&block.key, i, &B).unwrap();
                    if !v.holds || v.k == 0 || v.target.size() > n_max {
                        continue;
                    }
                    let back = webster_condition(&v.target, i, &B).unwrap();
                    assert!(back.holds, "{q:?} {} i={i}", block.key.content());
                    assert_eq!((back.k, back.target.clone()), (-v.k, block.key.clone()));
                    assert_ne!(back.direction, v.direction);

                    let w = phi_block_map(&block.key, i, &B).unwrap();
                    assert_eq!(w.pairs.len(), enumerate_block(&v.target, &B).unwrap().len());
                    assert_eq!(
                        weight_of(block.key.content(), &q).unwrap(),
                        weight_of(v.target.content(), &q).unwrap()
                    );
                    let labels: BTreeSet<_> = w
                        .pairs
                        .iter()
                        .filter(|(l, _)| crystal.contains(l))
                        .map(|(_, m)| m.clone())
                        .collect();
                    let target_labels: BTreeSet<_> = crystal
                        .vertices_of_size(v.target.size())
                        .iter()
                        .filter(|m| block_key(m, &q) == v.target)
                        .cloned()
                        .collect();
                    assert_eq!(labels, target_labels, "{q:?} {} i={i}", block.key.content());
                }
            }
        }
    }
}

#[test]
fn classes_partition_every_block() {
    for q in quivers() {
        let c = morita_classes(&q, 5, &B).unwrap();
        let mut all = BTreeSet::new();
        let mut count = 0;
        for class in &c.classes {
            assert_eq!(class.representative, class.members[0]);
            assert_eq!(class.witnesses.len() + 1, class.members.len());
            for k in &class.members {
                assert!(all.insert(k.clone()));
                assert_eq!(weight_of(k.content(), &q).unwrap(), class.weight);
            }
            count += class.members.len();
        }
        let expected: usize = (0..=5).map(|n| blocks_of_size(&q, n, &B).unwrap().len()).sum();
        assert_eq!(count, expected);
    }
}

#[test]
fn level_one_e3_merges_two_and_one() {
    let q = QuiverData::new(3, vec![0]).unwrap();
    let c = morita_classes(&q, 2, &B).unwrap();
    let two = block_key(&common::mp(&[&[2]]), &q);
    let one = block_key(&common::mp(&[&[1]]), &q);
    assert_eq!(c.class_of(&two), c.class_of(&one));
    let v = webster_condition(&two, 1, &B).unwrap();
    assert_eq!((v.holds, v.k, v.direction), (true, -1, Direction::ESide));
    assert!(enumerate_block(&two.shifted(1, 1).unwrap(), &B).unwrap().is_empty());
    assert_eq!(v.target.content(), &Content::from_dense(&[1]));
}

#[test]
fn no_anomalies_on_small_range() {
    for q in quivers() {
        let r = consistency_report(&q, 0..=6, &B).unwrap();
        assert!(r.anomalies.is_empty(), "{:?}", r.anomalies);
        assert_eq!(
            r.rows.len(),
            r.tally.both + r.tally.alice_only + r.tally.webster_only + r.tally.neither
        );
    }
}

