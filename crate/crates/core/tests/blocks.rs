mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{brute_multipartitions, brute_residues, random_quivers};
use hecke_core::blocks::{
    base_tuple, base_tuple_for, block_invariants, block_key, blocks_of_size, core_block_of,
    enumerate_block, hub_of, hub_of_content, is_core_block, is_empty_block, weight_of, BlockKey,
};
use hecke_core::partition::{content, is_multicore};
use hecke_core::{Bound, Content, QuiverData};

const B: Bound = Bound { max_size: 16, max_level: 8 };

fn grouping<K: Ord>(items: impl Iterator<Item = (K, usize)>) -> BTreeSet<Vec<usize>> {
    let mut groups: BTreeMap<K, Vec<usize>> = BTreeMap::new();
    for (k, n) in items {
        groups.entry(k).or_default().push(n);
    }
    groups.into_values().collect()
}

#[test]
fn residue_and_content_groupings_agree() {
    for q in random_quivers(&[2, 3, 4], &[1, 2, 3], 2, 11) {
        for n in 0..=5 {
            let all = brute_multipartitions(n, q.level());
            let by_res = grouping(all.iter().enumerate().map(|(k, l)| (brute_residues(l, &q), k)));
            let by_content = grouping(all.iter().enumerate().map(|(k, l)| (content(l, &q), k)));
            assert_eq!(by_res, by_content, "{q:?} n={n}");
        }
    }
}

#[test]
fn invariants_are_constant_on_blocks() {
    for q in random_quivers(&[2, 3, 4], &[1, 2, 3], 2, 12) {
        for n in 0..=6 {
            for block in blocks_of_size(&q, n, &B).unwrap() {
                let inv = block_invariants(&block.key).unwrap();
                assert!(inv.weight >= 0);
                for l in &block.members {
                    assert_eq!(hub_of(l, &q), inv.hub, "{l}");
                    assert_eq!(hub_of_content(&content(l, &q), &q), inv.hub);
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for q in random_quivers(&[0, 2, 3, 4], &[1, 2], 2, 13) {
        for n in 0..=6 {
            let all = brute_multipartitions(n, q.level());
            let mut expected: BTreeMap<Content, BTreeSet<_>> = BTreeMap::new();
            for l in &all {
                expected.entry(content(l, &q)).or_default().insert(l.clone());
            }
            for (alpha, members) in &expected {
                let key = BlockKey::new(q.clone(), alpha.clone()).unwrap();
                let got = enumerate_block(&key, &B).unwrap();
                assert_eq!(got.iter().cloned().collect::<BTreeSet<_>>(), *members);
                assert!(!is_empty_block(&key, &B).unwrap());
            }
        }
    }
}

#[test]
fn emptiness_matches_brute_force_on_all_contents() {
    for q in random_quivers(&[2, 3, 4], &[1, 2, 3], 1, 14) {
        let e = q.e() as usize;
        for n in 0..=6usize {
            let realized: BTreeSet<Content> = brute_multipartitions(n, q.level())
                .iter()
                .map(|l| content(l, &q))
                .collect();
            // every composition of n into e parts
            let mut dense = vec![0u64; e];
            fn walk(k: usize, left: u64, dense: &mut Vec<u64>, f: &mut dyn FnMut(&[u64])) {
                if k + 1 == dense.len() {
                    dense[k] = left;
                    f(dense);
                    return;
                }
                for c in 0..=left {
                    dense[k] = c;
                    walk(k + 1, left - c, dense, f);
                }
            }
            walk(0, n as u64, &mut dense, &mut |d| {
                let alpha = Content::from_dense(d);
                let key = BlockKey::new(q.clone(), alpha.clone()).unwrap();
                assert_eq!(is_empty_block(&key, &B).unwrap(), !realized.contains(&alpha), "{q:?} {alpha}");
            });
        }
    }
}

#[test]
fn core_blocks_match_the_multicore_characterisation() {
    for q in random_quivers(&[2, 3, 4], &[1, 2, 3], 2, 15) {
        for n in 0..=6 {
            for block in blocks_of_size(&q, n, &B).unwrap() {
                let core = is_core_block(&block.key, &B).unwrap();
                let members_ok = block.members.iter().all(|l| {
                    is_multicore(l, &q).unwrap() && base_tuple_for(l, &q).unwrap().is_some()
                });
                assert_eq!(core, members_ok, "{q:?} {}", block.key.content());
                let (c, m) = core_block_of(&block.key, &B).unwrap();
                assert!(is_core_block(&c, &B).unwrap());
                let w = |k: &BlockKey| weight_of(k.content(), &q).unwrap();
                assert_eq!(w(&block.key) - w(&c), m as i64 * q.level() as i64);
                assert_eq!(hub_of_content(c.content(), &q), hub_of_content(block.key.content(), &q));
                if core {
                    assert_eq!(m, 0);
                    let data = base_tuple(&block.key, &B).unwrap();
                    for l in &block.members {
                        check_base_tuple(l, &q, &data.multicharge, &data.base_tuple);
                    }
                }
            }
        }
    }
}

/// Every shifted level `l_ij` lies in `{b_i, b_i + 1}`.
fn check_base_tuple(l: &hecke_core::Multipartition, q: &QuiverData, a: &[i64], b: &[i64]) {
    let e = q.ei();
    for (j, p) in l.components().iter().enumerate() {
        for (i, &bi) in b.iter().enumerate() {
            let largest = (1..=p.rows() + e as usize + 1)
                .map(|r| p.part(r) as i64 + a[j] - r as i64)
                .filter(|x| (x - i as i64).rem_euclid(e) == 0)
                .max()
                .unwrap();
            let level = (largest - i as i64).div_euclid(e);
            assert!(level == bi || level == bi + 1, "{l} runner {i} level {level} base {bi}");
        }
    }
}

#[test]
fn null_root_lowers_weight_by_level() {
    for q in random_quivers(&[2, 3, 4], &[1, 2, 3], 1, 16) {
        for n in 0..=6 {
            for block in blocks_of_size(&q, n, &B).unwrap() {
                let alpha = block.key.content();
                let mut less = alpha.clone();
                for i in 0..q.ei() {
                    less = less.shifted(i, 1).unwrap();
                }
                let diff = weight_of(&less, &q).unwrap() - weight_of(alpha, &q).unwrap();
                assert_eq!(diff, q.level() as i64);
            }
        }
    }
}

#[test]
fn block_key_of_member_is_the_block() {
    let q = QuiverData::new(3, vec![0, 2]).unwrap();
    for block in blocks_of_size(&q, 5, &B).unwrap() {
        for l in &block.members {
            assert_eq!(block_key(l, &q), block.key);
        }
        assert_eq!(enumerate_block(&block.key, &B).unwrap(), block.members);
    }
}
