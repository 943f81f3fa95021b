#![allow(dead_code)]

use hecke_core::{Multipartition, Partition, QuiverData};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// For each `e` and level, a few multicharges drawn from a fixed seed.
pub fn random_quivers(es: &[i64], levels: &[usize], per: usize, seed: u64) -> Vec<QuiverData> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for &e in es {
        for &l in levels {
            for _ in 0..per {
                let kappa = (0..l).map(|_| rng.gen_range(-4..9)).collect();
                out.push(QuiverData::new(e, kappa).unwrap());
            }
        }
    }
    out
}

/// Partitions of `n` with parts at most `max`, by plain recursion.
fn partitions_bounded(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions_bounded(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every `level`-multipartition of `n`, in no particular order.
pub fn brute_multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    if level == 0 {
        return if n == 0 { vec![Multipartition::new(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for head in partitions_bounded(k, k) {
            for tail in brute_multipartitions(n - k, level - 1) {
                let mut comps = vec![Partition::new(head.clone()).unwrap()];
                comps.extend(tail.components().iter().cloned());
                out.push(Multipartition::new(comps));
            }
        }
    }
    out
}

/// Residues of every node, read straight off the diagram.
pub fn brute_residues(lambda: &Multipartition, q: &QuiverData) -> Vec<i64> {
    let mut out = Vec::new();
    for (j, p) in lambda.components().iter().enumerate() {
        for (b, &len) in p.parts().iter().enumerate() {
            for c in 1..=len {
                let r = q.kappa()[j] + c as i64 - (b as i64 + 1);
                out.push(if q.e() == 0 { r } else { r.rem_euclid(q.ei()) });
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn mp(c: &[&[usize]]) -> Multipartition {
    Multipartition::from_parts(c)
}
