//! Scopes-type Morita equivalences between blocks: the weight-space vanishing
//! criterion, the abacus criterion, the block bijection `Phi_i` and the
//! resulting equivalence classes.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::abacus::phi_map;
use crate::blocks::{
    base_tuple, block_key, blocks_of_size, core_block_of, enumerate_block, is_empty_block, pairing,
    weight_of, BlockKey, CoreBlockData,
};
use crate::error::{Error, Result};
use crate::partition::{Bound, Multipartition};
use crate::quiver::{QuiverData, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// `k > 0`: divided powers of `F_i` add `k` nodes of residue `i`.
    #[serde(rename = "F")]
    FSide,
    /// `k < 0`: divided powers of `E_i` remove `|k|` nodes of residue `i`.
    #[serde(rename = "E")]
    ESide,
    #[serde(rename = "identity")]
    Identity,
}

impl Direction {
    fn of(k: i64) -> Self {
        match k {
            0 => Direction::Identity,
            k if k > 0 => Direction::FSide,
            _ => Direction::ESide,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WebsterVerdict {
    pub holds: bool,
    pub k: i64,
    pub direction: Direction,
    pub target: BlockKey,
}

fn require_nonempty(key: &BlockKey, bound: &Bound) -> Result<()> {
    key.quiver().require_affine()?;
    if is_empty_block(key, bound)? {
        return Err(Error::EmptyBlock);
    }
    Ok(())
}

fn is_empty_or_negative(key: Option<BlockKey>, bound: &Bound) -> Result<bool> {
    match key {
        Some(k) => is_empty_block(&k, bound),
        None => Ok(true),
    }
}

/// With `k = <Lambda - alpha, alpha_i^vee>`, the block is sent to `alpha + k e_i`.
/// For `k > 0` this is an equivalence iff the block `alpha - e_i` is empty,
/// for `k < 0` iff `alpha + e_i` is empty; `k = 0` is the identity.
pub fn webster_condition(key: &BlockKey, i: Residue, bound: &Bound) -> Result<WebsterVerdict> {
    require_nonempty(key, bound)?;
    let k = pairing(key.quiver(), key.content(), i);
    let direction = Direction::of(k);
    let holds = match direction {
        Direction::Identity => true,
        Direction::FSide => is_empty_or_negative(key.shifted(i, -1), bound)?,
        Direction::ESide => is_empty_or_negative(key.shifted(i, 1), bound)?,
    };
    let target = key.shifted(i, k).ok_or_else(|| {
        Error::Internal(format!("target of block {} at residue {i} has negative content", key.content()))
    })?;
    Ok(WebsterVerdict { holds, k, direction, target })
}

/// Audit data of the abacus criterion `delta_i >= 0` and `m <= K_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AliceAudit {
    pub holds: bool,
    pub delta: i64,
    pub weight: i64,
    pub core: BlockKey,
    pub core_weight: i64,
    pub m: u64,
    #[serde(rename = "K_i")]
    pub k_i: i64,
    pub core_data: CoreBlockData,
}

pub fn alice_condition(key: &BlockKey, i: Residue, bound: &Bound) -> Result<AliceAudit> {
    require_nonempty(key, bound)?;
    let q = key.quiver();
    let delta = -pairing(q, key.content(), i);
    let (core, m) = core_block_of(key, bound)?;
    let weight = weight_of(key.content(), q)?;
    let core_weight = weight_of(core.content(), q)?;
    if weight - core_weight != m as i64 * q.level() as i64 {
        return Err(Error::Internal(format!(
            "weight {weight} of {} is not {m} levels above core weight {core_weight}",
            key.content()
        )));
    }
    let core_data = base_tuple(&core, bound)?;
    let k_i = core_data.k_at(i);
    Ok(AliceAudit {
        holds: delta >= 0 && m as i64 <= k_i,
        delta,
        weight,
        core,
        core_weight,
        m,
        k_i,
        core_data,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Criteria {
    pub webster: bool,
    pub alice: bool,
}

/// The bijection `Phi_i` from a block onto its image block, with both criteria.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceWitness {
    pub source: BlockKey,
    pub target: BlockKey,
    pub i: Residue,
    pub k: i64,
    pub direction: Direction,
    pub criteria: Criteria,
    pub pairs: Vec<(Multipartition, Multipartition)>,
}

pub fn phi_block_map(key: &BlockKey, i: Residue, bound: &Bound) -> Result<EquivalenceWitness> {
    require_nonempty(key, bound)?;
    let q = key.quiver();
    let verdict = webster_condition(key, i, bound)?;
    let members = enumerate_block(key, bound)?;
    let pairs: Vec<(Multipartition, Multipartition)> = members
        .into_iter()
        .map(|l| phi_map(&l, q, i).map(|m| (l, m)))
        .collect::<Result<_>>()?;
    let target = verdict.target.clone();
    for (l, m) in &pairs {
        if block_key(m, q) != target {
            return Err(Error::Internal(format!("Phi_{i}({l}) = {m} lies outside the target block")));
        }
    }
    let mut images: Vec<Multipartition> = pairs.iter().map(|(_, m)| m.clone()).collect();
    images.sort_by(|a, b| b.enumeration_key().cmp(&a.enumeration_key()));
    if images != enumerate_block(&target, bound)? {
        return Err(Error::Internal(format!(
            "Phi_{i} is not a bijection from {} onto {}",
            key.content(),
            target.content()
        )));
    }
    if weight_of(key.content(), q)? != weight_of(target.content(), q)? {
        return Err(Error::Internal(format!("Phi_{i} changes the weight of {}", key.content())));
    }
    let alice = -verdict.k >= 0 && alice_condition(key, i, bound)?.holds;
    Ok(EquivalenceWitness {
        source: key.clone(),
        target,
        i,
        k: verdict.k,
        direction: verdict.direction,
        criteria: Criteria { webster: verdict.holds, alice },
        pairs,
    })
}

/// A connected component of blocks under certified witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoritaClass {
    pub representative: BlockKey,
    pub weight: i64,
    pub members: Vec<BlockKey>,
    pub witnesses: Vec<EquivalenceWitness>,
    pub open_at_boundary: bool,
}

/// The partition of all nonempty blocks of size at most `n_max` into classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoritaClasses {
    pub quiver: QuiverData,
    pub n_max: usize,
    pub classes: Vec<MoritaClass>,
    /// Every certified witness with `k != 0` inside the size range.
    #[serde(skip)]
    pub edges: Vec<EquivalenceWitness>,
}

impl MoritaClasses {
    pub fn class_of(&self, key: &BlockKey) -> Option<usize> {
        self.classes.iter().position(|c| c.members.contains(key))
    }

    pub fn to_dot(&self) -> String {
        let mut ids = BTreeMap::new();
        let mut out = String::from("digraph scopes {\n");
        for (c, class) in self.classes.iter().enumerate() {
            let _ = writeln!(out, "  subgraph cluster_{c} {{");
            let _ = writeln!(out, "    label=\"w={}\";", class.weight);
            for key in &class.members {
                let id = ids.len();
                ids.insert(key.clone(), id);
                let _ = writeln!(out, "    b{id} [label=\"n={}: {}\"];", key.size(), key.content());
            }
            out.push_str("  }\n");
        }
        for w in &self.edges {
            let _ = writeln!(
                out,
                "  b{} -> b{} [label=\"{}{}\"];",
                ids[&w.source],
                ids[&w.target],
                match w.direction {
                    Direction::FSide => "F",
                    Direction::ESide => "E",
                    Direction::Identity => "",
                },
                w.i
            );
        }
        out.push_str("}\n");
        out
    }
}

fn sort_key(key: &BlockKey) -> (usize, Vec<u64>) {
    (key.size(), key.content().dense(key.quiver()))
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

struct Scan {
    witnesses: Vec<EquivalenceWitness>,
    open: bool,
}

fn scan_block(key: &BlockKey, n_max: usize, bound: &Bound) -> Result<Scan> {
    let q = key.quiver();
    let mut witnesses = Vec::new();
    let mut open = false;
    for i in 0..q.ei() {
        let v = webster_condition(key, i, bound)?;
        if !v.holds || v.k == 0 {
            continue;
        }
        if v.target.size() > n_max {
            open = true;
        } else {
            witnesses.push(phi_block_map(key, i, bound)?);
        }
    }
    Ok(Scan { witnesses, open })
}

/// Classes of blocks of sizes `0..=n_max`, merged along webster-certified witnesses.
pub fn morita_classes(q: &QuiverData, n_max: usize, bound: &Bound) -> Result<MoritaClasses> {
    q.require_affine()?;
    bound.check(n_max, q.level())?;
    let inner = Bound { max_size: n_max + 1, ..*bound };
    let mut keys = Vec::new();
    for n in 0..=n_max {
        keys.extend(blocks_of_size(q, n, bound)?.into_iter().map(|b| b.key));
    }
    keys.sort_by_key(sort_key);
    let scans: Vec<Scan> = keys
        .par_iter()
        .map(|k| scan_block(k, n_max, &inner))
        .collect::<Result<_>>()?;

    let index: BTreeMap<&BlockKey, usize> = keys.iter().enumerate().map(|(n, k)| (k, n)).collect();
    let mut parent: Vec<usize> = (0..keys.len()).collect();
    let mut spanning = vec![false; scans.iter().map(|s| s.witnesses.len()).sum()];
    let mut edges = Vec::new();
    for s in &scans {
        for w in &s.witnesses {
            let a = find(&mut parent, index[&w.source]);
            let b = find(&mut parent, *index.get(&w.target).ok_or_else(|| {
                Error::Internal(format!("witness target {} is not an enumerated block", w.target.content()))
            })?);
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                parent[hi] = lo;
                spanning[edges.len()] = true;
            }
            edges.push(w.clone());
        }
    }

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for n in 0..keys.len() {
        groups.entry(find(&mut parent, n)).or_default().push(n);
    }
    let mut classes = Vec::with_capacity(groups.len());
    for (root, members) in groups {
        let weight = weight_of(keys[root].content(), q)?;
        for &n in &members {
            if weight_of(keys[n].content(), q)? != weight {
                return Err(Error::Internal(format!(
                    "class of {} mixes weights",
                    keys[root].content()
                )));
            }
        }
        let witnesses = edges
            .iter()
            .zip(&spanning)
            .filter(|(w, &s)| s && find(&mut parent, index[&w.source]) == root)
            .map(|(w, _)| w.clone())
            .collect();
        classes.push(MoritaClass {
            representative: keys[members[0]].clone(),
            weight,
            open_at_boundary: members.iter().any(|&n| scans[n].open),
            members: members.iter().map(|&n| keys[n].clone()).collect(),
            witnesses,
        });
    }
    Ok(MoritaClasses { quiver: q.clone(), n_max, classes, edges })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyRow {
    pub key: BlockKey,
    pub i: Residue,
    pub alice: AliceAudit,
    pub webster: WebsterVerdict,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub both: usize,
    pub alice_only: usize,
    pub webster_only: usize,
    pub neither: usize,
}

/// Agreement of the two criteria on every `(block, i)` with `delta_i >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub quiver: QuiverData,
    pub sizes: (usize, usize),
    pub tally: Tally,
    pub anomalies: Vec<ConsistencyRow>,
    #[serde(skip)]
    pub rows: Vec<ConsistencyRow>,
}

pub fn consistency_report(
    q: &QuiverData,
    sizes: RangeInclusive<usize>,
    bound: &Bound,
) -> Result<ConsistencyReport> {
    q.require_affine()?;
    let (lo, hi) = (*sizes.start(), *sizes.end());
    let mut keys = Vec::new();
    if lo <= hi {
        bound.check(hi, q.level())?;
        for n in sizes {
            keys.extend(blocks_of_size(q, n, bound)?.into_iter().map(|b| b.key));
        }
    }
    keys.sort_by_key(sort_key);
    let inner = Bound { max_size: hi.max(lo) + 1, ..*bound };
    let rows: Vec<Vec<ConsistencyRow>> = keys
        .par_iter()
        .map(|key| {
            let mut out = Vec::new();
            for i in 0..q.ei() {
                if pairing(q, key.content(), i) > 0 {
                    continue;
                }
                out.push(ConsistencyRow {
                    key: key.clone(),
                    i,
                    alice: alice_condition(key, i, &inner)?,
                    webster: webster_condition(key, i, &inner)?,
                });
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let rows: Vec<ConsistencyRow> = rows.into_iter().flatten().collect();
    let mut tally = Tally::default();
    for r in &rows {
        match (r.alice.holds, r.webster.holds) {
            (true, true) => tally.both += 1,
            (true, false) => tally.alice_only += 1,
            (false, true) => tally.webster_only += 1,
            (false, false) => tally.neither += 1,
        }
    }
    let anomalies = rows
        .iter()
        .filter(|r| r.alice.holds && !r.webster.holds)
        .cloned()
        .collect();
    Ok(ConsistencyReport { quiver: q.clone(), sizes: (lo, hi), tally, anomalies, rows })
}
