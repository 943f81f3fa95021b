//! Blocks: content keys, weight and hub, enumeration of block members,
//! emptiness, core blocks, base tuples and the constants `K_i`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::abacus::runner_levels;
use crate::error::{Error, Result};
use crate::partition::{
    addable_nodes, content, enumerate_multipartitions, removable_nodes, residue, Bound, Content,
    Multipartition, Partition,
};
use crate::quiver::{QuiverData, Residue};

/// A block, identified by the residue content of its members.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BlockKey {
    #[serde(flatten)]
    quiver: QuiverData,
    content: Content,
}

impl BlockKey {
    pub fn new(quiver: QuiverData, content: Content) -> Result<Self> {
        content.check(&quiver)?;
        Ok(BlockKey { quiver, content })
    }

    pub fn quiver(&self) -> &QuiverData {
        &self.quiver
    }

    pub fn content(&self) -> &Content {
        &self.content
    }

    pub fn size(&self) -> usize {
        self.content.total() as usize
    }

    /// Key with content `alpha + delta * e_i`; `None` when a count goes negative.
    pub fn shifted(&self, i: Residue, delta: i64) -> Option<BlockKey> {
        self.content.shifted(i, delta).map(|content| BlockKey {
            quiver: self.quiver.clone(),
            content,
        })
    }

    fn with_content(&self, content: Content) -> BlockKey {
        BlockKey {
            quiver: self.quiver.clone(),
            content,
        }
    }
}

/// Weight and hub of a block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockInvariants {
    pub weight: i64,
    pub hub: BTreeMap<Residue, i64>,
}

/// Core block data: shifted multicharge, base tuple and the constants `K_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreBlockData {
    pub multicharge: Vec<i64>,
    pub base_tuple: Vec<i64>,
    #[serde(rename = "K")]
    pub k: Vec<i64>,
}

impl CoreBlockData {
    pub fn k_at(&self, i: Residue) -> i64 {
        self.k[i as usize]
    }
}

pub fn block_key(lambda: &Multipartition, q: &QuiverData) -> BlockKey {
    BlockKey {
        quiver: q.clone(),
        content: content(lambda, q),
    }
}

/// `<Lambda - alpha, alpha_i^vee> = <Lambda, alpha_i> - sum_j c_j a_ij`.
pub fn pairing(q: &QuiverData, alpha: &Content, i: Residue) -> i64 {
    let a = q.cartan();
    let mut acc = q.lambda_at(i) as i64;
    for j in a.support(i) {
        acc -= alpha.get(j) as i64 * a.entry(i, j);
    }
    acc
}

/// Residues carrying a possibly nonzero hub entry.
fn hub_residues(q: &QuiverData, alpha: &Content) -> Vec<Residue> {
    match q.residues() {
        Some(r) => r.collect(),
        None => {
            let mut v: Vec<Residue> = q.kappa().to_vec();
            for (i, _) in alpha.iter() {
                v.extend([i - 1, i, i + 1]);
            }
            v.sort_unstable();
            v.dedup();
            v
        }
    }
}

fn normalise_hub(q: &QuiverData, hub: BTreeMap<Residue, i64>) -> BTreeMap<Residue, i64> {
    if q.is_affine() {
        let mut full: BTreeMap<Residue, i64> = (0..q.ei()).map(|i| (i, 0)).collect();
        full.extend(hub);
        full
    } else {
        hub.into_iter().filter(|&(_, d)| d != 0).collect()
    }
}

/// Hub `delta_i = #removable i-nodes - #addable i-nodes`, counted on the diagram.
pub fn hub_of(lambda: &Multipartition, q: &QuiverData) -> BTreeMap<Residue, i64> {
    let mut hub = BTreeMap::new();
    for n in removable_nodes(lambda, q, None) {
        *hub.entry(residue(&n, q)).or_insert(0) += 1;
    }
    for n in addable_nodes(lambda, q, None) {
        *hub.entry(residue(&n, q)).or_insert(0) -= 1;
    }
    normalise_hub(q, hub)
}

/// Hub computed from the content alone via the Cartan pairing.
pub fn hub_of_content(alpha: &Content, q: &QuiverData) -> BTreeMap<Residue, i64> {
    let hub = hub_residues(q, alpha)
        .into_iter()
        .map(|i| (i, -pairing(q, alpha, i)))
        .collect();
    normalise_hub(q, hub)
}

/// `w = sum_j c_{kappa_j mod e} - 1/2 sum_i (c_i - c_{i+1})^2`, and 0 when `e = 0`.
pub fn weight_of(alpha: &Content, q: &QuiverData) -> Result<i64> {
    if !q.is_affine() {
        return Ok(0);
    }
    let linear: i64 = (1..=q.level()).map(|j| alpha.get(q.kappa_bar(j)) as i64).sum();
    let squares: i64 = (0..q.ei())
        .map(|i| {
            let d = alpha.get(i) as i64 - alpha.get(q.next(i)) as i64;
            d * d
        })
        .sum();
    if squares % 2 != 0 {
        return Err(Error::Internal(format!(
            "odd square sum {squares} in weight of content {alpha}"
        )));
    }
    Ok(linear - squares / 2)
}

/// Weight and hub of a nonempty block.
pub fn block_invariants(key: &BlockKey) -> Result<BlockInvariants> {
    let weight = weight_of(&key.content, &key.quiver)?;
    if weight < 0 {
        return Err(Error::Internal(format!(
            "negative weight {weight} for content {}",
            key.content
        )));
    }
    Ok(BlockInvariants {
        weight,
        hub: hub_of_content(&key.content, &key.quiver),
    })
}

/// Maps residues to dense indices: `i mod e` for `e >= 2`, or an offset into
/// the support window of the content when `e = 0`.
struct Indexer {
    e: i64,
    lo: i64,
    dim: usize,
}

impl Indexer {
    fn new(q: &QuiverData, alpha: &Content) -> Self {
        if q.is_affine() {
            Indexer { e: q.ei(), lo: 0, dim: q.e() as usize }
        } else {
            let lo = alpha.iter().map(|(i, _)| i).min().unwrap_or(0);
            let hi = alpha.iter().map(|(i, _)| i).max().unwrap_or(-1);
            Indexer { e: 0, lo, dim: (hi - lo + 1).max(0) as usize }
        }
    }

    fn index(&self, r: i64) -> Option<usize> {
        if self.e > 0 {
            Some(r.rem_euclid(self.e) as usize)
        } else {
            let k = r - self.lo;
            (k >= 0 && (k as usize) < self.dim).then_some(k as usize)
        }
    }

    fn phase(&self, b: usize) -> usize {
        if self.e > 0 {
            b % self.e as usize
        } else {
            b
        }
    }
}

type StateKey = (Vec<u32>, usize, usize, usize);

/// Pruned depth-first search over multipartitions with a given content.
///
/// Components are built row by row; a row of length `L` in row `b` of
/// component `j` consumes the residues `kappa_j + c - b` for `c = 1..=L`.
/// Feasibility of a state is memoised on
/// `(remaining content, component, row phase, row-length cap)`.
struct BlockSearch<'a> {
    q: &'a QuiverData,
    idx: Indexer,
    memo: HashMap<StateKey, bool>,
}

impl<'a> BlockSearch<'a> {
    fn new(q: &'a QuiverData, alpha: &Content) -> Self {
        BlockSearch { q, idx: Indexer::new(q, alpha), memo: HashMap::new() }
    }

    fn initial(&self, alpha: &Content) -> Option<Vec<u32>> {
        let mut rem = vec![0u32; self.idx.dim];
        for (i, c) in alpha.iter() {
            rem[self.idx.index(i)?] += c as u32;
        }
        Some(rem)
    }

    /// Consumes row `b` of component `j0` with length `len`; `false` if the
    /// content runs out.
    fn take_row(&self, rem: &mut [u32], j0: usize, b: usize, len: usize) -> bool {
        let k = self.q.kappa()[j0];
        for c in 1..=len {
            match self.idx.index(k + c as i64 - b as i64) {
                Some(t) if rem[t] > 0 => rem[t] -= 1,
                _ => return false,
            }
        }
        true
    }

    fn feasible(&mut self, rem: &[u32], j0: usize, b: usize, cap: usize) -> bool {
        let total: u32 = rem.iter().sum();
        if j0 == self.q.level() {
            return total == 0;
        }
        let cap = cap.min(total as usize);
        let key = (rem.to_vec(), j0, self.idx.phase(b), cap);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut ok = self.feasible(rem, j0 + 1, 1, usize::MAX);
        let mut buf = rem.to_vec();
        for len in 1..=cap {
            if ok {
                break;
            }
            buf.copy_from_slice(rem);
            if !self.take_row(&mut buf, j0, b, len) {
                break;
            }
            ok = self.feasible(&buf, j0, b + 1, len);
        }
        self.memo.insert(key, ok);
        ok
    }

    fn collect(
        &mut self,
        rem: &[u32],
        j0: usize,
        b: usize,
        cap: usize,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Multipartition>,
    ) {
        if j0 == self.q.level() {
            out.push(Multipartition::new(
                current
                    .iter()
                    .map(|p| Partition::new(p.clone()).expect("rows are weakly decreasing"))
                    .collect(),
            ));
            return;
        }
        let total: u32 = rem.iter().sum();
        let cap = cap.min(total as usize);
        let mut buf = rem.to_vec();
        for len in (1..=cap).rev() {
            buf.copy_from_slice(rem);
            if !self.take_row(&mut buf, j0, b, len) || !self.feasible(&buf, j0, b + 1, len) {
                continue;
            }
            current[j0].push(len);
            self.collect(&buf, j0, b + 1, len, current, out);
            current[j0].pop();
        }
        if self.feasible(rem, j0 + 1, 1, usize::MAX) {
            self.collect(rem, j0 + 1, 1, usize::MAX, current, out);
        }
    }
}

/// All multipartitions with the key's content, in the enumeration order of
/// [`enumerate_multipartitions`].
pub fn enumerate_block(key: &BlockKey, bound: &Bound) -> Result<Vec<Multipartition>> {
    let q = &key.quiver;
    bound.check(key.size(), q.level())?;
    let mut search = BlockSearch::new(q, &key.content);
    let Some(rem) = search.initial(&key.content) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    if search.feasible(&rem, 0, 1, usize::MAX) {
        let mut current = vec![Vec::new(); q.level()];
        search.collect(&rem, 0, 1, usize::MAX, &mut current, &mut out);
    }
    out.sort_by(|a, b| b.enumeration_key().cmp(&a.enumeration_key()));
    Ok(out)
}

/// True iff no multipartition has the key's content.
pub fn is_empty_block(key: &BlockKey, bound: &Bound) -> Result<bool> {
    let q = &key.quiver;
    bound.check(key.size(), q.level())?;
    let mut search = BlockSearch::new(q, &key.content);
    Ok(match search.initial(&key.content) {
        Some(rem) => !search.feasible(&rem, 0, 1, usize::MAX),
        None => true,
    })
}

/// The null root `sum_i alpha_i`.
pub fn null_root(q: &QuiverData) -> Result<Content> {
    q.require_affine()?;
    Ok(Content::from_dense(&vec![1; q.e() as usize]))
}

fn minus_null_root(q: &QuiverData, alpha: &Content) -> Option<Content> {
    let mut out = alpha.clone();
    for i in 0..q.ei() {
        out = out.shifted(i, -1)?;
    }
    Some(out)
}

/// The core block of a nonempty block and the number `m` of null roots
/// removed to reach it; `w(B) - w(core) = m * level`.
pub fn core_block_of(key: &BlockKey, bound: &Bound) -> Result<(BlockKey, u64)> {
    key.quiver.require_affine()?;
    if is_empty_block(key, bound)? {
        return Err(Error::EmptyBlock);
    }
    let mut current = key.clone();
    let mut m = 0;
    while let Some(next) = minus_null_root(&key.quiver, &current.content) {
        let next = key.with_content(next);
        if is_empty_block(&next, bound)? {
            break;
        }
        current = next;
        m += 1;
    }
    Ok((current, m))
}

/// Every block is core when `e = 0`; otherwise a block is core iff removing
/// a null root empties it.
pub fn is_core_block(key: &BlockKey, bound: &Bound) -> Result<bool> {
    if !key.quiver.is_affine() {
        return Ok(true);
    }
    Ok(core_block_of(key, bound)?.1 == 0)
}

/// `K_i = b_i - b_{i-1} - 1` for `i != 0` and `K_0 = b_0 - b_{e-1} - 2`.
pub fn k_constants(base: &[i64]) -> Vec<i64> {
    let e = base.len();
    (0..e)
        .map(|i| {
            if i == 0 {
                base[0] - base[e - 1] - 2
            } else {
                base[i] - base[i - 1] - 1
            }
        })
        .collect()
}

/// Searches a base tuple for a single multipartition.
///
/// Component charges are shifted by `e * s_j` with `s_1 = 0`, which moves every
/// level of component `j` by `s_j`. Among shift vectors making each runner's
/// levels span at most `{b_i, b_i + 1}`, the one minimising `sum |s_j|` (then
/// lexicographically smallest) is used. `b_i` is the lower level when the
/// levels differ and the common level otherwise.
pub fn base_tuple_for(lambda: &Multipartition, q: &QuiverData) -> Result<Option<CoreBlockData>> {
    let levels = runner_levels(lambda, q)?;
    let e = q.e() as usize;
    let level = q.level();
    let mut candidates: Vec<Vec<i64>> = vec![vec![0]];
    for j in 1..level {
        let lo = (0..e).map(|i| levels[i][0] - levels[i][j] - 1).max().unwrap();
        let hi = (0..e).map(|i| levels[i][0] - levels[i][j] + 1).min().unwrap();
        candidates.push((lo..=hi).collect());
    }
    let mut best: Option<(i64, Vec<i64>, Vec<i64>)> = None;
    let mut shifts = vec![0i64; level];
    let mut pick = vec![0usize; level];
    'outer: loop {
        if candidates.iter().all(|c| !c.is_empty()) {
            for j in 0..level {
                shifts[j] = candidates[j][pick[j]];
            }
            let mut base = Vec::with_capacity(e);
            let mut ok = true;
            for row in &levels {
                let shifted: Vec<i64> = row.iter().zip(&shifts).map(|(l, s)| l + s).collect();
                let (mn, mx) = (*shifted.iter().min().unwrap(), *shifted.iter().max().unwrap());
                if mx - mn > 1 {
                    ok = false;
                    break;
                }
                base.push(mn);
            }
            if ok {
                let cost: i64 = shifts.iter().map(|s| s.abs()).sum();
                let better = match &best {
                    None => true,
                    Some((c, s, _)) => (cost, &shifts) < (*c, s),
                };
                if better {
                    best = Some((cost, shifts.clone(), base));
                }
            }
        } else {
            break;
        }
        // odometer over candidate indices
        let mut pos = level;
        loop {
            if pos == 0 {
                break 'outer;
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < candidates[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
    Ok(best.map(|(_, shifts, base)| CoreBlockData {
        multicharge: q
            .kappa()
            .iter()
            .zip(&shifts)
            .map(|(k, s)| k + q.ei() * s)
            .collect(),
        k: k_constants(&base),
        base_tuple: base,
    }))
}

/// Base tuple of a core block, computed from its first member.
pub fn base_tuple(core_key: &BlockKey, bound: &Bound) -> Result<CoreBlockData> {
    let q = &core_key.quiver;
    q.require_affine()?;
    if !is_core_block(core_key, bound)? {
        return Err(Error::Internal(format!(
            "base tuple requested for non-core block {}",
            core_key.content
        )));
    }
    let members = enumerate_block(core_key, bound)?;
    let first = members.first().ok_or(Error::EmptyBlock)?;
    base_tuple_for(first, q)?.ok_or_else(|| {
        Error::Internal(format!("no base tuple for core block member {first}"))
    })
}

/// A nonempty block with its members, as produced by [`blocks_of_size`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub key: BlockKey,
    pub members: Vec<Multipartition>,
}

/// Groups all multipartitions of `n` by content; blocks sorted by content.
pub fn blocks_of_size(q: &QuiverData, n: usize, bound: &Bound) -> Result<Vec<Block>> {
    let mut groups: BTreeMap<Content, Vec<Multipartition>> = BTreeMap::new();
    for lambda in enumerate_multipartitions(n, q.level(), bound)? {
        groups.entry(content(&lambda, q)).or_default().push(lambda);
    }
    Ok(groups
        .into_iter()
        .map(|(content, members)| Block {
            key: BlockKey { quiver: q.clone(), content },
            members,
        })
        .collect())
}
