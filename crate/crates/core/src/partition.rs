//! Partitions, multipartitions, nodes, residues and residue contents.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{QuiverData, Residue};

/// A partition stored as its nonzero parts, weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the 1-based row `b` (zero past the last row).
    pub fn part(&self, b: usize) -> usize {
        if b == 0 {
            return usize::MAX;
        }
        self.0.get(b - 1).copied().unwrap_or(0)
    }

    /// Rows `b` whose row-end `(b, part(b) + 1)` is addable, top to bottom.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.rows() + 1)
            .filter(|&b| b == 1 || self.part(b - 1) > self.part(b))
            .collect()
    }

    /// Rows `b` whose last node `(b, part(b))` is removable, top to bottom.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.rows())
            .filter(|&b| self.part(b + 1) < self.part(b))
            .collect()
    }

    /// Adds a node at the end of row `b`; the row must be addable.
    pub fn grow_row(&mut self, b: usize) {
        debug_assert!(self.addable_rows().contains(&b));
        if b == self.rows() + 1 {
            self.0.push(1);
        } else {
            self.0[b - 1] += 1;
        }
    }

    /// Removes the last node of row `b`; the row must be removable.
    pub fn shrink_row(&mut self, b: usize) {
        debug_assert!(self.removable_rows().contains(&b));
        self.0[b - 1] -= 1;
        if self.0[b - 1] == 0 {
            self.0.pop();
        }
    }

    /// `lambda_b - lambda_{b+1} < e` for every row.
    pub fn is_e_restricted(&self, e: usize) -> bool {
        (1..=self.rows()).all(|b| self.part(b) - self.part(b + 1) < e)
    }

    /// True iff no rim `e`-hook can be removed: `beta in B => beta - e in B`.
    pub fn is_e_core(&self, e: usize) -> bool {
        let k = self.rows() as i64;
        let betas: Vec<i64> = (1..=k).map(|b| self.part(b as usize) as i64 - b).collect();
        betas.iter().all(|&x| {
            let y = x - e as i64;
            y < -k || betas.contains(&y)
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An ordered tuple of partitions, one per component of the level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition(Vec<Partition>);

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Multipartition(components)
    }

    /// Convenience constructor from raw parts; panics on invalid input.
    pub fn from_parts(components: &[&[usize]]) -> Self {
        Multipartition(
            components
                .iter()
                .map(|c| Partition::new(c.to_vec()).expect("valid partition"))
                .collect(),
        )
    }

    pub fn empty(level: usize) -> Self {
        Multipartition(vec![Partition::empty(); level])
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, j: usize) -> &Partition {
        &self.0[j - 1]
    }

    pub fn component_mut(&mut self, j: usize) -> &mut Partition {
        &mut self.0[j - 1]
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.0.iter().map(Partition::size).collect()
    }

    /// Checks the component count against the quiver.
    pub fn check(&self, q: &QuiverData) -> Result<()> {
        if self.level() != q.level() {
            return Err(Error::LevelMismatch {
                expected: q.level(),
                found: self.level(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, node: &Node) -> bool {
        node.component >= 1
            && node.component <= self.level()
            && node.row >= 1
            && node.col >= 1
            && node.col <= self.component(node.component).part(node.row)
    }

    /// All nodes of the Young diagram, component by component, row by row.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.0.iter().enumerate().flat_map(|(j, p)| {
            p.parts().iter().enumerate().flat_map(move |(b, &len)| {
                (1..=len).map(move |c| Node::new(b + 1, c, j + 1))
            })
        })
    }

    /// The multipartition with an addable node added.
    pub fn with_added(&self, node: &Node) -> Multipartition {
        let mut out = self.clone();
        out.component_mut(node.component).grow_row(node.row);
        out
    }

    /// The multipartition with a removable node removed.
    pub fn with_removed(&self, node: &Node) -> Multipartition {
        let mut out = self.clone();
        out.component_mut(node.component).shrink_row(node.row);
        out
    }

    /// Sort key realising the enumeration order: larger keys come first.
    pub fn enumeration_key(&self) -> (Vec<usize>, &[Partition]) {
        (self.sizes(), &self.0)
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A node `(row, col, component)`, all 1-based. Serialised as `[b, c, j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub component: usize,
}

impl From<(usize, usize, usize)> for Node {
    fn from((row, col, component): (usize, usize, usize)) -> Self {
        Node { row, col, component }
    }
}

impl From<Node> for (usize, usize, usize) {
    fn from(n: Node) -> Self {
        (n.row, n.col, n.component)
    }
}

impl Node {
    pub fn new(row: usize, col: usize, component: usize) -> Self {
        Node { row, col, component }
    }

    /// Position in the "above" order: smaller keys are higher.
    pub fn above_key(&self) -> (usize, usize) {
        (self.component, self.row)
    }

    /// `(b,c,j)` is above `(b',c',j')` iff `j < j'`, or `j = j'` and `b < b'`.
    pub fn is_above(&self, other: &Node) -> bool {
        self.above_key() < other.above_key()
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.row, self.col, self.component)
    }
}

/// Residue `kappa_j + c - b`, reduced mod `e` when `e >= 2`.
pub fn residue(node: &Node, q: &QuiverData) -> Residue {
    q.reduce(q.charge(node.component) + node.col as i64 - node.row as i64)
}

/// Counts of nodes per residue. Zero counts are never stored, so equality is
/// structural. Serialised as a map `residue -> count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "BTreeMap<Residue, u64>", into = "BTreeMap<Residue, u64>")]
pub struct Content(BTreeMap<Residue, u64>);

impl From<BTreeMap<Residue, u64>> for Content {
    fn from(map: BTreeMap<Residue, u64>) -> Self {
        Content::from_map(map)
    }
}

impl From<Content> for BTreeMap<Residue, u64> {
    fn from(c: Content) -> Self {
        c.0
    }
}

impl Content {
    pub fn zero() -> Self {
        Content(BTreeMap::new())
    }

    pub fn from_map(map: BTreeMap<Residue, u64>) -> Self {
        Content(map.into_iter().filter(|&(_, c)| c > 0).collect())
    }

    /// Dense content `(c_0, ..., c_{e-1})`.
    pub fn from_dense(counts: &[u64]) -> Self {
        Content::from_map(
            counts
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as Residue, c))
                .collect(),
        )
    }

    pub fn get(&self, i: Residue) -> u64 {
        self.0.get(&i).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Residue, u64)> + '_ {
        self.0.iter().map(|(&i, &c)| (i, c))
    }

    pub fn as_map(&self) -> &BTreeMap<Residue, u64> {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn increment(&mut self, i: Residue) {
        *self.0.entry(i).or_insert(0) += 1;
    }

    /// `self + delta * e_i`, or `None` if a coordinate would go negative.
    pub fn shifted(&self, i: Residue, delta: i64) -> Option<Content> {
        let c = self.get(i) as i64 + delta;
        if c < 0 {
            return None;
        }
        let mut out = self.clone();
        if c == 0 {
            out.0.remove(&i);
        } else {
            out.0.insert(i, c as u64);
        }
        Some(out)
    }

    /// Dense vector over `0..e`; requires `e >= 2`.
    pub fn dense(&self, q: &QuiverData) -> Vec<u64> {
        (0..q.ei()).map(|i| self.get(i)).collect()
    }

    /// Checks every residue lies in the residue set of `q`.
    pub fn check(&self, q: &QuiverData) -> Result<()> {
        match self.0.keys().find(|&&i| !q.is_residue(i)) {
            Some(&i) => Err(Error::InvalidResidue(i)),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Content {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *c == 1 {
                write!(f, "a{i}")?;
            } else {
                write!(f, "{c}a{i}")?;
            }
        }
        Ok(())
    }
}

/// Residue counts of all nodes of `lambda`.
pub fn content(lambda: &Multipartition, q: &QuiverData) -> Content {
    let mut out = Content::zero();
    for node in lambda.nodes() {
        out.increment(residue(&node, q));
    }
    out
}

/// The residue multiset, sorted.
pub fn residue_multiset(lambda: &Multipartition, q: &QuiverData) -> Vec<Residue> {
    let mut v: Vec<Residue> = lambda.nodes().map(|n| residue(&n, q)).collect();
    v.sort_unstable();
    v
}

fn sorted_above_first(mut nodes: Vec<Node>) -> Vec<Node> {
    nodes.sort_by_key(Node::above_key);
    nodes
}

/// Addable nodes (optionally of residue `i`), highest first.
pub fn addable_nodes(lambda: &Multipartition, q: &QuiverData, i: Option<Residue>) -> Vec<Node> {
    let mut out = Vec::new();
    for (j0, p) in lambda.components().iter().enumerate() {
        for b in p.addable_rows() {
            let node = Node::new(b, p.part(b) + 1, j0 + 1);
            if i.is_none_or(|i| residue(&node, q) == i) {
                out.push(node);
            }
        }
    }
    sorted_above_first(out)
}

/// Removable nodes (optionally of residue `i`), highest first.
pub fn removable_nodes(lambda: &Multipartition, q: &QuiverData, i: Option<Residue>) -> Vec<Node> {
    let mut out = Vec::new();
    for (j0, p) in lambda.components().iter().enumerate() {
        for b in p.removable_rows() {
            let node = Node::new(b, p.part(b), j0 + 1);
            if i.is_none_or(|i| residue(&node, q) == i) {
                out.push(node);
            }
        }
    }
    sorted_above_first(out)
}

/// Every component satisfies `lambda_b - lambda_{b+1} < e`.
pub fn is_e_restricted(lambda: &Multipartition, q: &QuiverData) -> Result<bool> {
    q.require_affine()?;
    Ok(lambda
        .components()
        .iter()
        .all(|p| p.is_e_restricted(q.e() as usize)))
}

/// Every component is an `e`-core.
pub fn is_multicore(lambda: &Multipartition, q: &QuiverData) -> Result<bool> {
    q.require_affine()?;
    Ok(lambda
        .components()
        .iter()
        .all(|p| p.is_e_core(q.e() as usize)))
}

/// Resource guard for enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bound {
    pub max_size: usize,
    pub max_level: usize,
}

impl Default for Bound {
    fn default() -> Self {
        Bound {
            max_size: 16,
            max_level: 8,
        }
    }
}

impl Bound {
    pub fn check(&self, n: usize, level: usize) -> Result<()> {
        if n > self.max_size {
            return Err(Error::BoundExceeded {
                what: "size",
                value: n,
                limit: self.max_size,
            });
        }
        if level > self.max_level {
            return Err(Error::BoundExceeded {
                what: "level",
                value: level,
                limit: self.max_level,
            });
        }
        Ok(())
    }
}

/// Partitions of `n` in reverse lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Weak compositions of `n` into `k` parts, lexicographically decreasing.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=rem).rev() {
            cur.push(first);
            rec(rem - first, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, &mut Vec::new(), &mut out);
    out
}

/// Lazy stream over the `level`-multipartitions of `n`.
///
/// Order: component sizes in lexicographically decreasing order, then each
/// component's partition in reverse lexicographic order (later components vary
/// fastest). Equivalently, strictly decreasing in [`Multipartition::enumeration_key`].
pub struct MultipartitionIter {
    by_size: Vec<Vec<Partition>>,
    compositions: Vec<Vec<usize>>,
    comp_idx: usize,
    odometer: Vec<usize>,
}

impl Iterator for MultipartitionIter {
    type Item = Multipartition;

    fn next(&mut self) -> Option<Multipartition> {
        let sizes = self.compositions.get(self.comp_idx)?;
        let mp = Multipartition(
            sizes
                .iter()
                .zip(&self.odometer)
                .map(|(&s, &k)| self.by_size[s][k].clone())
                .collect(),
        );
        // advance the odometer, last component fastest
        let mut pos = self.odometer.len();
        loop {
            if pos == 0 {
                self.comp_idx += 1;
                self.odometer.iter_mut().for_each(|x| *x = 0);
                break;
            }
            pos -= 1;
            self.odometer[pos] += 1;
            if self.odometer[pos] < self.by_size[sizes[pos]].len() {
                break;
            }
            self.odometer[pos] = 0;
        }
        Some(mp)
    }
}

/// Every `level`-multipartition of `n` exactly once, in the order documented
/// on [`MultipartitionIter`].
pub fn enumerate_multipartitions(n: usize, level: usize, bound: &Bound) -> Result<MultipartitionIter> {
    bound.check(n, level)?;
    if level == 0 {
        return Err(Error::EmptyMulticharge);
    }
    Ok(MultipartitionIter {
        by_size: (0..=n).map(partitions_of).collect(),
        compositions: compositions(n, level),
        comp_idx: 0,
        odometer: vec![0; level],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64, kappa: &[i64]) -> QuiverData {
        QuiverData::new(e, kappa.to_vec()).unwrap()
    }

    fn mp(c: &[&[usize]]) -> Multipartition {
        Multipartition::from_parts(c)
    }

    #[test]
    fn residues_of_worked_example() {
        let q = q(4, &[1, 0, 2]);
        assert_eq!(residue(&Node::new(3, 1, 1), &q), 3);
        assert_eq!(residue(&Node::new(3, 1, 3), &q), 0);
        for e in [0, 2, 5] {
            let q1 = QuiverData::new(e, vec![0]).unwrap();
            assert_eq!(residue(&Node::new(1, 1, 1), &q1), 0);
        }
    }

    #[test]
    fn residue_diagrams_of_worked_example() {
        let q = q(4, &[1, 0, 2]);
        let lambda = mp(&[&[1, 1, 1], &[2, 1], &[1, 1]]);
        let diag: Vec<Vec<Vec<Residue>>> = lambda
            .components()
            .iter()
            .enumerate()
            .map(|(j, p)| {
                (1..=p.rows())
                    .map(|b| (1..=p.part(b)).map(|c| residue(&Node::new(b, c, j + 1), &q)).collect())
                    .collect()
            })
            .collect();
        assert_eq!(
            diag,
            vec![
                vec![vec![1], vec![0], vec![3]],
                vec![vec![0, 1], vec![3]],
                vec![vec![2], vec![1]],
            ]
        );
    }

    #[test]
    fn content_of_worked_example() {
        let q = q(4, &[1, 0, 2]);
        let lambda = mp(&[&[1, 1, 1], &[2, 1], &[1, 1]]);
        let mu = mp(&[&[1], &[2, 1], &[2, 1, 1]]);
        assert_eq!(content(&lambda, &q), Content::from_dense(&[2, 3, 1, 2]));
        assert_eq!(content(&mu, &q), Content::from_dense(&[2, 3, 1, 2]));
        assert_eq!(residue_multiset(&lambda, &q), vec![0, 0, 1, 1, 1, 2, 3, 3]);
        assert_eq!(residue_multiset(&mu, &q), vec![0, 0, 1, 1, 1, 2, 3, 3]);
        assert!(content(&Multipartition::empty(3), &q).is_zero());
    }

    #[test]
    fn addable_and_removable_examples() {
        let q3 = q(3, &[0]);
        let l = mp(&[&[2]]);
        assert_eq!(
            addable_nodes(&l, &q3, None),
            vec![Node::new(1, 3, 1), Node::new(2, 1, 1)]
        );
        assert!(addable_nodes(&l, &q3, None).iter().all(|n| residue(n, &q3) == 2));
        assert_eq!(removable_nodes(&l, &q3, None), vec![Node::new(1, 2, 1)]);
        assert_eq!(residue(&Node::new(1, 2, 1), &q3), 1);

        let q_empty = q(3, &[0, 1, 2]);
        let empty = Multipartition::empty(3);
        assert_eq!(
            addable_nodes(&empty, &q_empty, None),
            vec![Node::new(1, 1, 1), Node::new(1, 1, 2), Node::new(1, 1, 3)]
        );
        assert!(removable_nodes(&empty, &q_empty, None).is_empty());

        let q2 = q(2, &[0]);
        let l = mp(&[&[2, 1, 1]]);
        assert_eq!(
            addable_nodes(&l, &q2, Some(0)),
            vec![Node::new(1, 3, 1), Node::new(2, 2, 1)]
        );
        assert_eq!(removable_nodes(&l, &q2, Some(0)), vec![Node::new(3, 1, 1)]);
    }

    #[test]
    fn enumeration_small_cases() {
        let b = Bound::default();
        let all: Vec<_> = enumerate_multipartitions(0, 3, &b).unwrap().collect();
        assert_eq!(all, vec![Multipartition::empty(3)]);
        let all: Vec<_> = enumerate_multipartitions(2, 1, &b).unwrap().collect();
        assert_eq!(all, vec![mp(&[&[2]]), mp(&[&[1, 1]])]);
        let all: Vec<_> = enumerate_multipartitions(2, 2, &b).unwrap().collect();
        assert_eq!(all.len(), 5);
        assert_eq!(all[0], mp(&[&[2], &[]]));
        assert_eq!(all[4], mp(&[&[], &[1, 1]]));
    }

    #[test]
    fn enumeration_order_is_strictly_decreasing() {
        let b = Bound::default();
        let all: Vec<_> = enumerate_multipartitions(6, 3, &b).unwrap().collect();
        for w in all.windows(2) {
            assert!(w[0].enumeration_key() > w[1].enumeration_key());
        }
        assert!(all.iter().all(|m| m.size() == 6 && m.level() == 3));
    }

    #[test]
    fn enumeration_counts_match_generating_function() {
        // coefficients of prod (1 - x^k)^{-level}
        fn count(n: usize, level: usize) -> u64 {
            let mut coeffs = vec![0u64; n + 1];
            coeffs[0] = 1;
            for _ in 0..level {
                for k in 1..=n {
                    for m in k..=n {
                        coeffs[m] += coeffs[m - k];
                    }
                }
            }
            coeffs[n]
        }
        let b = Bound::default();
        for level in 1..=3 {
            for n in 0..=8 {
                let got = enumerate_multipartitions(n, level, &b).unwrap().count() as u64;
                assert_eq!(got, count(n, level), "n={n} level={level}");
            }
        }
    }

    #[test]
    fn enumeration_respects_bound() {
        let b = Bound { max_size: 4, max_level: 2 };
        assert!(matches!(
            enumerate_multipartitions(5, 1, &b),
            Err(Error::BoundExceeded { what: "size", .. })
        ));
        assert!(matches!(
            enumerate_multipartitions(1, 3, &b),
            Err(Error::BoundExceeded { what: "level", .. })
        ));
    }

    #[test]
    fn restricted_examples() {
        let q2 = q(2, &[0]);
        assert!(is_e_restricted(&mp(&[&[1, 1, 1]]), &q2).unwrap());
        assert!(!is_e_restricted(&mp(&[&[2]]), &q2).unwrap());
        let q3 = q(3, &[0, 0]);
        assert!(is_e_restricted(&mp(&[&[3, 1], &[2, 2]]), &q3).unwrap());
        let q0 = q(0, &[0]);
        assert_eq!(is_e_restricted(&mp(&[&[1]]), &q0), Err(Error::RequiresAffine));
    }

    #[test]
    fn cores() {
        assert!(Partition::new(vec![2, 1]).unwrap().is_e_core(2));
        assert!(!Partition::new(vec![2]).unwrap().is_e_core(2));
        assert!(Partition::new(vec![2]).unwrap().is_e_core(3));
        assert!(!Partition::new(vec![3, 1, 1]).unwrap().is_e_core(2));
        assert!(Partition::empty().is_e_core(4));
    }

    #[test]
    fn partition_validation() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap().parts(), &[3, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn json_shapes() {
        let l = mp(&[&[2, 1], &[]]);
        assert_eq!(serde_json::to_string(&l).unwrap(), "[[2,1],[]]");
        let back: Multipartition = serde_json::from_str("[[2,1],[]]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Multipartition>("[[1,2]]").is_err());
        assert_eq!(serde_json::to_string(&Node::new(3, 1, 2)).unwrap(), "[3,1,2]");
        let c = Content::from_dense(&[2, 0, 1]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"0":2,"2":1}"#);
        let back: Content = serde_json::from_str(r#"{"0":2,"2":1}"#).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn display() {
        assert_eq!(mp(&[&[2, 1]]).to_string(), "(2,1)");
        assert_eq!(Multipartition::empty(1).to_string(), "∅");
        assert_eq!(mp(&[&[1], &[]]).to_string(), "((1),∅)");
    }
}
