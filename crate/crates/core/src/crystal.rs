//! The crystal on multipartitions: `i`-signatures, the operators `e~_i` and
//! `f~_i`, weights, crystal graphs, root strings and the reflections `sigma_i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partition::{addable_nodes, content, removable_nodes, residue, Bound, Multipartition, Node};
use crate::quiver::{CartanPairing, QuiverData, Residue};

/// `nu = Lambda - alpha`, stored as two finitely supported signed vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    #[serde(skip)]
    cartan: CartanPairing,
    lambda: BTreeMap<Residue, i64>,
    alpha: BTreeMap<Residue, i64>,
}

fn add_entry(map: &mut BTreeMap<Residue, i64>, i: Residue, d: i64) {
    let v = map.entry(i).or_insert(0);
    *v += d;
    if *v == 0 {
        map.remove(&i);
    }
}

impl WeightVector {
    pub fn new(q: &QuiverData, alpha: BTreeMap<Residue, i64>) -> Self {
        WeightVector {
            cartan: q.cartan(),
            lambda: q.lambda().into_iter().map(|(i, c)| (i, c as i64)).collect(),
            alpha: alpha.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn lambda_part(&self) -> &BTreeMap<Residue, i64> {
        &self.lambda
    }

    pub fn alpha_part(&self) -> &BTreeMap<Residue, i64> {
        &self.alpha
    }

    /// `<nu, alpha_i^vee> = <Lambda, alpha_i^vee> - sum_j c_j a_ij`.
    pub fn pairing(&self, i: Residue) -> i64 {
        let mut acc = self.lambda.get(&i).copied().unwrap_or(0);
        for j in self.cartan.support(i) {
            acc -= self.alpha.get(&j).copied().unwrap_or(0) * self.cartan.entry(i, j);
        }
        acc
    }

    /// `nu - d * alpha_i`.
    pub fn minus_root(&self, i: Residue, d: i64) -> WeightVector {
        let mut out = self.clone();
        add_entry(&mut out.alpha, i, d);
        out
    }

    /// `s_i(nu) = nu - <nu, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: Residue) -> WeightVector {
        self.minus_root(i, self.pairing(i))
    }
}

pub fn wt(lambda: &Multipartition, q: &QuiverData) -> WeightVector {
    let alpha = content(lambda, q)
        .iter()
        .map(|(i, c)| (i, c as i64))
        .collect();
    WeightVector::new(q, alpha)
}

pub fn pairing(nu: &WeightVector, i: Residue) -> i64 {
    nu.pairing(i)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Tag {
    A,
    R,
}

/// An `i`-signature: addable and removable `i`-nodes in above-first order,
/// and the reduced word `A^phi R^eps` left after cancelling `RA` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureWord {
    pub residue: Residue,
    pub letters: Vec<(Node, Tag)>,
    pub reduced: Vec<(Node, Tag)>,
}

impl SignatureWord {
    pub fn phi(&self) -> usize {
        self.reduced.iter().filter(|(_, t)| *t == Tag::A).count()
    }

    pub fn eps(&self) -> usize {
        self.reduced.iter().filter(|(_, t)| *t == Tag::R).count()
    }

    /// The lowest surviving addable node.
    pub fn good_addable(&self) -> Option<Node> {
        self.reduced
            .iter()
            .rev()
            .find(|(_, t)| *t == Tag::A)
            .map(|(n, _)| *n)
    }

    /// The highest surviving removable node.
    pub fn good_removable(&self) -> Option<Node> {
        self.reduced.iter().find(|(_, t)| *t == Tag::R).map(|(n, _)| *n)
    }

    pub fn word(&self) -> String {
        tags(&self.letters)
    }

    pub fn reduced_word(&self) -> String {
        tags(&self.reduced)
    }
}

fn tags(letters: &[(Node, Tag)]) -> String {
    letters
        .iter()
        .map(|(_, t)| match t {
            Tag::A => 'A',
            Tag::R => 'R',
        })
        .collect()
}

pub fn i_signature(lambda: &Multipartition, q: &QuiverData, i: Residue) -> SignatureWord {
    let mut letters: Vec<(Node, Tag)> = addable_nodes(lambda, q, Some(i))
        .into_iter()
        .map(|n| (n, Tag::A))
        .chain(removable_nodes(lambda, q, Some(i)).into_iter().map(|n| (n, Tag::R)))
        .collect();
    letters.sort_by_key(|(n, _)| n.above_key());
    let mut reduced: Vec<(Node, Tag)> = Vec::with_capacity(letters.len());
    for &(n, t) in &letters {
        if t == Tag::A && reduced.last().is_some_and(|(_, top)| *top == Tag::R) {
            reduced.pop();
        } else {
            reduced.push((n, t));
        }
    }
    SignatureWord { residue: i, letters, reduced }
}

pub fn f_tilde(lambda: &Multipartition, q: &QuiverData, i: Residue) -> Option<Multipartition> {
    i_signature(lambda, q, i)
        .good_addable()
        .map(|n| lambda.with_added(&n))
}

pub fn e_tilde(lambda: &Multipartition, q: &QuiverData, i: Residue) -> Option<Multipartition> {
    i_signature(lambda, q, i)
        .good_removable()
        .map(|n| lambda.with_removed(&n))
}

/// Residues at which `e~_i` or `f~_i` can act: all of `Z/eZ`, or for `e = 0`
/// the residues of addable and removable nodes.
pub fn active_residues(lambda: &Multipartition, q: &QuiverData) -> Vec<Residue> {
    match q.residues() {
        Some(r) => r.collect(),
        None => {
            let set: BTreeSet<Residue> = addable_nodes(lambda, q, None)
                .iter()
                .chain(removable_nodes(lambda, q, None).iter())
                .map(|n| residue(n, q))
                .collect();
            set.into_iter().collect()
        }
    }
}

/// Per-vertex data of a crystal graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexData {
    pub wt: WeightVector,
    pub eps: BTreeMap<Residue, usize>,
    pub phi: BTreeMap<Residue, usize>,
}

fn vertex_data(lambda: &Multipartition, q: &QuiverData) -> VertexData {
    let mut eps = BTreeMap::new();
    let mut phi = BTreeMap::new();
    for i in active_residues(lambda, q) {
        let s = i_signature(lambda, q, i);
        eps.insert(i, s.eps());
        phi.insert(i, s.phi());
    }
    VertexData { wt: wt(lambda, q), eps, phi }
}

/// An `i`-arrow `from -> to` meaning `f~_i(from) = to`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub from: Multipartition,
    pub to: Multipartition,
    pub i: Residue,
}

/// The part of the crystal reachable from the empty multipartition, up to a size.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    quiver: QuiverData,
    n_max: usize,
    levels: Vec<Vec<Multipartition>>,
    data: BTreeMap<Multipartition, VertexData>,
    arrows: Vec<Arrow>,
}

impl CrystalGraph {
    pub fn quiver(&self) -> &QuiverData {
        &self.quiver
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Vertices ordered by size, then in enumeration order.
    pub fn vertices(&self) -> impl Iterator<Item = &Multipartition> {
        self.levels.iter().flatten()
    }

    pub fn vertices_of_size(&self, n: usize) -> &[Multipartition] {
        self.levels.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn vertex_count(&self) -> usize {
        self.data.len()
    }

    pub fn contains(&self, lambda: &Multipartition) -> bool {
        self.data.contains_key(lambda)
    }

    pub fn data(&self, lambda: &Multipartition) -> Option<&VertexData> {
        self.data.get(lambda)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn to_dot(&self) -> String {
        let index: BTreeMap<&Multipartition, usize> =
            self.vertices().enumerate().map(|(k, v)| (v, k)).collect();
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{v}\"];");
        }
        for a in &self.arrows {
            let _ = writeln!(out, "  v{} -> v{} [label=\"{}\"];", index[&a.from], index[&a.to], a.i);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices()
            .map(|v| {
                let d = &self.data[v];
                json!({ "mp": v, "wt": d.wt, "eps": d.eps, "phi": d.phi })
            })
            .collect();
        let edges: Vec<Value> = self
            .arrows
            .iter()
            .map(|a| json!({ "from": a.from, "to": a.to, "i": a.i }))
            .collect();
        json!({ "vertices": vertices, "edges": edges })
    }
}

/// Breadth-first closure of the empty multipartition under every `f~_i`, up
/// to size `n_max`. Each level is expanded in parallel and merged in order.
pub fn build_crystal(q: &QuiverData, n_max: usize, bound: &Bound) -> Result<CrystalGraph> {
    bound.check(n_max, q.level())?;
    let root = Multipartition::empty(q.level());
    let mut levels = vec![vec![root]];
    let mut arrows = Vec::new();
    for _ in 0..n_max {
        let frontier = levels.last().expect("at least the root level");
        let found: Vec<Arrow> = frontier
            .par_iter()
            .flat_map_iter(|v| {
                active_residues(v, q).into_iter().filter_map(move |i| {
                    f_tilde(v, q, i).map(|to| Arrow { from: v.clone(), to, i })
                })
            })
            .collect();
        let mut next: Vec<Multipartition> = found
            .iter()
            .map(|a| a.to.clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        next.sort_by(|a, b| b.enumeration_key().cmp(&a.enumeration_key()));
        arrows.extend(found);
        levels.push(next);
    }
    let data = levels
        .par_iter()
        .flatten()
        .map(|v| (v.clone(), vertex_data(v, q)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(CrystalGraph { quiver: q.clone(), n_max, levels, data, arrows })
}

/// The maximal `i`-string through a vertex, from its `e~_i`-top to its `f~_i`-bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootString {
    pub residue: Residue,
    pub chain: Vec<Multipartition>,
    pub position: usize,
}

impl RootString {
    pub fn top(&self) -> &Multipartition {
        &self.chain[0]
    }

    pub fn bottom(&self) -> &Multipartition {
        self.chain.last().expect("a root string is nonempty")
    }

    pub fn length(&self) -> usize {
        self.chain.len() - 1
    }
}

pub fn root_string(lambda: &Multipartition, q: &QuiverData, i: Residue) -> RootString {
    let mut up = Vec::new();
    let mut cur = lambda.clone();
    while let Some(prev) = e_tilde(&cur, q, i) {
        up.push(prev.clone());
        cur = prev;
    }
    up.reverse();
    let position = up.len();
    let mut chain = up;
    chain.push(lambda.clone());
    let mut cur = lambda.clone();
    while let Some(next) = f_tilde(&cur, q, i) {
        chain.push(next.clone());
        cur = next;
    }
    RootString { residue: i, chain, position }
}

/// `f~_i^k` for `k > 0`, `e~_i^{-k}` for `k < 0`, where `k = <wt, alpha_i^vee>`.
pub fn sigma_i(lambda: &Multipartition, q: &QuiverData, i: Residue) -> Result<Multipartition> {
    let k = wt(lambda, q).pairing(i);
    let mut cur = lambda.clone();
    for _ in 0..k.unsigned_abs() {
        let step = if k > 0 { f_tilde(&cur, q, i) } else { e_tilde(&cur, q, i) };
        cur = step.ok_or_else(|| {
            Error::Internal(format!("sigma_{i} of {lambda} ran off its root string"))
        })?;
    }
    Ok(cur)
}

impl fmt::Display for SignatureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.word(), self.reduced_word())
    }
}
