//! Graded branching of Specht modules at the level of labels: the degree
//! statistics `N^A` and `N_R`, `i`-induction and `i`-restriction, and the
//! divided-power multiplicity polynomials.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::abacus::phi_map;
use crate::blocks::block_key;
use crate::crystal::active_residues;
use crate::error::{Error, Result};
use crate::partition::{addable_nodes, removable_nodes, Bound, Multipartition, Node};
use crate::quiver::{QuiverData, Residue};
use crate::scopes::alice_condition;

/// A Laurent polynomial in `v` with non-negative coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentPoly(BTreeMap<i64, u64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: u64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: u64) {
        if coeff > 0 {
            *self.0.entry(exp).or_insert(0) += coeff;
        }
    }

    pub fn add(&mut self, other: &LaurentPoly) {
        for (&d, &c) in &other.0 {
            self.add_term(d, c);
        }
    }

    pub fn coeff(&self, exp: i64) -> u64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, u64)> + '_ {
        self.0.iter().map(|(&d, &c)| (d, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> u64 {
        self.0.values().sum()
    }

    /// Invariance under `v -> v^{-1}`.
    pub fn is_bar_invariant(&self) -> bool {
        self.0.iter().all(|(&d, &c)| self.coeff(-d) == c)
    }
}

fn fmt_power(d: i64) -> String {
    match d {
        0 => String::new(),
        1 => "v".to_string(),
        d => format!("v^{{{d}}}"),
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .terms()
            .rev()
            .map(|(d, c)| match (c, d) {
                (c, 0) => c.to_string(),
                (1, d) => fmt_power(d),
                (c, d) => format!("{c}{}", fmt_power(d)),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// A formal sum `sum_m p_m(v) S^m` of Specht labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GradedSum(BTreeMap<Multipartition, LaurentPoly>);

impl GradedSum {
    pub fn zero() -> Self {
        GradedSum::default()
    }

    /// Adds `coeff * v^exp * S^label`.
    pub fn add_term(&mut self, label: Multipartition, exp: i64, coeff: u64) {
        if coeff > 0 {
            self.0.entry(label).or_default().add_term(exp, coeff);
        }
    }

    pub fn add(&mut self, other: &GradedSum) {
        for (m, p) in &other.0 {
            self.0.entry(m.clone()).or_default().add(p);
        }
    }

    pub fn get(&self, label: &Multipartition) -> Option<&LaurentPoly> {
        self.0.get(label)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Labels in enumeration order.
    pub fn labels(&self) -> Vec<&Multipartition> {
        let mut v: Vec<&Multipartition> = self.0.keys().collect();
        v.sort_by(|a, b| b.enumeration_key().cmp(&a.enumeration_key()));
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Multipartition, &LaurentPoly)> {
        self.labels().into_iter().map(|m| (m, &self.0[m]))
    }

    /// Total multiplicity at `v = 1`.
    pub fn mass(&self) -> u64 {
        self.0.values().map(LaurentPoly::at_one).sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.iter()
                .map(|(m, p)| json!({ "mp": m, "poly": p }))
                .collect(),
        )
    }
}

impl fmt::Display for GradedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for (m, p) in self.iter() {
            for (d, c) in p.terms().rev() {
                let prefix = match (c, d) {
                    (1, 0) => String::new(),
                    (c, 0) => format!("{c} "),
                    (1, d) => format!("{} ", fmt_power(d)),
                    (c, d) => format!("{c}{} ", fmt_power(d)),
                };
                terms.push(format!("{prefix}S^{m}"));
            }
        }
        f.write_str(&terms.join(" + "))
    }
}

/// `N^A`: addable minus removable `i`-nodes strictly above the addable `i`-node `a`.
pub fn degree_above(lambda: &Multipartition, q: &QuiverData, i: Residue, a: &Node) -> Result<i64> {
    let addable = addable_nodes(lambda, q, Some(i));
    if !addable.contains(a) {
        return Err(Error::NodeStatus(a.triple(), "addable", i));
    }
    let above = |n: &&Node| n.is_above(a);
    Ok(addable.iter().filter(above).count() as i64
        - removable_nodes(lambda, q, Some(i)).iter().filter(above).count() as i64)
}

/// `N_R`: addable minus removable `i`-nodes strictly below the removable `i`-node `r`.
pub fn degree_below(lambda: &Multipartition, q: &QuiverData, i: Residue, r: &Node) -> Result<i64> {
    let removable = removable_nodes(lambda, q, Some(i));
    if !removable.contains(r) {
        return Err(Error::NodeStatus(r.triple(), "removable", i));
    }
    let below = |n: &&Node| r.is_above(n);
    Ok(addable_nodes(lambda, q, Some(i)).iter().filter(below).count() as i64
        - removable.iter().filter(below).count() as i64)
}

pub fn i_induce_specht(lambda: &Multipartition, q: &QuiverData, i: Residue) -> GradedSum {
    let mut out = GradedSum::zero();
    for a in addable_nodes(lambda, q, Some(i)) {
        let d = degree_above(lambda, q, i, &a).expect("node is addable");
        out.add_term(lambda.with_added(&a), d, 1);
    }
    out
}

pub fn i_restrict_specht(lambda: &Multipartition, q: &QuiverData, i: Residue) -> GradedSum {
    let mut out = GradedSum::zero();
    for r in removable_nodes(lambda, q, Some(i)) {
        let d = degree_below(lambda, q, i, &r).expect("node is removable");
        out.add_term(lambda.with_removed(&r), d, 1);
    }
    out
}

pub fn induce_specht(lambda: &Multipartition, q: &QuiverData) -> GradedSum {
    let mut out = GradedSum::zero();
    for i in active_residues(lambda, q) {
        out.add(&i_induce_specht(lambda, q, i));
    }
    out
}

pub fn restrict_specht(lambda: &Multipartition, q: &QuiverData) -> GradedSum {
    let mut out = GradedSum::zero();
    for i in active_residues(lambda, q) {
        out.add(&i_restrict_specht(lambda, q, i));
    }
    out
}

/// Numbers of permutations of `delta` letters by inversion count, from
/// `prod_{j=1}^{delta} (1 + v + ... + v^{j-1})`.
pub fn mahonian(delta: usize) -> Vec<u64> {
    let mut coeffs = vec![1u64];
    for j in 1..=delta {
        let mut next = vec![0u64; coeffs.len() + j - 1];
        for (k, &c) in coeffs.iter().enumerate() {
            for t in 0..j {
                next[k + t] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}

/// `sum_k |S_delta^k| v^{r - 2k}` with `r = delta(delta-1)/2`.
pub fn divided_power_poly(delta: usize) -> LaurentPoly {
    let coeffs = mahonian(delta);
    let r = (coeffs.len() - 1) as i64;
    let mut p = LaurentPoly::zero();
    for (k, &c) in coeffs.iter().enumerate() {
        p.add_term(r - 2 * k as i64, c);
    }
    p
}

/// The label `Phi_i(lambda)` and multiplicity polynomial of the divided-power
/// restriction, available only when the abacus criterion certifies the block.
pub fn divided_power_image(
    lambda: &Multipartition,
    q: &QuiverData,
    i: Residue,
    bound: &Bound,
) -> Result<(Multipartition, LaurentPoly)> {
    lambda.check(q)?;
    let audit = alice_condition(&block_key(lambda, q), i, bound)?;
    if !audit.holds {
        return Err(Error::NotCertified(format!(
            "residue {i}: delta = {}, m = {}, K_i = {}",
            audit.delta, audit.m, audit.k_i
        )));
    }
    if audit.delta == 0 {
        return Ok((lambda.clone(), LaurentPoly::one()));
    }
    Ok((phi_map(lambda, q, i)?, divided_power_poly(audit.delta as usize)))
}
