//! Beta-numbers, abacus displays, runner levels and the runner-swap maps `Phi_i`.
//!
//! A set of beta-numbers is cofinite below, so it is stored as a finite set of
//! exceptional beads together with a threshold below which every integer is
//! present. Positions `x*e + l` sit on runner `l` at level `x`; levels grow
//! downwards, so the "lowest" bead of a runner is its largest beta-number.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{addable_nodes, removable_nodes, residue, Multipartition, Partition};
use crate::quiver::{QuiverData, Residue};

/// The beta-numbers of one component: `exceptional` together with every
/// integer strictly below `full_below`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BetaNumbers {
    pub component: usize,
    pub exceptional: Vec<i64>,
    pub full_below: i64,
}

impl BetaNumbers {
    /// Normalises: exceptional beads sorted decreasing, none below or at the
    /// threshold, and the threshold itself absent from the set.
    pub fn new(component: usize, exceptional: impl IntoIterator<Item = i64>, full_below: i64) -> Self {
        let mut set: BTreeSet<i64> = exceptional.into_iter().filter(|&x| x >= full_below).collect();
        let mut t = full_below;
        while set.remove(&t) {
            t += 1;
        }
        BetaNumbers {
            component,
            exceptional: set.into_iter().rev().collect(),
            full_below: t,
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        x < self.full_below || self.exceptional.contains(&x)
    }

    /// The integer `k` such that the `m`-th largest element is `k - m` for all large `m`.
    pub fn charge(&self) -> i64 {
        self.full_below + self.exceptional.len() as i64
    }

    /// Every element in decreasing order (an infinite iterator).
    pub fn iter_desc(&self) -> impl Iterator<Item = i64> + '_ {
        self.exceptional
            .iter()
            .copied()
            .chain((i64::MIN..self.full_below).rev())
    }

    /// All elements `>= cut`, decreasing.
    pub fn elements_from(&self, cut: i64) -> Vec<i64> {
        let mut v: Vec<i64> = self.exceptional.iter().copied().filter(|&x| x >= cut).collect();
        v.extend((cut..self.full_below).rev());
        v
    }

    /// Largest element congruent to `r` modulo `e`.
    pub fn largest_congruent(&self, r: i64, e: i64) -> i64 {
        let from_exc = self.exceptional.iter().copied().find(|&x| (x - r).rem_euclid(e) == 0);
        let top = self.full_below - 1;
        let from_tail = top - (top - r).rem_euclid(e);
        match from_exc {
            Some(x) => x.max(from_tail),
            None => from_tail,
        }
    }
}

/// `B^j = { lambda^(j)_b + kappa_j - b : b >= 1 }` for each component.
pub fn beta_numbers(lambda: &Multipartition, q: &QuiverData) -> Vec<BetaNumbers> {
    lambda
        .components()
        .iter()
        .enumerate()
        .map(|(j0, p)| {
            let k = q.kappa()[j0];
            let rows = p.rows() as i64;
            let exc = (1..=rows).map(|b| p.part(b as usize) as i64 + k - b);
            BetaNumbers::new(j0 + 1, exc, k - rows)
        })
        .collect()
}

/// Inverse of [`beta_numbers`]; each set's charge must match `kappa_j`.
pub fn multipartition_from_beta(betas: &[BetaNumbers], q: &QuiverData) -> Result<Multipartition> {
    if betas.len() != q.level() {
        return Err(Error::LevelMismatch {
            expected: q.level(),
            found: betas.len(),
        });
    }
    let mut comps = Vec::with_capacity(betas.len());
    for (j0, raw) in betas.iter().enumerate() {
        let set = BetaNumbers::new(raw.component, raw.exceptional.iter().copied(), raw.full_below);
        let k = q.kappa()[j0];
        if set.charge() != k {
            return Err(Error::InconsistentCharge {
                component: j0 + 1,
                expected: k,
                found: set.charge(),
            });
        }
        let parts = set
            .exceptional
            .iter()
            .enumerate()
            .map(|(b0, &x)| (x - k + b0 as i64 + 1) as usize)
            .collect();
        comps.push(Partition::new(parts)?);
    }
    Ok(Multipartition::new(comps))
}

/// An `e`-abacus configuration: the beta-numbers of every component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbacusDisplay {
    quiver: QuiverData,
    betas: Vec<BetaNumbers>,
}

impl AbacusDisplay {
    pub fn new(lambda: &Multipartition, q: &QuiverData) -> Result<Self> {
        q.require_affine()?;
        lambda.check(q)?;
        Ok(AbacusDisplay {
            quiver: q.clone(),
            betas: beta_numbers(lambda, q),
        })
    }

    pub fn quiver(&self) -> &QuiverData {
        &self.quiver
    }

    pub fn betas(&self) -> &[BetaNumbers] {
        &self.betas
    }

    pub fn has_bead(&self, component: usize, runner: Residue, level: i64) -> bool {
        self.betas[component - 1].contains(level * self.quiver.ei() + runner)
    }

    /// `levels[i][j0]`: level of the lowest bead on runner `i` of component `j0 + 1`.
    pub fn runner_levels(&self) -> Vec<Vec<i64>> {
        let e = self.quiver.ei();
        (0..e)
            .map(|i| {
                self.betas
                    .iter()
                    .map(|b| (b.largest_congruent(i, e) - i).div_euclid(e))
                    .collect()
            })
            .collect()
    }

    /// Smallest window showing every exceptional bead plus one empty level.
    pub fn default_window(&self) -> RangeInclusive<i64> {
        let e = self.quiver.ei();
        let top = self
            .betas
            .iter()
            .map(|b| b.full_below.div_euclid(e))
            .min()
            .unwrap_or(0);
        let bottom = self
            .betas
            .iter()
            .map(|b| {
                let last = b.exceptional.first().copied().unwrap_or(b.full_below - 1);
                last.div_euclid(e)
            })
            .max()
            .unwrap_or(0)
            + 1;
        top.min(bottom)..=bottom
    }
}

/// Runner levels of `lambda` with respect to `q`.
pub fn runner_levels(lambda: &Multipartition, q: &QuiverData) -> Result<Vec<Vec<i64>>> {
    Ok(AbacusDisplay::new(lambda, q)?.runner_levels())
}

/// Draws the display over an inclusive level window.
///
/// One block per component, runner headers `0..e-1`, `o` for a bead and `.`
/// for a gap. Rows of `⋮` mark the runners continuing beyond the window.
pub fn render_abacus(display: &AbacusDisplay, window: RangeInclusive<i64>) -> Result<String> {
    let (top, bottom) = (*window.start(), *window.end());
    let e = display.quiver.ei();
    let level = display.quiver.level();
    let any_bead = window.clone().any(|x| {
        (1..=level).any(|j| (0..e).any(|r| display.has_bead(j, r, x)))
    });
    if top > bottom || !any_bead {
        return Err(Error::EmptyWindow { top, bottom });
    }
    let sep = " | ";
    let row = |cell: &dyn Fn(usize, i64) -> String| -> String {
        (1..=level)
            .map(|j| (0..e).map(|r| cell(j, r)).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(sep)
    };
    let mut out = String::new();
    writeln!(out, "{}", row(&|_, r| r.to_string())).unwrap();
    writeln!(out, "{}", row(&|_, _| "⋮".to_string())).unwrap();
    for x in top..=bottom {
        let line = row(&|j, r| if display.has_bead(j, r, x) { "o" } else { "." }.to_string());
        writeln!(out, "{line}").unwrap();
    }
    writeln!(out, "{}", row(&|_, _| "⋮".to_string())).unwrap();
    Ok(out)
}

/// The involution of `Z` swapping the residue classes `i - 1` and `i`.
pub fn phi_int(x: i64, i: Residue, q: &QuiverData) -> i64 {
    assert!(q.is_affine(), "phi_int requires e >= 2");
    let r = q.reduce(x);
    if r == q.prev(i) {
        x + 1
    } else if r == q.reduce(i) {
        x - 1
    } else {
        x
    }
}

/// `Phi_i` through the beta-numbers: apply `phi_i` to every bead.
pub fn phi_by_beta(lambda: &Multipartition, q: &QuiverData, i: Residue) -> Result<Multipartition> {
    q.require_affine()?;
    let mapped: Vec<BetaNumbers> = beta_numbers(lambda, q)
        .into_iter()
        .map(|b| {
            // below a cut c with c != i (mod e) no pair {x, x+1} straddles c
            let mut cut = b.full_below;
            if q.reduce(cut) == q.reduce(i) {
                cut -= 1;
            }
            let img = b.elements_from(cut).into_iter().map(|x| phi_int(x, i, q));
            BetaNumbers::new(b.component, img, cut)
        })
        .collect();
    multipartition_from_beta(&mapped, q)
}

/// `Phi_i` by removing every removable `i`-node and adding every addable one.
pub fn phi_by_nodes(lambda: &Multipartition, q: &QuiverData, i: Residue) -> Multipartition {
    let add = addable_nodes(lambda, q, Some(i));
    let rem = removable_nodes(lambda, q, Some(i));
    let comps = lambda
        .components()
        .iter()
        .enumerate()
        .map(|(j0, p)| {
            let j = j0 + 1;
            let parts = (1..=p.rows() + 1)
                .map(|b| {
                    let grow = add.iter().any(|n| n.component == j && n.row == b);
                    let shrink = rem.iter().any(|n| n.component == j && n.row == b);
                    p.part(b) + grow as usize - shrink as usize
                })
                .collect();
            Partition::new(parts).expect("toggling all i-nodes yields a partition")
        })
        .collect();
    debug_assert!(add.iter().chain(&rem).all(|n| residue(n, q) == i));
    Multipartition::new(comps)
}

/// Beads of one runner: the given levels plus every level below `full_below`.
#[derive(Debug, Clone)]
struct Runner {
    levels: BTreeSet<i64>,
    full_below: i64,
}

impl Runner {
    fn shift(&self, by: i64) -> Runner {
        Runner {
            levels: self.levels.iter().map(|x| x + by).collect(),
            full_below: self.full_below + by,
        }
    }
}

fn split_runners(b: &BetaNumbers, e: i64) -> Vec<Runner> {
    (0..e)
        .map(|r| {
            // levels x with x*e + r < full_below
            let full = (b.full_below - r + e - 1).div_euclid(e);
            let levels = b
                .exceptional
                .iter()
                .filter(|&&x| (x - r).rem_euclid(e) == 0)
                .map(|&x| (x - r).div_euclid(e))
                .collect();
            Runner { levels, full_below: full }
        })
        .collect()
}

fn join_runners(component: usize, runners: &[Runner], e: i64) -> BetaNumbers {
    let t = runners
        .iter()
        .enumerate()
        .map(|(r, run)| run.full_below * e + r as i64)
        .min()
        .expect("at least two runners");
    let mut exc = Vec::new();
    for (r, run) in runners.iter().enumerate() {
        let r = r as i64;
        exc.extend(run.levels.iter().map(|x| x * e + r));
        let first = (t - r + e - 1).div_euclid(e);
        exc.extend((first..run.full_below).map(|x| x * e + r));
    }
    BetaNumbers::new(component, exc, t)
}

/// `Phi_i` by swapping runners `i - 1` and `i`; for `i = 0` the beads moved
/// onto runner 0 go down one level and those moved onto runner `e - 1` go up one.
pub fn phi_by_runners(lambda: &Multipartition, q: &QuiverData, i: Residue) -> Result<Multipartition> {
    q.require_affine()?;
    let e = q.ei();
    let i = q.reduce(i);
    let mapped: Vec<BetaNumbers> = beta_numbers(lambda, q)
        .iter()
        .map(|b| {
            let mut runners = split_runners(b, e);
            if i != 0 {
                runners.swap((i - 1) as usize, i as usize);
            } else {
                let last = (e - 1) as usize;
                let old_zero = runners[0].clone();
                runners[0] = runners[last].shift(1);
                runners[last] = old_zero.shift(-1);
            }
            join_runners(b.component, &runners, e)
        })
        .collect();
    multipartition_from_beta(&mapped, q)
}

/// `Phi_i(lambda)`, computed by all three routes; the node-toggle route is the
/// reference and any disagreement is an internal error.
pub fn phi_map(lambda: &Multipartition, q: &QuiverData, i: Residue) -> Result<Multipartition> {
    q.require_affine()?;
    lambda.check(q)?;
    let i = q.reduce(i);
    let by_nodes = phi_by_nodes(lambda, q, i);
    let by_beta = phi_by_beta(lambda, q, i)?;
    let by_runners = phi_by_runners(lambda, q, i)?;
    if by_beta != by_nodes || by_runners != by_nodes {
        return Err(Error::Internal(format!(
            "Phi_{i}({lambda}) disagrees: nodes {by_nodes}, beta {by_beta}, runners {by_runners}"
        )));
    }
    Ok(by_nodes)
}
