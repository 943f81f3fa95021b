//! Root data of the cyclic (or linear) quiver: residues, the Cartan matrix,
//! multicharges and the dominant weight they determine.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex of the quiver. For `e >= 2` values are kept in `0..e`; for
/// `e = 0` any integer is a residue.
pub type Residue = i64;

/// The quantum characteristic `e` together with a multicharge `kappa`.
///
/// The level is `kappa.len()`. Two multicharges that agree modulo `e` up to
/// reordering determine the same dominant weight (see [`QuiverData::lambda`]).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawQuiver", into = "RawQuiver")]
pub struct QuiverData {
    e: u32,
    kappa: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawQuiver {
    e: i64,
    kappa: Vec<i64>,
}

impl TryFrom<RawQuiver> for QuiverData {
    type Error = Error;

    fn try_from(raw: RawQuiver) -> Result<Self> {
        QuiverData::new(raw.e, raw.kappa)
    }
}

impl From<QuiverData> for RawQuiver {
    fn from(q: QuiverData) -> Self {
        RawQuiver {
            e: q.e as i64,
            kappa: q.kappa,
        }
    }
}

impl QuiverData {
    pub fn new(e: i64, kappa: Vec<i64>) -> Result<Self> {
        if e < 0 || e == 1 || e > u32::MAX as i64 {
            return Err(Error::InvalidCharacteristic(e));
        }
        if kappa.is_empty() {
            return Err(Error::EmptyMulticharge);
        }
        Ok(QuiverData { e: e as u32, kappa })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// `e` as a signed integer, convenient for residue arithmetic.
    pub fn ei(&self) -> i64 {
        self.e as i64
    }

    pub fn level(&self) -> usize {
        self.kappa.len()
    }

    pub fn kappa(&self) -> &[i64] {
        &self.kappa
    }

    /// Charge of the 1-based component `j`.
    pub fn charge(&self, j: usize) -> i64 {
        self.kappa[j - 1]
    }

    pub fn is_affine(&self) -> bool {
        self.e >= 2
    }

    pub fn require_affine(&self) -> Result<()> {
        if self.is_affine() {
            Ok(())
        } else {
            Err(Error::RequiresAffine)
        }
    }

    /// Reduces an integer to its residue class.
    pub fn reduce(&self, x: i64) -> Residue {
        if self.e == 0 {
            x
        } else {
            x.rem_euclid(self.ei())
        }
    }

    pub fn next(&self, i: Residue) -> Residue {
        self.reduce(i + 1)
    }

    pub fn prev(&self, i: Residue) -> Residue {
        self.reduce(i - 1)
    }

    /// The finite residue set `0..e`, or `None` when `e = 0`.
    pub fn residues(&self) -> Option<std::ops::Range<Residue>> {
        self.is_affine().then(|| 0..self.ei())
    }

    pub fn is_residue(&self, i: Residue) -> bool {
        self.e == 0 || (0..self.ei()).contains(&i)
    }

    /// `kappa_j mod e` for the 1-based component `j`.
    pub fn kappa_bar(&self, j: usize) -> Residue {
        self.reduce(self.charge(j))
    }

    /// The dominant weight as the counts `<Lambda, alpha_i> = #{s : kappa_s = i mod e}`.
    pub fn lambda(&self) -> BTreeMap<Residue, u64> {
        let mut out = BTreeMap::new();
        for &k in &self.kappa {
            *out.entry(self.reduce(k)).or_insert(0) += 1;
        }
        out
    }

    pub fn lambda_at(&self, i: Residue) -> u64 {
        self.kappa.iter().filter(|&&k| self.reduce(k) == i).count() as u64
    }

    pub fn cartan(&self) -> CartanPairing {
        CartanPairing { e: self.e }
    }

    /// Same quiver with a different multicharge.
    pub fn with_kappa(&self, kappa: Vec<i64>) -> Result<Self> {
        QuiverData::new(self.ei(), kappa)
    }
}

/// Generalised Cartan matrix of type `A_infinity` (`e = 0`) or `A^(1)_{e-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanPairing {
    e: u32,
}

impl CartanPairing {
    pub fn new(e: u32) -> Self {
        CartanPairing { e }
    }

    /// The entry `a_ij = <alpha_i, alpha_j>`; arguments must be residues.
    pub fn entry(&self, i: Residue, j: Residue) -> i64 {
        if i == j {
            return 2;
        }
        match self.e {
            0 => {
                if (i - j).abs() == 1 {
                    -1
                } else {
                    0
                }
            }
            2 => -2,
            e => {
                let e = e as i64;
                let d = (i - j).rem_euclid(e);
                if d == 1 || d == e - 1 {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Residues `j` with `a_ij != 0`.
    pub fn support(&self, i: Residue) -> Vec<Residue> {
        match self.e {
            0 => vec![i - 1, i, i + 1],
            2 => vec![0, 1],
            e => {
                let e = e as i64;
                let mut v = vec![(i - 1).rem_euclid(e), i, (i + 1).rem_euclid(e)];
                v.sort_unstable();
                v
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_characteristic() {
        assert_eq!(
            QuiverData::new(1, vec![0]),
            Err(Error::InvalidCharacteristic(1))
        );
        assert!(QuiverData::new(-3, vec![0]).is_err());
        assert_eq!(QuiverData::new(3, vec![]), Err(Error::EmptyMulticharge));
        assert!(QuiverData::new(0, vec![5]).is_ok());
    }

    #[test]
    fn cartan_matrix_is_symmetric_with_zero_row_sums() {
        for e in 2..7u32 {
            let a = CartanPairing::new(e);
            for i in 0..e as i64 {
                let row: i64 = (0..e as i64).map(|j| a.entry(i, j)).sum();
                assert_eq!(row, 0, "e={e} row {i}");
                for j in 0..e as i64 {
                    assert_eq!(a.entry(i, j), a.entry(j, i));
                }
            }
        }
        let a = CartanPairing::new(0);
        assert_eq!(a.entry(4, 5), -1);
        assert_eq!(a.entry(4, 6), 0);
        assert_eq!(CartanPairing::new(2).entry(0, 1), -2);
    }

    #[test]
    fn lambda_depends_only_on_kappa_mod_e() {
        let q1 = QuiverData::new(4, vec![1, 0, 2]).unwrap();
        let q2 = QuiverData::new(4, vec![6, -3, 4]).unwrap();
        assert_eq!(q1.lambda(), q2.lambda());
        assert_eq!(q1.lambda_at(3), 0);
        assert_eq!(q1.lambda_at(2), 1);
    }

    #[test]
    fn quiver_json_round_trip() {
        let q = QuiverData::new(3, vec![0, 2]).unwrap();
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, r#"{"e":3,"kappa":[0,2]}"#);
        let back: QuiverData = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        assert!(serde_json::from_str::<QuiverData>(r#"{"e":1,"kappa":[0]}"#).is_err());
    }
}
