//! Shared fixtures for the criterion benches.

use hecke_core::QuiverData;

/// Quivers exercised by every bench: `(label, quiver)`.
pub fn fixtures() -> Vec<(&'static str, QuiverData)> {
    vec![
        ("e2_l1", QuiverData::new(2, vec![0]).unwrap()),
        ("e3_l2", QuiverData::new(3, vec![0, 1]).unwrap()),
        ("e4_l3", QuiverData::new(4, vec![1, 0, 2]).unwrap()),
    ]
}
