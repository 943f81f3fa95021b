//! Combinatorics of Ariki-Koike algebras: residues and contents of
//! multipartitions, abacus displays, block invariants and core blocks, the
//! affine type A crystal on multipartitions, graded Specht branching shadows,
//! and the classification of blocks up to Scopes-type Morita equivalence.

pub mod abacus;
pub mod blocks;
pub mod branching;
pub mod crystal;
pub mod error;
pub mod partition;
pub mod quiver;
pub mod scopes;

pub use abacus::{AbacusDisplay, BetaNumbers};
pub use blocks::{BlockInvariants, BlockKey, CoreBlockData};
pub use branching::{GradedSum, LaurentPoly};
pub use crystal::{CrystalGraph, RootString, SignatureWord, WeightVector};
pub use error::{Error, Result};
pub use partition::{Bound, Content, Multipartition, Node, Partition};
pub use quiver::{CartanPairing, QuiverData, Residue};
pub use scopes::{AliceAudit, ConsistencyReport, EquivalenceWitness, MoritaClass, MoritaClasses, WebsterVerdict};
