//! PT-symmetric block Hamiltonians.
//!
//! A system is a direct sum of 2×2 blocks `[[r e^{iθ}, s], [s, r e^{-iθ}]]`
//! and real 1×1 levels. This crate gives the closed-form spectrum of each
//! block, the bilinear (CCS) eigenvector algebra, explicit `C`, `P` and `T`
//! operators, and residual checks for every symmetry identity they satisfy.

pub mod ccs;
pub mod cli;
pub mod error;
pub mod model;
pub mod numerics;
pub mod spectra;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use model::{Block, HamiltonianSpec, PTBlock, RealLevel};
pub use numerics::{direct_sum, CMatrix, CScalar, CVector};
pub use spectra::{BlockSpectrum, EigenPair, PhaseClass, Sign};
pub use symmetry::{AntilinearOperator, CFracConfig, OperatorSet};
