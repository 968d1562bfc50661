//! Closed-form eigen-analysis of the 2×2 PT block.
//!
//! With `r sinθ = s sinφ` (principal branch, |φ| < π/2) the unbroken block has
//! real eigenvalues `r cosθ ± s cosφ` and eigenvectors
//!
//! ```text
//! ψ₊ = (e^{iφ/2},  e^{-iφ/2}) / √(2cosφ)
//! ψ₋ = (e^{-iφ/2}, −e^{iφ/2}) / √(2cosφ)
//! ```
//!
//! normalized so that the bilinear pairing `ψᵀψ` is 1. The phase convention is
//! kept exactly, so operators built from these vectors come out entrywise in
//! the standard closed forms rather than up to a gauge.

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{Block, HamiltonianSpec, PTBlock};
use crate::numerics::{CScalar, CVector};

/// Relative width of the band around `|r sinθ| = s` classified as exceptional.
pub const EXCEPTIONAL_BAND: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseClass {
    Unbroken,
    Exceptional,
    Broken,
}

impl fmt::Display for PhaseClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PhaseClass::Unbroken => "UNBROKEN",
            PhaseClass::Exceptional => "EXCEPTIONAL",
            PhaseClass::Broken => "BROKEN",
        })
    }
}

/// The `(−1)ⁿ` label of an eigenpair: `+` for the upper state and for levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub value: CScalar,
    pub vector: CVector,
    pub sign_index: Sign,
    pub block_id: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockSpectrum {
    pub block_id: usize,
    /// First row of the block in the full matrix.
    pub offset: usize,
    pub width: usize,
    pub phase: PhaseClass,
    /// `arcsin(r sinθ / s)`; only defined in the unbroken phase of a PT block.
    pub phi: Option<f64>,
    /// Always populated, whatever the phase.
    pub eigenvalues: Vec<CScalar>,
    /// Eigenvectors are only produced in the unbroken phase; empty otherwise.
    pub pairs: Vec<EigenPair>,
}

impl BlockSpectrum {
    pub fn require_unbroken(&self) -> Result<()> {
        if self.phase == PhaseClass::Unbroken {
            Ok(())
        } else {
            Err(Error::NotUnbroken {
                block_id: self.block_id,
                phase: self.phase,
            })
        }
    }
}

pub fn classify(block: &PTBlock) -> PhaseClass {
    let gain = (block.r() * block.theta().sin()).abs();
    let s = block.s();
    if (s - gain).abs() <= EXCEPTIONAL_BAND * s.max(gain) {
        PhaseClass::Exceptional
    } else if gain < s {
        PhaseClass::Unbroken
    } else {
        PhaseClass::Broken
    }
}

/// Eigenvalues and CCS-normalized eigenvectors of an unbroken block, in local
/// 2-dimensional coordinates (`block_id` 0, `offset` 0).
pub fn eigen_block(block: &PTBlock) -> Result<BlockSpectrum> {
    let phase = classify(block);
    if phase != PhaseClass::Unbroken {
        return Err(Error::NotUnbroken { block_id: 0, phase });
    }
    let phi = (block.r() * block.theta().sin() / block.s()).asin();
    let centre = block.r() * block.theta().cos();
    let split = block.s() * phi.cos();
    let norm = (2.0 * phi.cos()).sqrt().recip();
    let half = CScalar::from_polar(norm, phi / 2.0);

    let plus = CVector::new(vec![half, half.conj()]).expect("finite eigenvector");
    let minus = CVector::new(vec![half.conj(), -half]).expect("finite eigenvector");
    let e_plus = CScalar::new(centre + split, 0.0);
    let e_minus = CScalar::new(centre - split, 0.0);

    Ok(BlockSpectrum {
        block_id: 0,
        offset: 0,
        width: 2,
        phase,
        phi: Some(phi),
        eigenvalues: vec![e_plus, e_minus],
        pairs: vec![
            EigenPair {
                value: e_plus,
                vector: plus,
                sign_index: Sign::Plus,
                block_id: 0,
            },
            EigenPair {
                value: e_minus,
                vector: minus,
                sign_index: Sign::Minus,
                block_id: 0,
            },
        ],
    })
}

/// Complex-conjugate eigenvalue pair `r cosθ ± i√(r²sin²θ − s²)` of a broken block.
pub fn eigen_broken(block: &PTBlock) -> Result<(CScalar, CScalar)> {
    let phase = classify(block);
    if phase != PhaseClass::Broken {
        return Err(Error::NotBroken { block_id: 0, phase });
    }
    let gain = block.r() * block.theta().sin();
    let s = block.s();
    let im = ((gain - s) * (gain + s)).sqrt();
    let plus = CScalar::new(block.r() * block.theta().cos(), im);
    Ok((plus, plus.conj()))
}

fn block_spectrum(block: &Block, block_id: usize, offset: usize, dim: usize) -> BlockSpectrum {
    match block {
        Block::Level(level) => {
            let value = CScalar::new(level.a(), 0.0);
            BlockSpectrum {
                block_id,
                offset,
                width: 1,
                phase: PhaseClass::Unbroken,
                phi: None,
                eigenvalues: vec![value],
                pairs: vec![EigenPair {
                    value,
                    vector: CVector::basis(dim, offset),
                    sign_index: Sign::Plus,
                    block_id,
                }],
            }
        }
        Block::Pt(pt) => match classify(pt) {
            PhaseClass::Unbroken => {
                let mut local = eigen_block(pt).expect("classified unbroken");
                local.block_id = block_id;
                local.offset = offset;
                for pair in &mut local.pairs {
                    pair.block_id = block_id;
                    pair.vector = CVector::embed(&pair.vector, dim, offset);
                }
                local
            }
            PhaseClass::Broken => {
                let (plus, minus) = eigen_broken(pt).expect("classified broken");
                BlockSpectrum {
                    block_id,
                    offset,
                    width: 2,
                    phase: PhaseClass::Broken,
                    phi: None,
                    eigenvalues: vec![plus, minus],
                    pairs: Vec::new(),
                }
            }
            PhaseClass::Exceptional => {
                let value = CScalar::new(pt.r() * pt.theta().cos(), 0.0);
                BlockSpectrum {
                    block_id,
                    offset,
                    width: 2,
                    phase: PhaseClass::Exceptional,
                    phi: None,
                    eigenvalues: vec![value, value],
                    pairs: Vec::new(),
                }
            }
        },
    }
}

/// Eigenvalues of every block, tolerating broken and exceptional blocks.
/// Eigenvectors are embedded in the full dimension for unbroken blocks only.
pub fn spectrum_only(spec: &HamiltonianSpec) -> Vec<BlockSpectrum> {
    let dim = spec.dimension();
    spec.blocks()
        .iter()
        .zip(spec.block_offsets())
        .enumerate()
        .map(|(id, (block, (offset, _)))| block_spectrum(block, id, offset, dim))
        .collect()
}

/// Full eigen-decomposition; fails on the first block that is not unbroken.
pub fn full_spectrum(spec: &HamiltonianSpec) -> Result<Vec<BlockSpectrum>> {
    let spectra = spectrum_only(spec);
    require_all_unbroken(&spectra)?;
    Ok(spectra)
}

pub fn require_all_unbroken(spectra: &[BlockSpectrum]) -> Result<()> {
    spectra.iter().try_for_each(BlockSpectrum::require_unbroken)
}

/// All eigenpairs in block order; this is the eigenpair id order used elsewhere.
pub fn eigenpairs(spectra: &[BlockSpectrum]) -> impl Iterator<Item = &EigenPair> {
    spectra.iter().flat_map(|s| s.pairs.iter())
}
