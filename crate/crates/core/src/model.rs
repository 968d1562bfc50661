//! System definitions: direct sums of 2×2 PT blocks and real 1×1 levels.

use crate::error::{Error, Result};
use crate::numerics::{direct_sum, CMatrix, CScalar};

/// One 2×2 PT-symmetric block `[[r e^{iθ}, s], [s, r e^{-iθ}]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTBlock {
    r: f64,
    theta: f64,
    s: f64,
}

impl PTBlock {
    /// `r ≥ 0`, `s > 0`, all finite. Angles are in radians.
    pub fn new(r: f64, theta: f64, s: f64) -> Result<Self> {
        if !(r.is_finite() && theta.is_finite() && s.is_finite()) {
            return Err(Error::InvalidBlock(format!(
                "non-finite parameter (r={r}, theta={theta}, s={s})"
            )));
        }
        if r < 0.0 {
            return Err(Error::InvalidBlock(format!("r must be >= 0, got {r}")));
        }
        if s <= 0.0 {
            return Err(Error::InvalidBlock(format!("s must be > 0, got {s}")));
        }
        Ok(Self { r, theta, s })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    /// Upper diagonal entry `τ = r e^{iθ}`.
    pub fn tau(&self) -> CScalar {
        CScalar::from_polar(self.r, self.theta)
    }

    /// Lower diagonal entry `σ = r e^{-iθ}`, the conjugate of `tau`.
    pub fn sigma(&self) -> CScalar {
        self.tau().conj()
    }

    pub fn matrix(&self) -> CMatrix {
        let s = CScalar::new(self.s, 0.0);
        CMatrix::from_rows(&[vec![self.tau(), s], vec![s, self.sigma()]]).expect("finite 2x2 block")
    }
}

/// A real 1×1 level `[a]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealLevel {
    a: f64,
}

impl RealLevel {
    pub fn new(a: f64) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::InvalidBlock(format!(
                "level must be finite, got {a}"
            )));
        }
        Ok(Self { a })
    }

    pub fn a(&self) -> f64 {
        self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Block {
    Pt(PTBlock),
    Level(RealLevel),
}

impl Block {
    pub fn width(&self) -> usize {
        match self {
            Block::Pt(_) => 2,
            Block::Level(_) => 1,
        }
    }

    pub fn matrix(&self) -> CMatrix {
        match self {
            Block::Pt(b) => b.matrix(),
            Block::Level(l) => CMatrix::from_real_rows(&[vec![l.a]]).expect("finite level"),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Block::Pt(_) => "pt2",
            Block::Level(_) => "level",
        }
    }
}

impl From<PTBlock> for Block {
    fn from(b: PTBlock) -> Self {
        Block::Pt(b)
    }
}

impl From<RealLevel> for Block {
    fn from(l: RealLevel) -> Self {
        Block::Level(l)
    }
}

/// Ordered direct sum of blocks. Order is preserved in the assembled matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct HamiltonianSpec {
    blocks: Vec<Block>,
}

impl HamiltonianSpec {
    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::EmptySpec);
        }
        Ok(Self { blocks })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(Block::width).sum()
    }

    pub fn num_levels(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| matches!(b, Block::Level(_)))
            .count()
    }

    /// `(start_index, width)` for each block, in order.
    pub fn block_offsets(&self) -> Vec<(usize, usize)> {
        let mut start = 0;
        self.blocks
            .iter()
            .map(|b| {
                let entry = (start, b.width());
                start += b.width();
                entry
            })
            .collect()
    }

    pub fn assemble(&self) -> CMatrix {
        let mats: Vec<CMatrix> = self.blocks.iter().map(Block::matrix).collect();
        direct_sum(&mats).expect("spec is nonempty and every block is square")
    }
}
