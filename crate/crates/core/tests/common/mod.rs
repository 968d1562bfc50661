//! Random system generators and independent oracles shared by the
//! integration suites. Nothing here calls into `spectra`, `ccs` or `symmetry`.

#![allow(dead_code)]

use std::f64::consts::PI;

use ptsym::{Block, CMatrix, CScalar, HamiltonianSpec, PTBlock, RealLevel};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> CScalar {
    CScalar::new(re, im)
}

/// Unbroken block with `r ∈ [0,3]`, `θ ∈ [−π,π]` and `|r sinθ|/s ∈ [0, 0.95]`.
pub fn unbroken_block(rng: &mut StdRng) -> PTBlock {
    let r = rng.gen_range(0.0..=3.0);
    let theta = rng.gen_range(-PI..=PI);
    let gain = (r * f64::sin(theta)).abs();
    let ratio: f64 = rng.gen_range(0.0..=0.95);
    let s = if gain < 1e-3 || ratio < 0.05 {
        rng.gen_range(0.1..=3.0f64).max(gain / 0.95 + 1e-6)
    } else {
        gain / ratio
    };
    PTBlock::new(r, theta, s).unwrap()
}

/// Broken block with `|r sinθ|/s ∈ [1.05, 3]`.
pub fn broken_block(rng: &mut StdRng) -> PTBlock {
    loop {
        let r = rng.gen_range(0.5..=3.0);
        let theta = rng.gen_range(-PI..=PI);
        let gain = (r * f64::sin(theta)).abs();
        if gain < 0.2 {
            continue;
        }
        let ratio = rng.gen_range(1.05..=3.0);
        return PTBlock::new(r, theta, gain / ratio).unwrap();
    }
}

/// Shuffled mix of `pt` unbroken blocks and `levels` real levels.
pub fn unbroken_spec_with(rng: &mut StdRng, pt: usize, levels: usize) -> HamiltonianSpec {
    let mut blocks: Vec<Block> = (0..pt).map(|_| unbroken_block(rng).into()).collect();
    blocks.extend(
        (0..levels).map(|_| Block::from(RealLevel::new(rng.gen_range(-3.0..=3.0)).unwrap())),
    );
    blocks.shuffle(rng);
    HamiltonianSpec::new(blocks).unwrap()
}

/// Up to 10 PT blocks and 5 levels (N ≤ 25), never empty.
pub fn unbroken_spec(rng: &mut StdRng) -> HamiltonianSpec {
    loop {
        let pt = rng.gen_range(0..=10);
        let levels = rng.gen_range(0..=5);
        if pt + levels > 0 {
            return unbroken_spec_with(rng, pt, levels);
        }
    }
}

/// Like [`unbroken_spec`] but at least one PT block is broken.
pub fn broken_spec(rng: &mut StdRng) -> HamiltonianSpec {
    let base = unbroken_spec(rng);
    let mut blocks = base.blocks().to_vec();
    let at = rng.gen_range(0..=blocks.len());
    blocks.insert(at, broken_block(rng).into());
    HamiltonianSpec::new(blocks).unwrap()
}

/// Quadratic-formula roots of `λ² − tr·λ + det` for a 2×2 matrix,
/// ordered by descending real part then imaginary part.
pub fn char_poly_roots(h: &CMatrix) -> [CScalar; 2] {
    let tr = h.get(0, 0) + h.get(1, 1);
    let det = h.get(0, 0) * h.get(1, 1) - h.get(0, 1) * h.get(1, 0);
    let disc = (tr * tr - 4.0 * det).sqrt();
    let mut roots = [(tr + disc) / 2.0, (tr - disc) / 2.0];
    roots.sort_by(|a, b| {
        b.re.partial_cmp(&a.re)
            .unwrap()
            .then(b.im.partial_cmp(&a.im).unwrap())
    });
    roots
}

/// φ from `r sinθ = s sinφ`.
pub fn phi_of(b: &PTBlock) -> f64 {
    (b.r() * b.theta().sin() / b.s()).asin()
}

/// Expected C: `[[i tanφ, secφ], [secφ, −i tanφ]]` per block, 1 per level.
pub fn c_pattern(spec: &HamiltonianSpec) -> CMatrix {
    let n = spec.dimension();
    let mut rows = vec![vec![c(0.0, 0.0); n]; n];
    for (block, (o, _)) in spec.blocks().iter().zip(spec.block_offsets()) {
        match block {
            Block::Pt(b) => {
                let phi = phi_of(b);
                let (tan, sec) = (phi.tan(), 1.0 / phi.cos());
                rows[o][o] = c(0.0, tan);
                rows[o][o + 1] = c(sec, 0.0);
                rows[o + 1][o] = c(sec, 0.0);
                rows[o + 1][o + 1] = c(0.0, -tan);
            }
            Block::Level(_) => rows[o][o] = c(1.0, 0.0),
        }
    }
    CMatrix::from_rows(&rows).unwrap()
}

/// Expected P: exchange matrix per block, 1 per level.
pub fn p_pattern(spec: &HamiltonianSpec) -> CMatrix {
    let n = spec.dimension();
    let mut rows = vec![vec![0.0; n]; n];
    for (block, (o, _)) in spec.blocks().iter().zip(spec.block_offsets()) {
        match block {
            Block::Pt(_) => {
                rows[o][o + 1] = 1.0;
                rows[o + 1][o] = 1.0;
            }
            Block::Level(_) => rows[o][o] = 1.0,
        }
    }
    CMatrix::from_real_rows(&rows).unwrap()
}

/// Scalar continued fraction `f₀ = λ`, `f_{k+1} = λ/(β + f_k)`.
pub fn scalar_cfrac(lambda: f64, beta: f64, depth: usize) -> f64 {
    let mut f = lambda;
    for _ in 0..depth {
        f = lambda / (beta + f);
    }
    f
}

pub fn report(id: usize, name: &str, ok: bool, detail: &str) {
    println!(
        "ACCEPT {id:>2} {name:<28} {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}
