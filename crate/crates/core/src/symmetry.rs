//! Explicit C, P and T operators and their commutation identities.

use crate::ccs::{ccs_expectation, hermitian_outer, spectrum_dimension, weighted_projector_sum};
use crate::error::{Error, Result};
use crate::model::HamiltonianSpec;
use crate::numerics::{CMatrix, CScalar, CVector};
use crate::spectra::{eigenpairs, require_all_unbroken, BlockSpectrum};

/// An operator `A∘K` (or plain `A` when `conjugates` is false).
#[derive(Debug, Clone, PartialEq)]
pub struct AntilinearOperator {
    pub matrix_part: CMatrix,
    pub conjugates: bool,
}

impl AntilinearOperator {
    pub fn new(matrix_part: CMatrix, conjugates: bool) -> Result<Self> {
        if !matrix_part.is_square() {
            return Err(Error::NotSquare(matrix_part.nrows(), matrix_part.ncols()));
        }
        Ok(Self {
            matrix_part,
            conjugates,
        })
    }

    /// Bare complex conjugation `K` in `n` dimensions.
    pub fn conjugation(n: usize) -> Self {
        Self {
            matrix_part: CMatrix::identity(n),
            conjugates: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix_part.nrows()
    }

    pub fn apply(&self, v: &CVector) -> Result<CVector> {
        if self.conjugates {
            self.matrix_part.matvec(&v.conj())
        } else {
            self.matrix_part.matvec(v)
        }
    }

    /// `self ∘ other`: `(A K^a)(B K^b) = A·K^a(B)·K^{a+b}`.
    pub fn compose(&self, other: &AntilinearOperator) -> Result<Self> {
        let b = if self.conjugates {
            other.matrix_part.conj()
        } else {
            other.matrix_part.clone()
        };
        Ok(Self {
            matrix_part: self.matrix_part.matmul(&b)?,
            conjugates: self.conjugates != other.conjugates,
        })
    }

    /// `(A K)⁻¹ = K A⁻¹ = conj(A⁻¹) K`.
    pub fn inverse(&self) -> Result<Self> {
        let inv = self.matrix_part.inverse()?;
        Ok(Self {
            matrix_part: if self.conjugates { inv.conj() } else { inv },
            conjugates: self.conjugates,
        })
    }

    /// The linear map `self⁻¹ ∘ M ∘ self` as a matrix.
    pub fn similarity(&self, m: &CMatrix) -> Result<CMatrix> {
        let inv = self.matrix_part.inverse()?;
        let x = inv.matmul(m)?.matmul(&self.matrix_part)?;
        Ok(if self.conjugates { x.conj() } else { x })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSet {
    pub c: CMatrix,
    pub p: CMatrix,
    pub t: AntilinearOperator,
}

impl OperatorSet {
    /// `P∘T` as a single antilinear operator.
    pub fn pt(&self) -> Result<AntilinearOperator> {
        AntilinearOperator {
            matrix_part: self.p.clone(),
            conjugates: false,
        }
        .compose(&self.t)
    }
}

/// `C = Σ (−1)ⁿ |ψₙ⟩⟨ψₙ*|`.
pub fn build_c(spectra: &[BlockSpectrum]) -> Result<CMatrix> {
    weighted_projector_sum(spectra, |p| CScalar::new(p.sign_index.value(), 0.0))
}

/// `P = G⁻¹·C` with the Hermitian Gram matrix `G = Σ |ψₙ⟩⟨ψₙ|`.
pub fn build_p(spectra: &[BlockSpectrum]) -> Result<CMatrix> {
    require_all_unbroken(spectra)?;
    let n = spectrum_dimension(spectra)?;
    let gram = eigenpairs(spectra).try_fold(CMatrix::zeros(n, n), |acc, p| {
        acc.add(&hermitian_outer(&p.vector))
    })?;
    gram.inverse()?.matmul(&build_c(spectra)?)
}

/// `T = I·K`.
pub fn build_t(spec: &HamiltonianSpec) -> AntilinearOperator {
    AntilinearOperator::conjugation(spec.dimension())
}

pub fn build_operators(spec: &HamiltonianSpec, spectra: &[BlockSpectrum]) -> Result<OperatorSet> {
    Ok(OperatorSet {
        c: build_c(spectra)?,
        p: build_p(spectra)?,
        t: build_t(spec),
    })
}

fn require_square_pair(h: &CMatrix, m: &CMatrix, op: &'static str) -> Result<()> {
    if !h.is_square() || h.shape() != m.shape() {
        return Err(Error::DimensionMismatch {
            op,
            left: h.shape(),
            right: m.shape(),
        });
    }
    Ok(())
}

/// `‖HM − MH‖_F`.
pub fn commutator_norm(h: &CMatrix, m: &CMatrix) -> Result<f64> {
    require_square_pair(h, m, "commutator")?;
    Ok(h.matmul(m)?.sub(&m.matmul(h)?)?.frob_norm())
}

/// Frobenius residual of `[H, O] = 0` for a (possibly) antilinear `O = M∘K`,
/// which reads `H·M = M·conj(H)`.
pub fn antilinear_commutator_norm(h: &CMatrix, op: &AntilinearOperator) -> Result<f64> {
    require_square_pair(h, &op.matrix_part, "antilinear commutator")?;
    let rhs_h = if op.conjugates { h.conj() } else { h.clone() };
    Ok(h.matmul(&op.matrix_part)?
        .sub(&op.matrix_part.matmul(&rhs_h)?)?
        .frob_norm())
}

/// Max-norm distance between `T⁻¹(P⁻¹(C⁻¹HC)P)T` and `H`.
pub fn verify_cpt(h: &CMatrix, ops: &OperatorSet) -> Result<f64> {
    require_square_pair(h, &ops.c, "cpt")?;
    let c_inv = ops.c.inverse()?;
    let p_inv = ops.p.inverse()?;
    let inner = c_inv.matmul(h)?.matmul(&ops.c)?;
    let middle = p_inv.matmul(&inner)?.matmul(&ops.p)?;
    ops.t.similarity(&middle)?.max_abs_diff(h)
}

/// `⟨ψₙ*|C|ψₙ⟩` for every eigenpair id, in [`eigenpairs`] order.
pub fn c_expectations(spectra: &[BlockSpectrum], c: &CMatrix) -> Result<Vec<(usize, CScalar)>> {
    require_all_unbroken(spectra)?;
    eigenpairs(spectra)
        .enumerate()
        .map(|(id, p)| Ok((id, ccs_expectation(&p.vector, c, &p.vector)?)))
        .collect()
}

/// Parameters of the nested fraction `F = C/(β + C/(β + … C/(β + C)))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CFracConfig {
    pub beta: f64,
    pub depth: usize,
}

impl Default for CFracConfig {
    fn default() -> Self {
        Self {
            beta: 2.0,
            depth: 11,
        }
    }
}

/// Smallest admissible `|β + f_k(±1)|` relative to `max(1, |β|)`.
pub const POLE_GUARD: f64 = 1e-12;

impl CFracConfig {
    pub fn new(beta: f64, depth: usize) -> Result<Self> {
        if !beta.is_finite() {
            return Err(Error::InvalidCFrac(format!(
                "beta must be finite, got {beta}"
            )));
        }
        if depth == 0 {
            return Err(Error::InvalidCFrac("depth must be >= 1".into()));
        }
        Ok(Self { beta, depth })
    }

    /// Scalar fraction seeded with `f₀ = λ`, iterated `f_{k+1} = λ/(β + f_k)`.
    /// Fails at the first level whose denominator is within the pole guard.
    pub fn scalar(&self, lambda: f64) -> Result<f64> {
        let guard = POLE_GUARD * self.beta.abs().max(1.0);
        let mut f = lambda;
        for level in 0..self.depth {
            let denom = self.beta + f;
            if denom.abs() <= guard {
                return Err(Error::ContinuedFractionPole {
                    level,
                    lambda,
                    value: denom,
                });
            }
            f = lambda / denom;
        }
        Ok(f)
    }

    /// Checks both C eigenvalues ±1 against the pole guard.
    pub fn check_poles(&self) -> Result<()> {
        self.scalar(1.0)?;
        self.scalar(-1.0)?;
        Ok(())
    }
}

/// `F_depth` of `F₀ = C`, `F_{k+1} = C·(βI + F_k)⁻¹`.
pub fn cfrac_f(c: &CMatrix, cfg: &CFracConfig) -> Result<CMatrix> {
    cfg.check_poles()?;
    let beta = CScalar::new(cfg.beta, 0.0);
    let mut f = c.clone();
    for _ in 0..cfg.depth {
        f = c.matmul(&f.shift_diagonal(beta)?.inverse()?)?;
    }
    Ok(f)
}
