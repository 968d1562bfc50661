//! The complex-conjugate-space (CCS) pairing.
//!
//! Bras are plain transposes of kets: `⟨u*|v⟩ = Σ uᵢvᵢ`, with no conjugation.
//! Under this symmetric bilinear form the PT eigenvectors are orthonormal and
//! resolve both the identity and the Hamiltonian.

use crate::error::{Error, Result};
use crate::numerics::{CMatrix, CScalar, CVector};
use crate::spectra::{eigenpairs, require_all_unbroken, BlockSpectrum};

/// Row vector `⟨ψ*|`, the transpose of a ket.
#[derive(Debug, Clone, PartialEq)]
pub struct CcsBra {
    pub row: CVector,
}

impl CcsBra {
    pub fn of(ket: &CVector) -> Self {
        Self { row: ket.clone() }
    }

    pub fn pair(&self, ket: &CVector) -> Result<CScalar> {
        ccs_inner(&self.row, ket)
    }
}

fn require_same_dim(u: &CVector, v: &CVector, op: &'static str) -> Result<()> {
    if u.dim() != v.dim() {
        return Err(Error::DimensionMismatch {
            op,
            left: (u.dim(), 1),
            right: (v.dim(), 1),
        });
    }
    Ok(())
}

/// Bilinear pairing `Σ uᵢvᵢ`.
pub fn ccs_inner(u: &CVector, v: &CVector) -> Result<CScalar> {
    require_same_dim(u, v, "ccs_inner")?;
    Ok(u.entries()
        .iter()
        .zip(v.entries())
        .map(|(a, b)| a * b)
        .sum())
}

/// `⟨u*|M|v⟩`.
pub fn ccs_expectation(u: &CVector, m: &CMatrix, v: &CVector) -> Result<CScalar> {
    let mv = m.matvec(v)?;
    require_same_dim(u, &mv, "ccs_expectation")?;
    ccs_inner(u, &mv)
}

/// `|u⟩⟨v*| = u·vᵀ`.
pub fn outer(u: &CVector, v: &CVector) -> CMatrix {
    let entries = u
        .entries()
        .iter()
        .flat_map(|a| v.entries().iter().map(move |b| a * b))
        .collect();
    CMatrix::new(u.dim(), v.dim(), entries).expect("outer of finite vectors")
}

/// `|u⟩⟨u|` with the usual Hermitian bra.
pub(crate) fn hermitian_outer(u: &CVector) -> CMatrix {
    outer(u, &u.conj())
}

pub(crate) fn spectrum_dimension(spectra: &[BlockSpectrum]) -> Result<usize> {
    eigenpairs(spectra)
        .next()
        .map(|p| p.vector.dim())
        .ok_or(Error::EmptySpec)
}

/// `Σ weight(n)·ψₙψₙᵀ` over every eigenpair.
pub(crate) fn weighted_projector_sum(
    spectra: &[BlockSpectrum],
    weight: impl Fn(&crate::spectra::EigenPair) -> CScalar,
) -> Result<CMatrix> {
    require_all_unbroken(spectra)?;
    let n = spectrum_dimension(spectra)?;
    eigenpairs(spectra).try_fold(CMatrix::zeros(n, n), |acc, p| {
        acc.add(&outer(&p.vector, &p.vector).scale(weight(p)))
    })
}

/// `Σ Eₙ |ψₙ⟩⟨ψₙ*|`; equals the assembled Hamiltonian.
pub fn reconstruct(spectra: &[BlockSpectrum]) -> Result<CMatrix> {
    weighted_projector_sum(spectra, |p| p.value)
}

/// `Σ |ψₙ⟩⟨ψₙ*|`; equals the identity.
pub fn completeness(spectra: &[BlockSpectrum]) -> Result<CMatrix> {
    weighted_projector_sum(spectra, |_| CScalar::new(1.0, 0.0))
}

/// Matrix of bilinear pairings `⟨ψᵢ*|ψⱼ⟩` between all eigenvectors.
pub fn bilinear_gram(spectra: &[BlockSpectrum]) -> Result<CMatrix> {
    gram_with(spectra, ccs_inner)
}

/// Matrix of Hermitian inner products `⟨ψᵢ|ψⱼ⟩` between all eigenvectors.
pub fn hermitian_gram(spectra: &[BlockSpectrum]) -> Result<CMatrix> {
    gram_with(spectra, |u, v| ccs_inner(&u.conj(), v))
}

fn gram_with(
    spectra: &[BlockSpectrum],
    pairing: impl Fn(&CVector, &CVector) -> Result<CScalar>,
) -> Result<CMatrix> {
    require_all_unbroken(spectra)?;
    let vectors: Vec<&CVector> = eigenpairs(spectra).map(|p| &p.vector).collect();
    let n = vectors.len();
    let mut entries = Vec::with_capacity(n * n);
    for u in &vectors {
        for v in &vectors {
            entries.push(pairing(u, v)?);
        }
    }
    CMatrix::new(n, n, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{HamiltonianSpec, PTBlock, RealLevel};
    use crate::spectra::{eigen_block, full_spectrum, spectrum_only};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_6};

    fn c(re: f64, im: f64) -> CScalar {
        CScalar::new(re, im)
    }

    fn generic() -> (PTBlock, Vec<BlockSpectrum>) {
        let b = PTBlock::new(1.0, FRAC_PI_6, 1.0).unwrap();
        (b, vec![eigen_block(&b).unwrap()])
    }

    #[test]
    fn normalization_and_orthogonality() {
        let (_, sp) = generic();
        let plus = &sp[0].pairs[0].vector;
        let minus = &sp[0].pairs[1].vector;
        assert!((ccs_inner(plus, plus).unwrap() - 1.0).norm() < 1e-12);
        assert!((ccs_inner(minus, minus).unwrap() - 1.0).norm() < 1e-12);
        assert!(ccs_inner(plus, minus).unwrap().norm() < 1e-12);
        assert_eq!(CcsBra::of(plus).pair(minus), ccs_inner(minus, plus));
    }

    #[test]
    fn self_orthogonal_vector() {
        let v = CVector::new(vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(ccs_inner(&v, &v).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn dimension_mismatch() {
        let u = CVector::zeros(2);
        let v = CVector::zeros(3);
        assert!(matches!(
            ccs_inner(&u, &v),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(ccs_expectation(&u, &CMatrix::identity(3), &v).is_err());
    }

    #[test]
    fn energy_expectations() {
        let (b, sp) = generic();
        let h = b.matrix();
        let phi = sp[0].phi.unwrap();
        let plus = &sp[0].pairs[0].vector;
        let minus = &sp[0].pairs[1].vector;
        let centre = b.r() * b.theta().cos();
        let split = b.s() * phi.cos();
        assert!((ccs_expectation(plus, &h, plus).unwrap() - c(centre + split, 0.0)).norm() < 1e-12);
        assert!(
            (ccs_expectation(minus, &h, minus).unwrap() - c(centre - split, 0.0)).norm() < 1e-12
        );

        let spec =
            HamiltonianSpec::new(vec![b.into(), RealLevel::new(0.8).unwrap().into()]).unwrap();
        let h3 = spec.assemble();
        let level = CVector::basis(3, 2);
        assert_eq!(ccs_expectation(&level, &h3, &level).unwrap(), c(0.8, 0.0));
    }

    #[test]
    fn outer_product() {
        let m = outer(&CVector::basis(3, 0), &CVector::basis(3, 1));
        for i in 0..3 {
            for j in 0..3 {
                let expected = if (i, j) == (0, 1) { 1.0 } else { 0.0 };
                assert_eq!(m.get(i, j), c(expected, 0.0));
            }
        }
        // every 2×2 minor of a rank-1 matrix vanishes
        let u = CVector::new(vec![c(0.3, -1.0), c(2.0, 0.5), c(-0.7, 0.1)]).unwrap();
        let v = CVector::new(vec![c(1.1, 0.2), c(-0.4, 0.9), c(0.0, 1.0)]).unwrap();
        let m = outer(&u, &v);
        for i in 0..3 {
            for k in i + 1..3 {
                for j in 0..3 {
                    for l in j + 1..3 {
                        let minor = m.get(i, j) * m.get(k, l) - m.get(i, l) * m.get(k, j);
                        assert!(minor.norm() < 1e-14);
                    }
                }
            }
        }
    }

    #[test]
    fn reconstruct_and_completeness() {
        let (b, sp) = generic();
        assert!(reconstruct(&sp).unwrap().max_abs_diff(&b.matrix()).unwrap() < 1e-12);
        assert!(
            completeness(&sp)
                .unwrap()
                .max_abs_diff(&CMatrix::identity(2))
                .unwrap()
                < 1e-12
        );

        let herm = PTBlock::new(1.5, 0.0, 0.5).unwrap();
        let sp = vec![eigen_block(&herm).unwrap()];
        let expected = CMatrix::from_real_rows(&[vec![1.5, 0.5], vec![0.5, 1.5]]).unwrap();
        assert!(reconstruct(&sp).unwrap().max_abs_diff(&expected).unwrap() < 1e-12);

        let spec = HamiltonianSpec::new(vec![
            PTBlock::new(1.0, 0.4, 2.0).unwrap().into(),
            PTBlock::new(0.5, -1.0, 0.9).unwrap().into(),
        ])
        .unwrap();
        let sp = full_spectrum(&spec).unwrap();
        assert!(
            reconstruct(&sp)
                .unwrap()
                .max_abs_diff(&spec.assemble())
                .unwrap()
                < 1e-12
        );

        let spec =
            HamiltonianSpec::new(vec![b.into(), RealLevel::new(2.0).unwrap().into()]).unwrap();
        let sp = full_spectrum(&spec).unwrap();
        assert!(
            completeness(&sp)
                .unwrap()
                .max_abs_diff(&CMatrix::identity(3))
                .unwrap()
                < 1e-12
        );
    }

    #[test]
    fn broken_blocks_are_refused() {
        let spec =
            HamiltonianSpec::new(vec![PTBlock::new(2.0, FRAC_PI_2, 1.0).unwrap().into()]).unwrap();
        let sp = spectrum_only(&spec);
        assert!(matches!(
            reconstruct(&sp),
            Err(Error::NotUnbroken { block_id: 0, .. })
        ));
        assert!(matches!(completeness(&sp), Err(Error::NotUnbroken { .. })));
        assert!(bilinear_gram(&sp).is_err());
    }

    #[test]
    fn bilinear_gram_is_identity_hermitian_gram_is_not() {
        let (_, sp) = generic();
        let g = bilinear_gram(&sp).unwrap();
        assert!(g.max_abs_diff(&CMatrix::identity(2)).unwrap() < 1e-12);
        let h = hermitian_gram(&sp).unwrap();
        assert!(h.max_abs_diff(&CMatrix::identity(2)).unwrap() > 0.1);
    }
}
