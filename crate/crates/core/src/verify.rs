//! Named residual checks over a fully unbroken system.

use crate::ccs::{bilinear_gram, completeness, reconstruct};
use crate::error::Result;
use crate::model::HamiltonianSpec;
use crate::numerics::{CMatrix, CScalar};
use crate::spectra::{eigenpairs, full_spectrum, BlockSpectrum};
use crate::symmetry::{
    antilinear_commutator_norm, build_operators, c_expectations, commutator_norm, verify_cpt,
    OperatorSet,
};

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub residual: f64,
    pub tol: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.residual.is_finite() && self.residual <= self.tol
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Everything the checks need, computed once.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub hamiltonian: CMatrix,
    pub spectra: Vec<BlockSpectrum>,
    pub operators: OperatorSet,
    pub num_levels: usize,
}

impl Analysis {
    pub fn new(spec: &HamiltonianSpec) -> Result<Self> {
        let spectra = full_spectrum(spec)?;
        let operators = build_operators(spec, &spectra)?;
        Ok(Self {
            hamiltonian: spec.assemble(),
            spectra,
            operators,
            num_levels: spec.num_levels(),
        })
    }

    pub fn report(&self, tol: f64) -> Result<Report> {
        let n = self.hamiltonian.nrows();
        let id = CMatrix::identity(n);
        let h = &self.hamiltonian;
        let ops = &self.operators;
        let levels = CScalar::new(self.num_levels as f64, 0.0);

        let t_twice = ops.t.compose(&ops.t)?;
        let t_residual = if t_twice.conjugates {
            f64::INFINITY
        } else {
            t_twice.matrix_part.max_abs_diff(&id)?
        };

        let signs: Vec<f64> = eigenpairs(&self.spectra)
            .map(|p| p.sign_index.value())
            .collect();
        let c_exp = c_expectations(&self.spectra, &ops.c)?
            .into_iter()
            .map(|(i, v)| (v - signs[i]).norm())
            .fold(0.0, f64::max);

        let residuals = [
            (
                "orthonormality",
                bilinear_gram(&self.spectra)?.max_abs_diff(&id)?,
            ),
            (
                "completeness",
                completeness(&self.spectra)?.max_abs_diff(&id)?,
            ),
            (
                "reconstruction",
                reconstruct(&self.spectra)?.max_abs_diff(h)?,
            ),
            ("c_squared", ops.c.matmul(&ops.c)?.max_abs_diff(&id)?),
            ("p_squared", ops.p.matmul(&ops.p)?.max_abs_diff(&id)?),
            ("t_squared", t_residual),
            ("p_real", ops.p.max_imag()),
            ("commutator_hc", commutator_norm(h, &ops.c)?),
            ("pt_symmetry", antilinear_commutator_norm(h, &ops.pt()?)?),
            ("cpt", verify_cpt(h, ops)?),
            ("c_expectations", c_exp),
            ("trace_c", (ops.c.trace()? - levels).norm()),
            ("trace_p", (ops.p.trace()? - levels).norm()),
        ];
        Ok(Report {
            checks: residuals
                .into_iter()
                .map(|(name, residual)| Check {
                    name,
                    residual,
                    tol,
                })
                .collect(),
        })
    }
}
