//! Small dense complex matrices and vectors.
//!
//! Everything here is row-major and immutable once built. Matrices in this
//! crate never exceed a few dozen rows, so all algorithms are the plain
//! O(n³) ones.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Complex scalar used for every matrix and vector entry.
pub type CScalar = Complex64;

/// Relative pivot threshold used by [`CMatrix::inverse`].
pub const PIVOT_THRESHOLD: f64 = 1e-12;

pub(crate) const ZERO: CScalar = CScalar::new(0.0, 0.0);
pub(crate) const ONE: CScalar = CScalar::new(1.0, 0.0);

fn check_finite(entries: &[CScalar]) -> Result<()> {
    match entries
        .iter()
        .position(|z| !(z.re.is_finite() && z.im.is_finite()))
    {
        Some(idx) => Err(Error::NonFinite(idx)),
        None => Ok(()),
    }
}

/// Dense complex vector.
#[derive(Debug, Clone, PartialEq)]
pub struct CVector {
    entries: Vec<CScalar>,
}

impl CVector {
    pub fn new(entries: Vec<CScalar>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyMatrix(0, 1));
        }
        check_finite(&entries)?;
        Ok(Self { entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![ZERO; dim],
        }
    }

    /// Standard basis vector `e_index` in `dim` dimensions.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut entries = vec![ZERO; dim];
        entries[index] = ONE;
        Self { entries }
    }

    /// Places `local` at `offset` inside a zero vector of length `dim`.
    pub fn embed(local: &CVector, dim: usize, offset: usize) -> Self {
        let mut entries = vec![ZERO; dim];
        entries[offset..offset + local.dim()].copy_from_slice(&local.entries);
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[CScalar] {
        &self.entries
    }

    pub fn conj(&self) -> Self {
        Self {
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, alpha: CScalar) -> Self {
        Self {
            entries: self.entries.iter().map(|z| alpha * z).collect(),
        }
    }

    pub fn add(&self, other: &CVector) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                op: "vector add",
                left: (self.dim(), 1),
                right: (other.dim(), 1),
            });
        }
        Ok(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    nrows: usize,
    ncols: usize,
    entries: Vec<CScalar>,
}

impl CMatrix {
    pub fn new(nrows: usize, ncols: usize, entries: Vec<CScalar>) -> Result<Self> {
        if nrows == 0 || ncols == 0 {
            return Err(Error::EmptyMatrix(nrows, ncols));
        }
        if entries.len() != nrows * ncols {
            return Err(Error::EntryCount {
                expected: nrows * ncols,
                got: entries.len(),
            });
        }
        check_finite(&entries)?;
        Ok(Self {
            nrows,
            ncols,
            entries,
        })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: &[Vec<CScalar>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let entries: Vec<CScalar> = rows.iter().flatten().copied().collect();
        Self::new(nrows, ncols, entries)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<CScalar>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| CScalar::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            ncols,
            entries: vec![ZERO; nrows * ncols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = ONE;
        }
        m
    }

    pub fn from_diagonal(diag: &[CScalar]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d;
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn entries(&self) -> &[CScalar] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> CScalar {
        self.entries[i * self.ncols + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, value: CScalar) {
        self.entries[i * self.ncols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[CScalar] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[CScalar]> {
        self.entries.chunks(self.ncols)
    }

    pub fn column(&self, j: usize) -> CVector {
        CVector {
            entries: (0..self.nrows).map(|i| self.get(i, j)).collect(),
        }
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.nrows)
        } else {
            Err(Error::NotSquare(self.nrows, self.ncols))
        }
    }

    fn require_same_shape(&self, other: &CMatrix, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch {
                op: "mat_mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = CMatrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                let brow = other.row(k);
                let orow = &mut out.entries[i * other.ncols..(i + 1) * other.ncols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn matvec(&self, v: &CVector) -> Result<CVector> {
        if self.ncols != v.dim() {
            return Err(Error::DimensionMismatch {
                op: "mat_vec",
                left: self.shape(),
                right: (v.dim(), 1),
            });
        }
        let entries = self
            .rows()
            .map(|row| row.iter().zip(v.entries()).map(|(a, b)| a * b).sum())
            .collect();
        Ok(CVector { entries })
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        self.require_same_shape(other, "add")?;
        Ok(self.zip_map(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.require_same_shape(other, "sub")?;
        Ok(self.zip_map(other, |a, b| a - b))
    }

    fn zip_map(&self, other: &CMatrix, f: impl Fn(CScalar, CScalar) -> CScalar) -> CMatrix {
        CMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn map(&self, f: impl Fn(CScalar) -> CScalar) -> CMatrix {
        CMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, alpha: CScalar) -> CMatrix {
        self.map(|z| alpha * z)
    }

    /// `self + alpha·I`.
    pub fn shift_diagonal(&self, alpha: CScalar) -> Result<CMatrix> {
        let n = self.require_square()?;
        let mut out = self.clone();
        for i in 0..n {
            out.entries[i * n + i] += alpha;
        }
        Ok(out)
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> CMatrix {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.entries[j * self.nrows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.ncols, self.nrows);
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                out.entries[j * self.nrows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Result<CScalar> {
        let n = self.require_square()?;
        Ok((0..n).map(|i| self.get(i, i)).sum())
    }

    pub fn frob_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest |imaginary part| over all entries.
    pub fn max_imag(&self) -> f64 {
        self.entries.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Max-norm distance `max|a_ij − b_ij|`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> Result<f64> {
        self.require_same_shape(other, "max_abs_diff")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// Gauss-Jordan inversion with partial pivoting.
    ///
    /// A pivot smaller than `PIVOT_THRESHOLD · max|a_ij|` is reported as
    /// [`Error::SingularMatrix`].
    pub fn inverse(&self) -> Result<CMatrix> {
        let n = self.require_square()?;
        let threshold = PIVOT_THRESHOLD * self.max_abs();
        let mut work = self.entries.clone();
        let mut inv = CMatrix::identity(n).entries;

        for col in 0..n {
            let (pivot_row, pivot_abs) =
                (col..n)
                    .map(|r| (r, work[r * n + col].norm()))
                    .fold(
                        (col, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot_abs <= threshold {
                return Err(Error::SingularMatrix {
                    column: col,
                    pivot: pivot_abs,
                    threshold,
                });
            }
            if pivot_row != col {
                for j in 0..n {
                    work.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let pivot_inv = work[col * n + col].inv();
            for j in 0..n {
                work[col * n + j] *= pivot_inv;
                inv[col * n + j] *= pivot_inv;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work[r * n + col];
                if factor == ZERO {
                    continue;
                }
                for j in 0..n {
                    let w = work[col * n + j];
                    let v = inv[col * n + j];
                    work[r * n + j] -= factor * w;
                    inv[r * n + j] -= factor * v;
                }
            }
        }
        Ok(CMatrix {
            nrows: n,
            ncols: n,
            entries: inv,
        })
    }
}

/// Block-diagonal matrix with `blocks` along the diagonal, zeros elsewhere.
pub fn direct_sum(blocks: &[CMatrix]) -> Result<CMatrix> {
    if blocks.is_empty() {
        return Err(Error::EmptyDirectSum);
    }
    for b in blocks {
        b.require_square()?;
    }
    let n: usize = blocks.iter().map(CMatrix::nrows).sum();
    let mut out = CMatrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        for i in 0..b.nrows {
            for j in 0..b.ncols {
                out.set(offset + i, offset + j, b.get(i, j));
            }
        }
        offset += b.nrows;
    }
    Ok(out)
}
