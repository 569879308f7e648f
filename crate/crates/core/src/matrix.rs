//! Dense complex matrices and the Hermitian newtype the kernel operates on.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::MatrixError;
use crate::C64;

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Build from row-major real entries; handy for fixtures and tests.
    pub fn from_real_rows(rows: &[&[f64]]) -> Self {
        let dim = rows.len();
        Self::from_fn(dim, |i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: C64) {
        self.data[i * self.dim + j] = v;
    }

    /// Largest absolute entry; the reference scale for relative tolerances.
    pub fn scale(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j).conj())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.dim, rhs.dim);
        Self::from_fn(self.dim, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.dim, rhs.dim);
        Self::from_fn(self.dim, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn scaled(&self, s: C64) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, j) * s)
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        num_traits::Float::sqrt(self.data.iter().map(|z| z.norm_sqr()).sum::<f64>())
    }

    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        debug_assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(rhs.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (da, db) = (self.dim, rhs.dim);
        CMatrix::from_fn(da * db, |i, j| {
            self.get(i / db, j / db) * rhs.get(i % db, j % db)
        })
    }

    /// Outer product `v v†` of a (not necessarily normalised) vector.
    pub fn outer(v: &[C64]) -> Self {
        CMatrix::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn max_hermitian_asymmetry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Fixed text form used by reports: `re±im·i` with 12 significant digits.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for i in 0..self.dim {
            s.push_str(if i == 0 { "[" } else { " " });
            for j in 0..self.dim {
                if j > 0 {
                    s.push_str("  ");
                }
                let z = self.get(i, j);
                let sign = if z.im.is_sign_negative() { '-' } else { '+' };
                let _ = write!(s, "{:.11e}{}{:.11e}·i", z.re, sign, z.im.abs());
            }
            s.push_str(if i + 1 == self.dim { "]\n" } else { "\n" });
        }
        s
    }
}

impl core::ops::Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.dim + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Hermitian matrix with exact conjugate symmetry.
///
/// `entries(i, j) == conj(entries(j, i))` holds bitwise, not merely within a
/// tolerance: constructors either verify it or symmetrise. The dimension is a
/// power of two (everything here lives on qubit registers).
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    mat: CMatrix,
    scale: f64,
}

impl HermitianMatrix {
    /// Wraps a matrix that is already exactly Hermitian.
    pub fn new(mat: CMatrix) -> Result<Self, MatrixError> {
        if !mat.dim().is_power_of_two() {
            return Err(MatrixError::NotPowerOfTwo { dim: mat.dim() });
        }
        for i in 0..mat.dim() {
            for j in i..mat.dim() {
                let a = mat.get(i, j);
                let b = mat.get(j, i).conj();
                // exact equality, no tolerance (±0.0 compare equal)
                if a.re != b.re || a.im != b.im {
                    return Err(MatrixError::NotHermitian {
                        max_asymmetry: mat.max_hermitian_asymmetry(),
                    });
                }
            }
        }
        let scale = mat.scale();
        Ok(Self { mat, scale })
    }

    /// Projects onto the Hermitian part `(A + A†)/2` and wraps the result.
    ///
    /// The lower triangle is rewritten as the exact conjugate of the upper
    /// one so the bitwise invariant holds after floating-point arithmetic.
    pub fn symmetrize(a: &CMatrix) -> Self {
        let dim = a.dim();
        debug_assert!(dim.is_power_of_two());
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new((a.get(i, i).re + a.get(i, i).re) * 0.5, 0.0);
            for j in (i + 1)..dim {
                let v = (a.get(i, j) + a.get(j, i).conj()) * 0.5;
                m[(i, j)] = v;
                m[(j, i)] = v.conj();
            }
        }
        let scale = m.scale();
        Self { mat: m, scale }
    }

    /// Builds from the upper triangle: `f(i, j)` is consulted for `i <= j`,
    /// the lower triangle is the exact conjugate, diagonals keep `re` only.
    pub fn from_upper(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        debug_assert!(dim.is_power_of_two());
        let mut m = CMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(f(i, i).re, 0.0);
            for j in (i + 1)..dim {
                let v = f(i, j);
                m[(i, j)] = v;
                m[(j, i)] = v.conj();
            }
        }
        let scale = m.scale();
        Self { mat: m, scale }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            mat: CMatrix::zeros(dim),
            scale: 0.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.mat.get(i, j)
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix {
        self.mat
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.get(i, i).re).sum()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::symmetrize(&self.mat.add(&rhs.mat))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::symmetrize(&self.mat.sub(&rhs.mat))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::symmetrize(&self.mat.scaled(C64::new(s, 0.0)))
    }
}

/// Splits an arbitrary square matrix into Hermitian and anti-Hermitian parts:
/// `H = (A + A†)/2`, `K = (A − A†)/(2i)`, so `A = H + iK`.
pub fn hermitian_split(a: &CMatrix) -> (HermitianMatrix, HermitianMatrix) {
    let h = HermitianMatrix::symmetrize(a);
    // (A − A†)/(2i) = −i/2 · (A − A†)
    let anti = a.sub(&a.adjoint()).scaled(C64::new(0.0, -0.5));
    let k = HermitianMatrix::symmetrize(&anti);
    (h, k)
}
