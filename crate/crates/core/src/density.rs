//! Validated density operators.

use alloc::vec::Vec;

use crate::eig::hermitian_eig;
use crate::error::DensityError;
use crate::matrix::{CMatrix, HermitianMatrix};
use crate::tol::Tolerances;
use crate::C64;

/// Hermitian, PSD, unit-trace matrix together with its validation record.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: HermitianMatrix,
    trace_error: f64,
    min_eigenvalue: f64,
}

impl DensityMatrix {
    /// Validates trace and positive semidefiniteness.
    pub fn new(mat: HermitianMatrix, tol: &Tolerances) -> Result<Self, DensityError> {
        let trace = mat.trace();
        let trace_error = (trace - 1.0).abs();
        if trace_error > tol.structural {
            return Err(DensityError::TraceNotUnit { trace });
        }
        let min_eigenvalue = hermitian_eig(&mat, tol)?.values[0];
        if min_eigenvalue < tol.psd_floor(mat.scale()) {
            return Err(DensityError::NotPositiveSemidefinite { min_eigenvalue });
        }
        Ok(Self {
            mat,
            trace_error,
            min_eigenvalue,
        })
    }

    /// Projector `v v† / ‖v‖²` onto a pure state; PSD by construction, so no
    /// eigensolve is needed.
    pub fn from_pure(v: &[C64]) -> Self {
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        let mat = HermitianMatrix::from_upper(v.len(), |i, j| v[i] * v[j].conj() / norm_sqr);
        Self {
            trace_error: (mat.trace() - 1.0).abs(),
            min_eigenvalue: 0.0,
            mat,
        }
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.mat
    }

    pub fn entries(&self) -> &CMatrix {
        self.mat.matrix()
    }

    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    pub fn n_qubits(&self) -> u32 {
        self.dim().trailing_zeros()
    }

    pub fn scale(&self) -> f64 {
        self.mat.scale()
    }

    pub fn trace_error(&self) -> f64 {
        self.trace_error
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    /// Convex mixture `Σ p_k ρ_k`; weights must sum to one.
    pub fn mix(parts: &[(f64, DensityMatrix)], tol: &Tolerances) -> Result<Self, DensityError> {
        let dim = parts[0].1.dim();
        let mut acc = CMatrix::zeros(dim);
        for (p, rho) in parts {
            acc = acc.add(&rho.entries().scaled(C64::new(*p, 0.0)));
        }
        Self::new(HermitianMatrix::symmetrize(&acc), tol)
    }

    /// Kronecker product of two density operators.
    pub fn product(&self, inner: &DensityMatrix, tol: &Tolerances) -> Result<Self, DensityError> {
        Self::new(
            HermitianMatrix::symmetrize(&self.entries().kron(inner.entries())),
            tol,
        )
    }

    /// Diagonal entries (real).
    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.mat.get(i, i).re).collect()
    }
}
