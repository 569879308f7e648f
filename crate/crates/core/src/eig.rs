//! Hermitian eigendecomposition (cyclic Jacobi) and the spectral helpers
//! built on it: PSD splits, matrix absolute value, cone projections.

use alloc::vec::Vec;
// resolves float intrinsics under no_std; shadowed by inherent methods in tests
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::ConvergenceFailure;
use crate::matrix::{CMatrix, HermitianMatrix};
use crate::tol::Tolerances;
use crate::C64;

/// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues and
/// matching orthonormal eigenvector columns.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

impl Eigen {
    pub fn vector(&self, k: usize) -> Vec<C64> {
        (0..self.vectors.dim())
            .map(|i| self.vectors.get(i, k))
            .collect()
    }
}

fn off_diagonal_norm(a: &CMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a.get(i, j).norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi for complex Hermitian matrices.
///
/// Each rotation reduces the (p, q) plane to real form with a phase, then
/// applies the classical symmetric Jacobi rotation. Sweeps run until the
/// off-diagonal Frobenius norm drops below `1e-14 * max(scale, 1) * dim`,
/// comfortably inside the contract residual `eig_residual * max(scale, 1)`.
pub fn hermitian_eig(m: &HermitianMatrix, tol: &Tolerances) -> Result<Eigen, ConvergenceFailure> {
    let n = m.dim();
    let mut a = m.matrix().clone();
    let mut v = CMatrix::identity(n);
    let scale = m.scale().max(1.0);
    let target = 1e-14 * scale * n as f64;

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > target {
        if sweeps >= tol.jacobi_sweeps {
            return Err(ConvergenceFailure {
                sweeps,
                off_diagonal: off_diagonal_norm(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a.get(p, q);
                let r = apq.norm();
                if r <= f64::MIN_POSITIVE * 4.0 {
                    a[(p, q)] = C64::new(0.0, 0.0);
                    a[(q, p)] = C64::new(0.0, 0.0);
                    continue;
                }
                let phase = apq / r; // e^{i φ}
                let app = a.get(p, p).re;
                let aqq = a.get(q, q).re;
                // zero the off-diagonal: t² − 2τt − 1 = 0, small root
                let tau = (aqq - app) / (2.0 * r);
                let t = if tau >= 0.0 {
                    -1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Columns p, q of the rotation: (c, s e^{-iφ}) and (-s, c e^{-iφ}).
                let w = phase.conj();
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    let np = akp * c + akq * (w * s);
                    let nq = akq * (w * c) - akp * s;
                    a[(k, p)] = np;
                    a[(p, k)] = np.conj();
                    a[(k, q)] = nq;
                    a[(q, k)] = nq.conj();
                }
                a[(p, p)] = C64::new(app + t * r, 0.0);
                a[(q, q)] = C64::new(aqq - t * r, 0.0);
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v[(k, p)] = vkp * c + vkq * (w * s);
                    v[(k, q)] = vkq * (w * c) - vkp * s;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.partial_cmp(&a.get(j, j).re).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| a.get(i, i).re).collect();
    let vectors = CMatrix::from_fn(n, |i, j| v.get(i, order[j]));
    Ok(Eigen { values, vectors })
}

/// Smallest eigenvalue.
pub fn min_eigenvalue(m: &HermitianMatrix, tol: &Tolerances) -> Result<f64, ConvergenceFailure> {
    Ok(hermitian_eig(m, tol)?.values[0])
}

fn spectral_map(
    m: &HermitianMatrix,
    tol: &Tolerances,
    mut f: impl FnMut(f64) -> f64,
) -> Result<HermitianMatrix, ConvergenceFailure> {
    let eig = hermitian_eig(m, tol)?;
    let n = m.dim();
    let mut out = CMatrix::zeros(n);
    for (k, &lambda) in eig.values.iter().enumerate() {
        let fl = f(lambda);
        if fl == 0.0 {
            continue;
        }
        for i in 0..n {
            let vi = eig.vectors.get(i, k);
            for j in 0..n {
                out[(i, j)] += vi * eig.vectors.get(j, k).conj() * fl;
            }
        }
    }
    Ok(HermitianMatrix::symmetrize(&out))
}

/// Spectral split `H = P − N` with `P, N ⪰ 0` and `P·N = 0`.
pub fn psd_split(
    h: &HermitianMatrix,
    tol: &Tolerances,
) -> Result<(HermitianMatrix, HermitianMatrix), ConvergenceFailure> {
    let p = spectral_map(h, tol, |l| l.max(0.0))?;
    let n = spectral_map(h, tol, |l| (-l).max(0.0))?;
    Ok((p, n))
}

/// Positive part of the spectrum; the projection of `H` onto the PSD cone.
pub fn positive_part(
    h: &HermitianMatrix,
    tol: &Tolerances,
) -> Result<HermitianMatrix, ConvergenceFailure> {
    spectral_map(h, tol, |l| l.max(0.0))
}

/// Matrix absolute value `|H| = P + N`.
pub fn matrix_abs(
    h: &HermitianMatrix,
    tol: &Tolerances,
) -> Result<HermitianMatrix, ConvergenceFailure> {
    spectral_map(h, tol, |l| l.abs())
}

/// Rank-one terms `(λ_k, v_k)` of a PSD matrix with eigenvalues above `cutoff`.
/// Tiny negative eigenvalues inside the cutoff are dropped.
pub fn psd_terms(
    m: &HermitianMatrix,
    cutoff: f64,
    tol: &Tolerances,
) -> Result<Vec<(f64, Vec<C64>)>, ConvergenceFailure> {
    let eig = hermitian_eig(m, tol)?;
    let mut out = Vec::new();
    for (k, &l) in eig.values.iter().enumerate() {
        if l > cutoff {
            out.push((l, eig.vector(k)));
        }
    }
    Ok(out)
}
